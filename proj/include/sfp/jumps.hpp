#pragma once

#include <vector>

#include "sfp/models.hpp"
#include "sfp/series.hpp"

namespace sfp {

// Locations in (c, d) where the transition density of log(S_T/S_0) is not
// smooth, found by scanning a balanced rational approximant of the density
// derivative for poles: genuine kinks/spikes pull Pade poles onto the unit
// circle, where |P/Q| towers over its median level.
struct JumpReport {
    std::vector<double> locations;        // ascending, interior points only
    std::vector<double> spike_magnitudes; // |P/Q| at the peak / median |P/Q|
    bool smooth = false;                  // no spikes found
};

// terms >= 16; spike_factor is the ratio over the median that counts as a
// spike. Smooth densities keep the ratio below ~80 even for near-Gaussian
// and heavy-tailed presets, while a genuine density kink drives it past 1e6,
// so the default of 200 separates the two regimes with a wide margin on both
// sides. The window endpoints are excluded: they are always treated as known
// singular points by the pricing layer, so only interior jumps are reported.
JumpReport detect_jumps(const ModelSpec& model, double maturity,
                        const TruncationInterval& interval, int terms,
                        double spike_factor = 200.0);

} // namespace sfp
