#pragma once

#include <optional>
#include <vector>

#include "sfp/jumps.hpp"
#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/series.hpp"
#include "sfp/sfp_core.hpp"

namespace sfp {

// How interior density jumps are fed to the accelerated solve. The window
// endpoints always count as a known singular point (the periodic extension
// wraps there), so the policies only govern interior points.
enum class JumpPolicy {
    Auto,          // run the detector and use what it reports
    EndpointsOnly, // no interior singular points
    Explicit,      // use interior_jumps as given (log-return locations)
};

struct PricingOptions {
    int terms = 64;                   // Taylor budget U (>= 8)
    double interval_multiplier = 0.0; // L; 0 picks 12 for Heston, 10 otherwise
    std::optional<double> padding;    // empty -> 0 smooth / 0.5 non-smooth / 0.1 if T < 1e-4
    JumpPolicy jump_policy = JumpPolicy::Auto;
    std::vector<double> interior_jumps; // used by JumpPolicy::Explicit
    double spike_factor = 200.0;        // detector sensitivity under Auto
    bool force_direct_call = false;     // disable put-parity routing of vanilla calls
};

struct GreeksResult {
    double delta;
    double gamma;
    std::optional<double> vega; // only for models with a variance state
};

struct PriceResult {
    double value;
    std::optional<GreeksResult> greeks; // filled by callers that also run greeks()
    SolveDiagnostics diagnostics;
    bool near_pole;
    int terms_used;
    TruncationInterval interval;
    std::vector<double> jump_locations; // interior points used by the solve
};

// One expansion shared by every point of a curve: the window covers the
// whole grid, the solve runs once, each point only re-evaluates (the payoff
// coefficients factor out of the solve as K^p).
struct CurveResult {
    std::vector<double> values;
    std::vector<bool> near_pole_flags;
    SolveDiagnostics diagnostics;
    TruncationInterval interval;
    std::vector<double> jump_locations;
};

enum class CurveAxis {
    Strike, // grid varies contract.strike, spot fixed
    Spot,   // grid varies the spot, contract.strike fixed
};

// Discounted value of one contract. Vanilla calls are routed through the
// same-strike put plus forward parity unless force_direct_call is set (the
// put window never meets the exploding e^d side of the payoff transform,
// which matters for long maturities).
PriceResult price(const ModelSpec& model, const Contract& contract, double spot,
                  const PricingOptions& options = {});

// Curve over strikes or spots. grid values must be > 0; every log-moneyness
// the grid induces must fit the window or InvalidParameter is thrown with a
// hint to raise the multiplier.
CurveResult price_curve(const ModelSpec& model, const Contract& contract, double spot,
                        CurveAxis axis, const std::vector<double>& grid,
                        const PricingOptions& options = {});

// Sensitivities from term-wise differentiated expansions, each accelerated
// by its own solve on the shared window/jump setup. vega (d/d y0) is only
// defined for models with a variance state; it is empty otherwise.
GreeksResult greeks(const ModelSpec& model, const Contract& contract, double spot,
                    const PricingOptions& options = {});

} // namespace sfp
