#pragma once

#include <complex>
#include <vector>

#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"

namespace sfp {

// Symmetric log-return truncation window [c, d], c = -d.
struct TruncationInterval {
    double c;
    double d;
    double multiplier; // L used to build it
    double padding;    // additive widening used to build it
    double width() const { return d - c; }
};

// d = |c1 + L sqrt(c2 + sqrt(c4)) + log_moneyness_bound| + padding.
// Models without c4 use L sqrt(|c2|). log_moneyness_bound is the largest
// |log(S0/K)| the window must cover (0 for a single at-the-money point).
TruncationInterval truncation_interval(const ModelSpec& model, double maturity,
                                       double log_moneyness_bound, double multiplier,
                                       double padding);

// Taylor coefficients of the undiscounted price curve seen as a function of
// z = exp(i 2 pi y1 / (d - c)), y1 = log(K / S0):
//
//   taylor[0] = G_0 / (d - c),  taylor[k] = 2 phi(-2 pi k / (d-c)) G_k / (d-c)
//
// so that the price is Re( sum_k taylor[k] z^k ) before discounting.
struct SeriesCoefficients {
    std::vector<std::complex<double>> taylor; // length terms + 1
    TruncationInterval interval;
    int terms; // highest harmonic U
};

// Coefficients of the price curve for `contract` (terms >= 4).
SeriesCoefficients cfs_coefficients(const ModelSpec& model, const Contract& contract,
                                    const TruncationInterval& interval, int terms);

// Coefficients of the transition density of log(S_T/S_0) on the same window:
// taylor[0] = 1/(d-c), taylor[k] = 2 phi(-2 pi k/(d-c))/(d-c).
SeriesCoefficients density_coefficients(const ModelSpec& model, double maturity,
                                        const TruncationInterval& interval, int terms);

// Plain truncated-series evaluation Re( sum taylor[k] z^k ) at y1 in [c, d].
// The accelerated evaluation lives in sfp_core; this is the unaccelerated
// baseline the approximant is built from.
double cfs_partial_sum(const SeriesCoefficients& coeffs, double y1);

} // namespace sfp
