#pragma once

#include <vector>

#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/series.hpp"

namespace sfp {

struct AnalyticQuote {
    double price;
    double delta;
    double gamma;
};

// Closed-form Black-Scholes-Merton values (continuous dividend yield).
// Supports Call, Put, CashOrNothingCall, CashOrNothingPut; throws
// UnsupportedOperation otherwise. The normal CDF is evaluated through erfc,
// accurate to ~1 ulp into the far tails.
AnalyticQuote bsm_analytic(const BsmParams& model, const Contract& contract, double spot);

// Cosine-expansion baseline on the same truncation window [c, d]: the payoff
// is integrated against cos(k pi (y - c)/(d - c)) in y = log(S_T/K) and paired
// with Re[phi(k pi/(d-c)) e^{i k pi (x - c)/(d - c)}], x = log(S0/K); the
// k = 0 term carries weight 1/2. Supports the four kinds with closed cosine
// integrals: Call, Put, CashOrNothingCall, CashOrNothingPut.
double cos_price(const ModelSpec& model, const Contract& contract, double spot,
                 const TruncationInterval& interval, int terms);

// Error summary of an approximation against a reference over a grid.
struct ErrorPoint {
    double grid;
    double approx;
    double reference;
    double abs_error;
};

struct ErrorReport {
    double r_inf;                      // max |approx - ref|
    double r_2;                        // sqrt(sum (approx - ref)^2), >= r_inf
    std::vector<ErrorPoint> per_point; // one row per grid point
    double wall_seconds;               // caller-measured
};

ErrorReport error_report(const std::vector<double>& approx,
                         const std::vector<double>& reference,
                         const std::vector<double>& grid, double wall_seconds);

} // namespace sfp
