#pragma once

#include <complex>
#include <vector>

#include "sfp/errors.hpp"
#include "sfp/series.hpp"

namespace sfp {

// Degree budget split for one approximant. With S known singular points the
// total Taylor budget U is spent as U = N + M + S + sum(N_s): numerator
// degree N, denominator degree M, and one logarithmic branch polynomial of
// degree N_s per singular point (the S accounts for the log factors
// themselves).
struct DegreePlan {
    int numerator_degree;          // N
    int denominator_degree;        // M
    std::vector<int> log_degrees;  // N_s, one per singular point
    int budget;                    // U
};

// Split rule: N = round(0.4 (U - S)); of the remainder R = U - S - N, every
// log polynomial gets N_s = max(1, round(0.1 R)) (capped at R / (S+1)) and
// the denominator keeps the rest, so M is always the largest block and the
// N_s are equal. Requires U >= S + 2 so numerator and denominator both get
// at least degree/size 1 worth of budget.
DegreePlan allocate_degrees(int budget, int singularities);

// Numerical health of one null-space solve.
struct SolveDiagnostics {
    double condition = 0.0;     // sigma_max / sigma_min_nonnull of the system
    double residual = 0.0;      // ||A v|| of the returned null vector
    bool degenerate = false;    // more than one near-null direction
};

// Rational approximant P/Q of a truncated Taylor series (no log factors).
struct PadeApproximant {
    std::vector<std::complex<double>> p; // numerator, degree N
    std::vector<std::complex<double>> q; // denominator, degree M
    SolveDiagnostics diagnostics;
};

// Accelerated representation of a truncated Fourier series with known
// singular points epsilon_s on the unit circle:
//
//   f(z) ~ Re[ ( P(z) + sum_s L_s(z) log(1 - z/epsilon_s) ) / Q(z) ]
//
// q is never identically zero; the representation is scale invariant.
struct SfpApproximant {
    std::vector<std::complex<double>> p;
    std::vector<std::complex<double>> q;
    std::vector<std::vector<std::complex<double>>> log_polys; // L_s coefficients
    std::vector<std::complex<double>> singular_points;        // epsilon_s, |eps| = 1
    TruncationInterval interval;
    SolveDiagnostics diagnostics;
};

struct EvalResult {
    double value;
    bool near_pole; // |Q(z)| fell below 1e-13 * max |q_j|
};

// Classic Fourier-Pade step: find Q of degree M with
// P - Q * (sum_k taylor[k] x^k) = O(x^(N+M+1)) and read P off the product.
// The normalization is the SVD's: the stacked coefficient vector has unit
// norm. taylor must have at least N + M + 1 entries.
PadeApproximant fourier_pade(const std::vector<std::complex<double>>& taylor,
                             int numerator_degree, int denominator_degree);

// Evaluate P(z)/Q(z) at a point of the complex plane.
std::complex<double> pade_evaluate(const PadeApproximant& approximant,
                                   std::complex<double> z);

// Solve the singular variant: coefficients of orders N+1..U of
//   P + sum_s L_s log(1 - z/epsilon_s) - f Q
// are forced to zero; the block system [B | -Lambda_s] has one more unknown
// than equations and is solved for its smallest singular direction (no
// q_0 = 1 normalization, so a vanishing leading denominator coefficient is
// harmless). P is recovered from orders 0..N of the same identity.
// singular_points holds unit-circle points epsilon_s; the caller maps any
// physical jump location zeta in (c, d) to exp(i 2 pi zeta / (d - c)).
SfpApproximant solve_sfp(const SeriesCoefficients& coeffs, const DegreePlan& plan,
                         const std::vector<std::complex<double>>& singular_points);

// Re[(P + sum L_s log(1 - z/eps_s)) / Q] at z = exp(i 2 pi y1 / (d - c)).
// Exactly at a singular point the angle is offset by 1e-12 radians and the
// one-sided limit is returned (the log factor is infinite there but its
// weight makes the product finite in the limit; the offset realizes it).
EvalResult evaluate(const SfpApproximant& approximant, double y1);

// Max |coefficient| over orders 0..U of P + sum L_s log - f Q for a solved
// approximant against the series it was built from (defining-condition
// residual, scale-free thanks to the unit-norm solution vector).
double defining_condition_residual(const SfpApproximant& approximant,
                                   const std::vector<std::complex<double>>& taylor);

} // namespace sfp
