#pragma once

#include <complex>
#include <optional>
#include <variant>

#include "sfp/errors.hpp"

namespace sfp {

using Complex = std::complex<double>;

// Log-return models for the underlying. All parameters are annualized.
// r is the risk-free rate, q the continuous dividend yield.

struct BsmParams {
    double sigma; // diffusion volatility, per sqrt(year)
    double r;
    double q;
};

struct VgParams {
    double sigma; // volatility of the time-changed Brownian motion
    double theta; // drift of the time-changed Brownian motion
    double nu;    // variance rate of the gamma clock
    double r;
    double q;
};

struct CgmyParams {
    double C; // jump activity level
    double G; // left-tail tempering rate
    double M; // right-tail tempering rate
    double Y; // fine-structure exponent, in (0,2) excluding 1
    double r;
    double q;
};

struct HestonParams {
    double y0;     // spot variance
    double ybar;   // long-run variance
    double lambda; // mean-reversion speed
    double eta;    // volatility of variance
    double rho;    // correlation between spot and variance shocks
    double r;
    double q;
};

using ModelSpec = std::variant<BsmParams, VgParams, CgmyParams, HestonParams>;

// First, second and fourth cumulants of log(S_T/S_0). Every supported model
// provides c4 in closed form; the optional stays for model extensions whose
// fourth cumulant has no tractable expression (the interval rule degrades
// gracefully to a variance-only width in that case).
struct Cumulants {
    double c1;
    double c2;
    std::optional<double> c4;
};

// Throws InvalidParameter if any field is outside its admissible range.
void validate(const ModelSpec& model);

double risk_free_rate(const ModelSpec& model);
double dividend_yield(const ModelSpec& model);
bool has_variance_state(const ModelSpec& model); // true only for Heston

// True when the log-return carries a Brownian component (BSM, Heston). Such
// models have real-analytic transition densities for every maturity, so any
// sharpness in the density is a resolvable peak rather than a genuine
// branch-point singularity. Pure-jump models (VG, CGMY) return false: their
// densities can lose derivatives at the drift point in finite time.
bool has_brownian_part(const ModelSpec& model);

// Mean-correcting drift adjustment omega = -(1/T) log E[exp(X_T)], chosen so
// that the discounted underlying is a martingale: phi(-i) = exp((r-q)T).
// Independent of T for the Levy models; identically 0 for Heston, whose
// standard form is already mean-correcting.
double compensator(const ModelSpec& model);

// log of the characteristic function of log(S_T/S_0) under the risk-neutral
// measure, risk-neutral drift (r - q + omega)T included.
Complex characteristic_exponent(const ModelSpec& model, Complex u, double maturity);

// phi(u) = E[exp(i u log(S_T/S_0))] = exp(characteristic_exponent(u)).
// phi(0) = 1, phi(-u) = conj(phi(u)) for real u, |phi(u)| <= 1 on the real line.
Complex characteristic_fn(const ModelSpec& model, Complex u, double maturity);

// Cumulants of log(S_T/S_0) in closed form (drift included in c1).
Cumulants cumulants(const ModelSpec& model, double maturity);

// d phi / d y0 for models with a variance state (Heston: equals D(u,T)*phi(u)).
// Throws UnsupportedOperation for the Levy models.
Complex characteristic_fn_dy0(const ModelSpec& model, Complex u, double maturity);

} // namespace sfp
