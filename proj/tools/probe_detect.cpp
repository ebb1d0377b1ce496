// Scratch probe: detector statistics on smooth models and curve accuracy with
// detection disabled, to separate the failure modes.
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "sfp/jumps.hpp"
#include "sfp/models.hpp"
#include "sfp/payoffs.hpp"
#include "sfp/pricing.hpp"
#include "sfp/reference.hpp"
#include "sfp/presets.hpp"
#include "sfp/series.hpp"
#include "sfp/sfp_core.hpp"

using Cx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;

static void detector_stats(const char* name, const sfp::ModelSpec& model, double t,
                           int terms) {
    const double mult = sfp::has_variance_state(model) ? 12.0 : 10.0;
    const double pad = t < 1e-4 ? 0.1 : 0.5;
    const sfp::TruncationInterval iv = sfp::truncation_interval(model, t, 0.0, mult, pad);
    const double dc = iv.width();
    std::vector<Cx> taylor(terms + 1, Cx(0.0, 0.0));
    for (int k = 1; k <= terms; ++k) {
        const double alpha = 2.0 * kPi * k / dc;
        taylor[k] = 2.0 * Cx(0.0, alpha) *
            sfp::characteristic_fn(model, Cx(-alpha, 0.0), t) / dc;
    }
    double bmax = 0.0;
    for (const Cx& v : taylor) bmax = std::max(bmax, std::abs(v));
    int effective = terms;
    while (effective > 16 && std::abs(taylor[effective]) < 1e-14 * bmax) --effective;
    const int half = (effective - 1) / 2;
    const sfp::PadeApproximant fp = sfp::fourier_pade(
        std::vector<Cx>(taylor.begin(), taylor.begin() + effective + 1), half, half);
    const int npts = 2048;
    std::vector<double> mag(npts);
    double mx = 0.0;
    for (int j = 0; j < npts; ++j) {
        const double y = iv.c + (j + 0.5) * dc / npts;
        mag[j] = std::abs(sfp::pade_evaluate(fp, std::exp(Cx(0.0, 2.0 * kPi * y / dc))));
        mx = std::max(mx, mag[j]);
    }
    std::vector<double> sorted = mag;
    std::nth_element(sorted.begin(), sorted.begin() + npts / 2, sorted.end());
    const double median = sorted[npts / 2];
    // |q| roots proximity: how close do denominator roots come to the circle?
    std::printf("%-12s eff=%2d  tail|a|/max=%.1e  max=%.3e median=%.3e ratio=%.3e\n",
                name, effective, std::abs(taylor[effective]) / bmax, mx, median,
                mx / median);
}

// Clean-room Heston characteristic function (stable branch), written from the
// textbook form without reference to models.cpp, as an oracle for the library
// implementation.
static Cx heston_cf_oracle(double u_re, double v0, double theta, double kappa,
                           double eta, double rho, double r, double q, double t) {
    const Cx iu(0.0, u_re);
    const Cx beta = kappa - rho * eta * iu;
    const Cx d = std::sqrt(beta * beta + eta * eta * (iu * iu + iu) * -1.0);
    // d = sqrt(beta^2 + eta^2 (u^2 + iu)) with u real: iu*iu = -u^2, so
    // beta^2 - eta^2 (iu*iu + ... ) -- assemble explicitly instead:
    const Cx d2 = beta * beta + eta * eta * (Cx(u_re * u_re, 0.0) + iu);
    const Cx dd = std::sqrt(d2);
    (void)d;
    const Cx g = (beta - dd) / (beta + dd);
    const Cx e = std::exp(-dd * t);
    const Cx log_term = std::log((1.0 - g * e) / (1.0 - g));
    const Cx big_c = iu * ((r - q) * t) +
        kappa * theta / (eta * eta) * ((beta - dd) * t - 2.0 * log_term);
    const Cx big_d = (beta - dd) / (eta * eta) * (1.0 - e) / (1.0 - g * e);
    return std::exp(big_c + big_d * v0);
}

// Clean-room COS European put on log-return density.
static double cos_put_oracle(double v0, double theta, double kappa, double eta,
                             double rho, double r, double q, double t, double s0,
                             double strike, double a, double b, int n) {
    const double x = std::log(s0 / strike);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double uk = k * kPi / (b - a);
        // put payoff coefficients on [a, 0]
        double chi, psi;
        {
            const double c = a, d = 0.0;
            const double t1 = std::cos(uk * (d - a)) * std::exp(d) -
                              std::cos(uk * (c - a)) * std::exp(c);
            const double t2 = uk * std::sin(uk * (d - a)) * std::exp(d) -
                              uk * std::sin(uk * (c - a)) * std::exp(c);
            chi = (t1 + t2) / (1.0 + uk * uk);
            psi = k == 0 ? (d - c)
                         : (std::sin(uk * (d - a)) - std::sin(uk * (c - a))) / uk;
        }
        const double vk = 2.0 / (b - a) * strike * (-chi + psi);
        const Cx phi = heston_cf_oracle(uk, v0, theta, kappa, eta, rho, r, q, t);
        double term = (phi * std::exp(Cx(0.0, uk * (x - a)))).real() * vk;
        if (k == 0) term *= 0.5;
        sum += term;
    }
    return std::exp(-r * t) * sum;
}

int main() {
    for (int budget : {64, 256}) {
        std::printf("--- detector budget %d ---\n", budget);
        detector_stats("bsm t=1", sfp::BsmParams{0.15, 0.03, 0.0}, 1.0, budget);
        detector_stats("bsm t=50", sfp::BsmParams{0.25, 0.10, 0.0}, 50.0, budget);
        detector_stats("vg t=1", sfp::VgParams{0.1213, -0.1436, 0.1686, 0.03, 0.01}, 1.0, budget);
        detector_stats("cgmy y05", sfp::CgmyParams{1.0, 5.0, 5.0, 0.5, 0.10, 0.0}, 1.0, budget);
        detector_stats("cgmy y15", sfp::CgmyParams{1.0, 5.0, 5.0, 1.5, 0.10, 0.0}, 1.0, budget);
        detector_stats("cgmy y198", sfp::CgmyParams{1.0, 5.0, 5.0, 1.98, 0.10, 0.0}, 1.0, budget);
        detector_stats("heston t=1", sfp::HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0}, 1.0, budget);
        detector_stats("heston t=10", sfp::HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0}, 10.0, budget);
        detector_stats("vg t=0.1", sfp::VgParams{0.12, -0.14, 0.2, 0.10, 0.0}, 0.1, budget);
    }

    // Heston oracle: clean-room CF vs library CF, and clean-room COS price on
    // a wide window vs the pinned study values.
    {
        const double v0 = 0.0175, th = 0.0398, ka = 1.5768, et = 0.5751, rh = -0.5711;
        const sfp::HestonParams hp{v0, th, ka, et, rh, 0.0, 0.0};
        for (double t : {1.0, 10.0}) {
            for (double u : {0.7, 3.3, 14.2}) {
                const Cx lib = sfp::characteristic_fn(hp, Cx(u, 0.0), t);
                const Cx orc = heston_cf_oracle(u, v0, th, ka, et, rh, 0.0, 0.0, t);
                std::printf("heston cf t=%-4g u=%-5g lib=(%.12g,%.12g) oracle=(%.12g,%.12g) |diff|=%.2e\n",
                            t, u, lib.real(), lib.imag(), orc.real(), orc.imag(),
                            std::abs(lib - orc));
            }
            const sfp::Cumulants cu = sfp::cumulants(hp, t);
            const double w = 20.0 * std::sqrt(cu.c2);
            const double put = cos_put_oracle(v0, th, ka, et, rh, 0.0, 0.0, t, 100.0,
                                              100.0, cu.c1 - w, cu.c1 + w, 1 << 15);
            const double call = put + 100.0 - 100.0; // r=q=0 parity
            const double pin = t == 1.0 ? 5.7851554534076321 : 22.318945791154533;
            std::printf("heston cos-oracle t=%-4g call=%.13f pin=%.13f diff=%.3e (window %.3f..%.3f)\n",
                        t, call, pin, std::abs(call - pin), cu.c1 - w, cu.c1 + w);
        }
        // window sweep for the library price via the padding knob
        for (double t : {1.0, 10.0}) {
            for (double pad : {0.0, 0.5, 1.0, 2.0, 4.0}) {
                sfp::PricingOptions opt;
                opt.terms = 128;
                opt.jump_policy = sfp::JumpPolicy::EndpointsOnly;
                opt.padding = pad;
                const sfp::Contract call{sfp::PayoffKind::Call, 100.0, t};
                const sfp::PriceResult pr = sfp::price(hp, call, 100.0, opt);
                const double pin = t == 1.0 ? 5.7851554534076321 : 22.318945791154533;
                std::printf("heston lib t=%-4g pad=%-3g U=128 value=%.13f err=%.3e\n",
                            t, pad, pr.value, std::abs(pr.value - pin));
            }
        }
    }

    // Curve accuracy with detection bypassed (endpoints only).
    const sfp::BsmParams bsm1{0.15, 0.03, 0.0};
    const sfp::Contract put{sfp::PayoffKind::Put, 100.0, 1.0};
    const std::vector<double> strikes = sfp::uniform_grid(1.0, 200.0, 250);
    for (int u : {32, 64}) {
        sfp::PricingOptions opt;
        opt.terms = u;
        opt.jump_policy = sfp::JumpPolicy::EndpointsOnly;
        const sfp::CurveResult curve =
            sfp::price_curve(bsm1, put, 100.0, sfp::CurveAxis::Strike, strikes, opt);
        double ri = 0.0;
        sfp::Contract c = put;
        for (size_t i = 0; i < strikes.size(); ++i) {
            c.strike = strikes[i];
            ri = std::max(ri, std::abs(curve.values[i] -
                                       sfp::bsm_analytic(bsm1, c, 100.0).price));
        }
        std::printf("bsm1 curve endpoints-only U=%3d  R_inf=%.3e  cond=%.2e res=%.2e degen=%d\n",
                    u, ri, curve.diagnostics.condition, curve.diagnostics.residual,
                    int(curve.diagnostics.degenerate));
    }

    // Ghost-pole hunt on the bsm1 curve solve: denominator magnitude scan on
    // the circle and the error profile across strikes.
    {
        const sfp::TruncationInterval iv =
            sfp::truncation_interval(bsm1, 1.0, std::abs(std::log(1.0 / 100.0)), 10.0, 0.0);
        const sfp::Contract unit_put{sfp::PayoffKind::Put, 1.0, 1.0};
        const sfp::SeriesCoefficients coeffs =
            sfp::cfs_coefficients(bsm1, unit_put, iv, 128);
        const sfp::DegreePlan plan = sfp::allocate_degrees(64, 1);
        const sfp::SfpApproximant ap = sfp::solve_sfp(coeffs, plan, {Cx(-1.0, 0.0)});
        double qmax = 0.0, qmin = 1e300;
        double qmin_theta = 0.0;
        for (const Cx& v : ap.q) qmax = std::max(qmax, std::abs(v));
        for (int j = 0; j < 16384; ++j) {
            const double th = 2.0 * kPi * j / 16384.0;
            Cx den(0.0, 0.0);
            for (auto it = ap.q.rbegin(); it != ap.q.rend(); ++it)
                den = den * std::exp(Cx(0.0, th)) + *it;
            if (std::abs(den) < qmin) { qmin = std::abs(den); qmin_theta = th; }
        }
        std::printf("bsm1 U=64 denominator: deg(q)=%zu qmin/qmax=%.3e at theta=%.4f (y=%.4f)\n",
                    ap.q.size() - 1, qmin / qmax,
                    qmin_theta, qmin_theta / (2.0 * kPi) * iv.width() +
                                    (qmin_theta > kPi ? -iv.width() : 0.0));
        const double df = std::exp(-0.03);
        double worst = 0.0, worst_k = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double k = 1.0 + 199.0 * i / 2000.0;
            const double y1 = std::log(k / 100.0);
            const double v = df * k * sfp::evaluate(ap, y1).value;
            sfp::Contract c{sfp::PayoffKind::Put, k, 1.0};
            const double err = std::abs(v - sfp::bsm_analytic(bsm1, c, 100.0).price);
            if (err > worst) { worst = err; worst_k = k; }
        }
        std::printf("bsm1 U=64 fine grid (2001 pts): R_inf=%.3e at K=%.3f\n", worst, worst_k);
    }

    // Same for the failing models, single points, endpoints only.
    struct P { const char* name; sfp::ModelSpec m; sfp::Contract c; double s0; int u; double pin; };
    const std::vector<P> pts = {
        {"cgmy y05 U=32", sfp::CgmyParams{1.0, 5.0, 5.0, 0.5, 0.10, 0.0},
         {sfp::PayoffKind::Call, 100.0, 1.0}, 100.0, 32, 19.812948843118576},
        {"heston t1 U=128", sfp::HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0},
         {sfp::PayoffKind::Call, 100.0, 1.0}, 100.0, 128, 5.7851554534076321},
        {"heston t10 U=128", sfp::HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0},
         {sfp::PayoffKind::Call, 100.0, 10.0}, 100.0, 128, 22.318945791154533},
        {"heston t10 U=32", sfp::HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0},
         {sfp::PayoffKind::Call, 100.0, 10.0}, 100.0, 32, 22.318945791154533},
        {"heston t10 U=64", sfp::HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0},
         {sfp::PayoffKind::Call, 100.0, 10.0}, 100.0, 64, 22.318945791154533},
        {"vg2 K=1 U=64", sfp::VgParams{0.1213, -0.1436, 0.1686, 0.03, 0.01},
         {sfp::PayoffKind::Call, 1.0, 1.0}, 1.0, 64, 0.0},
    };
    for (const P& p : pts) {
        sfp::PricingOptions opt;
        opt.terms = p.u;
        opt.jump_policy = sfp::JumpPolicy::EndpointsOnly;
        const sfp::PriceResult r = sfp::price(p.m, p.c, p.s0, opt);
        std::printf("%-16s endpoints-only value=%.12f err=%.3e cond=%.2e res=%.2e\n",
                    p.name, r.value, p.pin != 0.0 ? std::abs(r.value - p.pin) : 0.0,
                    r.diagnostics.condition, r.diagnostics.residual);
    }
    return 0;
}
