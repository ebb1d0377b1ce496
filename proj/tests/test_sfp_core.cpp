#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sfp/errors.hpp"
#include "sfp/sfp_core.hpp"

using sfp::DegreePlan;
using sfp::SeriesCoefficients;
using sfp::TruncationInterval;
using Cx = std::complex<double>;

namespace {

const TruncationInterval kUnitWindow{-1.0, 1.0, 10.0, 0.0};

Cx horner(const std::vector<Cx>& coeffs, Cx z) {
    Cx acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Taylor coefficients of log(1 - z/eps).
std::vector<Cx> log_series(Cx eps, int order) {
    std::vector<Cx> out(order + 1, Cx(0.0, 0.0));
    Cx pw(1.0, 0.0);
    for (int m = 1; m <= order; ++m) {
        pw /= eps;
        out[m] = -pw / double(m);
    }
    return out;
}

std::vector<Cx> series_mul(const std::vector<Cx>& a, const std::vector<Cx>& b, int order) {
    std::vector<Cx> out(order + 1, Cx(0.0, 0.0));
    for (int i = 0; i <= order && i < int(a.size()); ++i)
        for (int j = 0; i + j <= order && j < int(b.size()); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<Cx> series_add(std::vector<Cx> a, const std::vector<Cx>& b, int order) {
    a.resize(order + 1, Cx(0.0, 0.0));
    for (int i = 0; i <= order && i < int(b.size()); ++i) a[i] += b[i];
    return a;
}

// a / b truncated at `order`; b[0] must be nonzero.
std::vector<Cx> series_div(const std::vector<Cx>& a, const std::vector<Cx>& b, int order) {
    std::vector<Cx> out(order + 1, Cx(0.0, 0.0));
    for (int k = 0; k <= order; ++k) {
        Cx acc = k < int(a.size()) ? a[k] : Cx(0.0, 0.0);
        for (int j = 1; j <= k && j < int(b.size()); ++j) acc -= b[j] * out[k - j];
        out[k] = acc / b[0];
    }
    return out;
}

// The synthetic target used by the recovery tests:
//   f(z) = (P(z) + L1(z) log(1 - z/eps1) + L2(z) log(1 - z/eps2)) / Q(z)
struct Synthetic {
    std::vector<Cx> p{{0.3, 0.0}, {-1.1, 0.0}, {0.4, 0.0}};
    std::vector<Cx> q{{1.0, 0.0}, {-0.35, 0.2}};
    std::vector<Cx> l1{{0.25, 0.0}, {-0.6, 0.0}};
    std::vector<Cx> l2{{0.1, 0.0}, {0.45, 0.0}};
    Cx eps1 = Cx(-1.0, 0.0);
    Cx eps2 = std::polar(1.0, 0.77);

    Cx value(Cx z) const {
        const Cx num = horner(p, z) + horner(l1, z) * std::log(1.0 - z / eps1) +
                       horner(l2, z) * std::log(1.0 - z / eps2);
        return num / horner(q, z);
    }

    std::vector<Cx> taylor(int order) const {
        std::vector<Cx> num = series_add(p, series_mul(l1, log_series(eps1, order), order),
                                         order);
        num = series_add(num, series_mul(l2, log_series(eps2, order), order), order);
        return series_div(num, q, order);
    }
};

SeriesCoefficients wrap(std::vector<Cx> taylor) {
    SeriesCoefficients out;
    out.terms = int(taylor.size()) - 1;
    out.taylor = std::move(taylor);
    out.interval = kUnitWindow;
    return out;
}

Cx circle_point(double y1) { return std::exp(Cx(0.0, M_PI * y1)); } // width 2 window

} // namespace

TEST_SUITE("sfp_core") {

TEST_CASE("degree split for the documented budgets") {
    const DegreePlan big = sfp::allocate_degrees(64, 1);
    CHECK(big.numerator_degree == 25);
    CHECK(big.denominator_degree == 19);
    REQUIRE(big.log_degrees.size() == 1);
    CHECK(big.log_degrees[0] == 19);
    CHECK(big.budget == 64);

    const DegreePlan small = sfp::allocate_degrees(8, 0);
    CHECK(small.numerator_degree == 3);
    CHECK(small.denominator_degree == 5);
    CHECK(small.log_degrees.empty());
}

TEST_CASE("degree split is always a partition of the budget") {
    for (int budget : {8, 16, 32, 64, 100, 128, 256}) {
        for (int s = 0; s <= 3 && budget >= s + 2; ++s) {
            const DegreePlan plan = sfp::allocate_degrees(budget, s);
            int total = plan.numerator_degree + plan.denominator_degree + s;
            for (int d : plan.log_degrees) {
                total += d;
                CHECK(d >= 0);
            }
            CHECK(total == budget);
            CHECK(plan.numerator_degree >= 1);
            CHECK(plan.denominator_degree >= 1);
        }
    }
    CHECK_THROWS_AS(sfp::allocate_degrees(3, 2), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::allocate_degrees(8, -1), sfp::InvalidParameter);
}

TEST_CASE("rational function recovered exactly from its series") {
    const std::vector<Cx> p = {{1.0, 0.0}, {2.0, 0.0}, {-1.0, 0.0}};
    const std::vector<Cx> q = {{1.0, 0.0}, {-0.5, 0.0}, {0.0, 0.0}, {0.25, 0.0}};
    const std::vector<Cx> taylor = series_div(p, q, 20);
    const sfp::PadeApproximant fit = sfp::fourier_pade(taylor, 2, 3);
    CHECK(fit.diagnostics.residual <= 1e-12);
    CHECK_FALSE(fit.diagnostics.degenerate);
    for (Cx z : {Cx(0.3, 0.2), Cx(-0.7, 0.0), Cx(0.0, 0.9), std::polar(1.0, 0.8)}) {
        const Cx truth = horner(p, z) / horner(q, z);
        CHECK(std::abs(sfp::pade_evaluate(fit, z) - truth) <=
              1e-10 * (1.0 + std::abs(truth)));
    }
}

TEST_CASE("overfitted rational data is flagged degenerate but still evaluates") {
    // Geometric series: true degree (0, 1), fitted with (2, 3).
    std::vector<Cx> taylor(21);
    for (int k = 0; k <= 20; ++k) taylor[k] = std::pow(0.5, k);
    const sfp::PadeApproximant fit = sfp::fourier_pade(taylor, 2, 3);
    CHECK(fit.diagnostics.degenerate);
    const Cx z(0.3, 0.1);
    const Cx truth = 1.0 / (1.0 - 0.5 * z);
    CHECK(std::abs(sfp::pade_evaluate(fit, z) - truth) <= 1e-8);
}

TEST_CASE("pade input validation") {
    const std::vector<Cx> taylor(4, Cx(1.0, 0.0));
    CHECK_THROWS_AS(sfp::fourier_pade(taylor, -1, 2), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::fourier_pade(taylor, 2, -1), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::fourier_pade(taylor, 3, 3), sfp::InvalidParameter);
    // M = 0 degenerates to the truncated series itself.
    const sfp::PadeApproximant plain = sfp::fourier_pade(taylor, 2, 0);
    CHECK(plain.q.size() == 1);
    CHECK(plain.q[0] == Cx(1.0, 0.0));
}

TEST_CASE("single log branch recovered from one series coefficient") {
    // f = 0.8 log(1 + z): budget 1, plan (0, 0, {0}).
    const double c = 0.8;
    const DegreePlan plan{0, 0, {0}, 1};
    const sfp::SfpApproximant approx =
        sfp::solve_sfp(wrap({Cx(0.0, 0.0), Cx(c, 0.0)}), plan, {Cx(-1.0, 0.0)});
    for (double y1 : {-0.9, -0.25, 0.0, 0.3, 0.77}) {
        const Cx z = circle_point(y1);
        const double truth = (c * std::log(1.0 + z)).real();
        CHECK(sfp::evaluate(approx, y1).value == doctest::Approx(truth).epsilon(1e-12));
    }
    // Exactly on the singular point: finite one-sided limit, no throw.
    CHECK(std::isfinite(sfp::evaluate(approx, 1.0).value));
}

TEST_CASE("rational plus two log branches recovered exactly") {
    const Synthetic f;
    const int budget = 7; // N=2, M=1, S=2, N_s=1 each
    const DegreePlan plan{2, 1, {1, 1}, budget};
    const sfp::SfpApproximant approx =
        sfp::solve_sfp(wrap(f.taylor(budget)), plan, {f.eps1, f.eps2});
    CHECK_FALSE(approx.diagnostics.degenerate);
    CHECK(approx.diagnostics.residual <= 1e-12);
    for (double y1 : {-0.95, -0.5, -0.2, 0.1, 0.33, 0.6, 0.9}) {
        const sfp::EvalResult ev = sfp::evaluate(approx, y1);
        const double truth = f.value(circle_point(y1)).real();
        CHECK_FALSE(ev.near_pole);
        CHECK(std::abs(ev.value - truth) <= 1e-10);
    }
    CHECK(sfp::defining_condition_residual(approx, f.taylor(budget)) <= 1e-12);
}

TEST_CASE("oversized budget stays consistent on the same target") {
    const Synthetic f;
    const int budget = 13; // N=4, M=3, N_s=2: two spare degrees of freedom
    const DegreePlan plan{4, 3, {2, 2}, budget};
    const auto taylor = f.taylor(budget);
    const sfp::SfpApproximant approx = sfp::solve_sfp(wrap(taylor), plan, {f.eps1, f.eps2});
    CHECK(approx.diagnostics.degenerate); // the common-factor family is 2-dimensional
    CHECK(sfp::defining_condition_residual(approx, taylor) <= 1e-10);
    for (double y1 : {-0.5, 0.1, 0.6}) {
        const sfp::EvalResult ev = sfp::evaluate(approx, y1);
        if (ev.near_pole) continue; // a spare factor may park a root anywhere
        const double truth = f.value(circle_point(y1)).real();
        CHECK(std::abs(ev.value - truth) <= 1e-8);
    }
}

TEST_CASE("solver input validation") {
    const Synthetic f;
    const auto series = wrap(f.taylor(7));
    CHECK_THROWS_AS(sfp::solve_sfp(series, DegreePlan{2, 1, {1}, 7}, {f.eps1, f.eps2}),
                    sfp::InvalidParameter); // plan/singularity mismatch
    CHECK_THROWS_AS(sfp::solve_sfp(series, DegreePlan{2, 1, {1, 1}, 8}, {f.eps1, f.eps2}),
                    sfp::InvalidParameter); // not a partition
    CHECK_THROWS_AS(
        sfp::solve_sfp(wrap(f.taylor(5)), DegreePlan{2, 1, {1, 1}, 7}, {f.eps1, f.eps2}),
        sfp::InvalidParameter); // series too short
    CHECK_THROWS_AS(
        sfp::solve_sfp(series, DegreePlan{2, 1, {1, 1}, 7}, {f.eps1, Cx(0.5, 0.0)}),
        sfp::InvalidParameter); // singular point off the circle
}

TEST_CASE("zero series solves to the zero function") {
    const DegreePlan plan{2, 2, {2}, 7};
    const sfp::SfpApproximant approx =
        sfp::solve_sfp(wrap(std::vector<Cx>(8, Cx(0.0, 0.0))), plan, {Cx(-1.0, 0.0)});
    CHECK(sfp::evaluate(approx, 0.37).value == 0.0);
    CHECK(sfp::evaluate(approx, -0.8).value == 0.0);
}

TEST_CASE("vanishing denominator is reported as a solver failure") {
    // Coefficients so large that any null direction with denominator mass
    // would violate the constraints; the whole solution lands in the log
    // block and the denominator collapses.
    std::vector<Cx> taylor(8);
    for (int k = 0; k <= 7; ++k) taylor[k] = Cx(1e100 * (k + 1), 0.0);
    const DegreePlan plan{2, 2, {2}, 7};
    CHECK_THROWS_AS(sfp::solve_sfp(wrap(std::move(taylor)), plan, {Cx(-1.0, 0.0)}),
                    sfp::SolverFailure);
}

TEST_CASE("evaluation guards") {
    const Synthetic f;
    const sfp::SfpApproximant approx =
        sfp::solve_sfp(wrap(f.taylor(7)), DegreePlan{2, 1, {1, 1}, 7}, {f.eps1, f.eps2});
    CHECK_THROWS_AS(sfp::evaluate(approx, 1.01), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::evaluate(approx, -7.0), sfp::InvalidParameter);

    // A hand-built approximant with a unit-circle denominator root flags it.
    sfp::SfpApproximant pole;
    pole.p = {Cx(1.0, 0.0)};
    pole.q = {Cx(1.0, 0.0), Cx(-1.0, 0.0)}; // Q(z) = 1 - z, root at z = 1
    pole.interval = kUnitWindow;
    CHECK(sfp::evaluate(pole, 0.0).near_pole);
    CHECK_FALSE(sfp::evaluate(pole, 0.5).near_pole);
}

} // TEST_SUITE
