#include <doctest.h>

#include <cmath>
#include <vector>

#include "sfp/errors.hpp"
#include "sfp/presets.hpp"
#include "sfp/reference.hpp"
#include "sfp/series.hpp"

using sfp::BsmParams;
using sfp::Contract;
using sfp::HestonParams;
using sfp::PayoffKind;
using sfp::TruncationInterval;
using sfp::VgParams;

namespace {

const BsmParams kBsm1{0.15, 0.03, 0.0};
const BsmParams kBsm2{0.25, 0.10, 0.0};
const VgParams kVg2{0.1213, -0.1436, 0.1686, 0.03, 0.01};
const HestonParams kHeston{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0};

} // namespace

TEST_SUITE("reference") {

TEST_CASE("long-maturity call values match the published closed forms") {
    const Contract t50{PayoffKind::Call, 120.0, 50.0};
    CHECK(std::abs(sfp::bsm_analytic(kBsm2, t50, 100.0).price - 99.2025928525532) <= 1e-11);

    const Contract t100{PayoffKind::Call, 120.0, 100.0};
    CHECK(std::abs(sfp::bsm_analytic(kBsm2, t100, 100.0).price - 99.9945609694213) <= 1e-11);
}

TEST_CASE("near-expiry out-of-the-money call is exactly zero") {
    const BsmParams bsm3{0.20, 0.06, 0.0};
    const Contract call{PayoffKind::Call, 100.0, 1e-6};
    CHECK(sfp::bsm_analytic(bsm3, call, 95.0).price == 0.0);
}

TEST_CASE("analytic prices satisfy parity exactly") {
    const BsmParams model{0.2, 0.05, 0.02};
    for (double strike : {80.0, 100.0, 120.0}) {
        for (double t : {1.0, 50.0}) {
            const Contract call{PayoffKind::Call, strike, t};
            const Contract put{PayoffKind::Put, strike, t};
            const double gap = 100.0 * std::exp(-model.q * t) - strike * std::exp(-model.r * t);
            CHECK(std::abs(sfp::bsm_analytic(model, call, 100.0).price -
                           sfp::bsm_analytic(model, put, 100.0).price - gap) <= 1e-10);
        }
    }
}

TEST_CASE("analytic greeks match finite differences of the analytic price") {
    const BsmParams model{0.2, 0.05, 0.02};
    const double spot = 100.0, h = 1e-3;
    for (PayoffKind kind : {PayoffKind::Call, PayoffKind::Put,
                            PayoffKind::CashOrNothingCall, PayoffKind::CashOrNothingPut}) {
        const Contract contract{kind, 100.0, 1.0};
        const sfp::AnalyticQuote mid = sfp::bsm_analytic(model, contract, spot);
        const sfp::AnalyticQuote up = sfp::bsm_analytic(model, contract, spot + h);
        const sfp::AnalyticQuote dn = sfp::bsm_analytic(model, contract, spot - h);
        CHECK(std::abs(mid.delta - (up.price - dn.price) / (2.0 * h)) <= 1e-8);
        CHECK(std::abs(mid.gamma - (up.delta - dn.delta) / (2.0 * h)) <= 1e-8);
    }
}

TEST_CASE("analytic pricer rejects what it has no closed form for") {
    const Contract exotic{PayoffKind::CoveredCall, 100.0, 1.0};
    CHECK_THROWS_AS(sfp::bsm_analytic(kBsm1, exotic, 100.0), sfp::UnsupportedOperation);
    const Contract asset{PayoffKind::AssetOrNothingCall, 100.0, 1.0};
    CHECK_THROWS_AS(sfp::bsm_analytic(kBsm1, asset, 100.0), sfp::UnsupportedOperation);
    const Contract put{PayoffKind::Put, 100.0, 1.0};
    CHECK_THROWS_AS(sfp::bsm_analytic(kBsm1, put, 0.0), sfp::InvalidParameter);
}

TEST_CASE("cosine baseline is spectrally exact on diffusion digitals") {
    const double bound = std::abs(std::log(100.0 / 80.0));
    const TruncationInterval window = sfp::truncation_interval(kBsm1, 1.0, bound, 10.0, 0.0);
    double r_inf = 0.0;
    for (double strike : sfp::uniform_grid(80.0, 120.0, 81)) {
        const Contract contract{PayoffKind::CashOrNothingPut, strike, 1.0};
        const double approx = sfp::cos_price(kBsm1, contract, 100.0, window, 64);
        const double truth = sfp::bsm_analytic(kBsm1, contract, 100.0).price;
        r_inf = std::max(r_inf, std::abs(approx - truth));
    }
    CHECK(r_inf <= 1e-13);
}

TEST_CASE("cosine baseline converges spectrally on the smooth jump-diffusion curve") {
    // 64 terms land within ~1e-7 of converged; far from done, far from crude.
    const Contract call{PayoffKind::Call, 1.0, 1.0};
    const TruncationInterval window =
        sfp::truncation_interval(kVg2, 1.0, std::log(2.0), 10.0, 0.0);
    double r_inf = 0.0;
    for (double spot : sfp::uniform_grid(0.5, 2.0, 81)) {
        const double coarse = sfp::cos_price(kVg2, call, spot, window, 64);
        const double fine = sfp::cos_price(kVg2, call, spot, window, 1 << 14);
        r_inf = std::max(r_inf, std::abs(coarse - fine));
    }
    CHECK(r_inf <= 1e-6);
    CHECK(r_inf >= 1e-10);
}

TEST_CASE("cosine baseline is Gibbs-limited on the wide stochastic-volatility window") {
    // The window the second-cumulant rule produces for long-memory variance
    // paths is enormous; 128 cosine terms resolve only a couple of digits.
    const Contract call{PayoffKind::Call, 100.0, 1.0};
    const TruncationInterval wide{-11.0, 11.0, 12.0, 0.0};
    const double err = std::abs(sfp::cos_price(kHeston, call, 100.0, wide, 128) -
                                5.7851554534076321);
    CHECK(err <= 1e-1);
    CHECK(err >= 1e-3);
}

TEST_CASE("cosine and complex-exponential expansions agree when both converge") {
    const Contract put{PayoffKind::Put, 100.0, 1.0};
    const TruncationInterval window = sfp::truncation_interval(kBsm1, 1.0, 0.0, 10.0, 0.0);
    const double truth = sfp::bsm_analytic(kBsm1, put, 100.0).price;

    const double cos_v = sfp::cos_price(kBsm1, put, 100.0, window, 64);
    const sfp::SeriesCoefficients coeffs = sfp::cfs_coefficients(kBsm1, put, window, 64);
    const double cfs_v = std::exp(-kBsm1.r) * sfp::cfs_partial_sum(coeffs, 0.0);

    CHECK(std::abs(cos_v - cfs_v) <= 1e-6);
    const double floor = 1e-12;
    const double err_cos = std::max(std::abs(cos_v - truth), floor);
    const double err_cfs = std::max(std::abs(cfs_v - truth), floor);
    CHECK(err_cos <= 10.0 * err_cfs);
    CHECK(err_cfs <= 10.0 * err_cos);
}

TEST_CASE("cosine baseline input validation") {
    const Contract put{PayoffKind::Put, 100.0, 1.0};
    const TruncationInterval window = sfp::truncation_interval(kBsm1, 1.0, 0.0, 10.0, 0.0);
    CHECK_THROWS_AS(sfp::cos_price(kBsm1, put, 100.0, window, 1), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::cos_price(kBsm1, put, 0.0, window, 64), sfp::InvalidParameter);
    const Contract exotic{PayoffKind::SymmetricPut, 100.0, 1.0, 2};
    CHECK_THROWS_AS(sfp::cos_price(kBsm1, exotic, 100.0, window, 64),
                    sfp::UnsupportedOperation);
}

TEST_CASE("error reports aggregate the documented norms") {
    const std::vector<double> grid = {1.0, 2.0};
    const sfp::ErrorReport pythagorean =
        sfp::error_report({3.0, 0.0}, {0.0, 4.0}, grid, 0.25);
    CHECK(pythagorean.r_inf == 4.0);
    CHECK(pythagorean.r_2 == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(pythagorean.wall_seconds == 0.25);
    REQUIRE(pythagorean.per_point.size() == 2);
    CHECK(pythagorean.per_point[0].grid == 1.0);
    CHECK(pythagorean.per_point[0].abs_error == 3.0);
    CHECK(pythagorean.per_point[1].abs_error == 4.0);

    const sfp::ErrorReport zero = sfp::error_report({1.5}, {1.5}, {7.0}, 0.0);
    CHECK(zero.r_inf == 0.0);
    CHECK(zero.r_2 == 0.0);

    const sfp::ErrorReport single = sfp::error_report({2.0}, {1.0}, {7.0}, 0.0);
    CHECK(single.r_inf == 1.0);
    CHECK(single.r_2 == 1.0);

    CHECK_THROWS_AS(sfp::error_report({1.0}, {1.0, 2.0}, {0.0, 1.0}, 0.0),
                    sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::error_report({}, {}, {}, 0.0), sfp::InvalidParameter);
}

TEST_CASE("norm ordering holds on random-looking errors") {
    std::vector<double> approx, ref, grid;
    double x = 0.137;
    for (int i = 0; i < 40; ++i) {
        x = std::fmod(x * 97.31 + 0.417, 1.0); // fixed quasi-random sequence
        approx.push_back(x);
        ref.push_back(0.5);
        grid.push_back(double(i));
    }
    const sfp::ErrorReport report = sfp::error_report(approx, ref, grid, 0.0);
    CHECK(report.r_inf <= report.r_2);
    double max_pp = 0.0;
    for (const sfp::ErrorPoint& p : report.per_point) max_pp = std::max(max_pp, p.abs_error);
    CHECK(report.r_inf == max_pp);
}

} // TEST_SUITE
