#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "sfp/errors.hpp"
#include "sfp/payoffs.hpp"

using sfp::Contract;
using sfp::PayoffKind;
using Cx = std::complex<double>;

namespace {

// ---- quadrature oracle ------------------------------------------------------
//
// Every closed-form transform must equal the literal integral
//   int payoff(K e^y) exp(i alpha_k y) dy over [c, d],  alpha_k = 2 pi k/(d-c),
// evaluated here by composite 16-point Gauss-Legendre with the panels split
// at the payoff kink y = 0, so the integrand is smooth on every panel.

constexpr double kGlNodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
    0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
    0.9445750230732326, 0.9894009349916499,
};
constexpr double kGlWeights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
    0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
    0.0622535239386479, 0.0271524594117541,
};

template <class F>
Cx gauss_legendre(const F& f, double lo, double hi, int panels) {
    Cx total(0.0, 0.0);
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * width;
        Cx acc(0.0, 0.0);
        for (int j = 0; j < 8; ++j) {
            const double dx = 0.5 * width * kGlNodes[j];
            acc += kGlWeights[j] * (f(mid + dx) + f(mid - dx));
        }
        total += 0.5 * width * acc;
    }
    return total;
}

Cx quad_transform(const Contract& contract, int k, double c, double d) {
    const double alpha = 2.0 * M_PI * k / (d - c);
    const auto integrand = [&](double y) {
        return sfp::payoff_value(contract, contract.strike * std::exp(y)) *
               std::exp(Cx(0.0, alpha * y));
    };
    const int panels = 60 + 10 * k;
    return gauss_legendre(integrand, c, 0.0, panels) +
           gauss_legendre(integrand, 0.0, d, panels);
}

const std::vector<Contract> all_kinds = {
    {PayoffKind::Call, 1.0, 1.0, 1},
    {PayoffKind::Put, 1.0, 1.0, 1},
    {PayoffKind::CoveredCall, 1.0, 1.0, 1},
    {PayoffKind::CashOrNothingCall, 1.0, 1.0, 1},
    {PayoffKind::CashOrNothingPut, 1.0, 1.0, 1},
    {PayoffKind::AssetOrNothingCall, 1.0, 1.0, 1},
    {PayoffKind::AssetOrNothingPut, 1.0, 1.0, 1},
    {PayoffKind::AsymmetricCall, 1.0, 1.0, 1},
    {PayoffKind::AsymmetricCall, 1.0, 1.0, 2},
    {PayoffKind::AsymmetricCall, 1.0, 1.0, 3},
    {PayoffKind::AsymmetricPut, 1.0, 1.0, 1},
    {PayoffKind::AsymmetricPut, 1.0, 1.0, 2},
    {PayoffKind::AsymmetricPut, 1.0, 1.0, 3},
    {PayoffKind::SymmetricCall, 1.0, 1.0, 1},
    {PayoffKind::SymmetricCall, 1.0, 1.0, 2},
    {PayoffKind::SymmetricCall, 1.0, 1.0, 3},
    {PayoffKind::SymmetricPut, 1.0, 1.0, 1},
    {PayoffKind::SymmetricPut, 1.0, 1.0, 2},
    {PayoffKind::SymmetricPut, 1.0, 1.0, 3},
};

} // namespace

TEST_SUITE("payoffs") {

TEST_CASE("pointwise payoff values") {
    CHECK(sfp::payoff_value({PayoffKind::Call, 100.0, 1.0, 1}, 110.0) == 10.0);
    CHECK(sfp::payoff_value({PayoffKind::Call, 100.0, 1.0, 1}, 90.0) == 0.0);
    CHECK(sfp::payoff_value({PayoffKind::Put, 100.0, 1.0, 1}, 90.0) == 10.0);
    CHECK(sfp::payoff_value({PayoffKind::CoveredCall, 100.0, 1.0, 1}, 110.0) == 100.0);
    CHECK(sfp::payoff_value({PayoffKind::CoveredCall, 100.0, 1.0, 1}, 80.0) == 80.0);
    CHECK(sfp::payoff_value({PayoffKind::SymmetricPut, 100.0, 1.0, 2}, 90.0) == 100.0);
    CHECK(sfp::payoff_value({PayoffKind::AsymmetricPut, 100.0, 1.0, 2}, 90.0) == 1900.0);
    CHECK(sfp::payoff_value({PayoffKind::CashOrNothingCall, 100.0, 1.0, 1}, 101.0) == 1.0);
    CHECK(sfp::payoff_value({PayoffKind::CashOrNothingPut, 100.0, 1.0, 1}, 101.0) == 0.0);
    CHECK(sfp::payoff_value({PayoffKind::AssetOrNothingCall, 100.0, 1.0, 1}, 130.0) == 130.0);
    CHECK(sfp::payoff_value({PayoffKind::AssetOrNothingPut, 100.0, 1.0, 1}, 130.0) == 0.0);
    CHECK(sfp::payoff_value({PayoffKind::SymmetricCall, 100.0, 1.0, 3}, 102.0) == 8.0);
}

TEST_CASE("transforms equal their quadrature over two windows") {
    const std::vector<std::pair<double, double>> windows = {{-1.0, 1.0}, {-1.4, 0.7}};
    const std::vector<int> ks = {0, 1, 2, 3, 4, 5, 8, 16, 32};
    for (const Contract& contract : all_kinds) {
        for (const auto& [c, d] : windows) {
            for (int k : ks) {
                const Cx closed = sfp::payoff_transform(contract, k, c, d);
                const Cx oracle = quad_transform(contract, k, c, d);
                CAPTURE(int(contract.kind));
                CAPTURE(contract.power);
                CAPTURE(c);
                CAPTURE(k);
                CHECK(std::abs(closed - oracle) <=
                      1e-10 * std::max(1.0, std::abs(oracle)));
            }
        }
    }
}

TEST_CASE("constant term is real") {
    for (const Contract& contract : all_kinds) {
        const Cx g0 = sfp::payoff_transform(contract, 0, -0.8, 1.1);
        CHECK(g0.imag() == 0.0);
    }
}

TEST_CASE("strike factors out as K to the strike power") {
    const double strike = 57.3;
    for (Contract contract : all_kinds) {
        const int p = sfp::strike_power(contract);
        Contract unit = contract;
        unit.strike = 1.0;
        contract.strike = strike;
        const double scale = std::pow(strike, p);
        for (int k : {0, 7}) {
            const Cx big = sfp::payoff_transform(contract, k, -0.9, 1.2);
            const Cx unit_val = sfp::payoff_transform(unit, k, -0.9, 1.2);
            CHECK(std::abs(big - scale * unit_val) <= 1e-12 * std::abs(big));
        }
    }
}

TEST_CASE("strike power by family") {
    CHECK(sfp::strike_power({PayoffKind::Call, 1.0, 1.0, 1}) == 1);
    CHECK(sfp::strike_power({PayoffKind::CoveredCall, 1.0, 1.0, 1}) == 1);
    CHECK(sfp::strike_power({PayoffKind::CashOrNothingCall, 1.0, 1.0, 1}) == 0);
    CHECK(sfp::strike_power({PayoffKind::CashOrNothingPut, 1.0, 1.0, 1}) == 0);
    CHECK(sfp::strike_power({PayoffKind::AssetOrNothingPut, 1.0, 1.0, 1}) == 1);
    CHECK(sfp::strike_power({PayoffKind::SymmetricCall, 1.0, 1.0, 4}) == 4);
    CHECK(sfp::strike_power({PayoffKind::AsymmetricPut, 1.0, 1.0, 3}) == 3);
    CHECK(sfp::is_power_kind(PayoffKind::SymmetricPut));
    CHECK_FALSE(sfp::is_power_kind(PayoffKind::Put));
}

TEST_CASE("symmetric power one collapses to the vanilla transforms") {
    const Contract sym_call{PayoffKind::SymmetricCall, 1.0, 1.0, 1};
    const Contract call{PayoffKind::Call, 1.0, 1.0, 1};
    const Contract sym_put{PayoffKind::SymmetricPut, 1.0, 1.0, 1};
    const Contract put{PayoffKind::Put, 1.0, 1.0, 1};
    for (int k : {0, 1, 5, 12}) {
        CHECK(std::abs(sfp::payoff_transform(sym_call, k, -1.0, 1.0) -
                       sfp::payoff_transform(call, k, -1.0, 1.0)) < 1e-13);
        CHECK(std::abs(sfp::payoff_transform(sym_put, k, -1.0, 1.0) -
                       sfp::payoff_transform(put, k, -1.0, 1.0)) < 1e-13);
    }
}

TEST_CASE("contract validation") {
    CHECK_THROWS_AS(sfp::validate(Contract{PayoffKind::Call, 0.0, 1.0, 1}),
                    sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::validate(Contract{PayoffKind::Call, -5.0, 1.0, 1}),
                    sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::validate(Contract{PayoffKind::Call, 100.0, 0.0, 1}),
                    sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::validate(Contract{PayoffKind::SymmetricCall, 100.0, 1.0, 0}),
                    sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::validate(Contract{PayoffKind::SymmetricCall, 100.0, 1.0, 21}),
                    sfp::InvalidParameter);
    // Power is ignored for non-power kinds.
    CHECK_NOTHROW(sfp::validate(Contract{PayoffKind::Put, 100.0, 1.0, 0}));
}

TEST_CASE("transform argument validation") {
    const Contract put{PayoffKind::Put, 100.0, 1.0, 1};
    CHECK_THROWS_AS(sfp::payoff_transform(put, -1, -1.0, 1.0), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::payoff_transform(put, 1, 0.0, 1.0), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::payoff_transform(put, 1, -1.0, -0.1), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::payoff_value(put, -1.0), sfp::InvalidParameter);
}

} // TEST_SUITE
