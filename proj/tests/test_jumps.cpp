#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "sfp/errors.hpp"
#include "sfp/jumps.hpp"
#include "sfp/models.hpp"
#include "sfp/series.hpp"

using sfp::BsmParams;
using sfp::CgmyParams;
using sfp::HestonParams;
using sfp::ModelSpec;
using sfp::VgParams;

namespace {

// The scouting window the pricing layer hands the detector: conservative
// padding, default multiplier.
sfp::TruncationInterval scout_window(const ModelSpec& model, double maturity) {
    const double mult = sfp::has_variance_state(model) ? 12.0 : 10.0;
    const double pad = maturity < 1e-4 ? 0.1 : 0.5;
    return sfp::truncation_interval(model, maturity, 0.0, mult, pad);
}

} // namespace

TEST_SUITE("jumps") {

TEST_CASE("variance-gamma cusp sits at the risk-neutral drift point") {
    // With T/nu < 1 the log-return density blows up at y = (r - q + omega)T.
    const VgParams vg{0.12, -0.14, 0.2, 0.10, 0.0};
    const double t = 0.1;
    const double omega = std::log(1.0 - vg.theta * vg.nu - 0.5 * vg.sigma * vg.sigma * vg.nu) / vg.nu;
    const double zeta = (vg.r - vg.q + omega) * t;

    const sfp::TruncationInterval window = scout_window(vg, t);
    const double cell = window.width() / 2048.0;
    const sfp::JumpReport report = sfp::detect_jumps(vg, t, window, 64);

    REQUIRE_FALSE(report.smooth);
    REQUIRE(report.locations.size() == 1);
    REQUIRE(report.spike_magnitudes.size() == 1);
    CHECK(std::abs(report.locations[0] - zeta) <= cell);
    CHECK(report.spike_magnitudes[0] > 50.0);
    CHECK(report.locations[0] > window.c);
    CHECK(report.locations[0] < window.d);
}

TEST_CASE("near-expiry diffusion spike is pinned to the forward drift") {
    // T = 1e-6: the density is a near-delta at (r - sigma^2/2)T = 4e-8.
    const BsmParams bsm{0.20, 0.06, 0.0};
    const double t = 1e-6;
    const double zeta = (bsm.r - 0.5 * bsm.sigma * bsm.sigma) * t;

    const sfp::TruncationInterval window = scout_window(bsm, t);
    const double cell = window.width() / 2048.0;
    const sfp::JumpReport report = sfp::detect_jumps(bsm, t, window, 64);

    REQUIRE_FALSE(report.smooth);
    REQUIRE(report.locations.size() == 1);
    CHECK(std::abs(report.locations[0] - zeta) <= cell);
    CHECK(report.spike_magnitudes[0] > 50.0);
}

TEST_CASE("smooth densities report no interior jumps") {
    struct Case {
        std::string name;
        ModelSpec model;
        double maturity;
    };
    const std::vector<Case> cases = {
        {"bsm t=1", BsmParams{0.15, 0.03, 0.0}, 1.0},
        {"bsm t=50", BsmParams{0.25, 0.10, 0.0}, 50.0},
        {"vg t=1", VgParams{0.1213, -0.1436, 0.1686, 0.03, 0.01}, 1.0},
        {"cgmy y=0.5", CgmyParams{1.0, 5.0, 5.0, 0.5, 0.10, 0.0}, 1.0},
        {"cgmy y=1.5", CgmyParams{1.0, 5.0, 5.0, 1.5, 0.10, 0.0}, 1.0},
        {"cgmy y=1.98", CgmyParams{1.0, 5.0, 5.0, 1.98, 0.10, 0.0}, 1.0},
        {"heston t=1", HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0}, 1.0},
        {"heston t=10", HestonParams{0.0175, 0.0398, 1.5768, 0.5751, -0.5711, 0.0, 0.0}, 10.0},
    };
    for (const Case& c : cases) {
        CAPTURE(c.name);
        const sfp::JumpReport report =
            sfp::detect_jumps(c.model, c.maturity, scout_window(c.model, c.maturity), 64);
        CHECK(report.smooth);
        CHECK(report.locations.empty());
        CHECK(report.spike_magnitudes.empty());
    }
}

TEST_CASE("detection is stable across scouting budgets") {
    const VgParams vg{0.12, -0.14, 0.2, 0.10, 0.0};
    const double t = 0.1;
    const sfp::TruncationInterval window = scout_window(vg, t);
    const double cell = window.width() / 2048.0;

    const sfp::JumpReport at64 = sfp::detect_jumps(vg, t, window, 64);
    const sfp::JumpReport at128 = sfp::detect_jumps(vg, t, window, 128);
    REQUIRE(at64.locations.size() == 1);
    REQUIRE(at128.locations.size() == 1);
    CHECK(std::abs(at64.locations[0] - at128.locations[0]) <= cell);
}

TEST_CASE("detector input validation") {
    const BsmParams bsm{0.15, 0.03, 0.0};
    const sfp::TruncationInterval window = scout_window(bsm, 1.0);
    CHECK_THROWS_AS(sfp::detect_jumps(bsm, 1.0, window, 15), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::detect_jumps(bsm, 1.0, window, 64, 1.0), sfp::InvalidParameter);
    CHECK_THROWS_AS(sfp::detect_jumps(bsm, 1.0, window, 64, 0.5), sfp::InvalidParameter);
    CHECK_NOTHROW(sfp::detect_jumps(bsm, 1.0, window, 16));
    CHECK_THROWS_AS(sfp::detect_jumps(BsmParams{-0.1, 0.0, 0.0}, 1.0, window, 64),
                    sfp::InvalidParameter);
}

} // TEST_SUITE
