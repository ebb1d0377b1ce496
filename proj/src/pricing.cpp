#include "sfp/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sfp {

namespace {

using Cx = std::complex<double>;
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTinyMaturity = 1e-4;   // below this the density is near-degenerate
constexpr int kDetectionTerms = 256;     // scouting budget, independent of the solve's U

struct Setup {
    TruncationInterval interval;
    std::vector<Cx> singular_points;   // -1 first, then mapped interior jumps
    std::vector<double> interior;      // the interior jump locations used
    DegreePlan plan;
    Contract solve_contract;           // unit strike; put-swapped when parity applies
    bool parity = false;
    int power = 1;
};

double default_multiplier(const ModelSpec& model) {
    return has_variance_state(model) ? 12.0 : 10.0;
}

Setup prepare(const ModelSpec& model, const Contract& contract, double bound,
              const PricingOptions& options) {
    validate(model);
    validate(contract);
    if (options.terms < 8) throw InvalidParameter("pricing needs at least 8 terms");
    const double t = contract.maturity;
    const double mult = options.interval_multiplier > 0.0 ? options.interval_multiplier
                                                          : default_multiplier(model);
    const bool tiny_t = t < kTinyMaturity;

    // Interior jumps. Detection scouts the density-sized window (no moneyness
    // widening: on a wide strike grid the density occupies a sliver of the
    // window and the spike statistic loses its baseline). Locations are
    // physical log-return points, and a discontinuity keeps the final pad at
    // the scout pad, so the final window always contains them. Models with a
    // Brownian part never enter detection: their densities are real-analytic,
    // so a sharp peak (short maturity) is a resolvable feature, and pinning a
    // branch term onto it destabilizes the solve instead of helping it.
    std::vector<double> interior;
    bool smooth = true;
    if (options.jump_policy == JumpPolicy::Auto && !has_brownian_part(model)) {
        const double detect_pad = tiny_t ? 0.1 : 0.5;
        const TruncationInterval scout =
            truncation_interval(model, t, 0.0, mult, detect_pad);
        const JumpReport report =
            detect_jumps(model, t, scout, std::max(options.terms, kDetectionTerms),
                         options.spike_factor);
        interior = report.locations;
        smooth = report.smooth;
    } else if (options.jump_policy == JumpPolicy::Explicit) {
        interior = options.interior_jumps;
        std::sort(interior.begin(), interior.end());
        smooth = interior.empty();
    }

    const double pad = options.padding.has_value()
        ? *options.padding
        : (tiny_t ? 0.1 : (smooth ? 0.0 : 0.5));

    Setup setup;
    setup.interval = truncation_interval(model, t, bound, mult, pad);

    // Map interior locations onto the circle; drop anything that collides
    // with the endpoint image -1 or with a neighbour.
    const double dc = setup.interval.width();
    const double cell = dc / 2048.0;
    setup.singular_points.push_back(Cx(-1.0, 0.0));
    double last = -1e300;
    for (double zeta : interior) {
        if (!(zeta > setup.interval.c && zeta < setup.interval.d))
            throw InvalidParameter("interior jump location outside the truncation window");
        if (setup.interval.d - std::abs(zeta) < 2.0 * cell) continue; // endpoint image
        if (zeta - last < cell) continue;                             // duplicate
        last = zeta;
        setup.interior.push_back(zeta);
        setup.singular_points.push_back(std::exp(Cx(0.0, 2.0 * kPi * zeta / dc)));
    }

    setup.plan = allocate_degrees(options.terms, int(setup.singular_points.size()));

    setup.solve_contract = contract;
    if (contract.kind == PayoffKind::Call && !options.force_direct_call) {
        setup.solve_contract.kind = PayoffKind::Put;
        setup.parity = true;
    }
    setup.power = strike_power(setup.solve_contract);
    setup.solve_contract.strike = 1.0;
    return setup;
}

double moneyness_bound(const Contract& contract, double spot, CurveAxis axis,
                       const std::vector<double>& grid) {
    double bound = 0.0;
    for (double g : grid) {
        if (!(g > 0.0) || !std::isfinite(g))
            throw InvalidParameter("grid values must be positive and finite");
        const double k = axis == CurveAxis::Strike ? g : contract.strike;
        const double s = axis == CurveAxis::Strike ? spot : g;
        bound = std::max(bound, std::abs(std::log(s / k)));
    }
    return bound;
}

// Static no-arbitrage bounds for the contract value, and a snap of values
// within rounding distance of a bound onto the bound itself. The snap width
// is a small multiple of machine epsilon at the contract's monetary scale:
// far enough above accumulated rounding noise to absorb it, far below any
// economically meaningful value. Without it, a deep out-of-the-money price
// that is analytically zero comes back as an arbitrary +/-1e-14 residue.
double apply_bounds(double value, PayoffKind kind, int power, double s, double k,
                    double df_r, double df_q) {
    const double fwd_s = s * df_q;  // discounted forward of the asset leg
    const double fwd_k = k * df_r;  // discounted strike leg
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    switch (kind) {
        case PayoffKind::Call:
            lo = std::max(0.0, fwd_s - fwd_k);
            hi = fwd_s;
            break;
        case PayoffKind::Put:
            lo = std::max(0.0, fwd_k - fwd_s);
            hi = fwd_k;
            break;
        case PayoffKind::CoveredCall:
            hi = std::min(fwd_s, fwd_k);
            break;
        case PayoffKind::CashOrNothingCall:
        case PayoffKind::CashOrNothingPut:
            hi = df_r;
            break;
        case PayoffKind::AssetOrNothingCall:
        case PayoffKind::AssetOrNothingPut:
            hi = fwd_s;
            break;
        default:
            break; // power families: value >= 0 is the only cheap bound
    }
    (void)power;
    const double snap =
        16.0 * std::numeric_limits<double>::epsilon() * (fwd_s + fwd_k);
    value = std::clamp(value, lo, hi);
    if (value - lo <= snap) return lo;
    if (std::isfinite(hi) && hi - value <= snap) return hi;
    return value;
}

} // namespace

CurveResult price_curve(const ModelSpec& model, const Contract& contract, double spot,
                        CurveAxis axis, const std::vector<double>& grid,
                        const PricingOptions& options) {
    if (grid.empty()) throw InvalidParameter("curve grid must not be empty");
    if (!(spot > 0.0) || !std::isfinite(spot))
        throw InvalidParameter("spot must be > 0");

    const Setup setup =
        prepare(model, contract, moneyness_bound(contract, spot, axis, grid), options);
    const SeriesCoefficients coeffs =
        cfs_coefficients(model, setup.solve_contract, setup.interval, options.terms);
    const SfpApproximant approx = solve_sfp(coeffs, setup.plan, setup.singular_points);

    const double t = contract.maturity;
    const double df_r = std::exp(-risk_free_rate(model) * t);
    const double df_q = std::exp(-dividend_yield(model) * t);

    CurveResult out;
    out.diagnostics = approx.diagnostics;
    out.interval = setup.interval;
    out.jump_locations = setup.interior;
    out.values.reserve(grid.size());
    out.near_pole_flags.reserve(grid.size());
    for (double g : grid) {
        const double k = axis == CurveAxis::Strike ? g : contract.strike;
        const double s = axis == CurveAxis::Strike ? spot : g;
        const double y1 = std::log(k / s);
        if (!(y1 >= setup.interval.c && y1 <= setup.interval.d))
            throw InvalidParameter(
                "log-moneyness outside the truncation window; raise the interval multiplier");
        const EvalResult ev = evaluate(approx, y1);
        double value = df_r * std::pow(k, setup.power) * ev.value;
        if (setup.parity) value += s * df_q - k * df_r;
        value = apply_bounds(value, contract.kind, contract.power, s, k, df_r, df_q);
        out.values.push_back(value);
        out.near_pole_flags.push_back(ev.near_pole);
    }
    return out;
}

PriceResult price(const ModelSpec& model, const Contract& contract, double spot,
                  const PricingOptions& options) {
    const CurveResult curve =
        price_curve(model, contract, spot, CurveAxis::Strike, {contract.strike}, options);
    PriceResult out;
    out.value = curve.values[0];
    out.diagnostics = curve.diagnostics;
    out.near_pole = curve.near_pole_flags[0];
    out.terms_used = options.terms;
    out.interval = curve.interval;
    out.jump_locations = curve.jump_locations;
    return out;
}

GreeksResult greeks(const ModelSpec& model, const Contract& contract, double spot,
                    const PricingOptions& options) {
    if (!(spot > 0.0) || !std::isfinite(spot))
        throw InvalidParameter("spot must be > 0");
    const double bound = std::abs(std::log(spot / contract.strike));
    const Setup setup = prepare(model, contract, bound, options);

    // Solve at the actual strike; a single point gains nothing from factoring.
    Contract solve_contract = setup.solve_contract;
    solve_contract.strike = contract.strike;
    const int orders = options.terms;
    const SeriesCoefficients base =
        cfs_coefficients(model, solve_contract, setup.interval, orders);

    const double t = contract.maturity;
    const double dc = setup.interval.width();
    const double df_r = std::exp(-risk_free_rate(model) * t);
    const double df_q = std::exp(-dividend_yield(model) * t);
    const double y1 = std::log(contract.strike / spot);
    if (!(y1 >= setup.interval.c && y1 <= setup.interval.d))
        throw InvalidParameter(
            "log-moneyness outside the truncation window; raise the interval multiplier");

    const auto solve_and_eval = [&](const std::vector<Cx>& taylor) {
        SeriesCoefficients series;
        series.taylor = taylor;
        series.interval = setup.interval;
        series.terms = orders;
        const SfpApproximant approx = solve_sfp(series, setup.plan, setup.singular_points);
        return evaluate(approx, y1).value;
    };

    // Differentiating in y1 multiplies harmonic k by i alpha_k; the spot
    // chain rule d y1 / d S = -1/S turns that into the delta/gamma weights.
    std::vector<Cx> taylor_delta(orders + 1, Cx(0.0, 0.0));
    std::vector<Cx> taylor_gamma(orders + 1, Cx(0.0, 0.0));
    for (int k = 1; k <= orders; ++k) {
        const Cx ia(0.0, 2.0 * kPi * k / dc);
        taylor_delta[k] = -ia * base.taylor[k];
        taylor_gamma[k] = ia * (ia + 1.0) * base.taylor[k];
    }

    GreeksResult out{};
    out.delta = df_r / spot * solve_and_eval(taylor_delta);
    out.gamma = df_r / (spot * spot) * solve_and_eval(taylor_gamma);
    if (setup.parity) {
        out.delta += df_q; // call = put + S e^{-qT} - K e^{-rT}
    }

    if (has_variance_state(model)) {
        // vega = dV/d y0: swap phi for dphi/dy0 in the coefficients.
        std::vector<Cx> taylor_vega(orders + 1, Cx(0.0, 0.0));
        for (int k = 1; k <= orders; ++k) {
            const double alpha = 2.0 * kPi * k / dc;
            const Cx dphi = characteristic_fn_dy0(model, Complex(-alpha, 0.0), t);
            taylor_vega[k] = 2.0 * dphi *
                payoff_transform(solve_contract, k, setup.interval.c, setup.interval.d) / dc;
        }
        out.vega = df_r * solve_and_eval(taylor_vega);
    }
    return out;
}

} // namespace sfp
