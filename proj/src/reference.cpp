#include "sfp/reference.hpp"

#include <cmath>

namespace sfp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double norm_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }
double norm_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

} // namespace

AnalyticQuote bsm_analytic(const BsmParams& model, const Contract& contract, double spot) {
    validate(ModelSpec(model));
    validate(contract);
    if (!(spot > 0.0)) throw InvalidParameter("spot must be > 0");
    const double k = contract.strike, t = contract.maturity;
    const double sq = model.sigma * std::sqrt(t);
    const double d1 = (std::log(spot / k) + (model.r - model.q + 0.5 * model.sigma * model.sigma) * t) / sq;
    const double d2 = d1 - sq;
    const double df_r = std::exp(-model.r * t);
    const double df_q = std::exp(-model.q * t);
    AnalyticQuote out{};
    switch (contract.kind) {
        case PayoffKind::Call:
            out.price = spot * df_q * norm_cdf(d1) - k * df_r * norm_cdf(d2);
            out.delta = df_q * norm_cdf(d1);
            out.gamma = df_q * norm_pdf(d1) / (spot * sq);
            return out;
        case PayoffKind::Put:
            out.price = k * df_r * norm_cdf(-d2) - spot * df_q * norm_cdf(-d1);
            out.delta = -df_q * norm_cdf(-d1);
            out.gamma = df_q * norm_pdf(d1) / (spot * sq);
            return out;
        case PayoffKind::CashOrNothingCall:
            out.price = df_r * norm_cdf(d2);
            out.delta = df_r * norm_pdf(d2) / (spot * sq);
            out.gamma = -df_r * norm_pdf(d2) * d1 / (spot * spot * model.sigma * model.sigma * t);
            return out;
        case PayoffKind::CashOrNothingPut:
            out.price = df_r * norm_cdf(-d2);
            out.delta = -df_r * norm_pdf(d2) / (spot * sq);
            out.gamma = df_r * norm_pdf(d2) * d1 / (spot * spot * model.sigma * model.sigma * t);
            return out;
        default:
            throw UnsupportedOperation("no closed form for this payoff kind");
    }
}

namespace {

// cosine integrals over [lo, hi] within the window [a, b]:
//   chi = integral e^y cos(w_k (y - a)) dy, psi = integral cos(w_k (y - a)) dy
double cos_chi(double wk, double a, double lo, double hi) {
    const double c_hi = std::cos(wk * (hi - a)), c_lo = std::cos(wk * (lo - a));
    const double s_hi = std::sin(wk * (hi - a)), s_lo = std::sin(wk * (lo - a));
    return (c_hi * std::exp(hi) - c_lo * std::exp(lo) +
            wk * (s_hi * std::exp(hi) - s_lo * std::exp(lo))) / (1.0 + wk * wk);
}

double cos_psi(double wk, double a, double lo, double hi) {
    if (wk == 0.0) return hi - lo;
    return (std::sin(wk * (hi - a)) - std::sin(wk * (lo - a))) / wk;
}

} // namespace

double cos_price(const ModelSpec& model, const Contract& contract, double spot,
                 const TruncationInterval& interval, int terms) {
    validate(model);
    validate(contract);
    if (!(spot > 0.0)) throw InvalidParameter("spot must be > 0");
    if (terms < 2) throw InvalidParameter("cosine baseline needs at least 2 terms");
    switch (contract.kind) {
        case PayoffKind::Call:
        case PayoffKind::Put:
        case PayoffKind::CashOrNothingCall:
        case PayoffKind::CashOrNothingPut:
            break;
        default:
            throw UnsupportedOperation("cosine baseline supports vanilla and cash-or-nothing kinds");
    }

    const double k = contract.strike, t = contract.maturity;
    const double df_r = std::exp(-risk_free_rate(model) * t);

    // Vanilla calls go through the put and parity: the call's cosine
    // coefficients carry an exp(d) factor that ruins the sum on wide windows.
    if (contract.kind == PayoffKind::Call) {
        Contract put = contract;
        put.kind = PayoffKind::Put;
        return cos_price(model, put, spot, interval, terms) +
               spot * std::exp(-dividend_yield(model) * t) - k * df_r;
    }

    const double a = interval.c, b = interval.d;
    const double x = std::log(spot / k);
    const double width = b - a;

    double acc = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double wk = n * kPi / width;
        double payoff_part = 0.0;
        switch (contract.kind) {
            case PayoffKind::Put:
                payoff_part = k * (cos_psi(wk, a, a, 0.0) - cos_chi(wk, a, a, 0.0));
                break;
            case PayoffKind::CashOrNothingCall:
                payoff_part = cos_psi(wk, a, 0.0, b);
                break;
            case PayoffKind::CashOrNothingPut:
                payoff_part = cos_psi(wk, a, a, 0.0);
                break;
            default:
                break;
        }
        const Complex phi = characteristic_fn(model, Complex(wk, 0.0), t);
        const double weight = (phi * std::exp(Complex(0.0, wk * (x - a)))).real();
        acc += (n == 0 ? 0.5 : 1.0) * weight * payoff_part;
    }
    return df_r * 2.0 / width * acc;
}

ErrorReport error_report(const std::vector<double>& approx,
                         const std::vector<double>& reference,
                         const std::vector<double>& grid, double wall_seconds) {
    if (approx.size() != reference.size() || approx.size() != grid.size() || approx.empty())
        throw InvalidParameter("error report needs three equal-length non-empty vectors");
    ErrorReport out;
    out.per_point.resize(approx.size());
    out.r_inf = 0.0;
    double sum_sq = 0.0;
    for (size_t i = 0; i < approx.size(); ++i) {
        const double e = std::abs(approx[i] - reference[i]);
        out.per_point[i] = {grid[i], approx[i], reference[i], e};
        out.r_inf = std::max(out.r_inf, e);
        sum_sq += e * e;
    }
    out.r_2 = std::sqrt(sum_sq);
    out.wall_seconds = wall_seconds;
    return out;
}

} // namespace sfp
