#include "sfp/series.hpp"

#include <cmath>

namespace sfp {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TruncationInterval truncation_interval(const ModelSpec& model, double maturity,
                                       double log_moneyness_bound, double multiplier,
                                       double padding) {
    validate(model);
    if (!(maturity > 0.0)) throw InvalidParameter("maturity must be > 0");
    if (!(log_moneyness_bound >= 0.0) || !std::isfinite(log_moneyness_bound))
        throw InvalidParameter("log-moneyness bound must be >= 0");
    if (!(multiplier >= 10.0 && multiplier <= 12.0))
        throw InvalidParameter("interval multiplier must lie in [10, 12]");
    if (!(padding >= 0.0) || !std::isfinite(padding))
        throw InvalidParameter("interval padding must be >= 0");

    const Cumulants cum = cumulants(model, maturity);
    // c4 >= 0 analytically for every supported model; the max() only absorbs
    // rounding noise when heavy cancellation drives the closed form through 0
    // at very small maturities.
    const double spread = cum.c4.has_value()
        ? multiplier * std::sqrt(cum.c2 + std::sqrt(std::max(*cum.c4, 0.0)))
        : multiplier * std::sqrt(std::abs(cum.c2));
    const double d = std::abs(cum.c1 + spread + log_moneyness_bound) + padding;
    if (!std::isfinite(d) || !(d > 0.0))
        throw InvalidParameter("degenerate truncation window");
    return {-d, d, multiplier, padding};
}

SeriesCoefficients cfs_coefficients(const ModelSpec& model, const Contract& contract,
                                    const TruncationInterval& interval, int terms) {
    validate(model);
    validate(contract);
    if (terms < 4) throw InvalidParameter("series needs at least 4 terms");
    const double dc = interval.width();
    SeriesCoefficients out;
    out.interval = interval;
    out.terms = terms;
    out.taylor.resize(terms + 1);
    out.taylor[0] = payoff_transform(contract, 0, interval.c, interval.d) / dc;
    for (int k = 1; k <= terms; ++k) {
        const Complex phi = characteristic_fn(model, Complex(-2.0 * kPi * k / dc, 0.0),
                                              contract.maturity);
        out.taylor[k] = 2.0 * phi * payoff_transform(contract, k, interval.c, interval.d) / dc;
    }
    return out;
}

SeriesCoefficients density_coefficients(const ModelSpec& model, double maturity,
                                        const TruncationInterval& interval, int terms) {
    validate(model);
    if (terms < 4) throw InvalidParameter("series needs at least 4 terms");
    const double dc = interval.width();
    SeriesCoefficients out;
    out.interval = interval;
    out.terms = terms;
    out.taylor.resize(terms + 1);
    out.taylor[0] = Complex(1.0 / dc, 0.0);
    for (int k = 1; k <= terms; ++k)
        out.taylor[k] = 2.0 / dc *
            characteristic_fn(model, Complex(-2.0 * kPi * k / dc, 0.0), maturity);
    return out;
}

double cfs_partial_sum(const SeriesCoefficients& coeffs, double y1) {
    const TruncationInterval& iv = coeffs.interval;
    if (!(y1 >= iv.c && y1 <= iv.d))
        throw InvalidParameter("evaluation point outside the truncation window");
    const Complex z = std::exp(Complex(0.0, 2.0 * kPi * y1 / iv.width()));
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.taylor.rbegin(); it != coeffs.taylor.rend(); ++it)
        acc = acc * z + *it;
    return acc.real();
}

} // namespace sfp
