#include "sfp/payoffs.hpp"

#include <cmath>

namespace sfp {

namespace {

using Cx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxPower = 20; // binomial coefficients stay exactly representable

double binomial(int n, int j) {
    // exact for n <= 20
    double out = 1.0;
    for (int i = 1; i <= j; ++i) out = out * double(n - j + i) / double(i);
    return std::round(out);
}

// integral of exp((i*alpha + j) y) over [lo, hi]; alpha != 0 or j != 0.
Cx osc_integral(double alpha, int j, double lo, double hi) {
    const Cx w(double(j), alpha);
    return (std::exp(w * hi) - std::exp(w * lo)) / w;
}

} // namespace

bool is_power_kind(PayoffKind kind) {
    switch (kind) {
        case PayoffKind::AsymmetricCall:
        case PayoffKind::AsymmetricPut:
        case PayoffKind::SymmetricCall:
        case PayoffKind::SymmetricPut:
            return true;
        default:
            return false;
    }
}

void validate(const Contract& contract) {
    if (!(contract.strike > 0.0) || !std::isfinite(contract.strike))
        throw InvalidParameter("contract strike must be > 0");
    if (!(contract.maturity > 0.0) || !std::isfinite(contract.maturity))
        throw InvalidParameter("contract maturity must be > 0");
    if (is_power_kind(contract.kind)) {
        if (contract.power < 1 || contract.power > kMaxPower)
            throw InvalidParameter("contract power must lie in [1, 20]");
    }
}

double payoff_value(const Contract& contract, double s_t) {
    validate(contract);
    if (!(s_t >= 0.0))
        throw InvalidParameter("terminal spot must be >= 0");
    const double k = contract.strike;
    const int n = contract.power;
    switch (contract.kind) {
        case PayoffKind::Call: return std::max(s_t - k, 0.0);
        case PayoffKind::Put: return std::max(k - s_t, 0.0);
        case PayoffKind::CoveredCall: return std::min(s_t, k);
        case PayoffKind::CashOrNothingCall: return s_t >= k ? 1.0 : 0.0;
        case PayoffKind::CashOrNothingPut: return s_t <= k ? 1.0 : 0.0;
        case PayoffKind::AssetOrNothingCall: return s_t >= k ? s_t : 0.0;
        case PayoffKind::AssetOrNothingPut: return s_t <= k ? s_t : 0.0;
        case PayoffKind::AsymmetricCall:
            return s_t >= k ? std::pow(s_t, n) - std::pow(k, n) : 0.0;
        case PayoffKind::AsymmetricPut:
            return s_t <= k ? std::pow(k, n) - std::pow(s_t, n) : 0.0;
        case PayoffKind::SymmetricCall:
            return s_t >= k ? std::pow(s_t - k, n) : 0.0;
        case PayoffKind::SymmetricPut:
            return s_t <= k ? std::pow(k - s_t, n) : 0.0;
    }
    throw InvalidParameter("unknown payoff kind");
}

namespace {

// Constant-term coefficient (k = 0), from its dedicated closed forms.
double transform_const(const Contract& contract, double c, double d) {
    const double k = contract.strike;
    const int n = contract.power;
    const double kn = std::pow(k, n);
    switch (contract.kind) {
        case PayoffKind::Call: return k * (std::exp(d) - 1.0) - k * d;
        case PayoffKind::Put: return k * (std::exp(c) - 1.0) - k * c;
        case PayoffKind::CoveredCall: return k * (1.0 - std::exp(c)) + k * d;
        case PayoffKind::CashOrNothingCall: return d;
        case PayoffKind::CashOrNothingPut: return -c;
        case PayoffKind::AssetOrNothingCall: return k * (std::exp(d) - 1.0);
        case PayoffKind::AssetOrNothingPut: return k * (1.0 - std::exp(c));
        case PayoffKind::AsymmetricCall:
            return kn * ((std::expm1(double(n) * d)) / n - d);
        case PayoffKind::AsymmetricPut:
            return kn * ((std::expm1(double(n) * c)) / n - c);
        case PayoffKind::SymmetricCall: {
            double acc = (n % 2 == 0 ? d : -d);
            for (int j = 1; j <= n; ++j) {
                const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
                acc += binomial(n, j) * sign * std::expm1(double(j) * d) / double(j);
            }
            return kn * acc;
        }
        case PayoffKind::SymmetricPut: {
            double acc = -c;
            for (int j = 1; j <= n; ++j) {
                const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                acc += binomial(n, j) * sign * (-std::expm1(double(j) * c)) / double(j);
            }
            return kn * acc;
        }
    }
    throw InvalidParameter("unknown payoff kind");
}

// Oscillating coefficient for k >= 1. E(j, lo, hi) below integrates
// exp(j y) against the oscillator over the exercise region.
Cx transform_osc(const Contract& contract, double alpha, double c, double d) {
    const double k = contract.strike;
    const int n = contract.power;
    const double kn = std::pow(k, n);
    const auto e = [&](int j, double lo, double hi) { return osc_integral(alpha, j, lo, hi); };
    switch (contract.kind) {
        case PayoffKind::Call: return k * (e(1, 0.0, d) - e(0, 0.0, d));
        case PayoffKind::Put: return k * (e(0, c, 0.0) - e(1, c, 0.0));
        case PayoffKind::CoveredCall: return k * (e(1, c, 0.0) + e(0, 0.0, d));
        case PayoffKind::CashOrNothingCall: return e(0, 0.0, d);
        case PayoffKind::CashOrNothingPut: return e(0, c, 0.0);
        case PayoffKind::AssetOrNothingCall: return k * e(1, 0.0, d);
        case PayoffKind::AssetOrNothingPut: return k * e(1, c, 0.0);
        case PayoffKind::AsymmetricCall: return kn * (e(n, 0.0, d) - e(0, 0.0, d));
        case PayoffKind::AsymmetricPut: return kn * (e(0, c, 0.0) - e(n, c, 0.0));
        case PayoffKind::SymmetricCall: {
            Cx acc(0.0, 0.0);
            for (int j = 0; j <= n; ++j) {
                const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
                acc += binomial(n, j) * sign * e(j, 0.0, d);
            }
            return kn * acc;
        }
        case PayoffKind::SymmetricPut: {
            Cx acc(0.0, 0.0);
            for (int j = 0; j <= n; ++j) {
                const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                acc += binomial(n, j) * sign * e(j, c, 0.0);
            }
            return kn * acc;
        }
    }
    throw InvalidParameter("unknown payoff kind");
}

} // namespace

Cx payoff_transform(const Contract& contract, int k, double c, double d) {
    validate(contract);
    if (k < 0) throw InvalidParameter("harmonic index k must be >= 0");
    if (!(c < 0.0) || !(d > 0.0) || !std::isfinite(c) || !std::isfinite(d))
        throw InvalidParameter("log-return window must satisfy c < 0 < d");
    if (k == 0) return Cx(transform_const(contract, c, d), 0.0);
    return transform_osc(contract, 2.0 * kPi * k / (d - c), c, d);
}

int strike_power(const Contract& contract) {
    switch (contract.kind) {
        case PayoffKind::CashOrNothingCall:
        case PayoffKind::CashOrNothingPut:
            return 0;
        case PayoffKind::AsymmetricCall:
        case PayoffKind::AsymmetricPut:
        case PayoffKind::SymmetricCall:
        case PayoffKind::SymmetricPut:
            return contract.power;
        default:
            return 1;
    }
}

} // namespace sfp
