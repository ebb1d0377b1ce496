#pragma once

#include <complex>

#include "sfp/errors.hpp"

namespace sfp {

// European payoff families with closed-form Fourier transforms over a
// finite log-return window. "Asymmetric" pays S^n - K^n (resp. K^n - S^n)
// past the strike, "symmetric" pays (S - K)^n (resp. (K - S)^n).
enum class PayoffKind {
    Call,
    Put,
    CoveredCall,
    CashOrNothingCall,
    CashOrNothingPut,
    AssetOrNothingCall,
    AssetOrNothingPut,
    AsymmetricCall,
    AsymmetricPut,
    SymmetricCall,
    SymmetricPut,
};

bool is_power_kind(PayoffKind kind); // asymmetric/symmetric families

struct Contract {
    PayoffKind kind;
    double strike;
    double maturity;
    int power = 1; // n for the power families; ignored otherwise
};

// Throws InvalidParameter (strike <= 0, maturity <= 0, power outside [1,20]
// for the power families).
void validate(const Contract& contract);

// Terminal payoff at spot s_t (pointwise definition of the contract).
double payoff_value(const Contract& contract, double s_t);

// Fourier coefficient G_k of the payoff over the log-return window [c, d]
// (c < 0 < d), against the oscillator exp(i * 2 pi k * y / (d - c)):
//
//   G_k = integral over the exercise region of payoff(K e^y) e^{i a_k y} dy,
//   a_k = 2 pi k / (d - c).
//
// k = 0 is computed from its dedicated constant-term expression (all real).
// Throws InvalidParameter for k < 0 or a window without c < 0 < d.
std::complex<double> payoff_transform(const Contract& contract, int k, double c, double d);

// Exponent p such that G_k(K) = K^p * G_k(1): 0 for the cash-or-nothing
// family, contract.power for the power families, 1 otherwise. Lets a curve
// over strikes reuse one expansion.
int strike_power(const Contract& contract);

} // namespace sfp
