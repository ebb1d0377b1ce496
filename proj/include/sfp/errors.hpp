#pragma once

#include <stdexcept>
#include <string>

namespace sfp {

// Parameter, interval, index or degree outside its admissible domain.
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation not defined for the given model/contract combination
// (e.g. vega for a model without a variance state, or a baseline
// formula that does not exist for an exotic payoff).
class UnsupportedOperation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical solve could not produce a usable approximant.
class SolverFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sfp
