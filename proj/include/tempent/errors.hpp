#pragma once

#include <stdexcept>
#include <string>

namespace tempent {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Rejected probability vector.
class InvalidDistribution : public std::invalid_argument {
public:
    enum class Reason { NegativeWeight, WeightAboveOne, SumNotOne, TooFewOutcomes, NotFinite };

    InvalidDistribution(Reason reason, const std::string& what)
        : std::invalid_argument(what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The quadrature engine could not certify the requested tolerance.
class ToleranceNotReached : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tempent
