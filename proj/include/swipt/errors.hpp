#ifndef SWIPT_ERRORS_HPP
#define SWIPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace swipt {

// Argument outside the mathematical domain of an operation. Derives from
// std::domain_error so callers can catch either.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A closed-form expression was requested for parameters it does not cover
// (non-integer m, unequal marginals, non-FGM copula, ...).
class UnsupportedClosedForm : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Adaptive quadrature stopped before reaching the requested tolerance.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_estimate_(error_estimate) {}

    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double value_;
    double error_estimate_;
};

class MeijerGError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An asymptotic approximation was evaluated outside the regime it assumes.
class OutOfRegimeError : public std::range_error {
public:
    using std::range_error::range_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace swipt

#endif
