#pragma once

#include <stdexcept>
#include <string>

namespace chainrad {

/// Input outside the mathematical domain of an operation (e.g. zero separation).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid or unparsable chain configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed command-line input (bad state token, unknown figure, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Observation time earlier than the retarded arrival time of some atom's field.
class CausalityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical integration could not reach the requested tolerance.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double estimate, double error_bound)
        : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

}  // namespace chainrad
