#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

// Base for every error raised by the library. The CLI maps NumericFailure to
// exit status 3 and everything else to status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its admissible range (non-positive rate, SNR, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A copula argument lies outside [0, 1].
class DomainError : public Error {
public:
    using Error::Error;
};

/// Scenario, direction or probe set do not fit together.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// Coupling plan requested with too few atoms.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Zero draws requested from a sampler.
class EmptyRequest : public Error {
public:
    using Error::Error;
};

/// Monte Carlo estimate requested with fewer samples than the minimum.
class SampleSizeError : public Error {
public:
    using Error::Error;
};

/// Closed form requested for a scenario that only the generic engine handles.
class UnsupportedScenario : public Error {
public:
    using Error::Error;
};

/// Diversity slope cannot be identified (curve saturated or degenerate).
class NonIdentifiable : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical routine did not reach its tolerance.
class NumericFailure : public Error {
public:
    NumericFailure(const std::string& what, double residual)
        : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace secrecy
