#pragma once

#include <stdexcept>
#include <string>

namespace gl2 {

// Thrown when an argument lies outside the mathematical domain of an
// operation (x = 0 in a signed power, det X = 0 in the Haar weight, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a rational coefficient in mu is evaluated at (or too close to)
// a zero of its denominator, or when a cocycle denominator vanishes.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when interval arithmetic cannot certify sign-definiteness of the
// chart coordinates u, w over a requested window.
struct CertificationError : std::runtime_error {
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two successive quadrature refinements disagree beyond the
// tolerance requested in the rule.
struct QuadratureStallError : std::runtime_error {
    explicit QuadratureStallError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gl2
