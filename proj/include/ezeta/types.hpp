#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ezeta {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation at a pole (gamma at a nonpositive integer, zeta at s = 1, ...).
class PoleError : public std::domain_error {
public:
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ezeta
