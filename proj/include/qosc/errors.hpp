#pragma once

#include <stdexcept>
#include <string>

namespace qosc {

/// Thrown when a deformation parameter or other input lies outside its
/// admissible domain. Maps to CLI exit code 2.
class parameter_error : public std::invalid_argument {
public:
    explicit parameter_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Thrown when a requested spectral branch does not exist for the given
/// Casimir choice and deformation. Maps to CLI exit code 3.
class branch_error : public std::runtime_error {
public:
    explicit branch_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when a closed-form expression is requested outside the cases it
/// covers (the generic pipeline still handles them).
class unsupported_case : public std::runtime_error {
public:
    explicit unsupported_case(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thrown when adaptive quadrature fails to meet its tolerance. Carries the
/// best available estimate and its error bound.
class accuracy_error : public std::runtime_error {
public:
    accuracy_error(const std::string& msg, double best, double err)
        : std::runtime_error(msg), best_estimate(best), error_estimate(err)
    {
    }
    double best_estimate;
    double error_estimate;
};

} // namespace qosc
