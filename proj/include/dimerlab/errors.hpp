#pragma once

#include <stdexcept>
#include <string>

namespace dimerlab {

// Input violates a documented precondition (non-unitary S matrix, bad norm, ...).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// The requested computation cannot reach its stated tolerance on this grid
// (aliasing, unresolved scales).
struct accuracy_error : std::runtime_error {
    explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A perturbative or asymptotic result is outside its validity window.
struct validity_error : std::runtime_error {
    explicit validity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dynamics has no steady state for these parameters.
struct divergence_error : std::runtime_error {
    explicit divergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dimerlab
