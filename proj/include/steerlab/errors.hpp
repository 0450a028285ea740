#pragma once

#include <stdexcept>
#include <string>

namespace steerlab {

// Shape/split mismatches between operators, states, families.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Violated construction invariants (Hermiticity, trace, positivity,
// POVM completeness, no-signaling). Malformed input files map here too.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter outside its admissible range (e.g. Werner alpha outside the
// PSD interval, q outside (0,1]).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Filter success probability below the degeneracy threshold.
class DegenerateFilterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Eigensolver or conic-solver breakdown. Always reported, never silent.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Deterministic-strategy enumeration above the configured cap.
class CapExceededError : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace steerlab
