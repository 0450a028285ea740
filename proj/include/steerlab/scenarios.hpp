#pragma once

#include <cstdint>

#include "steerlab/json_io.hpp"

namespace steerlab::scenarios {

/// Entangled-but-unsteerable window: Werner thresholds, PPT verdicts, the
/// flag extension and its filter-back identity, finite-family LHS facts.
io::json entvsteer(int d, double alpha);

/// Steerable-but-local chain: filter identities of the two-qutrit state,
/// the erasure forms, and robustness of the filtered singlet assemblage.
io::json steervsnl(double q);

/// One-way steering construction: marginals, filter-back, entanglement,
/// Alice-side unsteerability (finite check) and an exploratory Bob-side
/// steering search over sampled families.
io::json oneway(std::uint64_t seed);

/// Hidden steering pipeline: double flag extension, qubit filters on both
/// sides, the two-qubit target identity, and robustness of the target.
io::json hidden(int d);

} // namespace steerlab::scenarios
