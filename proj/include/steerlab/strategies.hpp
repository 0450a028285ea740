#pragma once

#include <cstdint>
#include <vector>

#include "steerlab/errors.hpp"

namespace steerlab::detect {

inline constexpr std::int64_t kStrategyCap = 4096;

/// Assigns one outcome to every setting; the extremal points over which
/// classical response functions decompose for finitely many settings.
struct DeterministicStrategy {
    std::vector<int> outcome; // outcome[x]

    int operator()(int x) const { return outcome[x]; }
};

/// All n_a^n_x strategies, in lexicographic order (last setting fastest).
/// Throws CapExceededError above `cap`.
std::vector<DeterministicStrategy> enumerate_strategies(int n_x, int n_a,
                                                        std::int64_t cap = kStrategyCap);

} // namespace steerlab::detect
