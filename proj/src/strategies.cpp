#include "steerlab/strategies.hpp"

#include <string>

namespace steerlab::detect {

std::vector<DeterministicStrategy> enumerate_strategies(int n_x, int n_a, std::int64_t cap) {
    if (n_x < 1 || n_a < 1) throw DimensionError("enumerate_strategies: need n_x, n_a >= 1");
    std::int64_t count = 1;
    for (int x = 0; x < n_x; ++x) {
        count *= n_a;
        if (count > cap) {
            throw CapExceededError("enumerate_strategies: " + std::to_string(n_a) + "^" +
                                   std::to_string(n_x) + " exceeds cap " + std::to_string(cap));
        }
    }
    std::vector<DeterministicStrategy> out;
    out.reserve(static_cast<size_t>(count));
    DeterministicStrategy current{std::vector<int>(n_x, 0)};
    for (std::int64_t i = 0; i < count; ++i) {
        out.push_back(current);
        for (int x = n_x - 1; x >= 0; --x) {
            if (++current.outcome[x] < n_a) break;
            current.outcome[x] = 0;
        }
    }
    return out;
}

} // namespace steerlab::detect
