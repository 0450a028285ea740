#include "steerlab/ineq.hpp"

#include <limits>
#include <string>

#include "steerlab/strategies.hpp"

namespace steerlab::ineq {

SteeringFunctional::SteeringFunctional(int n_x_, int n_a_, int dim_,
                                       std::vector<std::vector<HermOp>> ops_)
    : n_x(n_x_), n_a(n_a_), dim(dim_), ops(std::move(ops_)) {
    if (n_x <= 0 || n_a <= 0 || dim <= 0 || static_cast<int>(ops.size()) != n_x) {
        throw DimensionError("SteeringFunctional: grid shape mismatch");
    }
    for (const auto& row : ops) {
        if (static_cast<int>(row.size()) != n_a) {
            throw DimensionError("SteeringFunctional: grid shape mismatch");
        }
        for (const auto& g : row) {
            if (g.dim() != dim) throw DimensionError("SteeringFunctional: operator dim mismatch");
        }
    }
}

double evaluate(const SteeringFunctional& gamma, const meas::Assemblage& sigma) {
    if (gamma.n_x != sigma.n_x || gamma.n_a != sigma.n_a || gamma.dim != sigma.dim_b) {
        throw DimensionError("evaluate: functional and assemblage shapes differ");
    }
    double value = 0.0;
    for (int x = 0; x < gamma.n_x; ++x)
        for (int a = 0; a < gamma.n_a; ++a)
            value += (gamma.at(x, a).mat() * sigma.at(x, a).mat()).trace().real();
    return value;
}

double strategy_bound(const SteeringFunctional& gamma) {
    const auto strategies = detect::enumerate_strategies(gamma.n_x, gamma.n_a);
    double bound = -std::numeric_limits<double>::infinity();
    for (const auto& f : strategies) {
        Mat sum = Mat::Zero(gamma.dim, gamma.dim);
        for (int x = 0; x < gamma.n_x; ++x) sum += gamma.at(x, f(x)).mat();
        bound = std::max(bound, eigenvalues(HermOp(sum)).maxCoeff());
    }
    return bound;
}

bool is_valid(const SteeringFunctional& gamma, double bound_tol) {
    return strategy_bound(gamma) <= bound_tol;
}

SteeringFunctional normalize_bound(const std::vector<std::vector<HermOp>>& raw_ops,
                                   double raw_bound) {
    if (raw_ops.empty() || raw_ops.front().empty()) {
        throw DimensionError("normalize_bound: empty operator grid");
    }
    const int n_x = static_cast<int>(raw_ops.size());
    const int n_a = static_cast<int>(raw_ops.front().size());
    const int dim = raw_ops.front().front().dim();
    SteeringFunctional raw(n_x, n_a, dim, raw_ops);
    const double tight = strategy_bound(raw);
    // A declared bound looser than the tight one is honored; an unsound
    // declaration (below the enumerated bound) is replaced by it.
    const double absorb = std::max(raw_bound, tight);
    const double per_setting = absorb / n_x;
    std::vector<std::vector<HermOp>> shifted;
    shifted.reserve(n_x);
    for (int x = 0; x < n_x; ++x) {
        std::vector<HermOp> row;
        row.reserve(n_a);
        for (int a = 0; a < n_a; ++a) {
            row.emplace_back(raw_ops[x][a].mat() - per_setting * identity(dim));
        }
        shifted.push_back(std::move(row));
    }
    return SteeringFunctional(n_x, n_a, dim, std::move(shifted));
}

SteeringFunctional transform(const SteeringFunctional& gamma, const maps::KrausMap& map) {
    if (map.dim_out != gamma.dim) {
        throw DimensionError("transform: functional dim " + std::to_string(gamma.dim) +
                             " does not match map output dim " + std::to_string(map.dim_out));
    }
    std::vector<std::vector<HermOp>> ops;
    ops.reserve(gamma.n_x);
    for (int x = 0; x < gamma.n_x; ++x) {
        std::vector<HermOp> row;
        row.reserve(gamma.n_a);
        for (int a = 0; a < gamma.n_a; ++a) {
            Mat pulled = Mat::Zero(map.dim_in, map.dim_in);
            for (const auto& k : map.kraus) pulled += k.adjoint() * gamma.at(x, a).mat() * k;
            row.emplace_back(pulled);
        }
        ops.push_back(std::move(row));
    }
    return SteeringFunctional(gamma.n_x, gamma.n_a, map.dim_in, std::move(ops));
}

} // namespace steerlab::ineq
