#include "steerlab/maps.hpp"

#include <string>

namespace steerlab::maps {

KrausMap::KrausMap(int dim_in_, int dim_out_, std::vector<Mat> kraus_)
    : dim_in(dim_in_), dim_out(dim_out_), kraus(std::move(kraus_)) {
    if (kraus.empty()) throw ValidationError("KrausMap: needs at least one Kraus operator");
    Mat sum = Mat::Zero(dim_in, dim_in);
    for (const auto& k : kraus) {
        if (k.rows() != dim_out || k.cols() != dim_in) {
            throw DimensionError("KrausMap: Kraus operator shape mismatch");
        }
        sum += k.adjoint() * k;
    }
    const double excess = -min_eigenvalue(HermOp(identity(dim_in) - sum));
    if (excess > tol::psd) {
        throw ValidationError("KrausMap: sum K^dag K exceeds the identity by " +
                              std::to_string(excess));
    }
}

KrausMap::KrausMap(int dim_in_, int dim_out_, std::vector<Mat> kraus_, Unchecked)
    : dim_in(dim_in_), dim_out(dim_out_), kraus(std::move(kraus_)) {
    for (const auto& k : kraus) {
        if (k.rows() != dim_out || k.cols() != dim_in) {
            throw DimensionError("KrausMap: Kraus operator shape mismatch");
        }
    }
}

KrausMap KrausMap::unchecked(int dim_in, int dim_out, std::vector<Mat> kraus) {
    return KrausMap(dim_in, dim_out, std::move(kraus), Unchecked{});
}

Mat KrausMap::apply(const Mat& m) const {
    Mat out = Mat::Zero(dim_out, dim_out);
    for (const auto& k : kraus) out += k * m * k.adjoint();
    return out;
}

KrausMap identity_map(int dim) { return KrausMap(dim, dim, {identity(dim)}); }

KrausMap filter(const Mat& f) {
    return KrausMap(static_cast<int>(f.cols()), static_cast<int>(f.rows()), {f});
}

KrausMap subspace_filter(int dim_in, int keep) {
    if (keep < 1 || keep > dim_in) throw DimensionError("subspace_filter: bad subspace size");
    Mat f = Mat::Zero(keep, dim_in);
    for (int i = 0; i < keep; ++i) f(i, i) = 1.0;
    return filter(f);
}

KrausMap qubit_filter(int dim_in) { return subspace_filter(dim_in, 2); }

FilterOutcome apply_to_state(const BipartiteState& rho, const KrausMap& map, Side side) {
    const int local_dim = (side == Side::A) ? rho.dim_a : rho.dim_b;
    if (map.dim_in != local_dim) {
        throw DimensionError("apply_to_state: map input dim " + std::to_string(map.dim_in) +
                             " does not match side dim " + std::to_string(local_dim));
    }
    const int out_a = (side == Side::A) ? map.dim_out : rho.dim_a;
    const int out_b = (side == Side::B) ? map.dim_out : rho.dim_b;
    Mat out = Mat::Zero(out_a * out_b, out_a * out_b);
    for (const auto& k : map.kraus) {
        const Mat full = (side == Side::A) ? kron(k, identity(rho.dim_b))
                                           : kron(identity(rho.dim_a), k);
        out += full * rho.op.mat() * full.adjoint();
    }
    const double p = out.trace().real();
    if (p <= tol::degenerate_filter) {
        throw DegenerateFilterError("apply_to_state: success probability " + std::to_string(p) +
                                    " is degenerate");
    }
    return FilterOutcome{BipartiteState(out_a, out_b, HermOp(out / p)), p};
}

FilteredAssemblage filter_assemblage(const meas::Assemblage& sigma, const KrausMap& map) {
    if (map.dim_in != sigma.dim_b) {
        throw DimensionError("filter_assemblage: map input dim does not match dimB");
    }
    const double p = map.apply(sigma.marginal().mat()).trace().real();
    if (p <= tol::degenerate_filter) {
        throw DegenerateFilterError("filter_assemblage: success probability " + std::to_string(p) +
                                    " is degenerate");
    }
    std::vector<std::vector<HermOp>> grid;
    grid.reserve(sigma.n_x);
    for (int x = 0; x < sigma.n_x; ++x) {
        std::vector<HermOp> row;
        row.reserve(sigma.n_a);
        for (int a = 0; a < sigma.n_a; ++a) {
            row.emplace_back(map.apply(sigma.at(x, a).mat()) / p);
        }
        grid.push_back(std::move(row));
    }
    return FilteredAssemblage{meas::Assemblage(sigma.n_x, sigma.n_a, map.dim_out, std::move(grid)), p};
}

KrausMap dual_map(const KrausMap& map) {
    std::vector<Mat> adj;
    adj.reserve(map.kraus.size());
    for (const auto& k : map.kraus) adj.push_back(k.adjoint());
    return KrausMap::unchecked(map.dim_out, map.dim_in, std::move(adj));
}

BipartiteState hidden_to_oneway(const BipartiteState& rho, const KrausMap& f_b) {
    return apply_to_state(rho, f_b, Side::B).state;
}

} // namespace steerlab::maps
