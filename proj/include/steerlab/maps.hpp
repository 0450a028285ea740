#pragma once

#include <vector>

#include "steerlab/meas.hpp"
#include "steerlab/qmat.hpp"

namespace steerlab::maps {

/// Completely positive trace-non-increasing map given by a Kraus list,
/// sum_i K_i^dag K_i <= I.
struct KrausMap {
    int dim_in;
    int dim_out;
    std::vector<Mat> kraus;

    KrausMap(int dim_in, int dim_out, std::vector<Mat> kraus);
    /// Skips the trace-non-increasing check. Dual maps are generally not
    /// trace-non-increasing; they only enter through the duality identity.
    static KrausMap unchecked(int dim_in, int dim_out, std::vector<Mat> kraus);
    Mat apply(const Mat& m) const;

private:
    struct Unchecked {};
    KrausMap(int dim_in, int dim_out, std::vector<Mat> kraus, Unchecked);
};

KrausMap identity_map(int dim);

/// Single-Kraus filter Lambda(.) = F . F^dag; requires F^dag F <= I.
KrausMap filter(const Mat& f);

/// Projection onto the span of the first `keep` basis vectors, mapping
/// into C^keep.
KrausMap subspace_filter(int dim_in, int keep);

/// Projection onto the {|0>, |1>} subspace.
KrausMap qubit_filter(int dim_in);

struct FilterOutcome {
    BipartiteState state;
    double p_success;
};

/// rho_F = (map on `side`)(rho) / p, with success probability
/// p = tr[(I (x) Lambda)(rho)]. p below the degeneracy threshold throws.
FilterOutcome apply_to_state(const BipartiteState& rho, const KrausMap& map, Side side);

struct FilteredAssemblage {
    meas::Assemblage assemblage;
    double p_success;
};

/// sigma~_{a|x} = Lambda(sigma_{a|x}) / p_F with p_F = tr[Lambda(rho_B)].
FilteredAssemblage filter_assemblage(const meas::Assemblage& sigma, const KrausMap& map);

/// Kraus list {K_i^dag}; satisfies tr[X Lambda(Y)] = tr[Lambda^dag(X) Y].
KrausMap dual_map(const KrausMap& map);

/// Bob-side filter of a state whose double-filtered version is steerable:
/// rho'' = (I (x) F_B) rho (I (x) F_B^dag) / norm.
BipartiteState hidden_to_oneway(const BipartiteState& rho, const KrausMap& f_b);

} // namespace steerlab::maps
