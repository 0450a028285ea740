#pragma once

#include <vector>

#include "steerlab/maps.hpp"
#include "steerlab/meas.hpp"
#include "steerlab/qmat.hpp"

namespace steerlab::ineq {

/// Steering inequality sum_{a,x} tr[Gamma_{a|x} sigma_{a|x}] <= 0: the
/// operator grid with the bound already absorbed so that every
/// deterministic-strategy sum sum_x Gamma_{f(x)|x} has max eigenvalue <= 0.
struct SteeringFunctional {
    int n_x;
    int n_a;
    int dim;
    std::vector<std::vector<HermOp>> ops; // [x][a]

    SteeringFunctional(int n_x, int n_a, int dim, std::vector<std::vector<HermOp>> ops);
    const HermOp& at(int x, int a) const { return ops[x][a]; }
};

/// sum_{a,x} tr[Gamma_{a|x} sigma_{a|x}]; > 0 signals steering.
double evaluate(const SteeringFunctional& gamma, const meas::Assemblage& sigma);

/// max over deterministic strategies f of lambda_max(sum_x Gamma_{f(x)|x});
/// the tight bound over normalized unsteerable assemblages.
double strategy_bound(const SteeringFunctional& gamma);

bool is_valid(const SteeringFunctional& gamma, double bound_tol = tol::psd);

/// Absorb a raw bound into the operators: subtracts an identity offset,
/// split evenly across settings and applied to every outcome of the
/// setting, sized by the tight enumerated strategy bound (or the declared
/// raw bound if larger). On trace-one no-signaling assemblages this shifts
/// every evaluation by the same constant.
SteeringFunctional normalize_bound(const std::vector<std::vector<HermOp>>& raw_ops,
                                   double raw_bound);

/// Pull the functional back through a CP map: operators become
/// Lambda^dag(Gamma_{a|x}). Valid functionals stay valid.
SteeringFunctional transform(const SteeringFunctional& gamma, const maps::KrausMap& map);

} // namespace steerlab::ineq
