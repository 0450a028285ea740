#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "steerlab/conic.hpp"
#include "steerlab/ineq.hpp"
#include "steerlab/meas.hpp"
#include "steerlab/strategies.hpp"

namespace steerlab::detect {

/// Conic encoding of the robustness program: minimize sum_l tr(sigma_l)
/// subject to sum_l D_l(a|x) sigma_l - S_{a|x} = sigma_{a|x}, all blocks PSD.
/// Variable blocks: one per deterministic strategy, then one slack per (x,a).
conic::ConicProblem robustness_problem(const meas::Assemblage& sigma);

struct RobustnessResult {
    double t;                      // minimal noise weight; 0 iff LHS-reproducible
    double tol;                    // tolerance the verdict was checked at
    std::vector<HermOp> model;     // sigma_lambda per strategy (enumeration order)
    double reconstruction_residual; // max entry |sum_l D sigma_l - sigma|
    ineq::SteeringFunctional certificate; // dual functional, LHS bound set to 0
    double certificate_value;      // evaluate(certificate, sigma)
    double certificate_bound;      // enumerated bound (<= 0 by construction)
    int iterations;
};

/// Minimal t with sigma_{a|x} <= sum_l D_l(a|x) sigma_l and
/// sum_l tr sigma_l = 1 + t. Throws NumericError if the solver fails.
RobustnessResult steering_robustness(const meas::Assemblage& sigma, double tol = 1e-7);

struct LhsResult {
    bool feasible = false;
    double t = 0.0;
    double tol = 0.0;
    double reconstruction_residual = 0.0;               // when feasible
    std::vector<HermOp> model;                          // when feasible
    std::optional<ineq::SteeringFunctional> certificate; // when infeasible
    double certificate_value = 0.0;
};

/// Finite form of the local-hidden-state membership test over all
/// deterministic strategies (cap 4096). Feasible returns an explicit
/// model reconstructing sigma within tol; infeasible returns a violated
/// steering functional.
LhsResult lhs_feasibility(const meas::Assemblage& sigma, double tol = 1e-7);

struct BellFunctional {
    std::vector<double> coeffs; // indexed like Behavior::table
    double value = 0.0;         // on the tested behavior
    double local_bound = 0.0;   // max over product deterministic strategies
};

struct BellResult {
    bool local = false;
    double weight_norm = 0.0;      // min sum |c_l| over signed local decompositions
    double tol = 0.0;
    std::vector<double> weights;   // per product strategy (Alice-major)
    BellFunctional functional;     // scaled so a tight local bound reads 2
};

/// Membership in the local polytope via the signed-weight LP
/// min sum |c_l| s.t. p = sum c_l D_l; local iff the optimum is 1.
/// Product-strategy count capped at 2^20.
BellResult bell_local_lp(const meas::Behavior& p, double tol = 1e-7);

struct BisectResult {
    double alpha_star = 0.0;
    double lo = 0.0, hi = 0.0; // final bracket
    int iterations = 0;
};

/// Bisection on lhs_feasibility over [lo, hi]: requires feasible at lo,
/// infeasible at hi, and a single flip on a 9-point probe grid (monotone
/// transition); otherwise throws DomainError.
BisectResult steering_threshold_bisect(const std::function<BipartiteState(double)>& state_of,
                                       const meas::MeasurementFamily& family, double lo,
                                       double hi, double alpha_tol, double feas_tol = 1e-7);

} // namespace steerlab::detect
