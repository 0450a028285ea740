#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steerlab/qmat.hpp"

namespace steerlab::conic {

using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Direct product of a nonnegative orthant and real symmetric PSD blocks.
/// Complex Hermitian constraints enter after realification, so PSD block
/// sizes are doubled relative to the complex dimension.
struct ConeSpec {
    Eigen::Index orthant = 0;
    std::vector<Eigen::Index> psd;

    Eigen::Index vec_len() const;
    double barrier_degree() const;
};

/// min c'x  s.t.  A x = b,  x in K.
struct ConicProblem {
    RMat a;
    RVec b;
    RVec c;
    ConeSpec cone;
};

enum class SolveStatus {
    Optimal,
    Infeasible,     // primal infeasible; (y, s) is a dual improving ray
    Unbounded,      // dual infeasible; x is a primal improving ray
    NumericFailure,
};

const char* to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::NumericFailure;
    RVec x, y, s;            // normalized: solution if optimal, ray otherwise
    double objective = 0.0;  // c'x of the returned x when optimal
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    double gap = 0.0;        // relative duality gap at termination
    int iterations = 0;
    std::string message;
};

/// Primal-dual interior-point method on the homogeneous self-dual
/// embedding (Nesterov-Todd scaling, Mehrotra predictor-corrector), so
/// infeasibility certificates fall out as improving rays. Deterministic
/// for identical inputs. status == Optimal guarantees primal/dual
/// residuals and relative gap at or below `tol`.
SolveResult solve(const ConicProblem& prob, double tol = 1e-7, int max_iters = 120);

// Symmetric vectorization, off-diagonals scaled by sqrt(2) so that
// <svec(A), svec(B)> = <A, B>.
Eigen::Index svec_len(Eigen::Index n);
RVec svec(const RMat& sym);
RMat smat(const RVec& v, Eigen::Index n);

/// [[Re H, -Im H], [Im H, Re H]]; Hermitian -> symmetric, PSD preserved,
/// trace and inner products doubled.
RMat realify(const Mat& h);
/// Inverse up to the complex-structure average: (X11+X22)/2 + i(X21-X12)/2.
Mat derealify(const RMat& r);

/// Orthonormal Hermitian basis of C^{n x n} under <A,B> = tr(A^dag B):
/// diagonal units, then (E_ij+E_ji)/sqrt2 and i(E_ij-E_ji)/sqrt2 per pair.
std::vector<Mat> herm_basis(int n);

} // namespace steerlab::conic
