#pragma once

#include <complex>

#include <Eigen/Dense>

#include "steerlab/errors.hpp"

namespace steerlab {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

enum class Side { A, B };

namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double trace_one = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double povm_sum = 1e-9;
inline constexpr double no_signaling = 1e-10;
inline constexpr double assemblage_trace = 1e-9;
inline constexpr double degenerate_filter = 1e-12;
} // namespace tol

/// Complex square matrix kept Hermitian by construction: the input is
/// checked against the Hermiticity tolerance and then symmetrized, so
/// floating-point drift from products of valid inputs cannot accumulate.
class HermOp {
public:
    explicit HermOp(Mat m, double herm_tol = tol::hermiticity);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Mat& mat() const { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }
    double trace() const { return m_.trace().real(); }

private:
    Mat m_;
};

/// Trace-one positive operator with a declared (dimA, dimB) factorization.
/// Index order is A-major throughout: composite index = a*dimB + b.
struct BipartiteState {
    int dim_a;
    int dim_b;
    HermOp op;

    BipartiteState(int da, int db, HermOp o);
};

Mat identity(int n);
Vec basis_ket(int dim, int i);
Mat projector(const Vec& v);
/// SWAP on C^d (x) C^d, |ij> -> |ji>.
Mat swap_operator(int d);

/// Kronecker product with A-major index order (index = a*dimB + b).
Mat kron(const Mat& a, const Mat& b);
HermOp tensor(const HermOp& a, const HermOp& b);

/// Trace out the subsystem named by `traced`; the result lives on the
/// other factor and keeps the total trace.
HermOp partial_trace(const HermOp& h, int dim_a, int dim_b, Side traced);
HermOp partial_trace(const BipartiteState& rho, Side traced);
/// Same contraction on a plain matrix (products like (M (x) I) rho are
/// not Hermitian even when their partial trace is).
Mat partial_trace_raw(const Mat& m, int dim_a, int dim_b, Side traced);

/// Transpose one tensor factor. Involutive and trace preserving.
HermOp partial_transpose(const HermOp& h, int dim_a, int dim_b, Side side);
HermOp partial_transpose(const BipartiteState& rho, Side side);

/// Exchange the tensor factors: (A (x) B) index order becomes (B (x) A).
BipartiteState swap_subsystems(const BipartiteState& rho);

double min_eigenvalue(const HermOp& h);
Eigen::VectorXd eigenvalues(const HermOp& h);

} // namespace steerlab
