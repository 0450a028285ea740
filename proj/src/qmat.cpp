#include "steerlab/qmat.hpp"

#include <string>

namespace steerlab {

HermOp::HermOp(Mat m, double herm_tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError("HermOp: matrix must be square and nonempty, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > herm_tol) {
        throw ValidationError("HermOp: input is not Hermitian within tolerance (max |H - H^dag| = " +
                              std::to_string(asym) + ")");
    }
    m_ = 0.5 * (m + m.adjoint().eval());
}

BipartiteState::BipartiteState(int da, int db, HermOp o) : dim_a(da), dim_b(db), op(std::move(o)) {
    if (da <= 0 || db <= 0 || op.dim() != da * db) {
        throw DimensionError("BipartiteState: declared split (" + std::to_string(da) + "," +
                             std::to_string(db) + ") does not match operator dim " +
                             std::to_string(op.dim()));
    }
    const double tr = op.trace();
    if (std::abs(tr - 1.0) > tol::trace_one) {
        throw ValidationError("BipartiteState: trace " + std::to_string(tr) + " is not 1");
    }
    const double mineig = min_eigenvalue(op);
    if (mineig < -tol::psd) {
        throw ValidationError("BipartiteState: minimum eigenvalue " + std::to_string(mineig) +
                              " below PSD tolerance");
    }
}

Mat identity(int n) { return Mat::Identity(n, n); }

Vec basis_ket(int dim, int i) {
    if (i < 0 || i >= dim) throw DimensionError("basis_ket: index out of range");
    Vec v = Vec::Zero(dim);
    v(i) = 1.0;
    return v;
}

Mat projector(const Vec& v) { return v * v.adjoint(); }

Mat swap_operator(int d) {
    Mat s = Mat::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) s(i * d + j, j * d + i) = 1.0;
    return s;
}

Mat kron(const Mat& a, const Mat& b) {
    const auto ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
    Mat out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

HermOp tensor(const HermOp& a, const HermOp& b) { return HermOp(kron(a.mat(), b.mat())); }

Mat partial_trace_raw(const Mat& m, int dim_a, int dim_b, Side traced) {
    if (dim_a <= 0 || dim_b <= 0 || m.rows() != dim_a * dim_b || m.rows() != m.cols()) {
        throw DimensionError("partial_trace: split (" + std::to_string(dim_a) + "," +
                             std::to_string(dim_b) + ") does not match dim " +
                             std::to_string(m.rows()));
    }
    if (traced == Side::A) {
        Mat out = Mat::Zero(dim_b, dim_b);
        for (int a = 0; a < dim_a; ++a) out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
        return out;
    }
    Mat out = Mat::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_a; ++j) out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    return out;
}

HermOp partial_trace(const HermOp& h, int dim_a, int dim_b, Side traced) {
    return HermOp(partial_trace_raw(h.mat(), dim_a, dim_b, traced));
}

HermOp partial_trace(const BipartiteState& rho, Side traced) {
    return partial_trace(rho.op, rho.dim_a, rho.dim_b, traced);
}

HermOp partial_transpose(const HermOp& h, int dim_a, int dim_b, Side side) {
    if (dim_a <= 0 || dim_b <= 0 || h.dim() != dim_a * dim_b) {
        throw DimensionError("partial_transpose: split does not match operator dim");
    }
    const Mat& m = h.mat();
    Mat out(h.dim(), h.dim());
    if (side == Side::B) {
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                out.block(i * dim_b, j * dim_b, dim_b, dim_b) =
                    m.block(i * dim_b, j * dim_b, dim_b, dim_b).transpose();
    } else {
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                out.block(i * dim_b, j * dim_b, dim_b, dim_b) =
                    m.block(j * dim_b, i * dim_b, dim_b, dim_b);
    }
    return HermOp(out);
}

HermOp partial_transpose(const BipartiteState& rho, Side side) {
    return partial_transpose(rho.op, rho.dim_a, rho.dim_b, side);
}

BipartiteState swap_subsystems(const BipartiteState& rho) {
    const int da = rho.dim_a, db = rho.dim_b;
    const Mat& m = rho.op.mat();
    Mat out(da * db, da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < db; ++j)
            for (int k = 0; k < da; ++k)
                for (int l = 0; l < db; ++l) out(j * da + i, l * da + k) = m(i * db + j, k * db + l);
    return BipartiteState(db, da, HermOp(out));
}

Eigen::VectorXd eigenvalues(const HermOp& h) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(h.mat(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigenvalues: Hermitian eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double min_eigenvalue(const HermOp& h) { return eigenvalues(h).minCoeff(); }

} // namespace steerlab
