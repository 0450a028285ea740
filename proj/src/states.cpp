#include "steerlab/states.hpp"

#include <cmath>
#include <string>

namespace steerlab::states {

namespace {

Mat singlet_ket_matrix() {
    Vec psi = (kron(basis_ket(2, 0), basis_ket(2, 1)) - kron(basis_ket(2, 1), basis_ket(2, 0))) /
              std::sqrt(2.0);
    return projector(psi);
}

// Embed an operator on C^da (x) C^db into C^ea (x) C^eb, original indices first.
Mat embed(const Mat& m, int da, int db, int ea, int eb) {
    Mat out = Mat::Zero(ea * eb, ea * eb);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j)
            out.block(i * eb, j * eb, db, db) = m.block(i * db, j * db, db, db);
    return out;
}

} // namespace

WernerParams WernerParams::checked(int d, double alpha) {
    if (d < 2) throw DomainError("werner: d must be >= 2");
    const double lo = -(d - 1.0) / (d + 1.0);
    if (alpha < lo - 1e-12 || alpha > 1.0 + 1e-12) {
        throw DomainError("werner: alpha = " + std::to_string(alpha) +
                          " outside the PSD interval [" + std::to_string(lo) + ", 1]");
    }
    return WernerParams{d, alpha};
}

BipartiteState singlet() { return BipartiteState(2, 2, HermOp(singlet_ket_matrix())); }

BipartiteState werner(int d, double alpha) {
    const WernerParams p = WernerParams::checked(d, alpha);
    const int dd = p.d * p.d;
    Mat p_anti = 0.5 * (identity(dd) - swap_operator(p.d));
    Mat m = p.alpha * 2.0 / (p.d * (p.d - 1.0)) * p_anti +
            (1.0 - p.alpha) / static_cast<double>(dd) * identity(dd);
    HermOp op(m);
    if (min_eigenvalue(op) < -tol::psd) {
        throw DomainError("werner: alpha does not give a PSD operator");
    }
    return BipartiteState(p.d, p.d, std::move(op));
}

WernerThresholds werner_thresholds(int d) {
    if (d < 2) throw DomainError("werner_thresholds: d must be >= 2");
    const double ent = 1.0 / (d + 1.0);
    const double lhs = (3.0 * d - 1.0) / (d + 1.0) * std::pow(d - 1.0, d - 1) * std::pow(static_cast<double>(d), -d);
    return WernerThresholds{ent, lhs};
}

BipartiteState flag_extend(const BipartiteState& rho, Side side) {
    if (side == Side::A) {
        const int d = rho.dim_a;
        const int ea = d + 1;
        Mat marginal_b = partial_trace(rho, Side::A).mat();
        Mat flag = projector(basis_ket(ea, d));
        Mat m = embed(rho.op.mat(), d, rho.dim_b, ea, rho.dim_b) + d * kron(flag, marginal_b);
        return BipartiteState(ea, rho.dim_b, HermOp(m / (d + 1.0)));
    }
    const int d = rho.dim_b;
    const int eb = d + 1;
    Mat marginal_a = partial_trace(rho, Side::B).mat();
    Mat flag = projector(basis_ket(eb, d));
    // Embedding on the B side: indices within each A block shift only in B.
    Mat grown = Mat::Zero(rho.dim_a * eb, rho.dim_a * eb);
    for (int i = 0; i < rho.dim_a; ++i)
        for (int j = 0; j < rho.dim_a; ++j)
            grown.block(i * eb, j * eb, d, d) = rho.op.mat().block(i * d, j * d, d, d);
    Mat m = grown + d * kron(marginal_a, flag);
    return BipartiteState(rho.dim_a, eb, HermOp(m / (d + 1.0)));
}

BipartiteState rho_g(double q) {
    if (!(q > 0.0) || q > 1.0) throw DomainError("rho_g: q must be in (0, 1]");
    Mat psi22 = embed(singlet_ket_matrix(), 2, 2, 3, 3);
    Mat qubit_id3 = Mat::Zero(3, 3);
    qubit_id3.block(0, 0, 2, 2) = identity(2);
    Mat flag3 = projector(basis_ket(3, 2));
    Mat m = q * psi22 + (3.0 - q) * kron(0.5 * qubit_id3, flag3) +
            2.0 * q * kron(flag3, 0.5 * qubit_id3) + (6.0 - 2.0 * q) * kron(flag3, flag3);
    return BipartiteState(3, 3, HermOp(m / 9.0));
}

BipartiteState erasure(double alpha, Side steered_side) {
    if (alpha < 0.0 || alpha > 1.0) throw DomainError("erasure: alpha must be in [0, 1]");
    Mat qubit_id3 = Mat::Zero(3, 3);
    qubit_id3.block(0, 0, 2, 2) = identity(2);
    Mat flag3 = projector(basis_ket(3, 2));
    if (steered_side == Side::B) {
        // Alice qubit, Bob qutrit: singlet embedded in B's qubit subspace.
        Mat psi = Mat::Zero(6, 6);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                psi.block(i * 3, j * 3, 2, 2) = singlet_ket_matrix().block(i * 2, j * 2, 2, 2);
        Mat m = alpha * psi + (1.0 - alpha) * kron(0.5 * identity(2), flag3);
        return BipartiteState(2, 3, HermOp(m));
    }
    Mat psi = embed(singlet_ket_matrix(), 2, 2, 3, 2);
    Mat m = alpha * psi + (1.0 - alpha) * kron(flag3, 0.5 * identity(2));
    return BipartiteState(3, 2, HermOp(m));
}

BipartiteState rho_1w() {
    Mat m = singlet_ket_matrix() +
            0.6 * kron(projector(basis_ket(2, 1)), 0.5 * identity(2)) +
            0.4 * kron(0.5 * identity(2), projector(basis_ket(2, 0)));
    return BipartiteState(2, 2, HermOp(0.5 * m));
}

BipartiteState rho_1w_prime() { return flag_extend(rho_1w(), Side::A); }

BipartiteState rho_hs(int d) {
    if (d < 2) throw DomainError("rho_hs: d must be >= 2");
    BipartiteState tilde_w = werner(d, (d - 1.0) / d);
    return flag_extend(flag_extend(tilde_w, Side::A), Side::B);
}

BipartiteState hidden_steering_target(int d) {
    if (d < 2) throw DomainError("hidden_steering_target: d must be >= 2");
    const double s = 2.0 / d;
    Mat m = (singlet_ket_matrix() + s * 0.25 * identity(4)) / (1.0 + s);
    return BipartiteState(2, 2, HermOp(m));
}

bool is_ppt(const BipartiteState& rho) {
    return min_eigenvalue(partial_transpose(rho, Side::B)) >= -tol::psd;
}

PptVerdict ppt_verdict(const BipartiteState& rho) {
    if (!is_ppt(rho)) return PptVerdict::NptEntangled;
    const int lo = std::min(rho.dim_a, rho.dim_b);
    const int hi = std::max(rho.dim_a, rho.dim_b);
    if (lo <= 2 && hi <= 3) return PptVerdict::PptSeparable;
    return PptVerdict::PptInconclusive;
}

const char* to_string(PptVerdict v) {
    switch (v) {
        case PptVerdict::NptEntangled: return "entangled (NPT)";
        case PptVerdict::PptSeparable: return "separable (PPT, dims <= 2x3)";
        case PptVerdict::PptInconclusive: return "PPT (inconclusive for entanglement)";
    }
    return "unknown";
}

} // namespace steerlab::states
