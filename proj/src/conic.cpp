#include "steerlab/conic.hpp"

#include <cmath>
#include <limits>

namespace steerlab::conic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Layout {
    Eigen::Index orthant = 0;
    std::vector<Eigen::Index> offset; // per PSD block
    std::vector<Eigen::Index> size;   // matrix side n
    Eigen::Index total = 0;

    explicit Layout(const ConeSpec& spec) {
        orthant = spec.orthant;
        Eigen::Index off = orthant;
        for (Eigen::Index n : spec.psd) {
            offset.push_back(off);
            size.push_back(n);
            off += svec_len(n);
        }
        total = off;
    }
    Eigen::Index num_blocks() const { return static_cast<Eigen::Index>(size.size()); }
};

// Factorizations of one iterate pair and its Nesterov-Todd scaling.
struct Scaling {
    RVec w_orth;                 // sqrt(x_i / s_i)
    RVec lam_orth;               // sqrt(x_i s_i)
    std::vector<RMat> r;         // per block: R with R^-1 X R^-T = R^T S R = diag(lam)
    std::vector<RMat> r_inv;
    std::vector<RMat> t;         // R R^T (inverse scaling metric)
    std::vector<RVec> lam;
    std::vector<RMat> gx_inv;    // X = Gx Gx^T; inverse factors kept for steps
    std::vector<RMat> gs_inv;
};

bool factor_psd(const RMat& m, RMat& g, RMat& g_inv) {
    Eigen::SelfAdjointEigenSolver<RMat> es(m);
    if (es.info() != Eigen::Success) return false;
    const RVec& ev = es.eigenvalues();
    if (ev.minCoeff() <= 0.0) return false;
    const RVec root = ev.cwiseSqrt();
    g = es.eigenvectors() * root.asDiagonal();
    g_inv = root.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    return true;
}

bool compute_scaling(const Layout& lay, const RVec& x, const RVec& s, Scaling& sc) {
    sc.w_orth.resize(lay.orthant);
    sc.lam_orth.resize(lay.orthant);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) {
        if (x[i] <= 0.0 || s[i] <= 0.0) return false;
        sc.w_orth[i] = std::sqrt(x[i] / s[i]);
        sc.lam_orth[i] = std::sqrt(x[i] * s[i]);
    }
    const auto nb = lay.num_blocks();
    sc.r.assign(nb, {});
    sc.r_inv.assign(nb, {});
    sc.t.assign(nb, {});
    sc.lam.assign(nb, {});
    sc.gx_inv.assign(nb, {});
    sc.gs_inv.assign(nb, {});
    for (Eigen::Index k = 0; k < nb; ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat xb = smat(x.segment(lay.offset[k], len), n);
        RMat sb = smat(s.segment(lay.offset[k], len), n);
        RMat gx, gs, gs_inv;
        if (!factor_psd(xb, gx, sc.gx_inv[k])) return false;
        if (!factor_psd(sb, gs, gs_inv)) return false;
        sc.gs_inv[k] = gs_inv;
        Eigen::JacobiSVD<RMat> svd(gx.transpose() * gs, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const RVec sig = svd.singularValues();
        if (sig.minCoeff() <= 0.0) return false;
        const RVec sig_root_inv = sig.cwiseSqrt().cwiseInverse();
        sc.r[k] = gx * svd.matrixU() * sig_root_inv.asDiagonal();
        sc.r_inv[k] = sig.cwiseSqrt().asDiagonal() * svd.matrixU().transpose() * sc.gx_inv[k];
        sc.t[k] = sc.r[k] * sc.r[k].transpose();
        sc.lam[k] = sig;
    }
    return true;
}

// u <- H^-1 v with H = W^-1 W^-T: orthant scales by x/s, blocks map
// U -> T U T.
RVec apply_h_inv(const Layout& lay, const Scaling& sc, const RVec& v) {
    RVec out(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = sc.w_orth[i] * sc.w_orth[i] * v[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat u = smat(v.segment(lay.offset[k], len), n);
        out.segment(lay.offset[k], len) = svec(sc.t[k] * u * sc.t[k]);
    }
    return out;
}

// Scaled displacement W^-T dx (orthant: dx / w, block: R^-1 U R^-T).
RVec scale_down_x(const Layout& lay, const Scaling& sc, const RVec& dx) {
    RVec out(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = dx[i] / sc.w_orth[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat u = smat(dx.segment(lay.offset[k], len), n);
        out.segment(lay.offset[k], len) = svec(sc.r_inv[k] * u * sc.r_inv[k].transpose());
    }
    return out;
}

// Scaled displacement W ds (orthant: w * ds, block: R^T U R).
RVec scale_up_s(const Layout& lay, const Scaling& sc, const RVec& ds) {
    RVec out(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = sc.w_orth[i] * ds[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat u = smat(ds.segment(lay.offset[k], len), n);
        out.segment(lay.offset[k], len) = svec(sc.r[k].transpose() * u * sc.r[k]);
    }
    return out;
}

// W^-1 v (orthant: v / w, block: R^-T U R^-1); adjoint of scale_down_x.
RVec scale_w_inv(const Layout& lay, const Scaling& sc, const RVec& v) {
    RVec out(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = v[i] / sc.w_orth[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat u = smat(v.segment(lay.offset[k], len), n);
        out.segment(lay.offset[k], len) = svec(sc.r_inv[k].transpose() * u * sc.r_inv[k]);
    }
    return out;
}

// Jordan product u o v in the scaled space.
RVec jordan_product(const Layout& lay, const RVec& u, const RVec& v) {
    RVec out(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = u[i] * v[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat a = smat(u.segment(lay.offset[k], len), n);
        RMat b = smat(v.segment(lay.offset[k], len), n);
        out.segment(lay.offset[k], len) = svec(0.5 * (a * b + b * a));
    }
    return out;
}

// Solve lam o u = rhs where lam is the diagonal scaled point.
RVec jordan_solve(const Layout& lay, const Scaling& sc, const RVec& rhs) {
    RVec out(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = rhs[i] / sc.lam_orth[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        const Eigen::Index len = svec_len(n);
        RMat u = smat(rhs.segment(lay.offset[k], len), n);
        const RVec& l = sc.lam[k];
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) u(i, j) *= 2.0 / (l[i] + l[j]);
        out.segment(lay.offset[k], len) = svec(u);
    }
    return out;
}

// lam o lam (Jordan square of the scaled point).
RVec lambda_square(const Layout& lay, const Scaling& sc) {
    RVec out = RVec::Zero(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) out[i] = sc.lam_orth[i] * sc.lam_orth[i];
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        RMat sq = sc.lam[k].cwiseProduct(sc.lam[k]).asDiagonal();
        out.segment(lay.offset[k], svec_len(n)) = svec(sq);
    }
    return out;
}

RVec identity_element(const Layout& lay) {
    RVec e = RVec::Zero(lay.total);
    for (Eigen::Index i = 0; i < lay.orthant; ++i) e[i] = 1.0;
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        e.segment(lay.offset[k], svec_len(n)) = svec(RMat::Identity(n, n));
    }
    return e;
}

// Largest step keeping v + alpha dv in the cone (inf when unconstrained).
// `g_inv` are the inverse factors of the current PSD blocks.
double max_step(const Layout& lay, const RVec& v, const RVec& dv, const std::vector<RMat>& g_inv) {
    double alpha = kInf;
    for (Eigen::Index i = 0; i < lay.orthant; ++i) {
        if (dv[i] < 0.0) alpha = std::min(alpha, -v[i] / dv[i]);
    }
    for (Eigen::Index k = 0; k < lay.num_blocks(); ++k) {
        const Eigen::Index n = lay.size[k];
        RMat d = smat(dv.segment(lay.offset[k], svec_len(n)), n);
        RMat scaled = g_inv[k] * d * g_inv[k].transpose();
        Eigen::SelfAdjointEigenSolver<RMat> es(scaled, Eigen::EigenvaluesOnly);
        const double m = es.eigenvalues().minCoeff();
        if (m < 0.0) alpha = std::min(alpha, -1.0 / m);
    }
    return alpha;
}

struct Presolved {
    RMat a;
    RVec b;
    std::vector<Eigen::Index> kept_rows;
    bool inconsistent = false;
    RVec farkas_y; // exact certificate when inconsistent (full row space)
};

// Drop linearly dependent equality rows; detect inconsistent systems and
// return the exact combination witnessing them.
Presolved presolve_rows(const RMat& a, const RVec& b) {
    Presolved out;
    const Eigen::Index p = a.rows();
    Eigen::ColPivHouseholderQR<RMat> qr(a.transpose());
    const double thresh = 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff());
    qr.setThreshold(thresh);
    const Eigen::Index rank = qr.rank();
    if (rank == p) {
        out.a = a;
        out.b = b;
        out.kept_rows.resize(p);
        for (Eigen::Index i = 0; i < p; ++i) out.kept_rows[i] = i;
        return out;
    }
    const auto perm = qr.colsPermutation().indices();
    std::vector<bool> keep(p, false);
    for (Eigen::Index i = 0; i < rank; ++i) keep[perm[i]] = true;
    out.a.resize(rank, a.cols());
    out.b.resize(rank);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < p; ++i) {
        if (keep[i]) {
            out.kept_rows.push_back(i);
            out.a.row(r) = a.row(i);
            out.b[r] = b[i];
            ++r;
        }
    }
    // Dropped rows must be consistent combinations of the kept ones.
    Eigen::CompleteOrthogonalDecomposition<RMat> cod(out.a.transpose());
    for (Eigen::Index i = 0; i < p; ++i) {
        if (keep[i]) continue;
        RVec gamma = cod.solve(a.row(i).transpose());
        const double predicted = gamma.dot(out.b);
        if (std::abs(predicted - b[i]) > 1e-9 * (1.0 + std::abs(b[i]))) {
            out.inconsistent = true;
            out.farkas_y = RVec::Zero(p);
            out.farkas_y[i] = -1.0;
            for (Eigen::Index j = 0; j < rank; ++j) out.farkas_y[out.kept_rows[j]] = gamma[j];
            if (out.farkas_y.dot(b) < 0.0) out.farkas_y = -out.farkas_y;
            return out;
        }
    }
    return out;
}

} // namespace

Eigen::Index ConeSpec::vec_len() const {
    Eigen::Index len = orthant;
    for (Eigen::Index n : psd) len += svec_len(n);
    return len;
}

double ConeSpec::barrier_degree() const {
    double nu = static_cast<double>(orthant);
    for (Eigen::Index n : psd) nu += static_cast<double>(n);
    return nu;
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::NumericFailure: return "numeric_failure";
    }
    return "unknown";
}

Eigen::Index svec_len(Eigen::Index n) { return n * (n + 1) / 2; }

RVec svec(const RMat& sym) {
    const Eigen::Index n = sym.rows();
    RVec v(svec_len(n));
    const double r2 = std::sqrt(2.0);
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            v[k++] = (i == j) ? sym(i, i) : 0.5 * r2 * (sym(i, j) + sym(j, i));
        }
    }
    return v;
}

RMat smat(const RVec& v, Eigen::Index n) {
    RMat m(n, n);
    const double inv_r2 = 1.0 / std::sqrt(2.0);
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            const double val = v[k++];
            if (i == j) {
                m(i, i) = val;
            } else {
                m(i, j) = val * inv_r2;
                m(j, i) = val * inv_r2;
            }
        }
    }
    return m;
}

RMat realify(const Mat& h) {
    const Eigen::Index n = h.rows();
    RMat out(2 * n, 2 * n);
    out.topLeftCorner(n, n) = h.real();
    out.bottomRightCorner(n, n) = h.real();
    out.topRightCorner(n, n) = -h.imag();
    out.bottomLeftCorner(n, n) = h.imag();
    return out;
}

Mat derealify(const RMat& r) {
    const Eigen::Index n = r.rows() / 2;
    Mat out(n, n);
    out.real() = 0.5 * (r.topLeftCorner(n, n) + r.bottomRightCorner(n, n));
    out.imag() = 0.5 * (r.bottomLeftCorner(n, n) - r.topRightCorner(n, n));
    return out;
}

std::vector<Mat> herm_basis(int n) {
    std::vector<Mat> basis;
    basis.reserve(static_cast<size_t>(n) * n);
    const double inv_r2 = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i) {
        Mat e = Mat::Zero(n, n);
        e(i, i) = 1.0;
        basis.push_back(e);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Mat re = Mat::Zero(n, n);
            re(i, j) = inv_r2;
            re(j, i) = inv_r2;
            basis.push_back(re);
            Mat im = Mat::Zero(n, n);
            im(i, j) = cplx(0.0, inv_r2);
            im(j, i) = cplx(0.0, -inv_r2);
            basis.push_back(im);
        }
    }
    return basis;
}

SolveResult solve(const ConicProblem& prob, double tol, int max_iters) {
    SolveResult res;
    const Layout lay(prob.cone);
    if (prob.a.cols() != lay.total || prob.c.size() != lay.total || prob.a.rows() != prob.b.size()) {
        throw DimensionError("conic::solve: problem dimensions are inconsistent with the cone");
    }
    if (tol < 1e-12) throw DomainError("conic::solve: tolerance too small");

    const Presolved pre = presolve_rows(prob.a, prob.b);
    if (pre.inconsistent) {
        res.status = SolveStatus::Infeasible;
        res.y = pre.farkas_y / pre.farkas_y.dot(prob.b);
        res.s = RVec::Zero(lay.total);
        res.x = RVec::Zero(lay.total);
        res.message = "equality rows are inconsistent";
        return res;
    }
    const RMat& a = pre.a;
    const RVec& b = pre.b;
    const RVec& c = prob.c;
    const Eigen::Index p = a.rows();
    const Eigen::Index n = lay.total;
    const double nu = prob.cone.barrier_degree() + 1.0;

    auto expand_y = [&](const RVec& y_red) {
        RVec y = RVec::Zero(prob.a.rows());
        for (Eigen::Index i = 0; i < p; ++i) y[pre.kept_rows[i]] = y_red[i];
        return y;
    };

    RVec x = identity_element(lay);
    RVec s = identity_element(lay);
    RVec y = RVec::Zero(p);
    double tau = 1.0, kappa = 1.0;

    const double norm_b = 1.0 + b.norm();
    const double norm_c = 1.0 + c.norm();

    Scaling sc;
    int stall_count = 0;
    double best_metric = kInf;

    for (int iter = 0; iter < max_iters; ++iter) {
        res.iterations = iter;
        // Residuals of the embedding.
        RVec hrp = tau * b - a * x;
        RVec hrd = tau * c - a.transpose() * y - s;
        const double hrg = kappa + c.dot(x) - b.dot(y);
        const double mu = (x.dot(s) + tau * kappa) / nu;

        // Convergence as a normalized primal-dual pair.
        const double pres = (a * (x / tau) - b).norm() / norm_b;
        const double dres = (a.transpose() * (y / tau) + s / tau - c).norm() / norm_c;
        const double pcost = c.dot(x) / tau;
        const double dcost = b.dot(y) / tau;
        const double absgap = x.dot(s) / (tau * tau);
        const double relgap = absgap / std::max({1.0, std::abs(pcost), std::abs(dcost)});
        if (pres <= tol && dres <= tol && relgap <= tol) {
            res.status = SolveStatus::Optimal;
            res.x = x / tau;
            res.y = expand_y(y / tau);
            res.s = s / tau;
            res.objective = c.dot(res.x);
            res.primal_residual = pres;
            res.dual_residual = dres;
            res.gap = relgap;
            return res;
        }
        // Certificate of primal infeasibility: A'y + s = 0, b'y > 0.
        const double by = b.dot(y);
        if (by > 0.0) {
            RVec yn = y / by;
            RVec sn = s / by;
            const double inf_res = (a.transpose() * yn + sn).norm();
            if (inf_res <= tol * (1.0 + yn.norm())) {
                res.status = SolveStatus::Infeasible;
                res.y = expand_y(yn);
                res.s = sn;
                res.x = RVec::Zero(n);
                res.primal_residual = inf_res;
                res.message = "dual improving ray found";
                return res;
            }
        }
        // Certificate of dual infeasibility: A x = 0, c'x < 0, x in K.
        const double cx = c.dot(x);
        if (cx < 0.0) {
            RVec xn = x / (-cx);
            const double unb_res = (a * xn).norm();
            if (unb_res <= tol * (1.0 + xn.norm())) {
                res.status = SolveStatus::Unbounded;
                res.x = xn;
                res.y = expand_y(RVec::Zero(p));
                res.s = RVec::Zero(n);
                res.primal_residual = unb_res;
                res.message = "primal improving ray found";
                return res;
            }
        }

        // Track stalling.
        const double metric = std::max({pres, dres, relgap});
        if (metric < 0.9 * best_metric) {
            best_metric = metric;
            stall_count = 0;
        } else if (++stall_count > 12) {
            res.message = "no progress over 12 iterations";
            break;
        }

        if (!compute_scaling(lay, x, s, sc)) {
            res.message = "scaling breakdown (iterate left the cone interior)";
            break;
        }

        // Schur complement M = A H^-1 A' shared by both directions.
        RMat k_mat(n, p);
        for (Eigen::Index i = 0; i < p; ++i) k_mat.col(i) = apply_h_inv(lay, sc, a.row(i).transpose());
        RMat m_mat = a * k_mat;
        Eigen::LDLT<RMat> m_fact(m_mat);
        if (m_fact.info() != Eigen::Success) {
            res.message = "Schur complement factorization failed";
            break;
        }
        const RVec hc = apply_h_inv(lay, sc, c);
        const RVec u2 = m_fact.solve(b + a * hc);
        const RVec g2 = a.transpose() * u2 - c;
        const RVec v2 = k_mat * u2 - hc;
        const double denom = kappa / tau + g2.dot(apply_h_inv(lay, sc, g2));

        auto newton = [&](double eta, const RVec& d_comp, double d_tk, RVec& dx, RVec& dy,
                          RVec& ds, double& dtau, double& dkappa) {
            const RVec wld = scale_w_inv(lay, sc, jordan_solve(lay, sc, d_comp));
            const RVec rd2 = eta * hrd - wld;
            const RVec hr = apply_h_inv(lay, sc, rd2);
            const RVec u1 = m_fact.solve(a * hr + eta * hrp);
            const RVec v1 = k_mat * u1 - hr;
            dtau = (eta * hrg + d_tk / tau + c.dot(v1) - b.dot(u1)) / denom;
            dy = u1 + dtau * u2;
            dx = v1 + dtau * v2;
            ds = eta * hrd + dtau * c - a.transpose() * dy;
            dkappa = (d_tk - kappa * dtau) / tau;
        };

        // Predictor (affine) direction.
        RVec dx_a(n), dy_a(p), ds_a(n);
        double dtau_a = 0.0, dkappa_a = 0.0;
        {
            const RVec d_comp = -lambda_square(lay, sc);
            newton(1.0, d_comp, -tau * kappa, dx_a, dy_a, ds_a, dtau_a, dkappa_a);
        }
        double alpha_aff = std::min(max_step(lay, x, dx_a, sc.gx_inv),
                                    max_step(lay, s, ds_a, sc.gs_inv));
        if (dtau_a < 0.0) alpha_aff = std::min(alpha_aff, -tau / dtau_a);
        if (dkappa_a < 0.0) alpha_aff = std::min(alpha_aff, -kappa / dkappa_a);
        alpha_aff = std::min(alpha_aff, 1.0);

        const double mu_aff = ((x + alpha_aff * dx_a).dot(s + alpha_aff * ds_a) +
                               (tau + alpha_aff * dtau_a) * (kappa + alpha_aff * dkappa_a)) /
                              nu;
        double gamma = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);

        // Corrector (combined) direction.
        RVec dx(n), dy(p), ds(n);
        double dtau = 0.0, dkappa = 0.0;
        {
            const RVec dxs = scale_down_x(lay, sc, dx_a);
            const RVec dss = scale_up_s(lay, sc, ds_a);
            RVec d_comp = gamma * mu * identity_element(lay) - lambda_square(lay, sc) -
                          jordan_product(lay, dxs, dss);
            const double d_tk = gamma * mu - tau * kappa - dtau_a * dkappa_a;
            newton(1.0 - gamma, d_comp, d_tk, dx, dy, ds, dtau, dkappa);
        }
        double alpha = std::min(max_step(lay, x, dx, sc.gx_inv), max_step(lay, s, ds, sc.gs_inv));
        if (dtau < 0.0) alpha = std::min(alpha, -tau / dtau);
        if (dkappa < 0.0) alpha = std::min(alpha, -kappa / dkappa);
        alpha = std::min(0.99 * alpha, 1.0);
        if (!std::isfinite(alpha) || alpha < 1e-13) {
            res.message = "step length collapsed";
            break;
        }

        x += alpha * dx;
        y += alpha * dy;
        s += alpha * ds;
        tau += alpha * dtau;
        kappa += alpha * dkappa;
        if (!(tau > 0.0) || !std::isfinite(x.sum()) || !std::isfinite(s.sum())) {
            res.message = "iterate diverged";
            break;
        }
    }

    res.status = SolveStatus::NumericFailure;
    if (res.message.empty()) res.message = "iteration limit reached";
    res.x = x / std::max(tau, 1e-300);
    res.y = expand_y(y / std::max(tau, 1e-300));
    res.s = s / std::max(tau, 1e-300);
    res.objective = c.dot(res.x);
    res.primal_residual = (a * res.x - b).norm() / norm_b;
    res.dual_residual = (a.transpose() * (y / std::max(tau, 1e-300)) + res.s - c).norm() / norm_c;
    res.gap = x.dot(s) / std::max(tau * tau, 1e-300);
    return res;
}

} // namespace steerlab::conic
