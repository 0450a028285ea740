#include "steerlab/detect.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace steerlab::detect {

using conic::RMat;
using conic::RVec;

namespace {

conic::SolveResult solve_or_throw(const conic::ConicProblem& prob, double tol) {
    // Try a tight tolerance first so threshold decisions have headroom.
    for (double stol : {std::min(tol, 1e-9), 1e-8, tol}) {
        conic::SolveResult r = conic::solve(prob, std::max(stol, 1e-12));
        if (r.status != conic::SolveStatus::NumericFailure) return r;
        if (stol >= tol) {
            throw NumericError("conic solver failed: " + r.message);
        }
    }
    throw NumericError("conic solver failed");
}

} // namespace

conic::ConicProblem robustness_problem(const meas::Assemblage& sigma) {
    const int n_x = sigma.n_x, n_a = sigma.n_a, db = sigma.dim_b;
    const auto strategies = enumerate_strategies(n_x, n_a);
    const int n_strat = static_cast<int>(strategies.size());
    const Eigen::Index nb = 2 * db;           // realified block side
    const Eigen::Index blk = conic::svec_len(nb);
    const auto basis = conic::herm_basis(db); // db^2 Hermitian directions

    conic::ConicProblem prob;
    prob.cone.orthant = 0;
    prob.cone.psd.assign(static_cast<size_t>(n_strat) + static_cast<size_t>(n_x) * n_a, nb);
    const Eigen::Index n_vars = prob.cone.vec_len();
    const Eigen::Index n_rows = static_cast<Eigen::Index>(n_x) * n_a * db * db;

    std::vector<RVec> basis_svec;
    basis_svec.reserve(basis.size());
    for (const auto& e : basis) basis_svec.push_back(conic::svec(conic::realify(e)));

    prob.a = RMat::Zero(n_rows, n_vars);
    prob.b = RVec::Zero(n_rows);
    prob.c = RVec::Zero(n_vars);
    for (int l = 0; l < n_strat; ++l) {
        prob.c.segment(static_cast<Eigen::Index>(l) * blk, blk) =
            0.5 * conic::svec(RMat::Identity(nb, nb));
    }

    Eigen::Index row = 0;
    for (int x = 0; x < n_x; ++x) {
        for (int a = 0; a < n_a; ++a) {
            const Eigen::Index slack_off = (static_cast<Eigen::Index>(n_strat) +
                                            static_cast<Eigen::Index>(x) * n_a + a) *
                                           blk;
            for (size_t i = 0; i < basis.size(); ++i, ++row) {
                for (int l = 0; l < n_strat; ++l) {
                    if (strategies[l](x) == a) {
                        prob.a.row(row).segment(static_cast<Eigen::Index>(l) * blk, blk) =
                            basis_svec[i].transpose();
                    }
                }
                prob.a.row(row).segment(slack_off, blk) = -basis_svec[i].transpose();
                prob.b[row] = 2.0 * (basis[i] * sigma.at(x, a).mat()).trace().real();
            }
        }
    }
    return prob;
}

RobustnessResult steering_robustness(const meas::Assemblage& sigma, double tol) {
    const int n_x = sigma.n_x, n_a = sigma.n_a, db = sigma.dim_b;
    const auto strategies = enumerate_strategies(n_x, n_a);
    const int n_strat = static_cast<int>(strategies.size());
    const Eigen::Index nb = 2 * db;
    const Eigen::Index blk = conic::svec_len(nb);
    const auto basis = conic::herm_basis(db);

    const conic::ConicProblem prob = robustness_problem(sigma);
    const conic::SolveResult sol = solve_or_throw(prob, tol);
    if (sol.status != conic::SolveStatus::Optimal) {
        // The program is strictly feasible on both sides by construction.
        throw NumericError(std::string("steering_robustness: unexpected solver status ") +
                           conic::to_string(sol.status));
    }

    std::vector<HermOp> model;
    model.reserve(n_strat);
    for (int l = 0; l < n_strat; ++l) {
        Mat h = conic::derealify(conic::smat(sol.x.segment(static_cast<Eigen::Index>(l) * blk, blk), nb));
        model.emplace_back(h);
    }
    double resid = 0.0;
    for (int x = 0; x < n_x; ++x) {
        for (int a = 0; a < n_a; ++a) {
            Mat rec = Mat::Zero(db, db);
            for (int l = 0; l < n_strat; ++l) {
                if (strategies[l](x) == a) rec += model[l].mat();
            }
            resid = std::max(resid, (rec - sigma.at(x, a).mat()).cwiseAbs().maxCoeff());
        }
    }

    // Dual rows (x, a, basis i) assemble the pre-normalization functional
    // F_{a|x} = 2 sum_i y_i E_i with F >= 0 and sum_{a,x} D F <= I.
    std::vector<std::vector<HermOp>> f_ops;
    f_ops.reserve(n_x);
    Eigen::Index row = 0;
    for (int x = 0; x < n_x; ++x) {
        std::vector<HermOp> f_row;
        f_row.reserve(n_a);
        for (int a = 0; a < n_a; ++a) {
            Mat f = Mat::Zero(db, db);
            for (size_t i = 0; i < basis.size(); ++i, ++row) f += 2.0 * sol.y[row] * basis[i];
            f_row.emplace_back(f);
        }
        f_ops.push_back(std::move(f_row));
    }
    ineq::SteeringFunctional certificate =
        ineq::normalize_bound(f_ops, std::numeric_limits<double>::lowest());
    const double cert_value = ineq::evaluate(certificate, sigma);
    const double cert_bound = ineq::strategy_bound(certificate);
    return RobustnessResult{std::max(0.0, sol.objective - 1.0),
                            tol,
                            std::move(model),
                            resid,
                            std::move(certificate),
                            cert_value,
                            cert_bound,
                            sol.iterations};
}

LhsResult lhs_feasibility(const meas::Assemblage& sigma, double tol) {
    RobustnessResult rob = steering_robustness(sigma, tol);
    LhsResult out;
    out.t = rob.t;
    out.tol = tol;
    out.feasible = rob.t <= tol;
    if (out.feasible) {
        out.model = std::move(rob.model);
        out.reconstruction_residual = rob.reconstruction_residual;
    } else {
        out.certificate = std::move(rob.certificate);
        out.certificate_value = rob.certificate_value;
    }
    return out;
}

BellResult bell_local_lp(const meas::Behavior& p, double tol) {
    const std::int64_t pair_cap = std::int64_t{1} << 20;
    const auto strat_a = enumerate_strategies(p.n_x, p.n_a, pair_cap);
    const auto strat_b = enumerate_strategies(p.n_y, p.n_b, pair_cap);
    const std::int64_t n_pairs =
        static_cast<std::int64_t>(strat_a.size()) * static_cast<std::int64_t>(strat_b.size());
    if (n_pairs > pair_cap) {
        throw CapExceededError("bell_local_lp: " + std::to_string(n_pairs) +
                               " product strategies exceed the 2^20 cap");
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(p.table.size());
    if (static_cast<double>(rows) * static_cast<double>(2 * n_pairs) > 5e7) {
        throw CapExceededError("bell_local_lp: dense LP would exceed the memory budget");
    }

    conic::ConicProblem prob;
    prob.cone.orthant = 2 * n_pairs;
    prob.a = RMat::Zero(rows, 2 * n_pairs);
    prob.b = Eigen::Map<const RVec>(p.table.data(), rows);
    prob.c = RVec::Ones(2 * n_pairs);

    auto pair_value = [&](Eigen::Index pair, int a, int b, int x, int y) {
        const auto& fa = strat_a[static_cast<size_t>(pair) / strat_b.size()];
        const auto& fb = strat_b[static_cast<size_t>(pair) % strat_b.size()];
        return (fa(x) == a && fb(y) == b) ? 1.0 : 0.0;
    };

    Eigen::Index row = 0;
    for (int x = 0; x < p.n_x; ++x)
        for (int y = 0; y < p.n_y; ++y)
            for (int a = 0; a < p.n_a; ++a)
                for (int b = 0; b < p.n_b; ++b, ++row)
                    for (Eigen::Index l = 0; l < n_pairs; ++l) {
                        const double d = pair_value(l, a, b, x, y);
                        if (d != 0.0) {
                            prob.a(row, l) = d;
                            prob.a(row, n_pairs + l) = -d;
                        }
                    }

    const conic::SolveResult sol = solve_or_throw(prob, tol);
    if (sol.status != conic::SolveStatus::Optimal) {
        // Valid behaviors lie in the strategy span, so the LP is feasible.
        throw NumericError(std::string("bell_local_lp: unexpected solver status ") +
                           conic::to_string(sol.status));
    }

    BellResult out;
    out.weight_norm = sol.objective;
    out.tol = tol;
    out.local = sol.objective <= 1.0 + tol;
    out.weights.resize(static_cast<size_t>(n_pairs));
    for (Eigen::Index l = 0; l < n_pairs; ++l) out.weights[l] = sol.x[l] - sol.x[n_pairs + l];

    out.functional.coeffs.assign(sol.y.data(), sol.y.data() + sol.y.size());
    for (double& v : out.functional.coeffs) v *= 2.0;
    out.functional.value = 0.0;
    for (Eigen::Index r = 0; r < rows; ++r) out.functional.value += out.functional.coeffs[r] * p.table[r];
    double bound = -std::numeric_limits<double>::infinity();
    for (Eigen::Index l = 0; l < n_pairs; ++l) {
        double v = 0.0;
        Eigen::Index r = 0;
        for (int x = 0; x < p.n_x; ++x)
            for (int y = 0; y < p.n_y; ++y)
                for (int a = 0; a < p.n_a; ++a)
                    for (int b = 0; b < p.n_b; ++b, ++r) v += out.functional.coeffs[r] * pair_value(l, a, b, x, y);
        bound = std::max(bound, v);
    }
    out.functional.local_bound = bound;
    return out;
}

BisectResult steering_threshold_bisect(const std::function<BipartiteState(double)>& state_of,
                                       const meas::MeasurementFamily& family, double lo,
                                       double hi, double alpha_tol, double feas_tol) {
    if (!(lo < hi) || alpha_tol <= 0.0) {
        throw DomainError("steering_threshold_bisect: need lo < hi and alpha_tol > 0");
    }
    auto feasible_at = [&](double alpha) {
        return lhs_feasibility(meas::assemblage(state_of(alpha), family), feas_tol).feasible;
    };
    // Probe grid: the transition must flip exactly once, feasible -> infeasible.
    constexpr int probes = 9;
    bool prev = true;
    int flips = 0;
    for (int k = 0; k < probes; ++k) {
        const double alpha = lo + (hi - lo) * k / (probes - 1);
        const bool f = feasible_at(alpha);
        if (k == 0 && !f) throw DomainError("steering_threshold_bisect: infeasible at the low end");
        if (k == probes - 1 && f) {
            throw DomainError("steering_threshold_bisect: still feasible at the high end");
        }
        if (k > 0 && f != prev) {
            ++flips;
            if (f) {
                throw DomainError("steering_threshold_bisect: non-monotone feasibility on probe grid");
            }
        }
        prev = f;
    }
    if (flips != 1) {
        throw DomainError("steering_threshold_bisect: non-monotone feasibility on probe grid");
    }

    BisectResult out;
    int iters = 0;
    while (hi - lo > alpha_tol && iters < 40) {
        const double mid = 0.5 * (lo + hi);
        if (feasible_at(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iters;
    }
    out.alpha_star = 0.5 * (lo + hi);
    out.lo = lo;
    out.hi = hi;
    out.iterations = iters;
    return out;
}

} // namespace steerlab::detect
