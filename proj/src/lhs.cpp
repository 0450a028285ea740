#include "steerlab/lhs.hpp"

#include <cmath>

#include "steerlab/states.hpp"

namespace steerlab::lhs {

Rank1Decomposition rank1_refine(const meas::Povm& povm) {
    Rank1Decomposition out;
    out.dim = povm.dim;
    out.parts.reserve(povm.elements.size());
    for (const auto& elem : povm.elements) {
        Eigen::SelfAdjointEigenSolver<Mat> es(elem.mat());
        if (es.info() != Eigen::Success) {
            throw NumericError("rank1_refine: eigensolver did not converge");
        }
        std::vector<RefinedElement> parts;
        for (int k = 0; k < povm.dim; ++k) {
            const double w = es.eigenvalues()[k];
            if (w > 1e-12) parts.push_back({w, projector(es.eigenvectors().col(k))});
        }
        out.parts.push_back(std::move(parts));
    }
    return out;
}

double barrett_response(const RefinedElement& elem, const Vec& lambda, int d) {
    if (std::abs(lambda.norm() - 1.0) > tol::hermiticity) {
        throw DomainError("barrett_response: lambda must be a unit vector");
    }
    const double overlap = (lambda.adjoint() * elem.projector * lambda).real()(0, 0);
    return elem.weight / (d - 1.0) * (1.0 - overlap);
}

HermOp barrett_hidden_state(const Vec& lambda, int d) {
    if (std::abs(lambda.norm() - 1.0) > tol::hermiticity) {
        throw DomainError("barrett_hidden_state: lambda must be a unit vector");
    }
    return HermOp((identity(d) - projector(lambda)) / (d - 1.0));
}

LhsModel barrett_model(int d) {
    if (d < 2) throw DomainError("barrett_model: d must be >= 2");
    LhsModel m;
    m.d = d;
    m.response = [d](const RefinedElement& e, const Vec& l) { return barrett_response(e, l, d); };
    m.hidden_state = [d](const Vec& l) { return barrett_hidden_state(l, d).mat(); };
    m.response_affine = [d](const RefinedElement& e) {
        return std::pair<double, Mat>{e.weight / (d - 1.0),
                                      -e.weight / (d - 1.0) * e.projector};
    };
    m.hidden_const = identity(d) / (d - 1.0);
    m.hidden_pi_coeff = -1.0 / (d - 1.0);
    return m;
}

meas::Assemblage predicted_assemblage_exact(const LhsModel& model,
                                            const meas::MeasurementFamily& family) {
    const int d = model.d;
    if (family.dim() != d) throw DimensionError("predicted_assemblage_exact: dimension mismatch");
    const int n_x = family.num_settings();
    const int n_a = family.max_outcomes();
    const Mat eye = identity(d);
    std::vector<std::vector<HermOp>> grid;
    grid.reserve(n_x);
    for (int x = 0; x < n_x; ++x) {
        const Rank1Decomposition dec = rank1_refine(family.settings[x]);
        std::vector<HermOp> row;
        row.reserve(n_a);
        for (int a = 0; a < n_a; ++a) {
            Mat sigma = Mat::Zero(d, d);
            if (a < static_cast<int>(dec.parts.size())) {
                for (const auto& part : dec.parts[a]) {
                    const auto [c, lin] = model.response_affine(part);
                    const double tr_lin = lin.trace().real();
                    // E[(c + <Pi,L>) (C + g Pi)] with Pi = |l><l| Haar:
                    //   c C + c g I/d + (tr L / d) C + g (L + tr L I)/(d(d+1)).
                    sigma += c * model.hidden_const + c * model.hidden_pi_coeff / d * eye +
                             tr_lin / d * model.hidden_const +
                             model.hidden_pi_coeff / (d * (d + 1.0)) * (lin + tr_lin * eye);
                }
            }
            row.emplace_back(sigma);
        }
        grid.push_back(std::move(row));
    }
    return meas::Assemblage(n_x, n_a, d, std::move(grid));
}

McEstimate predicted_assemblage_from_samples(const LhsModel& model,
                                             const meas::MeasurementFamily& family,
                                             std::span<const Vec> lambdas) {
    const int d = model.d;
    if (family.dim() != d) {
        throw DimensionError("predicted_assemblage_from_samples: dimension mismatch");
    }
    if (lambdas.empty()) throw DomainError("predicted_assemblage_from_samples: need n >= 1");
    const int n_x = family.num_settings();
    const int n_a = family.max_outcomes();
    std::vector<Rank1Decomposition> decs;
    decs.reserve(n_x);
    for (int x = 0; x < n_x; ++x) decs.push_back(rank1_refine(family.settings[x]));

    McEstimate out;
    out.n_x = n_x;
    out.n_a = n_a;
    out.dim_b = d;
    out.n_samples = static_cast<std::int64_t>(lambdas.size());
    out.mean.assign(n_x, std::vector<Mat>(n_a, Mat::Zero(d, d)));
    std::vector<std::vector<Eigen::MatrixXd>> sq_re(
        n_x, std::vector<Eigen::MatrixXd>(n_a, Eigen::MatrixXd::Zero(d, d)));
    std::vector<std::vector<Eigen::MatrixXd>> sq_im = sq_re;

    for (const Vec& l : lambdas) {
        const Mat hidden = model.hidden_state(l);
        for (int x = 0; x < n_x; ++x) {
            for (int a = 0; a < n_a; ++a) {
                double p = 0.0;
                if (a < static_cast<int>(decs[x].parts.size())) {
                    for (const auto& part : decs[x].parts[a]) p += model.response(part, l);
                }
                const Mat term = p * hidden;
                out.mean[x][a] += term;
                sq_re[x][a] += term.real().cwiseProduct(term.real());
                sq_im[x][a] += term.imag().cwiseProduct(term.imag());
            }
        }
    }
    const double n = static_cast<double>(out.n_samples);
    out.stderr_re.assign(n_x, std::vector<Eigen::MatrixXd>(n_a, Eigen::MatrixXd::Zero(d, d)));
    out.stderr_im = out.stderr_re;
    for (int x = 0; x < n_x; ++x) {
        for (int a = 0; a < n_a; ++a) {
            out.mean[x][a] /= n;
            const Eigen::MatrixXd var_re =
                (sq_re[x][a] / n - out.mean[x][a].real().cwiseProduct(out.mean[x][a].real()))
                    .cwiseMax(0.0);
            const Eigen::MatrixXd var_im =
                (sq_im[x][a] / n - out.mean[x][a].imag().cwiseProduct(out.mean[x][a].imag()))
                    .cwiseMax(0.0);
            out.stderr_re[x][a] = (var_re / n).cwiseSqrt();
            out.stderr_im[x][a] = (var_im / n).cwiseSqrt();
        }
    }
    return out;
}

McEstimate predicted_assemblage_mc(const LhsModel& model, const meas::MeasurementFamily& family,
                                   std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw DomainError("predicted_assemblage_mc: need n >= 1");
    Rng rng(seed);
    std::vector<Vec> lambdas;
    lambdas.reserve(static_cast<size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) lambdas.push_back(haar_unit_vector(model.d, rng));
    return predicted_assemblage_from_samples(model, family, lambdas);
}

WernerMatch match_werner_parameter(int d, const meas::MeasurementFamily& probe,
                                   const meas::MeasurementFamily& check) {
    const LhsModel model = barrett_model(d);
    auto fit = [&](const meas::MeasurementFamily& fam) {
        const meas::Assemblage pred = predicted_assemblage_exact(model, fam);
        const meas::Assemblage q0 = meas::assemblage(states::werner(d, 0.0), fam);
        const meas::Assemblage q1 = meas::assemblage(states::werner(d, 1.0), fam);
        double num = 0.0, den = 0.0;
        for (int x = 0; x < pred.n_x; ++x) {
            for (int a = 0; a < pred.n_a; ++a) {
                const Mat slope = q1.at(x, a).mat() - q0.at(x, a).mat();
                const Mat target = pred.at(x, a).mat() - q0.at(x, a).mat();
                num += (slope.adjoint() * target).trace().real();
                den += (slope.adjoint() * slope).trace().real();
            }
        }
        const double w = num / den;
        auto residual_at = [pred, q0, q1](double w_eval) {
            double resid = 0.0;
            for (int x = 0; x < pred.n_x; ++x) {
                for (int a = 0; a < pred.n_a; ++a) {
                    const Mat fitted =
                        q0.at(x, a).mat() + w_eval * (q1.at(x, a).mat() - q0.at(x, a).mat());
                    resid = std::max(resid, (fitted - pred.at(x, a).mat()).cwiseAbs().maxCoeff());
                }
            }
            return resid;
        };
        return std::pair<double, std::function<double(double)>>{w, residual_at};
    };
    const auto [w_probe, resid_probe_at] = fit(probe);
    const auto [w_check, resid_check_at] = fit(check);
    // The check family is scored at the probe family's parameter.
    return WernerMatch{w_probe, resid_probe_at(w_probe), w_check, resid_check_at(w_probe)};
}

WernerMatch match_werner_parameter(int d) {
    // Two disjoint Haar-sampled projective families with fixed seeds.
    return match_werner_parameter(d, meas::sphere_sample(4, 20260401, d),
                                  meas::sphere_sample(4, 20260402, d));
}

} // namespace steerlab::lhs
