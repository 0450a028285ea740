#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "steerlab/meas.hpp"
#include "steerlab/qmat.hpp"
#include "steerlab/random.hpp"

namespace steerlab::lhs {

/// One weighted rank-1 piece alpha * P of a POVM element.
struct RefinedElement {
    double weight;
    Mat projector;
};

/// Rank-1 refinement of a POVM: parts[e] lists the weighted projectors
/// whose sum reproduces element e. The response of a full element is the
/// sum of its parts' responses.
struct Rank1Decomposition {
    int dim;
    std::vector<std::vector<RefinedElement>> parts;
};

Rank1Decomposition rank1_refine(const meas::Povm& povm);

/// Hidden-state model with the shared variable a Haar-random pure state.
/// `response` and `hidden_state` drive Monte Carlo evaluation; the affine
/// descriptors expose the degree-<=1 dependence on |l><l| that closed-form
/// Haar integration needs.
struct LhsModel {
    int d;
    std::function<double(const RefinedElement&, const Vec&)> response;
    std::function<Mat(const Vec&)> hidden_state;
    // response(elem, l) = first + <|l><l|, second>
    std::function<std::pair<double, Mat>(const RefinedElement&)> response_affine;
    // hidden_state(l) = hidden_const + hidden_pi_coeff * |l><l|
    Mat hidden_const;
    double hidden_pi_coeff;
};

/// p(elem, l) = (alpha/(d-1)) (1 - <l|P|l>).
double barrett_response(const RefinedElement& elem, const Vec& lambda, int d);

/// sigma_l = (I - |l><l|)/(d-1).
HermOp barrett_hidden_state(const Vec& lambda, int d);

LhsModel barrett_model(int d);

/// Closed-form Haar average of p_A(a|x,l) sigma_l using the first and
/// second moment identities E[|l><l|] = I/d and
/// E[|l><l| (x) |l><l|] = (I + SWAP)/(d(d+1)).
meas::Assemblage predicted_assemblage_exact(const LhsModel& model,
                                            const meas::MeasurementFamily& family);

struct McEstimate {
    int n_x, n_a, dim_b;
    std::int64_t n_samples;
    std::vector<std::vector<Mat>> mean;                    // [x][a]
    std::vector<std::vector<Eigen::MatrixXd>> stderr_re;   // elementwise standard errors
    std::vector<std::vector<Eigen::MatrixXd>> stderr_im;
};

/// Empirical mean over explicit samples (exposed for forcing lambda in
/// tests and reused by the seeded driver below).
McEstimate predicted_assemblage_from_samples(const LhsModel& model,
                                             const meas::MeasurementFamily& family,
                                             std::span<const Vec> lambdas);

/// Monte Carlo quadrature over n Haar samples; deterministic given seed.
McEstimate predicted_assemblage_mc(const LhsModel& model, const meas::MeasurementFamily& family,
                                   std::int64_t n, std::uint64_t seed);

struct WernerMatch {
    double w;                 // least-squares parameter on the probe family
    double residual_probe;    // max-entry residual at w on the probe family
    double w_check;           // independently fitted on the check family
    double residual_check;    // max-entry residual at w on the check family
};

/// Werner parameter whose quantum assemblage the bare response-function
/// conversion reproduces, fitted on one family and verified on a disjoint
/// one. The value is reported, not asserted a priori.
WernerMatch match_werner_parameter(int d, const meas::MeasurementFamily& probe,
                                   const meas::MeasurementFamily& check);
WernerMatch match_werner_parameter(int d);

} // namespace steerlab::lhs
