#pragma once

#include <string>

#include <json.hpp>

#include "steerlab/conic.hpp"
#include "steerlab/detect.hpp"
#include "steerlab/ineq.hpp"
#include "steerlab/meas.hpp"
#include "steerlab/qmat.hpp"

namespace steerlab::io {

using json = nlohmann::ordered_json;

// Complex matrices are rows of [re, im] pairs, row-major, A-major index
// order (composite index = a*dimB + b).
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]}
json state_to_json(const BipartiteState& rho);
BipartiteState state_from_json(const json& j);

json herm_to_json(const HermOp& h);

// {"nX": m, "nA": o, "dimB": d, "members": [[matrix, ...], ...]}
json assemblage_to_json(const meas::Assemblage& sigma);
meas::Assemblage assemblage_from_json(const json& j);

// {"nX", "nY", "nA", "nB", "table": [x][y][a][b]}
json behavior_to_json(const meas::Behavior& p);
meas::Behavior behavior_from_json(const json& j);

json functional_to_json(const ineq::SteeringFunctional& gamma);

// {"orthant": l, "psd": [...], "A": [[...]], "b": [...], "c": [...]}
json conic_problem_to_json(const conic::ConicProblem& prob);
conic::ConicProblem conic_problem_from_json(const json& j);

json solve_result_to_json(const conic::SolveResult& r);

json lhs_result_to_json(const detect::LhsResult& r);
json robustness_result_to_json(const detect::RobustnessResult& r);
json bell_result_to_json(const detect::BellResult& r);

/// Load a JSON document; ValidationError on parse failure, with the path
/// in the message.
json load_file(const std::string& path);

/// Serialize with a fixed layout (2-space indent, ordered keys, trailing
/// newline) and write atomically via a temp file + rename.
void write_file_atomic(const std::string& path, const json& j);
std::string dump_report(const json& j);

} // namespace steerlab::io
