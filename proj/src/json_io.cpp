#include "steerlab/json_io.hpp"

#include <cstdio>
#include <fstream>

namespace steerlab::io {

namespace {

// Wrap nlohmann's exceptions so malformed documents surface as input errors.
template <typename F>
auto with_context(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string(what) + ": " + e.what());
    }
}

} // namespace

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat matrix_from_json(const json& j) {
    return with_context("matrix", [&] {
        if (!j.is_array() || j.empty()) throw ValidationError("matrix: expected a nonempty array of rows");
        const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
        const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
        Mat m(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const json& row = j.at(r);
            if (static_cast<Eigen::Index>(row.size()) != cols) {
                throw ValidationError("matrix: ragged row " + std::to_string(r));
            }
            for (Eigen::Index c = 0; c < cols; ++c) {
                const json& entry = row.at(c);
                if (!entry.is_array() || entry.size() != 2) {
                    throw ValidationError("matrix: entry (" + std::to_string(r) + "," +
                                          std::to_string(c) + ") is not an [re, im] pair");
                }
                m(r, c) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
        }
        return m;
    });
}

json state_to_json(const BipartiteState& rho) {
    json j;
    j["dims"] = json::array({rho.dim_a, rho.dim_b});
    j["matrix"] = matrix_to_json(rho.op.mat());
    return j;
}

BipartiteState state_from_json(const json& j) {
    return with_context("state", [&] {
        const int da = j.at("dims").at(0).get<int>();
        const int db = j.at("dims").at(1).get<int>();
        return BipartiteState(da, db, HermOp(matrix_from_json(j.at("matrix"))));
    });
}

json herm_to_json(const HermOp& h) {
    json j;
    j["dim"] = h.dim();
    j["matrix"] = matrix_to_json(h.mat());
    return j;
}

json assemblage_to_json(const meas::Assemblage& sigma) {
    json j;
    j["nX"] = sigma.n_x;
    j["nA"] = sigma.n_a;
    j["dimB"] = sigma.dim_b;
    json members = json::array();
    for (int x = 0; x < sigma.n_x; ++x) {
        json row = json::array();
        for (int a = 0; a < sigma.n_a; ++a) row.push_back(matrix_to_json(sigma.at(x, a).mat()));
        members.push_back(std::move(row));
    }
    j["members"] = std::move(members);
    return j;
}

meas::Assemblage assemblage_from_json(const json& j) {
    return with_context("assemblage", [&] {
        const int n_x = j.at("nX").get<int>();
        const int n_a = j.at("nA").get<int>();
        const int db = j.at("dimB").get<int>();
        const json& members = j.at("members");
        if (static_cast<int>(members.size()) != n_x) {
            throw ValidationError("assemblage: members has " + std::to_string(members.size()) +
                                  " settings, expected " + std::to_string(n_x));
        }
        std::vector<std::vector<HermOp>> grid;
        for (int x = 0; x < n_x; ++x) {
            const json& row = members.at(x);
            if (static_cast<int>(row.size()) != n_a) {
                throw ValidationError("assemblage: setting " + std::to_string(x) + " has " +
                                      std::to_string(row.size()) + " outcomes, expected " +
                                      std::to_string(n_a));
            }
            std::vector<HermOp> ops;
            for (int a = 0; a < n_a; ++a) {
                try {
                    ops.emplace_back(matrix_from_json(row.at(a)));
                } catch (const ValidationError& e) {
                    throw ValidationError("assemblage member (x=" + std::to_string(x) +
                                          ", a=" + std::to_string(a) + "): " + e.what());
                }
            }
            grid.push_back(std::move(ops));
        }
        return meas::Assemblage(n_x, n_a, db, std::move(grid));
    });
}

json behavior_to_json(const meas::Behavior& p) {
    json j;
    j["nX"] = p.n_x;
    j["nY"] = p.n_y;
    j["nA"] = p.n_a;
    j["nB"] = p.n_b;
    json tx = json::array();
    for (int x = 0; x < p.n_x; ++x) {
        json ty = json::array();
        for (int y = 0; y < p.n_y; ++y) {
            json ta = json::array();
            for (int a = 0; a < p.n_a; ++a) {
                json tb = json::array();
                for (int b = 0; b < p.n_b; ++b) tb.push_back(p.at(a, b, x, y));
                ta.push_back(std::move(tb));
            }
            ty.push_back(std::move(ta));
        }
        tx.push_back(std::move(ty));
    }
    j["table"] = std::move(tx);
    return j;
}

meas::Behavior behavior_from_json(const json& j) {
    return with_context("behavior", [&] {
        const int n_x = j.at("nX").get<int>();
        const int n_y = j.at("nY").get<int>();
        const int n_a = j.at("nA").get<int>();
        const int n_b = j.at("nB").get<int>();
        std::vector<double> table;
        table.reserve(static_cast<size_t>(n_x) * n_y * n_a * n_b);
        const json& tx = j.at("table");
        for (int x = 0; x < n_x; ++x)
            for (int y = 0; y < n_y; ++y)
                for (int a = 0; a < n_a; ++a)
                    for (int b = 0; b < n_b; ++b)
                        table.push_back(tx.at(x).at(y).at(a).at(b).get<double>());
        return meas::Behavior(n_x, n_y, n_a, n_b, std::move(table));
    });
}

json functional_to_json(const ineq::SteeringFunctional& gamma) {
    json j;
    j["nX"] = gamma.n_x;
    j["nA"] = gamma.n_a;
    j["dim"] = gamma.dim;
    json ops = json::array();
    for (int x = 0; x < gamma.n_x; ++x) {
        json row = json::array();
        for (int a = 0; a < gamma.n_a; ++a) row.push_back(matrix_to_json(gamma.at(x, a).mat()));
        ops.push_back(std::move(row));
    }
    j["ops"] = std::move(ops);
    return j;
}

json conic_problem_to_json(const conic::ConicProblem& prob) {
    json j;
    j["orthant"] = prob.cone.orthant;
    j["psd"] = prob.cone.psd;
    json a = json::array();
    for (Eigen::Index r = 0; r < prob.a.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < prob.a.cols(); ++c) row.push_back(prob.a(r, c));
        a.push_back(std::move(row));
    }
    j["A"] = std::move(a);
    j["b"] = std::vector<double>(prob.b.data(), prob.b.data() + prob.b.size());
    j["c"] = std::vector<double>(prob.c.data(), prob.c.data() + prob.c.size());
    return j;
}

conic::ConicProblem conic_problem_from_json(const json& j) {
    return with_context("conic problem", [&] {
        conic::ConicProblem prob;
        prob.cone.orthant = j.at("orthant").get<Eigen::Index>();
        prob.cone.psd = j.at("psd").get<std::vector<Eigen::Index>>();
        const json& a = j.at("A");
        const Eigen::Index rows = static_cast<Eigen::Index>(a.size());
        const Eigen::Index cols = prob.cone.vec_len();
        prob.a.resize(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const json& row = a.at(r);
            if (static_cast<Eigen::Index>(row.size()) != cols) {
                throw ValidationError("conic problem: row " + std::to_string(r) +
                                      " length does not match the cone");
            }
            for (Eigen::Index c = 0; c < cols; ++c) prob.a(r, c) = row.at(c).get<double>();
        }
        const auto b = j.at("b").get<std::vector<double>>();
        const auto c = j.at("c").get<std::vector<double>>();
        if (static_cast<Eigen::Index>(b.size()) != rows ||
            static_cast<Eigen::Index>(c.size()) != cols) {
            throw ValidationError("conic problem: b or c length mismatch");
        }
        prob.b = Eigen::Map<const conic::RVec>(b.data(), rows);
        prob.c = Eigen::Map<const conic::RVec>(c.data(), cols);
        return prob;
    });
}

json solve_result_to_json(const conic::SolveResult& r) {
    json j;
    j["status"] = conic::to_string(r.status);
    j["objective"] = r.objective;
    j["iterations"] = r.iterations;
    j["primal_residual"] = r.primal_residual;
    j["dual_residual"] = r.dual_residual;
    j["relative_gap"] = r.gap;
    j["x"] = std::vector<double>(r.x.data(), r.x.data() + r.x.size());
    j["y"] = std::vector<double>(r.y.data(), r.y.data() + r.y.size());
    j["s"] = std::vector<double>(r.s.data(), r.s.data() + r.s.size());
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

json lhs_result_to_json(const detect::LhsResult& r) {
    json j;
    j["lhs_feasible_for_family"] = r.feasible;
    j["note"] = "necessary-condition check (finite family)";
    j["robustness_t"] = r.t;
    j["tolerance"] = r.tol;
    if (r.feasible) {
        j["reconstruction_residual"] = r.reconstruction_residual;
        json model = json::array();
        for (const auto& s : r.model) model.push_back(matrix_to_json(s.mat()));
        j["model_sigma_lambda"] = std::move(model);
    } else {
        j["certificate"] = functional_to_json(*r.certificate);
        j["certificate_value"] = r.certificate_value;
    }
    return j;
}

json robustness_result_to_json(const detect::RobustnessResult& r) {
    json j;
    j["robustness_t"] = r.t;
    j["tolerance"] = r.tol;
    j["reconstruction_residual"] = r.reconstruction_residual;
    j["certificate"] = functional_to_json(r.certificate);
    j["certificate_value"] = r.certificate_value;
    j["certificate_strategy_bound"] = r.certificate_bound;
    j["iterations"] = r.iterations;
    return j;
}

json bell_result_to_json(const detect::BellResult& r) {
    json j;
    j["local"] = r.local;
    j["weight_norm"] = r.weight_norm;
    j["tolerance"] = r.tol;
    if (r.local) {
        j["weights"] = r.weights;
    } else {
        j["functional_coeffs"] = r.functional.coeffs;
        j["functional_value"] = r.functional.value;
        j["functional_local_bound"] = r.functional.local_bound;
    }
    return j;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("failed to parse " + path + ": " + e.what());
    }
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

void write_file_atomic(const std::string& path, const json& j) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw ValidationError("cannot open output file: " + tmp);
        out << dump_report(j);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw ValidationError("cannot move report into place: " + path);
    }
}

} // namespace steerlab::io
