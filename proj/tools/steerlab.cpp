#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "steerlab/detect.hpp"
#include "steerlab/json_io.hpp"
#include "steerlab/meas.hpp"
#include "steerlab/scenarios.hpp"

namespace {

using steerlab::io::json;

int log_level() {
    const char* env = std::getenv("STEERLAB_LOG");
    return env ? std::atoi(env) : 0;
}

void log_line(const std::string& msg) {
    if (log_level() > 0) std::cerr << "[steerlab] " << msg << "\n";
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << steerlab::io::dump_report(report);
    } else {
        steerlab::io::write_file_atomic(out_path, report);
        log_line("wrote " + out_path);
    }
}

std::string sniff_kind(const json& j) {
    if (j.contains("members")) return "assemblage";
    if (j.contains("table")) return "behavior";
    if (j.contains("matrix")) return "state";
    throw steerlab::ValidationError(
        "input kind not recognized (expected a state, assemblage, or behavior document)");
}

steerlab::meas::MeasurementFamily make_family(const std::string& spec,
                                              const std::optional<std::uint64_t>& seed) {
    const bool sampled = spec.rfind("sphere", 0) == 0;
    if (sampled && !seed.has_value()) {
        throw steerlab::ValidationError("family '" + spec + "' samples; --seed is mandatory");
    }
    return steerlab::meas::family_from_spec(spec, seed.value_or(0));
}

int run_detect(const std::string& in_path, std::string kind, std::string task,
               const std::string& family_spec, const std::string& family_b_spec,
               const std::optional<std::uint64_t>& seed, double tolerance,
               const std::string& out_path) {
    const json doc = steerlab::io::load_file(in_path);
    if (kind.empty()) kind = sniff_kind(doc);
    json report;
    report["command"] = "detect";
    report["input"] = in_path;
    report["kind"] = kind;
    report["tolerance"] = tolerance;
    if (seed) report["seed"] = *seed;

    if (kind == "behavior") {
        const auto p = steerlab::io::behavior_from_json(doc);
        report["task"] = "bell";
        report["result"] = steerlab::io::bell_result_to_json(steerlab::detect::bell_local_lp(p, tolerance));
        emit(report, out_path);
        return 0;
    }

    std::optional<steerlab::meas::Assemblage> sigma;
    if (kind == "assemblage") {
        sigma = steerlab::io::assemblage_from_json(doc);
    } else if (kind == "state") {
        const auto rho = steerlab::io::state_from_json(doc);
        if (task == "bell") {
            if (family_spec.empty() || family_b_spec.empty()) {
                throw steerlab::ValidationError(
                    "bell on a state needs --family (Alice) and --family-b (Bob)");
            }
            const auto fam_a = make_family(family_spec, seed);
            const auto fam_b = make_family(family_b_spec, seed);
            const auto p = steerlab::meas::behavior(rho, fam_a, fam_b);
            report["task"] = "bell";
            report["family"] = family_spec;
            report["family_b"] = family_b_spec;
            report["result"] =
                steerlab::io::bell_result_to_json(steerlab::detect::bell_local_lp(p, tolerance));
            emit(report, out_path);
            return 0;
        }
        if (family_spec.empty()) {
            throw steerlab::ValidationError("state input needs --family for Alice's measurements");
        }
        report["family"] = family_spec;
        sigma = steerlab::meas::assemblage(rho, make_family(family_spec, seed));
    } else {
        throw steerlab::ValidationError("unknown --kind '" + kind + "'");
    }

    if (task.empty() || task == "lhs") {
        report["task"] = "lhs";
        report["result"] =
            steerlab::io::lhs_result_to_json(steerlab::detect::lhs_feasibility(*sigma, tolerance));
    } else if (task == "robustness") {
        report["task"] = "robustness";
        report["result"] = steerlab::io::robustness_result_to_json(
            steerlab::detect::steering_robustness(*sigma, tolerance));
    } else if (task == "bell") {
        throw steerlab::ValidationError("bell task needs a behavior (or a state with two families)");
    } else {
        throw steerlab::ValidationError("unknown --task '" + task + "'");
    }
    emit(report, out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"steerlab: state constructions, local filters, and steering/locality detection"};
    app.require_subcommand(1);

    std::string out_path;
    int d = 2;
    double alpha = 0.4;
    double q = 0.5;
    std::optional<std::uint64_t> seed;
    double tolerance = 1e-7;
    std::string in_path, kind, task, family_spec, family_b_spec;

    auto* ev = app.add_subcommand("entvsteer", "entangled-but-unsteerable window demo");
    ev->add_option("--d", d, "local dimension")->default_val(2);
    ev->add_option("--alpha", alpha, "mixing parameter")->default_val(0.4);
    ev->add_option("--out", out_path, "report path (stdout if omitted)");

    auto* sn = app.add_subcommand("steervsnl", "steerable-but-local filter chain demo");
    sn->add_option("--q", q, "singlet weight")->default_val(0.5);
    sn->add_option("--out", out_path, "report path (stdout if omitted)");

    auto* ow = app.add_subcommand("oneway", "one-way steering construction demo");
    ow->add_option("--seed", seed, "PRNG seed for sampled families")->required();
    ow->add_option("--out", out_path, "report path (stdout if omitted)");

    auto* hs = app.add_subcommand("hidden", "hidden-steering filter pipeline demo");
    hs->add_option("--d", d, "pre-extension local dimension (>= 3)")->default_val(3);
    hs->add_option("--out", out_path, "report path (stdout if omitted)");

    auto* de = app.add_subcommand("detect", "run LHS/robustness/Bell detection on a JSON input");
    de->add_option("--in", in_path, "input JSON (state, assemblage, or behavior)")->required();
    de->add_option("--kind", kind, "state|assemblage|behavior (sniffed if omitted)");
    de->add_option("--task", task, "lhs|robustness|bell (default lhs, bell for behaviors)");
    de->add_option("--family", family_spec, "Alice family: pauli3|mub2|mub3|trine|sphere:n[:d]");
    de->add_option("--family-b", family_b_spec, "Bob family (bell on a state)");
    de->add_option("--seed", seed, "PRNG seed (mandatory for sampled families)");
    de->add_option("--tol", tolerance, "feasibility tolerance")->default_val(1e-7);
    de->add_option("--out", out_path, "report path (stdout if omitted)");

    auto* sv = app.add_subcommand("solve", "solve a conic problem given in JSON form");
    sv->add_option("--in", in_path, "conic problem JSON")->required();
    sv->add_option("--tol", tolerance, "solver tolerance")->default_val(1e-7);
    sv->add_option("--out", out_path, "report path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ev->parsed()) {
            emit(steerlab::scenarios::entvsteer(d, alpha), out_path);
        } else if (sn->parsed()) {
            emit(steerlab::scenarios::steervsnl(q), out_path);
        } else if (ow->parsed()) {
            emit(steerlab::scenarios::oneway(*seed), out_path);
        } else if (hs->parsed()) {
            emit(steerlab::scenarios::hidden(d), out_path);
        } else if (de->parsed()) {
            return run_detect(in_path, kind, task, family_spec, family_b_spec, seed, tolerance,
                              out_path);
        } else if (sv->parsed()) {
            const auto prob = steerlab::io::conic_problem_from_json(steerlab::io::load_file(in_path));
            const auto sol = steerlab::conic::solve(prob, tolerance);
            if (sol.status == steerlab::conic::SolveStatus::NumericFailure) {
                std::cerr << "steerlab: solver failure: " << sol.message << "\n";
                return 3;
            }
            json report;
            report["command"] = "solve";
            report["input"] = in_path;
            report["tolerance"] = tolerance;
            report["result"] = steerlab::io::solve_result_to_json(sol);
            emit(report, out_path);
        }
    } catch (const steerlab::NumericError& e) {
        std::cerr << "steerlab: numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "steerlab: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
