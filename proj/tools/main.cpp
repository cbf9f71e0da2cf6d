// Command-line front end: load an experiment (scenario file or catalog),
// simulate detector probabilities, classify candidate observables, and
// emit witnesses and reports in table or machine-readable form.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "quivis/catalog.hpp"
#include "quivis/report.hpp"
#include "quivis/scenario.hpp"

namespace {

struct CommonOptions {
    std::string scenario_path;
    std::string catalog_id;
    std::string format = "table";
    std::optional<double> atol;
    std::optional<double> prob_tol;
    double theta = 45.0;
    int bins = 8;
    std::string axis = "0,0,1";
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    auto* scenario = cmd->add_option("--scenario", opt.scenario_path, "Scenario JSON file");
    auto* catalog = cmd->add_option("--catalog", opt.catalog_id, "Built-in scenario id");
    scenario->excludes(catalog);
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    cmd->add_option("--atol", opt.atol, "Override the matrix comparison tolerance");
    cmd->add_option("--prob-tol", opt.prob_tol, "Override the probability comparison tolerance");
    cmd->add_option("--theta", opt.theta, "Preparator angle in degrees (mz scenarios)")
        ->capture_default_str();
    cmd->add_option("--bins", opt.bins, "Screen bin count (two-slit scenarios)")
        ->capture_default_str();
    cmd->add_option("--axis", opt.axis, "Spin axis as x,y,z (sg scenario)")
        ->capture_default_str();
}

std::array<double, 3> parse_axis(const std::string& text) {
    std::array<double, 3> axis{};
    std::istringstream in(text);
    char comma1 = 0, comma2 = 0;
    if (!(in >> axis[0] >> comma1 >> axis[1] >> comma2 >> axis[2]) || comma1 != ',' ||
        comma2 != ',') {
        throw quivis::InvalidAxis("--axis: expected three comma-separated numbers");
    }
    const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (norm <= 0) throw quivis::InvalidAxis("--axis: zero vector");
    for (double& x : axis) x /= norm;
    return axis;
}

quivis::Tolerances apply_overrides(quivis::Tolerances tol, const CommonOptions& opt) {
    if (opt.atol) tol.atol_matrix = *opt.atol;
    if (opt.prob_tol) tol.prob_tol = *opt.prob_tol;
    tol.validate();
    return tol;
}

struct LoadedExperiment {
    quivis::Experiment experiment;
    std::string name;
};

LoadedExperiment load_experiment(const CommonOptions& opt) {
    if (!opt.catalog_id.empty()) {
        quivis::catalog::Parameters params;
        params.theta_degrees = opt.theta;
        params.bins = opt.bins;
        params.axis = parse_axis(opt.axis);
        quivis::Tolerances tol = apply_overrides(quivis::Tolerances{}, opt);
        return {quivis::catalog::build(opt.catalog_id, params, tol), opt.catalog_id};
    }
    if (opt.scenario_path.empty()) {
        throw quivis::Error("give --scenario <path> or --catalog <id>");
    }
    std::ifstream in(opt.scenario_path, std::ios::binary);
    if (!in) throw quivis::Error("cannot open '" + opt.scenario_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    quivis::ScenarioDocument doc = quivis::parse_scenario(buffer.str());
    if (opt.atol || opt.prob_tol) {
        quivis::Tolerances tol = apply_overrides(doc.tolerances, opt);
        doc.experiment = quivis::Experiment(doc.experiment.initial(), doc.experiment.timeline(),
                                            doc.experiment.measured(),
                                            doc.experiment.candidates(), tol);
    }
    return {std::move(doc.experiment), opt.scenario_path};
}

int run_catalog_command(const std::string& id, const std::string& out_path,
                        const CommonOptions& opt) {
    if (id.empty()) {
        for (const std::string& name : quivis::catalog::ids()) {
            std::cout << name << "  -  " << quivis::catalog::describe(name) << "\n";
        }
        return 0;
    }
    quivis::catalog::Parameters params;
    params.theta_degrees = opt.theta;
    params.bins = opt.bins;
    params.axis = parse_axis(opt.axis);
    quivis::Experiment exp = quivis::catalog::build(id, params);
    std::string text = quivis::scenario_to_string(exp, quivis::catalog::describe(id));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw quivis::Error("cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"model quantum experiments and classify which-result vs interference observables"};
    app.require_subcommand(1);

    CommonOptions simulate_opt, classify_opt, witness_opt, report_opt, catalog_opt;
    std::string witness_candidate;
    std::string catalog_id, catalog_out;

    CLI::App* simulate = app.add_subcommand("simulate", "Detector probabilities at t_f");
    add_common_flags(simulate, simulate_opt);

    CLI::App* classify = app.add_subcommand("classify", "Classify every candidate observable");
    add_common_flags(classify, classify_opt);

    CLI::App* witness = app.add_subcommand("witness", "Interference witness for one candidate");
    add_common_flags(witness, witness_opt);
    witness->add_option("--candidate", witness_candidate, "Candidate name")->required();

    CLI::App* report = app.add_subcommand("report", "Probabilities, verdicts, and witnesses");
    add_common_flags(report, report_opt);

    CLI::App* catalog = app.add_subcommand("catalog", "List built-in scenarios or export one");
    catalog->add_option("--id", catalog_id, "Scenario id to export as scenario JSON");
    catalog->add_option("--out", catalog_out, "Write the exported scenario to a file");
    catalog->add_option("--theta", catalog_opt.theta, "Preparator angle in degrees")
        ->capture_default_str();
    catalog->add_option("--bins", catalog_opt.bins, "Screen bin count")->capture_default_str();
    catalog->add_option("--axis", catalog_opt.axis, "Spin axis as x,y,z")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog->parsed()) {
            return run_catalog_command(catalog_id, catalog_out, catalog_opt);
        }
        const CommonOptions& opt = simulate->parsed()  ? simulate_opt
                                   : classify->parsed() ? classify_opt
                                   : witness->parsed()  ? witness_opt
                                                        : report_opt;
        LoadedExperiment loaded = load_experiment(opt);
        quivis::Report rep = quivis::build_report(loaded.experiment, loaded.name);
        const bool json = opt.format == "json";
        if (simulate->parsed()) {
            std::cout << (json ? quivis::probabilities_to_json(rep)
                               : quivis::probabilities_to_table(rep));
        } else if (classify->parsed()) {
            std::cout << (json ? quivis::classifications_to_json(rep)
                               : quivis::classifications_to_table(rep));
        } else if (witness->parsed()) {
            std::cout << (json ? quivis::witness_to_json(rep, witness_candidate)
                               : quivis::witness_to_table(rep, witness_candidate));
        } else {
            std::cout << (json ? quivis::report_to_json(rep) : quivis::report_to_table(rep));
        }
        return 0;
    } catch (const quivis::SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const quivis::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const quivis::ParameterOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const quivis::InvalidAxis& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
