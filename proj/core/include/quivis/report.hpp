#pragma once

#include <string>
#include <vector>

#include "quivis/classify.hpp"

namespace quivis {

inline constexpr const char* kToolName = "quivis 0.1.0";

/// Everything the CLI prints, assembled once so table and JSON renderings
/// agree. Deterministic for identical inputs: candidate order follows the
/// declaration order, floats are rounded to 12 significant digits in
/// machine output.
struct Report {
    struct Outcome {
        std::string label;
        double eigenvalue;
        double probability;
    };
    struct Entry {
        std::string name;
        std::string moment;
        bool meaningful;
        bool coarsened_measured; // classified against a coarsening of A
        Classification classification;
        std::vector<std::pair<std::string, std::string>> bijection_labels;
        std::string witness_outcome_label; // when interference
        std::string witness_k_label;
        std::string witness_k_prime_label;
        double initial_state_deviation; // blindness deviation of the experiment's own state
    };

    std::string scenario;
    Tolerances tolerances;
    std::vector<Outcome> probabilities; // at the final moment
    std::vector<Entry> candidates;
    bool absolute_which_result = false;
};

/// Simulates and classifies the whole experiment.
Report build_report(const Experiment& exp, const std::string& scenario_name);

/// Rounds to 12 significant digits (the machine-output float contract).
double round_to_report_precision(double value);

/// Machine-readable rendering; identical input bytes give identical
/// output bytes.
std::string report_to_json(const Report& report);

/// Human-readable rendering. Floats whose magnitude is below prob_tol
/// print as exact 0.
std::string report_to_table(const Report& report);

/// Sub-reports for the simulate/classify/witness commands.
std::string probabilities_to_json(const Report& report);
std::string probabilities_to_table(const Report& report);
std::string classifications_to_json(const Report& report);
std::string classifications_to_table(const Report& report);
std::string witness_to_json(const Report& report, const std::string& candidate_name);
std::string witness_to_table(const Report& report, const std::string& candidate_name);

} // namespace quivis
