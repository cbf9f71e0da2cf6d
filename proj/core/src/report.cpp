#include "quivis/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace quivis {

namespace {

using json = nlohmann::ordered_json;

json rounded(double v) { return round_to_report_precision(v); }

json complex_json(const Complex& z) {
    return json::array({rounded(z.real()), rounded(z.imag())});
}

json vector_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
    return out;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json tolerances_json(const Tolerances& tol) {
    return {{"atol_matrix", rounded(tol.atol_matrix)},
            {"eig_group_tol", rounded(tol.eig_group_tol)},
            {"prob_tol", rounded(tol.prob_tol)},
            {"witness_tol", rounded(tol.witness_tol)}};
}

json header_json(const Report& report) {
    json out;
    out["tool"] = kToolName;
    out["scenario"] = report.scenario;
    out["tolerances"] = tolerances_json(report.tolerances);
    return out;
}

json probabilities_json_value(const Report& report) {
    json list = json::array();
    for (const auto& o : report.probabilities) {
        list.push_back({{"label", o.label},
                        {"eigenvalue", rounded(o.eigenvalue)},
                        {"probability", rounded(o.probability)}});
    }
    return list;
}

json entry_json(const Report::Entry& e) {
    json out;
    out["name"] = e.name;
    out["moment"] = e.moment;
    out["meaningful"] = e.meaningful;
    out["measured"] = e.coarsened_measured ? "coarsened" : "A";
    const bool which = e.classification.verdict == Verdict::WhichResult;
    out["verdict"] = which ? "which-result" : "interference";
    if (which) {
        out["simplest"] = e.classification.certificate->simplest;
        if (e.classification.certificate->simplest) {
            json bij = json::array();
            for (const auto& [from, to] : e.bijection_labels) {
                bij.push_back({{"from", from}, {"to", to}});
            }
            out["bijection"] = std::move(bij);
        }
    }
    out["commutator_norm"] = rounded(e.classification.commutator_norm_value);
    out["max_cross_block_norm"] = rounded(e.classification.max_cross_block_norm);
    out["initial_state_deviation"] = rounded(e.initial_state_deviation);
    if (!which) {
        const InterferenceWitness& w = *e.classification.witness;
        out["witness"] = {{"outcome", e.witness_outcome_label},
                          {"k", e.witness_k_label},
                          {"k_prime", e.witness_k_prime_label},
                          {"gap", rounded(w.predicted_gap)},
                          {"marginal", w.marginal}};
    }
    return out;
}

json candidates_json_value(const Report& report) {
    json list = json::array();
    for (const auto& e : report.candidates) list.push_back(entry_json(e));
    return list;
}

std::string format_float(double v) {
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

std::string table_float(double v, double prob_tol) {
    if (std::abs(v) < prob_tol) return "0";
    return format_float(v);
}

std::string pad(std::string s, size_t width) {
    while (s.size() < width) s.push_back(' ');
    return s;
}

const Report::Entry* find_entry(const Report& report, const std::string& name) {
    for (const auto& e : report.candidates) {
        if (e.name == name) return &e;
    }
    throw Error("report: no candidate named '" + name + "'");
}

std::string entry_table_line(const Report& report, const Report::Entry& e, size_t name_width,
                             size_t moment_width) {
    std::ostringstream out;
    out << "  " << pad(e.name, name_width) << "  @ " << pad(e.moment, moment_width) << "  vs "
        << pad(e.coarsened_measured ? "f(A)" : "A", 4) << "  ";
    if (e.classification.verdict == Verdict::WhichResult) {
        out << "which-result";
        if (e.classification.certificate->simplest) {
            out << "  simplest  ";
            bool first = true;
            for (const auto& [from, to] : e.bijection_labels) {
                if (!first) out << ", ";
                out << from << "->" << to;
                first = false;
            }
        }
    } else {
        const InterferenceWitness& w = *e.classification.witness;
        out << "interference  gap " << table_float(w.predicted_gap, report.tolerances.prob_tol)
            << " on " << e.witness_outcome_label << " (" << e.witness_k_label << " x "
            << e.witness_k_prime_label << ")";
        if (w.marginal) out << "  [marginal]";
    }
    return out.str();
}

std::pair<size_t, size_t> column_widths(const Report& report) {
    size_t name_width = 1, moment_width = 1;
    for (const auto& e : report.candidates) {
        name_width = std::max(name_width, e.name.size());
        moment_width = std::max(moment_width, e.moment.size());
    }
    return {name_width, moment_width};
}

std::string footer_table(const Report& report) {
    std::ostringstream out;
    const Tolerances& tol = report.tolerances;
    out << "tool: " << kToolName << "  atol=" << format_float(tol.atol_matrix)
        << " eig-group-tol=" << format_float(tol.eig_group_tol)
        << " prob-tol=" << format_float(tol.prob_tol)
        << " witness-tol=" << format_float(tol.witness_tol) << "\n";
    return out.str();
}

std::string probabilities_table_body(const Report& report) {
    size_t width = 1;
    for (const auto& o : report.probabilities) width = std::max(width, o.label.size());
    std::ostringstream out;
    out << "probabilities at t_f:\n";
    for (const auto& o : report.probabilities) {
        out << "  " << pad(o.label, width) << "  "
            << table_float(o.probability, report.tolerances.prob_tol) << "\n";
    }
    return out.str();
}

std::string classifications_table_body(const Report& report) {
    std::ostringstream out;
    auto [name_width, moment_width] = column_widths(report);
    out << "candidates:\n";
    for (const auto& e : report.candidates) {
        out << entry_table_line(report, e, name_width, moment_width) << "\n";
    }
    out << "absolute-sense which-result: " << (report.absolute_which_result ? "yes" : "no")
        << "\n";
    return out.str();
}

} // namespace

double round_to_report_precision(double value) {
    if (value == 0.0) return 0.0;
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return std::strtod(buffer, nullptr);
}

Report build_report(const Experiment& exp, const std::string& scenario_name) {
    Report report;
    report.scenario = scenario_name;
    report.tolerances = exp.tolerances();

    const DensityOperator final_state = exp.state_at(exp.timeline().final_moment());
    std::vector<double> probs = born_probabilities(exp.measured(), final_state, exp.tolerances());
    for (int n = 0; n < exp.measured().size(); ++n) {
        report.probabilities.push_back(
            {exp.measured().label(n), exp.measured().eigenvalue(n), probs[static_cast<size_t>(n)]});
    }

    ClassificationReport classifications = classify_all(exp);
    report.absolute_which_result = classifications.absolute_which_result;
    for (auto& [candidate, cls] : classifications.entries) {
        const SpectralObservable measured = exp.effective_measured(*candidate);
        Report::Entry entry{candidate->name,
                            candidate->moment,
                            candidate->meaningful,
                            candidate->measured_partition.has_value(),
                            std::move(cls),
                            {},
                            "",
                            "",
                            "",
                            0.0};
        if (entry.classification.verdict == Verdict::WhichResult) {
            if (entry.classification.certificate->simplest) {
                const auto& bij = entry.classification.certificate->bijection;
                for (int k = 0; k < candidate->observable.size(); ++k) {
                    entry.bijection_labels.emplace_back(candidate->observable.label(k),
                                                        measured.label(bij[static_cast<size_t>(k)]));
                }
            }
        } else {
            const InterferenceWitness& w = *entry.classification.witness;
            entry.witness_outcome_label = measured.label(w.n);
            entry.witness_k_label = candidate->observable.label(w.k);
            entry.witness_k_prime_label = candidate->observable.label(w.k_prime);
        }
        const Matrix u_tail =
            exp.timeline().evolve_between(candidate->moment, exp.timeline().final_moment());
        entry.initial_state_deviation = verify_blindness(
            exp.state_at(candidate->moment), candidate->observable, u_tail, measured,
            exp.tolerances());
        report.candidates.push_back(std::move(entry));
    }
    return report;
}

std::string report_to_json(const Report& report) {
    json out = header_json(report);
    out["probabilities"] = probabilities_json_value(report);
    out["candidates"] = candidates_json_value(report);
    out["absolute_which_result"] = report.absolute_which_result;
    return out.dump(2) + "\n";
}

std::string report_to_table(const Report& report) {
    std::ostringstream out;
    out << "scenario: " << report.scenario << "\n";
    out << probabilities_table_body(report);
    if (!report.candidates.empty()) out << classifications_table_body(report);
    out << footer_table(report);
    return out.str();
}

std::string probabilities_to_json(const Report& report) {
    json out = header_json(report);
    out["probabilities"] = probabilities_json_value(report);
    return out.dump(2) + "\n";
}

std::string probabilities_to_table(const Report& report) {
    std::ostringstream out;
    out << "scenario: " << report.scenario << "\n" << probabilities_table_body(report)
        << footer_table(report);
    return out.str();
}

std::string classifications_to_json(const Report& report) {
    json out = header_json(report);
    out["candidates"] = candidates_json_value(report);
    out["absolute_which_result"] = report.absolute_which_result;
    return out.dump(2) + "\n";
}

std::string classifications_to_table(const Report& report) {
    std::ostringstream out;
    out << "scenario: " << report.scenario << "\n" << classifications_table_body(report)
        << footer_table(report);
    return out.str();
}

std::string witness_to_json(const Report& report, const std::string& candidate_name) {
    const Report::Entry* entry = find_entry(report, candidate_name);
    json out = header_json(report);
    out["candidate"] = candidate_name;
    const bool which = entry->classification.verdict == Verdict::WhichResult;
    out["verdict"] = which ? "which-result" : "interference";
    if (which) {
        out["witness"] = nullptr;
    } else {
        const InterferenceWitness& w = *entry->classification.witness;
        out["witness"] = {{"outcome", entry->witness_outcome_label},
                          {"k", entry->witness_k_label},
                          {"k_prime", entry->witness_k_prime_label},
                          {"gap", rounded(w.predicted_gap)},
                          {"marginal", w.marginal},
                          {"alpha", complex_json(w.alpha)},
                          {"beta", complex_json(w.beta)},
                          {"l_k", vector_json(w.l_k)},
                          {"l_k_prime", vector_json(w.l_k_prime)},
                          {"initial_state", matrix_json(w.initial_state.matrix())}};
    }
    return out.dump(2) + "\n";
}

std::string witness_to_table(const Report& report, const std::string& candidate_name) {
    const Report::Entry* entry = find_entry(report, candidate_name);
    std::ostringstream out;
    out << "scenario: " << report.scenario << "\n";
    out << "candidate: " << candidate_name << "\n";
    if (entry->classification.verdict == Verdict::WhichResult) {
        out << "verdict: which-result -- no witness (all cross-blocks vanish)\n";
        out << footer_table(report);
        return out.str();
    }
    const InterferenceWitness& w = *entry->classification.witness;
    const double prob_tol = report.tolerances.prob_tol;
    out << "verdict: interference\n";
    out << "gap: " << table_float(w.predicted_gap, prob_tol) << " on outcome "
        << entry->witness_outcome_label << (w.marginal ? "  [marginal]" : "") << "\n";
    out << "branches: " << entry->witness_k_label << " x " << entry->witness_k_prime_label
        << "\n";
    out << "alpha: [" << format_float(w.alpha.real()) << ", " << format_float(w.alpha.imag())
        << "]  beta: [" << format_float(w.beta.real()) << ", " << format_float(w.beta.imag())
        << "]\n";
    out << "initial state (density matrix at t_i):\n";
    const Matrix& rho = w.initial_state.matrix();
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
        out << "  ";
        for (Eigen::Index c = 0; c < rho.cols(); ++c) {
            out << "[" << table_float(rho(r, c).real(), prob_tol) << ", "
                << table_float(rho(r, c).imag(), prob_tol) << "]";
            if (c + 1 < rho.cols()) out << " ";
        }
        out << "\n";
    }
    out << footer_table(report);
    return out.str();
}

} // namespace quivis
