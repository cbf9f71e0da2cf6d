#include "quivis/scenario.hpp"

#include <set>
#include <utility>

#include <json.hpp>

namespace quivis {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ValidationError(path + ": " + message);
}

void require_fields(const json& j, const std::string& path, const std::set<std::string>& allowed,
                    const std::set<std::string>& required) {
    if (!j.is_object()) fail(path, "expected an object");
    for (const auto& item : j.items()) {
        if (!allowed.count(item.key())) fail(path, "unknown field '" + item.key() + "'");
    }
    for (const auto& name : required) {
        if (!j.contains(name)) fail(path, "missing field '" + name + "'");
    }
}

double parse_real(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

Complex parse_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        fail(path, "expected a complex number as [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Vector parse_ket(const json& j, const std::string& path, int dim) {
    if (!j.is_array()) fail(path, "expected an array of complex numbers");
    if (static_cast<int>(j.size()) != dim) {
        fail(path, "expected " + std::to_string(dim) + " entries");
    }
    Vector v(dim);
    for (int i = 0; i < dim; ++i) {
        v(i) = parse_complex(j[static_cast<size_t>(i)], path + "[" + std::to_string(i) + "]");
    }
    return v;
}

Matrix parse_matrix(const json& j, const std::string& path, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        fail(path, "expected " + std::to_string(dim) + " rows");
    }
    Matrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const json& row = j[static_cast<size_t>(r)];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            fail(row_path, "expected " + std::to_string(dim) + " entries");
        }
        for (int c = 0; c < dim; ++c) {
            m(r, c) = parse_complex(row[static_cast<size_t>(c)],
                                    row_path + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

SpectralObservable parse_observable(const json& j, const std::string& path, int dim,
                                    const Tolerances& tol) {
    require_fields(j, path, {"eigenvalues", "projectors", "labels", "hermitian"}, {});
    const bool spectral = j.contains("eigenvalues") || j.contains("projectors");
    if (spectral == j.contains("hermitian")) {
        fail(path, "give either 'hermitian' or 'eigenvalues' + 'projectors'");
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_array()) fail(path + ".labels", "expected an array of strings");
        for (size_t i = 0; i < l.size(); ++i) {
            if (!l[i].is_string()) fail(path + ".labels[" + std::to_string(i) + "]", "expected a string");
            labels.push_back(l[i].get<std::string>());
        }
    }

    try {
        if (j.contains("hermitian")) {
            Matrix h = parse_matrix(j["hermitian"], path + ".hermitian", dim);
            return SpectralObservable::decompose(h, tol, std::move(labels));
        }
        require_fields(j, path, {"eigenvalues", "projectors", "labels"},
                       {"eigenvalues", "projectors"});
        const json& values_json = j["eigenvalues"];
        const json& projectors_json = j["projectors"];
        if (!values_json.is_array() || values_json.empty()) {
            fail(path + ".eigenvalues", "expected a non-empty array of numbers");
        }
        if (!projectors_json.is_array() || projectors_json.size() != values_json.size()) {
            fail(path + ".projectors", "expected one projector per eigenvalue");
        }
        std::vector<double> values;
        std::vector<Matrix> projectors;
        for (size_t i = 0; i < values_json.size(); ++i) {
            values.push_back(
                parse_real(values_json[i], path + ".eigenvalues[" + std::to_string(i) + "]"));
            const std::string p_path = path + ".projectors[" + std::to_string(i) + "]";
            Matrix p = parse_matrix(projectors_json[i], p_path, dim);
            if (!validate_projector(p, tol)) fail(p_path, "not an orthogonal projector");
            projectors.push_back(std::move(p));
        }
        return SpectralObservable(std::move(values), std::move(projectors), std::move(labels), tol);
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        fail(path, e.what());
    }
}

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json observable_to_json(const SpectralObservable& obs) {
    json out;
    out["eigenvalues"] = obs.eigenvalues();
    json projectors = json::array();
    for (const Matrix& p : obs.projectors()) projectors.push_back(matrix_to_json(p));
    out["projectors"] = std::move(projectors);
    if (obs.has_labels()) out["labels"] = obs.labels();
    return out;
}

} // namespace

ScenarioDocument parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError("scenario: invalid JSON at byte " + std::to_string(e.byte) + ": " +
                          e.what());
    }

    require_fields(doc, "scenario",
                   {"description", "dimension", "tolerances", "initial_state", "timeline",
                    "measured", "candidates"},
                   {"dimension", "initial_state", "timeline", "measured"});

    std::string description;
    if (doc.contains("description")) {
        if (!doc["description"].is_string()) fail("description", "expected a string");
        description = doc["description"].get<std::string>();
    }

    if (!doc["dimension"].is_number_integer() || doc["dimension"].get<long long>() < 1 ||
        doc["dimension"].get<long long>() > 1024) {
        fail("dimension", "expected a positive integer between 1 and 1024");
    }
    const int dim = doc["dimension"].get<int>();

    Tolerances tol;
    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        require_fields(t, "tolerances",
                       {"atol_matrix", "eig_group_tol", "prob_tol", "witness_tol"}, {});
        if (t.contains("atol_matrix")) tol.atol_matrix = parse_real(t["atol_matrix"], "tolerances.atol_matrix");
        if (t.contains("eig_group_tol")) tol.eig_group_tol = parse_real(t["eig_group_tol"], "tolerances.eig_group_tol");
        if (t.contains("prob_tol")) tol.prob_tol = parse_real(t["prob_tol"], "tolerances.prob_tol");
        if (t.contains("witness_tol")) tol.witness_tol = parse_real(t["witness_tol"], "tolerances.witness_tol");
        try {
            tol.validate();
        } catch (const std::exception& e) {
            fail("tolerances", e.what());
        }
    }

    // Initial state.
    const json& init = doc["initial_state"];
    require_fields(init, "initial_state", {"ket", "density"}, {});
    if (init.contains("ket") == init.contains("density")) {
        fail("initial_state", "give exactly one of 'ket' or 'density'");
    }
    std::optional<DensityOperator> initial;
    try {
        if (init.contains("ket")) {
            initial = DensityOperator::pure(parse_ket(init["ket"], "initial_state.ket", dim), tol);
        } else {
            initial = DensityOperator(parse_matrix(init["density"], "initial_state.density", dim), tol);
        }
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        fail("initial_state", e.what());
    }

    // Timeline.
    const json& tj = doc["timeline"];
    require_fields(tj, "timeline", {"moments", "steps"}, {"moments", "steps"});
    if (!tj["moments"].is_array()) fail("timeline.moments", "expected an array of strings");
    std::vector<std::string> moments;
    for (size_t i = 0; i < tj["moments"].size(); ++i) {
        if (!tj["moments"][i].is_string()) {
            fail("timeline.moments[" + std::to_string(i) + "]", "expected a string");
        }
        moments.push_back(tj["moments"][i].get<std::string>());
    }
    if (!tj["steps"].is_array() || tj["steps"].empty()) {
        fail("timeline.steps", "expected a non-empty array of unitary matrices");
    }
    std::vector<Matrix> steps;
    for (size_t i = 0; i < tj["steps"].size(); ++i) {
        const std::string path = "timeline.steps[" + std::to_string(i) + "]";
        Matrix u = parse_matrix(tj["steps"][i], path, dim);
        if (!is_unitary(u, tol.atol_matrix)) fail(path, "not unitary");
        steps.push_back(std::move(u));
    }
    std::optional<Timeline> timeline;
    try {
        timeline = Timeline(std::move(moments), std::move(steps), tol);
    } catch (const Error& e) {
        fail("timeline", e.what());
    }

    SpectralObservable measured = parse_observable(doc["measured"], "measured", dim, tol);

    // Candidates.
    std::vector<Candidate> candidates;
    if (doc.contains("candidates")) {
        if (!doc["candidates"].is_array()) fail("candidates", "expected an array");
        for (size_t i = 0; i < doc["candidates"].size(); ++i) {
            const json& cj = doc["candidates"][i];
            const std::string path = "candidates[" + std::to_string(i) + "]";
            require_fields(cj, path,
                           {"name", "moment", "observable", "meaningful", "measured_coarsening"},
                           {"name", "moment", "observable"});
            if (!cj["name"].is_string()) fail(path + ".name", "expected a string");
            if (!cj["moment"].is_string()) fail(path + ".moment", "expected a string");
            Candidate c{cj["name"].get<std::string>(), cj["moment"].get<std::string>(),
                        parse_observable(cj["observable"], path + ".observable", dim, tol),
                        true, std::nullopt, std::nullopt};
            if (cj.contains("meaningful")) {
                if (!cj["meaningful"].is_boolean()) fail(path + ".meaningful", "expected a boolean");
                c.meaningful = cj["meaningful"].get<bool>();
            }
            if (cj.contains("measured_coarsening")) {
                const json& mc = cj["measured_coarsening"];
                const std::string mc_path = path + ".measured_coarsening";
                require_fields(mc, mc_path, {"partition", "values"}, {"partition", "values"});
                if (!mc["partition"].is_array()) fail(mc_path + ".partition", "expected an array of index groups");
                std::vector<std::vector<int>> partition;
                for (size_t g = 0; g < mc["partition"].size(); ++g) {
                    const json& gj = mc["partition"][g];
                    const std::string g_path = mc_path + ".partition[" + std::to_string(g) + "]";
                    if (!gj.is_array()) fail(g_path, "expected an array of indices");
                    std::vector<int> group;
                    for (size_t x = 0; x < gj.size(); ++x) {
                        if (!gj[x].is_number_integer()) fail(g_path + "[" + std::to_string(x) + "]", "expected an integer");
                        group.push_back(gj[x].get<int>());
                    }
                    partition.push_back(std::move(group));
                }
                if (!mc["values"].is_array()) fail(mc_path + ".values", "expected an array of numbers");
                std::vector<double> values;
                for (size_t x = 0; x < mc["values"].size(); ++x) {
                    values.push_back(parse_real(mc["values"][x], mc_path + ".values[" + std::to_string(x) + "]"));
                }
                try {
                    measured.coarsen(partition, values, tol);
                } catch (const Error& e) {
                    fail(mc_path, e.what());
                }
                c.measured_partition = std::move(partition);
                c.measured_values = std::move(values);
            }
            candidates.push_back(std::move(c));
        }
    }

    try {
        Experiment exp(std::move(*initial), std::move(*timeline), std::move(measured),
                       std::move(candidates), tol);
        return ScenarioDocument{std::move(description), tol, std::move(exp)};
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        fail("scenario", e.what());
    }
}

std::string scenario_to_string(const Experiment& exp, const std::string& description) {
    json doc;
    if (!description.empty()) doc["description"] = description;
    doc["dimension"] = exp.dim();
    const Tolerances& tol = exp.tolerances();
    doc["tolerances"] = {{"atol_matrix", tol.atol_matrix},
                         {"eig_group_tol", tol.eig_group_tol},
                         {"prob_tol", tol.prob_tol},
                         {"witness_tol", tol.witness_tol}};
    doc["initial_state"] = {{"density", matrix_to_json(exp.initial().matrix())}};
    json steps = json::array();
    for (const Matrix& u : exp.timeline().steps()) steps.push_back(matrix_to_json(u));
    doc["timeline"] = {{"moments", exp.timeline().moments()}, {"steps", std::move(steps)}};
    doc["measured"] = observable_to_json(exp.measured());
    json candidates = json::array();
    for (const Candidate& c : exp.candidates()) {
        json cj;
        cj["name"] = c.name;
        cj["moment"] = c.moment;
        cj["observable"] = observable_to_json(c.observable);
        cj["meaningful"] = c.meaningful;
        if (c.measured_partition) {
            cj["measured_coarsening"] = {{"partition", *c.measured_partition},
                                         {"values", *c.measured_values}};
        }
        candidates.push_back(std::move(cj));
    }
    doc["candidates"] = std::move(candidates);
    return doc.dump(2) + "\n";
}

} // namespace quivis
