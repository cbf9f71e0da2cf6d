#pragma once

#include <optional>
#include <string>

#include "quivis/experiment.hpp"

namespace quivis {

/// A fully validated scenario file: metadata plus the experiment it
/// describes. Parsing either produces a valid Experiment or throws with
/// the offending field path.
struct ScenarioDocument {
    std::string description;
    Tolerances tolerances;
    Experiment experiment;
};

/// Parses scenario JSON. Unknown fields are rejected. Throws SyntaxError
/// for malformed JSON and ValidationError (message prefixed with the
/// field path) for schema or model violations.
ScenarioDocument parse_scenario(const std::string& text);

/// Serializes an experiment back into scenario JSON (the inverse of
/// parse_scenario up to floating-point round-trip).
std::string scenario_to_string(const Experiment& exp, const std::string& description = "");

} // namespace quivis
