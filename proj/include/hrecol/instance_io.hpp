#pragma once

#include "hrecol/solver.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace hrecol {

using Json = nlohmann::ordered_json;

/// Parses an instance document. Syntax errors carry the line and column,
/// structural errors the JSON pointer of the offending value; both throw
/// InvalidInput. Mode hypotheses are not checked here (see validate_instance).
Instance parse_instance(std::string_view text);

Json graph_to_json(const Graph& g);
Json instance_to_json(const Instance& inst);

Json verdict_to_json(const Verdict& v);

/// Inverse of verdict_to_json; throws InvalidInput on malformed documents.
Verdict parse_verdict(std::string_view text);

/// Compact single-line form with a trailing newline.
std::string dump(const Json& j);

/// Parses text as JSON, converting syntax errors to InvalidInput.
Json parse_json(std::string_view text);

} // namespace hrecol
