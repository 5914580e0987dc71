#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace logvec {

/// Report tree; key order is insertion order so output is stable.
using Json = nlohmann::ordered_json;

/// Human-readable rendering of a report tree.
std::string render_text(const Json& report);

/// Copy with every "timings" member removed (recursively).
Json without_timings(Json report);

/// Pretty JSON, newline terminated.
std::string to_json_text(const Json& report, bool include_timings);

/// Paths where two reports differ, ignoring timings. Empty when equal.
std::vector<std::string> report_differences(const Json& expected, const Json& actual);

}  // namespace logvec
