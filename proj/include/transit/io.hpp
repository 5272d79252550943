#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "transit/instance.hpp"
#include "transit/oracles.hpp"
#include "transit/reductions.hpp"

namespace transit {

using Json = nlohmann::ordered_json;

using AnyInstance =
    std::variant<PtpInstance, NtpInstance, RdpInstance, SetCoverInstance, VertexCoverInstance>;

/// "ptp", "ntp", "rdp", "setcover" or "vertexcover".
std::string_view model_name(const AnyInstance& instance);

/// Parses a JSON instance file. Rationals may be integers, "p/q" strings or
/// decimal strings ("0.1" is exactly 1/10). Throws InvalidInstance whose
/// field() is a path such as "edges[2][2]"; syntax errors use the path "$".
AnyInstance parse_instance(std::string_view text);
AnyInstance parse_instance(const Json& json);
inline AnyInstance parse_instance(const std::string& text) { return parse_instance(std::string_view(text)); }
inline AnyInstance parse_instance(const char* text) { return parse_instance(std::string_view(text)); }

/// Same, but requires a particular model.
PtpInstance parse_ptp(std::string_view text);
NtpInstance parse_ntp(std::string_view text);

Json to_json(const Rational& value);
Json to_json(const Cost& value);
Json to_json(const AnyInstance& instance);

/// Pretty-printed JSON with a trailing newline; field order is fixed.
std::string emit_instance(const AnyInstance& instance);

/// A solver outcome in the shape written to stdout by the CLI.
struct ResultRecord {
  std::string instance_id;
  std::string solver;
  Solution solution;
};

/// Selection indices plus readable labels (stop positions or edge endpoints).
Json to_json(const ResultRecord& record, const AnyInstance& instance);
Json to_json(const OracleReport& report);

}  // namespace transit
