#include "convex_blockers/json_io.h"

#include <cstdint>
#include <limits>
#include <string>

#include "convex_blockers/errors.h"

namespace convex_blockers {
namespace {

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw InputError(std::string("missing JSON field '") + key + "'");
  }
  return json.at(key);
}

template <typename T>
T Get(const Json& json, const char* key) {
  try {
    return Field(json, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad JSON field '") + key + "': " + e.what());
  }
}

Violation ViolationFromName(const std::string& name) {
  for (int v = 0; v <= static_cast<int>(Violation::kNotATree); ++v) {
    if (ViolationName(static_cast<Violation>(v)) == name) {
      return static_cast<Violation>(v);
    }
  }
  throw InputError("unknown violation '" + name + "'");
}

}  // namespace

Json EdgesToJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.a, e.b});
  return out;
}

EdgeSet EdgesFromJson(const PolygonContext& ctx, const Json& json) {
  if (!json.is_array()) throw InputError("edge list must be a JSON array");
  std::vector<Edge> edges;
  for (const Json& item : json) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw InputError("edge must be [a,b], got " + item.dump());
    }
    const long long u = item[0].get<long long>();
    const long long v = item[1].get<long long>();
    if (u < 0 || v < 0 || u >= ctx.n() || v >= ctx.n()) {
      throw InputError("edge " + item.dump() + " out of range");
    }
    edges.push_back(ctx.MakeEdge(u, v));
  }
  return Canonicalize(ctx, std::move(edges));
}

Json EdgeSetsToJson(const std::vector<EdgeSet>& sets) {
  Json out = Json::array();
  for (const EdgeSet& set : sets) out.push_back(EdgesToJson(set));
  return out;
}

std::vector<EdgeSet> EdgeSetsFromJson(const PolygonContext& ctx,
                                      const Json& json) {
  if (!json.is_array()) throw InputError("expected a JSON array of edge lists");
  std::vector<EdgeSet> out;
  for (const Json& item : json) out.push_back(EdgesFromJson(ctx, item));
  return out;
}

Json BlockerToJson(const PolygonContext& ctx, const BlockerSpec& spec) {
  return Json{{"m", ctx.m()},
              {"start", spec.start},
              {"t", spec.t},
              {"eps", spec.eps},
              {"edges", EdgesToJson(GenerateBlocker(ctx, spec))}};
}

BlockerSpec BlockerFromJson(const Json& json) {
  const PolygonContext ctx(Get<int>(json, "m"));
  BlockerSpec spec{Get<int>(json, "start"), Get<int>(json, "t"),
                   Get<std::vector<int>>(json, "eps")};
  ValidateSpec(ctx, spec);
  if (json.contains("edges") &&
      EdgesFromJson(ctx, json.at("edges")) != GenerateBlocker(ctx, spec)) {
    throw InputError("blocker JSON edges disagree with its parameters");
  }
  return spec;
}

Json FindingToJson(const Finding& finding) {
  return Json{{"ok", false},
              {"violation", std::string(ViolationName(finding.violation))},
              {"witness", EdgesToJson(finding.witness)}};
}

Finding FindingFromJson(const PolygonContext& ctx, const Json& json) {
  if (Get<bool>(json, "ok")) throw InputError("finding must have ok=false");
  return Finding{ViolationFromName(Get<std::string>(json, "violation")),
                 EdgesFromJson(ctx, Field(json, "witness"))};
}

Json CaterpillarReportToJson(const CaterpillarReport& report) {
  Json legs = Json::object();
  for (const auto& [vertex, edges] : report.leg_attachments) {
    legs[std::to_string(vertex)] = EdgesToJson(edges);
  }
  Json violations = Json::array();
  for (const Finding& f : report.violations) {
    violations.push_back({{"violation", std::string(ViolationName(f.violation))},
                          {"witness", EdgesToJson(f.witness)}});
  }
  return Json{{"is_tree", report.is_tree},
              {"boundary_path", EdgesToJson(report.boundary_path)},
              {"spine_start", report.spine_start},
              {"spine_length", report.spine_length},
              {"leg_attachments", legs},
              {"violations", violations}};
}

Json OracleResultToJson(const PolygonContext& ctx, const OracleResult& result) {
  return Json{{"m", ctx.m()},
              {"mode", std::string(OracleModeName(result.mode))},
              {"minimum_size", result.minimum_size},
              {"count", result.minimum_sets.size()},
              {"sets", EdgeSetsToJson(result.minimum_sets)},
              {"nodes", result.nodes},
              {"millis", result.millis}};
}

OracleResult OracleResultFromJson(const Json& json) {
  const PolygonContext ctx(Get<int>(json, "m"));
  OracleResult result;
  const auto mode = Get<std::string>(json, "mode");
  if (mode == "naive") {
    result.mode = OracleMode::kNaive;
  } else if (mode == "class_pruned") {
    result.mode = OracleMode::kClassPruned;
  } else {
    throw InputError("unknown oracle mode '" + mode + "'");
  }
  result.minimum_size = Get<int>(json, "minimum_size");
  result.minimum_sets = EdgeSetsFromJson(ctx, Field(json, "sets"));
  if (Get<std::size_t>(json, "count") != result.minimum_sets.size()) {
    throw InputError("oracle JSON count disagrees with its sets");
  }
  result.nodes = Get<std::uint64_t>(json, "nodes");
  result.millis = Get<double>(json, "millis");
  return result;
}

Json BigIntToJson(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

BigInt BigIntFromJson(const Json& json) {
  if (json.is_number_unsigned()) return BigInt(json.get<std::uint64_t>());
  if (json.is_number_integer()) return BigInt(json.get<std::int64_t>());
  if (json.is_string()) {
    const std::string text = json.get<std::string>();
    const bool digits =
        !text.empty() &&
        text.find_first_not_of("0123456789", text[0] == '-' ? 1 : 0) == std::string::npos &&
        text != "-";
    if (digits) return BigInt(text);
  }
  throw InputError("expected an integer, got " + json.dump());
}

Json ReportToJson(const VerificationReport& report) {
  const auto optional_bool = [](const std::optional<bool>& v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  return Json{{"m", report.m},
              {"verdict", report.passed() ? "PASS" : "FAIL"},
              {"spm_count", report.spm_count},
              {"expected_catalan", report.expected_catalan},
              {"oracle_count", report.oracle_count},
              {"generated_count", report.generated_count},
              {"formula_count", BigIntToJson(report.formula_count)},
              {"oracle_minimum_size", report.oracle_minimum_size},
              {"set_equality", report.set_equality},
              {"generated_all_block", report.generated_all_block},
              {"structural_pass", report.structural_pass},
              {"naive_agrees", optional_bool(report.naive_agrees)},
              {"lower_bound_pass", optional_bool(report.lower_bound_pass)},
              {"oracle_only", EdgeSetsToJson(report.oracle_only)},
              {"generated_only", EdgeSetsToJson(report.generated_only)},
              {"structural_failures", report.structural_failures},
              {"millis", report.millis}};
}

VerificationReport ReportFromJson(const Json& json) {
  VerificationReport report;
  report.m = Get<int>(json, "m");
  const PolygonContext ctx(report.m);
  const auto optional_bool = [&](const char* key) -> std::optional<bool> {
    const Json& v = Field(json, key);
    if (v.is_null()) return std::nullopt;
    return Get<bool>(json, key);
  };
  report.spm_count = Get<std::uint64_t>(json, "spm_count");
  report.expected_catalan = Get<std::uint64_t>(json, "expected_catalan");
  report.oracle_count = Get<std::uint64_t>(json, "oracle_count");
  report.generated_count = Get<std::uint64_t>(json, "generated_count");
  report.formula_count = BigIntFromJson(Field(json, "formula_count"));
  report.oracle_minimum_size = Get<int>(json, "oracle_minimum_size");
  report.set_equality = Get<bool>(json, "set_equality");
  report.generated_all_block = Get<bool>(json, "generated_all_block");
  report.structural_pass = Get<bool>(json, "structural_pass");
  report.naive_agrees = optional_bool("naive_agrees");
  report.lower_bound_pass = optional_bool("lower_bound_pass");
  report.oracle_only = EdgeSetsFromJson(ctx, Field(json, "oracle_only"));
  report.generated_only = EdgeSetsFromJson(ctx, Field(json, "generated_only"));
  report.structural_failures =
      Get<std::vector<std::string>>(json, "structural_failures");
  report.millis = Get<std::map<std::string, double>>(json, "millis");
  return report;
}

}  // namespace convex_blockers
