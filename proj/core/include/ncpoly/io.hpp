#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncpoly/compatibility.hpp"
#include "ncpoly/graph.hpp"
#include "ncpoly/polytope.hpp"
#include "ncpoly/report.hpp"

namespace ncpoly {

// JSON codecs. Emission is canonical and deterministic: fixed key order,
// two-space indent, LF line endings, rationals as exact "num/den" strings.

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

std::string hpolytope_to_json(const HPolytope& h);
std::string vpolytope_to_json(const VPolytope& v);
// Dispatches on "kind"; exactly one of the outputs is populated.
struct PolytopeFile {
  std::optional<HPolytope> h;
  std::optional<VPolytope> v;
};
PolytopeFile polytope_from_json(const std::string& text);

std::string scenario_to_json(const CompatibilityScenario& s);
CompatibilityScenario scenario_from_json(const std::string& text);

std::string behaviour_to_json(const CompatibilityScenario& s, const Behaviour& b);
Behaviour behaviour_from_json(const CompatibilityScenario& s, const std::string& text);

// Run metadata embedded in every serialized report batch.
struct ReportMeta {
  std::string tool_version;
  std::uint64_t seed = 0;
  Caps caps;
  std::map<std::string, std::string> input_digests;  // path -> fnv1a64 hex
};

std::string reports_to_json(const std::vector<TheoremReport>& reports, const ReportMeta& meta);
std::string reports_to_markdown(const std::vector<TheoremReport>& reports, const ReportMeta& meta);

// FNV-1a 64-bit digest, 16 lowercase hex chars.
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace ncpoly
