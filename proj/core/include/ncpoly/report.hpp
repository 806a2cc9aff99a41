#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/inequality.hpp"

namespace ncpoly {

enum class FacetClass { nonnegativity, clique, fcnc, fanc, other };

const char* facet_class_name(FacetClass c);

// A facet (or candidate facet) of a non-contextual polytope, classified by
// its normalized coefficient pattern.
struct NcInequality {
  Inequality inequality;
  VertexSet support;  // vertices with nonzero coefficient
  FacetClass classification = FacetClass::other;
  std::optional<std::size_t> saturating_vertex_count;

  bool operator==(const NcInequality& other) const {
    return inequality == other.inequality;
  }
};

// Outcome of one mechanical claim check. Evidence counts are ordered so
// serialization is deterministic. Wall time is measured but deliberately not
// serialized: report files must be byte-identical across runs.
struct TheoremReport {
  std::string claim;
  std::string graph;
  bool pass = false;
  std::vector<std::pair<std::string, long long>> evidence;
  std::vector<NcInequality> facets;
  double wall_time_ms = 0.0;

  long long evidence_value(const std::string& key) const;
};

}  // namespace ncpoly
