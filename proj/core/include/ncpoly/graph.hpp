#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncpoly/errors.hpp"
#include "ncpoly/version.hpp"

namespace ncpoly {

// Simple undirected graph on vertices 0..n-1. Edges are stored once in
// (min,max) order, sorted; no self-loops. Vertex labels are 0-based
// throughout the library and all of its file formats.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  void add_edge(int i, int j);
  bool adjacent(int i, int j) const;

  // Neighbourhood of v as a bitmask. Graphs are capped at 64 vertices so the
  // subset-enumeration machinery can run on single words.
  std::uint64_t neighbors_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
};

enum class SetKind { plain, stable, clique };

// Sorted duplicate-free vertex subset, optionally tagged with the property it
// was produced under (tag validity is the producer's contract).
struct VertexSet {
  std::vector<int> members;
  SetKind kind = SetKind::plain;

  bool operator==(const VertexSet& other) const { return members == other.members; }
  bool operator<(const VertexSet& other) const { return members < other.members; }
};

enum class HoleKind { hole, antihole };

Graph make_circulant(int n, const std::vector<int>& offsets);
Graph make_cycle(int n);  // make_circulant(n, {1})
Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// All stable sets including the empty set, lexicographically ordered.
std::vector<VertexSet> enumerate_stable_sets(const Graph& g,
                                             const Caps& caps = default_caps());

// All inclusion-maximal cliques, lexicographically ordered (Bron-Kerbosch
// with pivoting, then sorted).
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g,
                                                 const Caps& caps = default_caps());

int independence_number(const Graph& g, const Caps& caps = default_caps());

// Every odd vertex subset of size >= min_len inducing a cycle (hole) or the
// complement of a cycle (antihole). Self-complementary C5 subsets appear
// under both tags. Sorted by (members, tag).
std::vector<std::pair<VertexSet, HoleKind>> find_odd_holes_and_antiholes(
    const Graph& g, int min_len = 5, const Caps& caps = default_caps());

}  // namespace ncpoly
