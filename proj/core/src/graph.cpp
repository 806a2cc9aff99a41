#include "ncpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ncpoly {

namespace {

constexpr int kHardVertexLimit = 64;  // adjacency rows are single 64-bit words

void check_cap(const Graph& g, const Caps& caps, const char* op) {
  if (g.vertex_count() > caps.graph_vertices) {
    throw SizeLimitError(std::string(op) + ": graph has " +
                         std::to_string(g.vertex_count()) + " vertices, cap is " +
                         std::to_string(caps.graph_vertices));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kHardVertexLimit) {
    throw DomainError("graph size must be in 0..64, got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidVertexError("vertex " + std::to_string(v) + " outside 0.." +
                             std::to_string(n_ - 1));
  }
}

void Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw DomainError("self-loop at vertex " + std::to_string(i));
  if (adjacent(i, j)) return;
  const auto e = std::minmax(i, j);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(),
                                 std::pair<int, int>(e.first, e.second)),
                {e.first, e.second});
  adj_[static_cast<std::size_t>(i)] |= 1ULL << j;
  adj_[static_cast<std::size_t>(j)] |= 1ULL << i;
}

bool Graph::adjacent(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  return (adj_[static_cast<std::size_t>(i)] >> j) & 1ULL;
}

Graph make_circulant(int n, const std::vector<int>& offsets) {
  if (n < 1) throw DomainError("circulant needs n >= 1");
  if (offsets.empty()) throw InvalidOffsetError("offset list is empty");
  Graph g(n);
  std::vector<int> distinct = offsets;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int l : distinct) {
    if (l < 1 || l > n / 2) {
      throw InvalidOffsetError("offset " + std::to_string(l) + " outside 1.." +
                               std::to_string(n / 2));
    }
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + l) % n);
  }
  return g;
}

Graph make_cycle(int n) { return make_circulant(n, {1}); }

Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j)
      if (!g.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  for (int v : s.members) {
    if (v < 0 || v >= g.vertex_count()) {
      throw InvalidVertexError("subset member " + std::to_string(v) +
                               " outside the host graph");
    }
  }
  Graph out(static_cast<int>(s.members.size()));
  for (std::size_t a = 0; a < s.members.size(); ++a)
    for (std::size_t b = a + 1; b < s.members.size(); ++b)
      if (g.adjacent(s.members[a], s.members[b]))
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

namespace {

void stable_sets_rec(const Graph& g, int start, std::uint64_t chosen,
                     std::vector<int>& prefix, std::vector<VertexSet>& out) {
  out.push_back({prefix, SetKind::stable});
  for (int v = start; v < g.vertex_count(); ++v) {
    if (g.neighbors_mask(v) & chosen) continue;
    prefix.push_back(v);
    stable_sets_rec(g, v + 1, chosen | (1ULL << v), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<VertexSet> enumerate_stable_sets(const Graph& g, const Caps& caps) {
  check_cap(g, caps, "enumerate_stable_sets");
  std::vector<VertexSet> out;
  std::vector<int> prefix;
  stable_sets_rec(g, 0, 0, prefix, out);  // pre-order emission is lexicographic
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    VertexSet s{{}, SetKind::clique};
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((r >> v) & 1ULL) s.members.push_back(v);
    out.push_back(std::move(s));
    return;
  }
  // Pivot on the candidate dominating the most of P; ties break to the
  // smallest index so enumeration order is deterministic.
  int pivot = -1;
  int best = -1;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (((p | x) >> u) & 1ULL) {
      const int covered = std::popcount(p & g.neighbors_mask(u));
      if (covered > best) {
        best = covered;
        pivot = u;
      }
    }
  }
  std::uint64_t candidates = p & ~g.neighbors_mask(pivot);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!((candidates >> v) & 1ULL)) continue;
    const std::uint64_t nv = g.neighbors_mask(v);
    bron_kerbosch(g, r | (1ULL << v), p & nv, x & nv, out);
    p &= ~(1ULL << v);
    x |= 1ULL << v;
  }
}

}  // namespace

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g, const Caps& caps) {
  check_cap(g, caps, "enumerate_maximal_cliques");
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  const std::uint64_t all =
      g.vertex_count() == 64 ? ~0ULL : (1ULL << g.vertex_count()) - 1;
  bron_kerbosch(g, 0, all, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void max_stable_rec(const Graph& g, std::uint64_t candidates, int size, int& best) {
  if (size > best) best = size;
  if (size + std::popcount(candidates) <= best) return;
  while (candidates) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    max_stable_rec(g, candidates & ~g.neighbors_mask(v), size + 1, best);
  }
}

}  // namespace

int independence_number(const Graph& g, const Caps& caps) {
  check_cap(g, caps, "independence_number");
  int best = 0;
  const std::uint64_t all =
      g.vertex_count() == 0
          ? 0
          : (g.vertex_count() == 64 ? ~0ULL : (1ULL << g.vertex_count()) - 1);
  max_stable_rec(g, all, 0, best);
  return best;
}

namespace {

bool is_induced_cycle(const Graph& g, const std::vector<int>& members,
                      std::uint64_t mask) {
  for (int v : members) {
    if (std::popcount(g.neighbors_mask(v) & mask) != 2) return false;
  }
  // Degree two everywhere plus connectivity leaves exactly one cycle.
  std::uint64_t seen = 1ULL << members[0];
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors_mask(v) & mask & ~seen;
    }
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

// Grows subsets whose induced degree never exceeds two; any subset of a
// cycle's vertices has that property, so the pruning is lossless.
void holes_rec(const Graph& g, int start, std::vector<int>& members, std::uint64_t mask,
               int min_len, std::vector<VertexSet>& out) {
  const int size = static_cast<int>(members.size());
  if (size >= min_len && size % 2 == 1 && is_induced_cycle(g, members, mask)) {
    out.push_back({members, SetKind::plain});
  }
  for (int v = start; v < g.vertex_count(); ++v) {
    const std::uint64_t nv = g.neighbors_mask(v) & mask;
    if (std::popcount(nv) > 2) continue;
    bool ok = true;
    for (std::uint64_t rest = nv; rest; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (std::popcount(g.neighbors_mask(u) & mask) >= 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    members.push_back(v);
    holes_rec(g, v + 1, members, mask | (1ULL << v), min_len, out);
    members.pop_back();
  }
}

std::vector<VertexSet> odd_holes(const Graph& g, int min_len) {
  std::vector<VertexSet> out;
  std::vector<int> members;
  holes_rec(g, 0, members, 0, min_len, out);
  return out;
}

}  // namespace

std::vector<std::pair<VertexSet, HoleKind>> find_odd_holes_and_antiholes(
    const Graph& g, int min_len, const Caps& caps) {
  check_cap(g, caps, "find_odd_holes_and_antiholes");
  if (min_len < 5) throw DomainError("hole length starts at 5");
  std::vector<std::pair<VertexSet, HoleKind>> out;
  for (auto& s : odd_holes(g, min_len)) out.emplace_back(std::move(s), HoleKind::hole);
  for (auto& s : odd_holes(complement(g), min_len))
    out.emplace_back(std::move(s), HoleKind::antihole);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.members != b.first.members) return a.first.members < b.first.members;
    return a.second < b.second;
  });
  return out;
}

}  // namespace ncpoly
