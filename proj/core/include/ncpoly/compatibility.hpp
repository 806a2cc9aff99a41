#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/polytope.hpp"
#include "ncpoly/report.hpp"
#include "ncpoly/rng.hpp"

namespace ncpoly {

// Measurement scenario (X, C, O): |X| measurements labeled 0..|X|-1, a
// finite outcome set O = {0..outcomes-1} and a cover of X by contexts, none
// containing another. Signed outcome labels are a presentation alias with
// 0 <-> +1 and 1 <-> -1.
class CompatibilityScenario {
 public:
  CompatibilityScenario(int measurements, int outcomes,
                        std::vector<std::vector<int>> contexts);

  int measurements() const { return measurements_; }
  int outcomes() const { return outcomes_; }
  const std::vector<std::vector<int>>& contexts() const { return contexts_; }

  // Index of the context equal to the given measurement set; -1 if absent.
  int context_index(const std::vector<int>& measurements) const;

  // Dimension of the stacked behaviour vector: sum over contexts of
  // outcomes^{|C|}.
  std::size_t behaviour_dim() const;

  // Compatibility graph (2-skeleton). Exact graph of the scenario when all
  // contexts are pairs.
  Graph skeleton() const;

  bool all_contexts_binary_pairs() const;

 private:
  int measurements_;
  int outcomes_;
  std::vector<std::vector<int>> contexts_;
};

// One probability table per context. Outcome tuples are indexed
// lexicographically over canonical labels: the smallest measurement of the
// context is the most significant digit.
class Behaviour {
 public:
  Behaviour(const CompatibilityScenario& s, std::vector<std::vector<Rational>> tables);

  const std::vector<std::vector<Rational>>& tables() const { return tables_; }

  // p_C(s) addressed by outcome digits aligned with the sorted context.
  const Rational& prob(const CompatibilityScenario& s, int context,
                       const std::vector<int>& outcomes) const;

  // Probability of assigning `outcome_i` to measurement i and `outcome_j` to
  // measurement j within the (unique) context {i, j}.
  const Rational& pair_prob(const CompatibilityScenario& s, int i, int j,
                            int outcome_i, int outcome_j) const;

  Vec stacked(const CompatibilityScenario& s) const;

 private:
  std::vector<std::vector<Rational>> tables_;
};

// Correlation-space vector q = (q_i, q_ij) over a graph, edge slots in
// canonical sorted edge order after the |V| vertex slots.
struct CorrelationVector {
  Graph graph;
  Vec values;  // length |V| + |E|

  const Rational& vertex_value(int i) const;
  const Rational& edge_value(int i, int j) const;
};

CompatibilityScenario n_cycle_scenario(int n);

// Exact marginal of table `context` restricted to `subset` (a subset of the
// context), outcome tuples ordered as in Behaviour.
std::vector<Rational> marginalize(const CompatibilityScenario& s, const Behaviour& b,
                                  int context, const std::vector<int>& subset);

bool is_nondisturbing(const CompatibilityScenario& s, const Behaviour& b);

// Behaviour induced by one deterministic global assignment (one outcome per
// measurement).
Behaviour deterministic_behaviour(const CompatibilityScenario& s,
                                  const std::vector<int>& assignment);

// All deterministic global assignments of the scenario, as Behaviours, in
// assignment order.
std::vector<Behaviour> classical_vertices(const CompatibilityScenario& s,
                                          const Caps& caps = default_caps());

// Convex hull of the stacked deterministic behaviours: the set of behaviours
// admitting a global section.
VPolytope classical_polytope(const CompatibilityScenario& s,
                             const Caps& caps = default_caps());

// Non-disturbing set in phi coordinates: the rooted correlation semimetric
// rows q_ij >= 0, q_i - q_ij >= 0, q_j - q_ij >= 0, 1 - q_i - q_j + q_ij >= 0
// per edge. Binary pairwise scenarios only.
HPolytope nondisturbing_polytope(const CompatibilityScenario& s);

// phi: q_i = p_i(1), q_ij = p_ij(11). Requires a non-disturbing behaviour.
CorrelationVector phi_map(const CompatibilityScenario& s, const Behaviour& b);
Behaviour phi_inverse(const CompatibilityScenario& s, const CorrelationVector& q);

// COR(G): convex hull of v(S) over all S, with v(S)_i = [i in S] and
// v(S)_ij = [i, j in S].
VPolytope correlation_polytope(const Graph& g, const Caps& caps = default_caps());

// Graph with one extra vertex n joined to every vertex of g.
Graph suspension(const Graph& g);

// psi: correlation space of g -> cut space of suspension(g);
// x_ij = 1 - q_i - q_j + 2 q_ij on old edges, x_{i,n} = q_i. Slots follow
// the sorted edge order of suspension(g).
Vec psi_map(const CorrelationVector& q);
CorrelationVector psi_inverse(const Graph& g, const Vec& x);

// CUT01(G): convex hull of the edge-XOR vectors of all binary labelings.
VPolytope cut01_polytope(const Graph& g, const Caps& caps = default_caps());

// y = 2x - 1 componentwise and its inverse.
Vec alpha_map(const Vec& x);
Vec alpha_inverse(const Vec& y);

// <i,j> = p(00) + p(11) - p(01) - p(10) under the signed alias.
Rational correlator(const CompatibilityScenario& s, const Behaviour& b, int i, int j);

// Seeded non-disturbing behaviours: rational convex combinations (weights
// k/64) of deterministic vertices and the fractional point q_i = 1/2,
// q_ij = 0.
std::vector<Behaviour> sample_nondisturbing_behaviours(const CompatibilityScenario& s,
                                                       std::size_t count, SeededRng& rng);

// Events are (context, outcome tuple) pairs; two events are adjacent iff
// they assign different outcomes to a shared measurement.
struct Event {
  int context = 0;
  std::vector<int> outcomes;  // aligned with the sorted context
};
Graph exclusivity_graph_of_events(const CompatibilityScenario& s,
                                  const std::vector<Event>& events);

// n - sum <i,i+1> = 4 sum p(01) on classical vertices and seeded
// non-disturbing behaviours, plus the exact slack identity making the
// correlator bound n-2 equivalent to the cyclic event bound (n-1)/2.
TheoremReport kcbs_bridge_check(int n, std::uint64_t seed, std::size_t samples = 100,
                                const Caps& caps = default_caps());

// Validity and facet rank of the 2^{n-1} correlator inequalities with an odd
// number of negative signs over COR(C_n).
TheoremReport odd_gamma_facets_check(int n, const Caps& caps = default_caps());

// psi maps COR(C_n) exactly onto CUT01 of the suspension; alpha composed
// with its inverse is the identity on seeded rational vectors.
TheoremReport cut_map_check(int n, std::uint64_t seed, std::size_t samples = 100,
                            const Caps& caps = default_caps());

}  // namespace ncpoly
