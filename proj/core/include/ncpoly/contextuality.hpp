#pragma once

#include <vector>

#include "ncpoly/graph.hpp"
#include "ncpoly/polytope.hpp"
#include "ncpoly/report.hpp"

namespace ncpoly {

// STAB(G): convex hull of the incidence vectors of all stable sets.
VPolytope stab(const Graph& g, const Caps& caps = default_caps());

// QSTAB(G): nonnegativity rows plus one row per maximal clique (sub-clique
// rows are dominated and omitted).
HPolytope qstab(const Graph& g, const Caps& caps = default_caps());

// Sum of all n event probabilities bounded by (n-1)/2 (odd cycle) / by 2
// (odd anti-cycle). Defined for odd n >= 5.
NcInequality fcnc_inequality(int n);
NcInequality fanc_inequality(int n);

// Facets of STAB(G), classified, each annotated with the exact number of
// STAB vertices saturating it. "Non-trivial" means neither a nonnegativity
// row nor a clique row of the source graph.
std::vector<NcInequality> enumerate_nc_facets(const Graph& g, const Caps& caps = default_caps());

bool is_nontrivial(const NcInequality& f);

// Theorem verifiers. Each report carries the counts backing its verdict.
TheoremReport verify_unique_fcnc(int n, const Caps& caps = default_caps());
TheoremReport verify_unique_fanc(int n, const Caps& caps = default_caps());
TheoremReport facet_inheritance_check(const Graph& g, const std::string& label,
                                      const Caps& caps = default_caps());
TheoremReport sandwich_check(const Graph& g, const std::string& label,
                             const Caps& caps = default_caps());

// Full facet classification of STAB(Ci8[1,4]): 8 pentagonal, 8 heptagonal
// and 1 all-events inequality beyond the trivial rows.
TheoremReport verify_circulant_bell(const Caps& caps = default_caps());

}  // namespace ncpoly
