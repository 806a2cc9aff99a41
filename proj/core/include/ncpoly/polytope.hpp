#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncpoly/inequality.hpp"
#include "ncpoly/linalg.hpp"
#include "ncpoly/rational.hpp"
#include "ncpoly/version.hpp"

namespace ncpoly {

// Half-space description: intersection of rows, each coeffs . x <= bound.
// Nonnegativity rows -x_i <= 0 are ordinary members. Rows are kept sorted
// and deduplicated.
class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<Inequality> rows);

  std::size_t dim() const { return dim_; }
  const std::vector<Inequality>& rows() const { return rows_; }

  bool operator==(const HPolytope& other) const {
    return dim_ == other.dim_ && rows_ == other.rows_;
  }

 private:
  std::size_t dim_;
  std::vector<Inequality> rows_;
};

// Vertex description: convex hull of pairwise-distinct extreme points,
// sorted lexicographically. Extremality is the producer's contract for
// internal constructions; untrusted input is pruned at the I/O boundary.
class VPolytope {
 public:
  VPolytope(std::size_t dim, std::vector<Vec> vertices);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }

  bool operator==(const VPolytope& other) const {
    return dim_ == other.dim_ && vertices_ == other.vertices_;
  }

 private:
  std::size_t dim_;
  std::vector<Vec> vertices_;
};

// Unique solution of the system "every row holds with equality" when it has
// full rank and is consistent; nullopt otherwise.
std::optional<Vec> solve_affine(const std::vector<Inequality>& tight);

// Exact vertex enumeration by the double description method on the
// homogenization cone. Throws UnboundedPolytopeError when the input is not
// bounded and SizeLimitError above the dimension cap.
VPolytope vertices_from_halfspaces(const HPolytope& h, const Caps& caps = default_caps());

// Independent enumeration oracle: solve every d-subset of rows as equalities,
// keep the feasible basic solutions, drop duplicates and non-extreme points.
VPolytope brute_force_vertices(const HPolytope& h, const Caps& caps = default_caps());

// Irredundant facet list of a full-dimensional polytope via polarity around
// the vertex centroid. Throws DegeneratePolytopeError otherwise.
HPolytope facets_from_vertices(const VPolytope& v, const Caps& caps = default_caps());

// Minimal sublist of rows defining the same point set (bounded,
// full-dimensional input).
HPolytope remove_redundant(const HPolytope& h, const Caps& caps = default_caps());

bool contains(const HPolytope& h, const Vec& point);
// Membership in a convex hull, decided by exact phase-1 simplex.
bool contains(const VPolytope& v, const Vec& point);

// abl P = {y >= 0 : x . y <= 1 for all x in P}, emitted as one row per
// vertex of P (the origin contributes no row) plus nonnegativity.
HPolytope antiblocker(const VPolytope& p);
HPolytope antiblocker(const HPolytope& p, const Caps& caps = default_caps());

bool equal_polytopes(const VPolytope& a, const VPolytope& b);
bool equal_polytopes(const VPolytope& a, const HPolytope& b, const Caps& caps = default_caps());
bool equal_polytopes(const HPolytope& a, const VPolytope& b, const Caps& caps = default_caps());
bool equal_polytopes(const HPolytope& a, const HPolytope& b, const Caps& caps = default_caps());

}  // namespace ncpoly
