#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncpoly/rational.hpp"

namespace ncpoly {

using Mat = std::vector<Vec>;

// Rank of a (copied) rational matrix by fraction-exact Gaussian elimination.
std::size_t rank(Mat m);

// Unique solution of A x = b when rank(A) equals the column count and the
// system is consistent; nullopt otherwise (underdetermined or inconsistent).
std::optional<Vec> solve_unique(const Mat& a, const Vec& b);

// Inverse of a square matrix, nullopt when singular.
std::optional<Mat> inverse(Mat m);

// Dimension of the affine hull of a point set: -1 for the empty set, 0 for a
// single point, d for a full-dimensional set in R^d.
std::ptrdiff_t affine_dimension(const std::vector<Vec>& points);

}  // namespace ncpoly
