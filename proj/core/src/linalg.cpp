#include "ncpoly/linalg.hpp"

#include <utility>

namespace ncpoly {

namespace {

// In-place row echelon reduction. Returns the pivot columns.
std::vector<std::size_t> echelonize(Mat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = Rational(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Mat m) { return echelonize(m).size(); }

std::optional<Vec> solve_unique(const Mat& a, const Vec& b) {
  if (a.empty()) return std::nullopt;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  Mat aug(rows, Vec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  const std::vector<std::size_t> pivots = echelonize(aug);
  // Inconsistent when some pivot landed in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;
  Vec x(cols);
  for (std::size_t i = 0; i < cols; ++i) x[pivots[i] /* == i */] = aug[i][cols];
  return x;
}

std::optional<Mat> inverse(Mat m) {
  const std::size_t n = m.size();
  Mat aug(n, Vec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const std::vector<std::size_t> pivots = echelonize(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::ptrdiff_t affine_dimension(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  Mat diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vec d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return static_cast<std::ptrdiff_t>(rank(std::move(diffs)));
}

}  // namespace ncpoly
