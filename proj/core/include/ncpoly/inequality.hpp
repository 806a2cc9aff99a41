#pragma once

#include <cstddef>
#include <vector>

#include "ncpoly/rational.hpp"

namespace ncpoly {

// Linear inequality coeffs . x <= bound, stored normalized: denominators
// cleared, integer entries divided by their gcd, direction and signs kept as
// given (a row is never multiplied by -1). Coefficients must not all vanish.
class Inequality {
 public:
  Inequality(Vec coeffs, Rational bound);

  std::size_t dim() const { return coeffs_.size(); }
  const Vec& coeffs() const { return coeffs_; }
  const Rational& bound() const { return bound_; }

  Rational evaluate(const Vec& point) const;
  bool satisfied_by(const Vec& point) const;
  bool saturated_by(const Vec& point) const;

  bool operator==(const Inequality& other) const {
    return coeffs_ == other.coeffs_ && bound_ == other.bound_;
  }
  bool operator<(const Inequality& other) const;

 private:
  Vec coeffs_;
  Rational bound_;
};

}  // namespace ncpoly
