#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace ncpoly {

// Exact rational scalar of every geometric computation. GMP keeps values
// canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

using Vec = std::vector<Rational>;

bool is_integer(const Rational& r);

// Parses "num" or "num/den" (optional leading '-' on num, den > 0) and
// canonicalizes. Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

// Canonical text form: "num" when den == 1, else "num/den". Round-trips
// bit-identically through parse_rational.
std::string to_string(const Rational& r);

bool lex_less(const Vec& a, const Vec& b);

Rational dot(const Vec& a, const Vec& b);

}  // namespace ncpoly
