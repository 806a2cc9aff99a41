#include "ncpoly/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ncpoly/errors.hpp"

namespace ncpoly {

bool is_integer(const Rational& r) { return denominator(r) == 1; }

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den) || den[0] == '-') {
    throw ParseError("not a rational: '" + text + "'");
  }
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  // The two-integer constructor canonicalizes; the string constructor would not.
  return Rational(BigInt(num), d);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational dot(const Vec& a, const Vec& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace ncpoly
