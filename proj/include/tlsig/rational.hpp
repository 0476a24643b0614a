#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tlsig/errors.hpp"

namespace tlsig {

using Integer = mpz_class;

/// GMP rationals are kept canonical (reduced, positive denominator) by every
/// arithmetic operation, so structural equality is value equality.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Integer& x) { return sgn(x); }
inline int sign(const Rational& x) { return sgn(x); }

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || s == "-") throw InvalidArgument("empty integer literal");
  for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw InvalidArgument("malformed integer literal '" + std::string(text) + "'");
  }
  return Integer(s, 10);
}

/// Accepts "p", "-p" and "p/q".
inline Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }

inline Rational midpoint(const Rational& a, const Rational& b) {
  Rational m = (a + b) / 2;
  return m;
}

}  // namespace tlsig
