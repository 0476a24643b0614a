#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tlsig/seifert.hpp"

namespace tlsig {

/// det(tS - S^T) and its canonical representative up to units +-t^k.
struct AlexanderPolynomial {
  IntPolynomial poly;
  /// t^k and the overall sign stripped: nonzero constant term, positive lead.
  IntPolynomial normalized;
  /// k with poly = +-t^k * normalized.
  std::size_t t_power = 0;
  /// Largest m with (t-1)^m | normalized.
  int t1_multiplicity = 0;
  bool is_zero = false;
};

namespace detail {

/// Exact interpolation through (x_k, y_k) with distinct integer nodes.
inline IntPolynomial interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rational> coef(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / Rational(xs[i] - xs[i - level]);
  RationalPolynomial p;
  for (std::size_t i = n; i-- > 0;) {
    p = p * RationalPolynomial{Rational(-xs[i]), Rational(1)};
    p += RationalPolynomial::constant(coef[i]);
  }
  std::vector<Integer> c;
  for (const auto& x : p.coefficients()) {
    if (x.get_den() != 1) throw Error("interpolated determinant is not integral");
    c.emplace_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

}  // namespace detail

/// det(tS - S^T), sampled at t = 0..n by Bareiss elimination and
/// interpolated exactly.
inline IntPolynomial pencil_determinant(const SeifertMatrix& s) {
  const std::size_t n = s.size();
  const IntMatrix st = s.entries().transpose();
  std::vector<Integer> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Integer t = static_cast<unsigned long>(k);
    xs.push_back(t);
    ys.push_back(bareiss_determinant(s.entries() * t - st));
  }
  return detail::interpolate(xs, ys);
}

inline AlexanderPolynomial alexander_poly(const SeifertMatrix& s) {
  AlexanderPolynomial a;
  a.poly = pencil_determinant(s);
  if (a.poly.is_zero()) {
    a.is_zero = true;
    return a;
  }
  a.t_power = trailing_zero_count(a.poly);
  a.normalized = with_positive_lead(strip_t_power(a.poly));
  a.t1_multiplicity = root_multiplicity(a.normalized, Integer(1));
  return a;
}

/// Delta nonzero and (t-1)^r does not divide Delta.
inline bool hypothesis_holds(const AlexanderPolynomial& a, int r) {
  if (r < 1) throw InvalidArgument("component count must be at least 1");
  return !a.is_zero && a.t1_multiplicity < r;
}

/// "(t-1)^3", "(t-1)*(3t^2-4t+3)", "1".
inline std::string display(const AlexanderPolynomial& a) {
  if (a.is_zero) return "0";
  IntPolynomial rest;
  int m = root_multiplicity(a.normalized, Integer(1), &rest);
  std::string out;
  if (m > 0) out = m == 1 ? "(t-1)" : "(t-1)^" + std::to_string(m);
  if (rest.degree() > 0 || m == 0 || rest.coeff(0) != 1) {
    std::string r = to_string(rest);
    if (m > 0) {
      if (rest.degree() > 0) r = "(" + r + ")";
      out += "*" + r;
    } else {
      out = r;
    }
  }
  return out;
}

}  // namespace tlsig
