#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tlsig/gaussian.hpp"
#include "tlsig/sturm.hpp"

namespace tlsig {

/// Unit-circle roots of an integer polynomial. Conjugate pairs e^{+-i theta}
/// off the real axis are recorded through x = t + 1/t = 2 cos(theta), which
/// lies in (-2, 2).
struct CircleRootSet {
  /// Squarefree, monic; its roots in (-2, 2) are the x-images of the pairs.
  RationalPolynomial x_poly;
  /// x-image before squarefree reduction.
  RationalPolynomial x_image;
  /// Ascending, pairwise separated isolating intervals inside (-2, 2).
  std::vector<RootInterval> x_intervals;
  /// Multiplicity in x_image of the root inside the matching interval.
  std::vector<int> x_multiplicities;
  int root_at_1 = 0;
  int root_at_minus1 = 0;
  /// Power of t stripped before the analysis.
  std::size_t t_power = 0;
};

/// Open arc of the upper half circle, described by its x = 2 Re(z) range.
struct CircleArc {
  Rational lower_x;  // -2 when the arc reaches z = -1
  Rational upper_x;  // 2 when the arc reaches z = 1
  GaussianRational sample_z;

  bool adjacent_to_one() const { return upper_x == 2; }
  bool reaches_minus_one() const { return lower_x == -2; }
};

/// Rewrites a palindromic polynomial of degree 2d as t^d * h(t + 1/t).
inline RationalPolynomial palindromic_to_x(const IntPolynomial& g) {
  if (g.degree() % 2 != 0) throw InvalidArgument("palindromic reduction needs even degree");
  const std::size_t d = static_cast<std::size_t>(g.degree()) / 2;
  // P_0 = 1 for the middle term; t^j + t^-j = T_j(x) with T_0 = 2, T_1 = x.
  RationalPolynomial h = RationalPolynomial::constant(Rational(g.coeff(d)));
  const RationalPolynomial x{Rational(0), Rational(1)};
  RationalPolynomial prev = RationalPolynomial::constant(Rational(2));
  RationalPolynomial cur = x;
  for (std::size_t j = 1; j <= d; ++j) {
    h += cur * Rational(g.coeff(d + j));
    RationalPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return h;
}

inline CircleRootSet unit_circle_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("unit-circle roots of the zero polynomial");
  CircleRootSet out;
  out.t_power = trailing_zero_count(p);
  IntPolynomial rest = strip_t_power(p);
  out.root_at_1 = root_multiplicity(rest, Integer(1), &rest);
  out.root_at_minus1 = root_multiplicity(rest, Integer(-1), &rest);

  // Every unit-circle root of `rest` is shared with its reversal.
  IntPolynomial g = poly_gcd(rest, poly_reverse(rest));
  if (g.degree() < 1) {
    out.x_image = RationalPolynomial::constant(Rational(1));
    out.x_poly = out.x_image;
    return out;
  }
  // With t = +-1 divided out, g is palindromic of even degree.
  if (poly_reverse(g) != g) {
    IntPolynomial q;
    if (root_multiplicity(g, Integer(1), &q) > 0 || root_multiplicity(g, Integer(-1), &q) > 0)
      throw Error("self-inversive factor still vanishes at t = +-1");
    throw Error("self-inversive factor is not palindromic");
  }
  out.x_image = palindromic_to_x(g);
  out.x_poly = squarefree_part(out.x_image);
  out.x_intervals = isolate_real_roots(out.x_poly, Rational(-2), Rational(2));
  // Keep x = +-2 (z = +-1) strictly outside every interval so the end arcs
  // have interior.
  if (!out.x_intervals.empty()) {
    if (out.x_intervals.front().lo == -2)
      out.x_intervals.front() = shrink_endpoint(out.x_poly, out.x_intervals.front(), false);
    if (out.x_intervals.back().hi == 2)
      out.x_intervals.back() = shrink_endpoint(out.x_poly, out.x_intervals.back(), true);
  }

  // Multiplicity of the root in interval I: the largest j for which it is
  // still a root of gcd(h, h', ..., h^(j-1)).
  std::vector<RationalPolynomial> shared{out.x_image};
  RationalPolynomial dj = out.x_image;
  while (shared.back().degree() >= 1) {
    dj = derivative(dj);
    shared.push_back(poly_gcd(shared.back(), dj));
  }
  for (const auto& iv : out.x_intervals) {
    int m = 0;
    for (const auto& s : shared) {
      if (s.degree() < 1 || sturm_count(s, iv.lo, iv.hi) == 0) break;
      ++m;
    }
    out.x_multiplicities.push_back(m);
  }
  return out;
}

/// ((1 - u^2) + 2u i) / (1 + u^2), a rational point of the unit circle.
inline GaussianRational unit_circle_point(const Rational& u) {
  Rational u2 = u * u;
  Rational den = 1 + u2;
  return {Rational((1 - u2) / den), Rational(2 * u / den)};
}

/// Simplest positive rational u (smallest denominator, then numerator) with
/// lo_sq < u^2 < hi_sq; no upper bound when hi_sq is empty. Walks the
/// Stern-Brocot tree, taking runs of equal moves in one exponential search.
inline Rational simplest_root_between(const Rational& lo_sq, const std::optional<Rational>& hi_sq) {
  if (sign(lo_sq) < 0) throw InvalidArgument("lower bound must be non-negative");
  if (hi_sq && !(lo_sq < *hi_sq)) throw EmptyIntervalError("empty parameter interval");
  // Left bound a/b, right bound c/d (1/0 is +infinity).
  Integer a = 0, b = 1, c = 1, d = 0;
  auto too_small = [&](const Integer& p, const Integer& q) {
    Rational v(p, q);
    v.canonicalize();
    return v * v <= lo_sq;
  };
  auto too_large = [&](const Integer& p, const Integer& q) {
    if (!hi_sq) return false;
    Rational v(p, q);
    v.canonicalize();
    return v * v >= *hi_sq;
  };
  while (true) {
    Integer p = a + c, q = b + d;
    if (too_small(p, q)) {
      // Move right k times: mediant (a + k c)/(b + k d) stays too small.
      Integer lo = 1, hi = 2;
      while (too_small(a + hi * c, b + hi * d)) {
        lo = hi;
        hi *= 2;
      }
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        (too_small(a + mid * c, b + mid * d) ? lo : hi) = mid;
      }
      a += lo * c;
      b += lo * d;
    } else if (too_large(p, q)) {
      Integer lo = 1, hi = 2;
      while (too_large(hi * a + c, hi * b + d)) {
        lo = hi;
        hi *= 2;
      }
      while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        (too_large(mid * a + c, mid * b + d) ? lo : hi) = mid;
      }
      c += lo * a;
      d += lo * b;
    } else {
      Rational u(p, q);
      u.canonicalize();
      return u;
    }
  }
}

namespace detail {

/// u^2 = (2 - x) / (2 + x) for the upper-half point with 2 Re(z) = x.
inline Rational parameter_square(const Rational& x) {
  Rational v = (2 - x) / (2 + x);
  return v;
}

inline void check_arc(const Rational& x_lo, const Rational& x_hi) {
  if (!(x_lo < x_hi)) throw EmptyIntervalError("arc needs x_lo < x_hi");
  if (x_lo < -2 || x_hi > 2) throw InvalidArgument("arc bounds must lie in [-2, 2]");
}

}  // namespace detail

/// Gaussian-rational point z on the upper half circle with 2 Re(z) strictly
/// inside (x_lo, x_hi); the parameter u is the simplest admissible rational.
inline GaussianRational rational_point_in_arc(const Rational& x_lo, const Rational& x_hi) {
  detail::check_arc(x_lo, x_hi);
  Rational lo_sq = detail::parameter_square(x_hi);
  std::optional<Rational> hi_sq;
  if (x_lo > -2) hi_sq = detail::parameter_square(x_lo);
  return unit_circle_point(simplest_root_between(lo_sq, hi_sq));
}

/// `count` distinct points of the arc: the first is rational_point_in_arc,
/// each further one is the simplest point between the previous one and x_lo.
inline std::vector<GaussianRational> sample_points_in_arc(const Rational& x_lo,
                                                          const Rational& x_hi,
                                                          std::size_t count) {
  detail::check_arc(x_lo, x_hi);
  std::vector<GaussianRational> out;
  Rational lo_sq = detail::parameter_square(x_hi);
  std::optional<Rational> hi_sq;
  if (x_lo > -2) hi_sq = detail::parameter_square(x_lo);
  for (std::size_t k = 0; k < count; ++k) {
    Rational u = simplest_root_between(lo_sq, hi_sq);
    out.push_back(unit_circle_point(u));
    lo_sq = u * u;
  }
  return out;
}

/// Arcs of the upper half circle between consecutive roots, ordered from
/// z = 1 (x = 2) toward z = -1 (x = -2). Each arc's x-range is a certified
/// root-free sub-range between neighbouring isolating intervals.
inline std::vector<CircleArc> arcs(const CircleRootSet& roots) {
  std::vector<Rational> bounds{Rational(2)};
  for (auto it = roots.x_intervals.rbegin(); it != roots.x_intervals.rend(); ++it) {
    bounds.push_back(it->hi);
    bounds.push_back(it->lo);
  }
  bounds.emplace_back(-2);
  std::vector<CircleArc> out;
  for (std::size_t k = 0; k + 1 < bounds.size(); k += 2) {
    CircleArc arc;
    arc.upper_x = bounds[k];
    arc.lower_x = bounds[k + 1];
    arc.sample_z = rational_point_in_arc(arc.lower_x, arc.upper_x);
    out.push_back(std::move(arc));
  }
  return out;
}

}  // namespace tlsig
