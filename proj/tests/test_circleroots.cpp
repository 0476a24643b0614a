#include <gtest/gtest.h>

#include "test_support.hpp"

namespace tlsig {
namespace {

using testing::fixture_matrix;
using testing::ipoly;
using testing::q;
using testing::Random;

IntPolynomial cyclotomic(int n) {
  switch (n) {
    case 1:
      return ipoly({-1, 1});
    case 2:
      return ipoly({1, 1});
    case 3:
      return ipoly({1, 1, 1});
    case 4:
      return ipoly({1, 0, 1});
    case 5:
      return ipoly({1, 1, 1, 1, 1});
    case 6:
      return ipoly({1, -1, 1});
    case 8:
      return ipoly({1, 0, 0, 0, 1});
    case 10:
      return ipoly({1, -1, 1, -1, 1});
    case 12:
      return ipoly({1, 0, -1, 0, 1});
  }
  throw std::logic_error("cyclotomic index not tabulated");
}

TEST(UnitCircleRoots, L7a2) {
  CircleRootSet r = unit_circle_roots(alexander_poly(fixture_matrix("l7a2.json")).poly);
  EXPECT_EQ(r.root_at_1, 1);
  EXPECT_EQ(r.root_at_minus1, 0);
  EXPECT_EQ(r.t_power, 4u);
  ASSERT_EQ(r.x_intervals.size(), 1u);
  EXPECT_LT(r.x_intervals[0].lo, q(4, 3));
  EXPECT_GT(r.x_intervals[0].hi, q(4, 3));
  EXPECT_EQ(r.x_multiplicities, std::vector<int>{1});
  // 3t^2 - 4t + 3 = t (3x - 4).
  EXPECT_EQ(r.x_poly, testing::rpoly({-4, 3}) * Rational(q(1, 3)));
  EXPECT_EQ(arcs(r).size(), 2u);
}

TEST(UnitCircleRoots, OnlyAtOne) {
  IntPolynomial cube = ipoly({-1, 3, -3, 1});
  CircleRootSet r = unit_circle_roots(cube);
  EXPECT_EQ(r.root_at_1, 3);
  EXPECT_TRUE(r.x_intervals.empty());
  auto a = arcs(r);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(a[0].adjacent_to_one());
  EXPECT_TRUE(a[0].reaches_minus_one());
}

TEST(UnitCircleRoots, SimpleCases) {
  CircleRootSet i = unit_circle_roots(ipoly({1, 0, 1}));
  ASSERT_EQ(i.x_intervals.size(), 1u);
  EXPECT_LT(i.x_intervals[0].lo, 0);
  EXPECT_GT(i.x_intervals[0].hi, 0);
  EXPECT_TRUE(unit_circle_roots(ipoly({2, 1})).x_intervals.empty());
  EXPECT_EQ(unit_circle_roots(ipoly({1, 1})).root_at_minus1, 1);
  // Roots 2 +- sqrt 3 are real and off the circle.
  EXPECT_TRUE(unit_circle_roots(ipoly({1, -4, 1})).x_intervals.empty());
  EXPECT_THROW(unit_circle_roots(IntPolynomial{}), ZeroPolynomialError);
}

TEST(UnitCircleRoots, PalindromicToX) {
  // t^4 + t^3 + t^2 + t + 1 = t^2 (x^2 + x - 1).
  EXPECT_EQ(palindromic_to_x(cyclotomic(5)), testing::rpoly({-1, 1, 1}));
  // t^2 - t + 1 = t (x - 1).
  EXPECT_EQ(palindromic_to_x(cyclotomic(6)), testing::rpoly({-1, 1}));
}

TEST(UnitCircleRoots, CyclotomicProductsCountConjugatePairs) {
  // Phi_n for n > 2 contributes phi(n) / 2 conjugate pairs.
  const std::vector<std::pair<int, int>> pairs{{3, 1}, {4, 1}, {5, 2}, {6, 1},
                                               {8, 2}, {10, 2}, {12, 2}};
  Random rnd(21);
  for (int k = 0; k < 60; ++k) {
    IntPolynomial p = ipoly({1});
    int expected = 0, at1 = 0, atm1 = 0;
    std::map<int, int> mult;
    for (const auto& [n, c] : pairs) {
      int e = static_cast<int>(rnd.integer(0, 2));
      if (e == 0) continue;
      for (int i = 0; i < e; ++i) p = p * cyclotomic(n);
      expected += c;
      mult[n] = e;
    }
    at1 = static_cast<int>(rnd.integer(0, 2));
    atm1 = static_cast<int>(rnd.integer(0, 1));
    for (int i = 0; i < at1; ++i) p = p * cyclotomic(1);
    for (int i = 0; i < atm1; ++i) p = p * cyclotomic(2);
    // An off-circle factor and a t power must not disturb the count.
    if (rnd.coin()) p = p * ipoly({2, -5, 2});
    p = p * IntPolynomial::monomial(Integer(1), static_cast<std::size_t>(rnd.integer(0, 2)));
    CircleRootSet r = unit_circle_roots(p);
    EXPECT_EQ(static_cast<int>(r.x_intervals.size()), expected) << to_string(p);
    EXPECT_EQ(r.root_at_1, at1);
    EXPECT_EQ(r.root_at_minus1, atm1);
    int total_mult = 0, expected_mult = 0;
    for (int m : r.x_multiplicities) total_mult += m;
    for (const auto& [n, e] : mult)
      for (const auto& [pn, c] : pairs)
        if (pn == n) expected_mult += c * e;
    EXPECT_EQ(total_mult, expected_mult);
    for (const auto& iv : r.x_intervals) {
      EXPECT_GT(iv.lo, -2);
      EXPECT_LT(iv.hi, 2);
    }
  }
}

TEST(RationalPoint, L7a2FirstArc) {
  GaussianRational z = rational_point_in_arc(q(4, 3), q(2));
  EXPECT_EQ(z, (GaussianRational{q(4, 5), q(3, 5)}));
  EXPECT_EQ(z.norm(), 1);
  Rational x = 2 * z.re;
  EXPECT_GT(x, q(4, 3));
  EXPECT_LT(x, q(2));
}

TEST(RationalPoint, LandsInsideRandomArcs) {
  Random rnd(31);
  for (int k = 0; k < 300; ++k) {
    Rational a = rnd.rational(2000, 997), b = rnd.rational(2000, 997);
    if (rnd.integer(0, 9) == 0) a = -2;
    if (rnd.integer(0, 9) == 0) b = 2;
    if (a > b) std::swap(a, b);
    if (a == b || a < -2 || b > 2) continue;
    auto pts = sample_points_in_arc(a, b, 3);
    ASSERT_EQ(pts.size(), 3u);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_EQ(pts[i].norm(), 1);
      EXPECT_GT(pts[i].im, 0);
      Rational x = 2 * pts[i].re;
      EXPECT_LT(a, x);
      EXPECT_LT(x, b);
      if (i > 0) {
        EXPECT_NE(pts[i], pts[i - 1]);
      }
    }
    EXPECT_EQ(pts[0], rational_point_in_arc(a, b));
  }
}

TEST(RationalPoint, Errors) {
  EXPECT_THROW(rational_point_in_arc(q(1), q(1)), EmptyIntervalError);
  EXPECT_THROW(rational_point_in_arc(q(1), q(0)), EmptyIntervalError);
  EXPECT_THROW(rational_point_in_arc(q(-3), q(0)), InvalidArgument);
  EXPECT_THROW(simplest_root_between(q(1), q(1)), EmptyIntervalError);
}

TEST(SimplestRoot, MatchesBruteForce) {
  Random rnd(41);
  for (int k = 0; k < 200; ++k) {
    Rational lo = abs(rnd.rational(30, 12)), hi = abs(rnd.rational(30, 12));
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) continue;
    Rational u = simplest_root_between(lo, hi);
    // Smallest denominator first, then smallest numerator.
    bool found = false;
    for (long d = 1; d <= u.get_den().get_si() && !found; ++d)
      for (long n = 1; n <= 10 * d && !found; ++n) {
        Rational v = q(n, d);
        Rational v2 = v * v;
        if (lo < v2 && v2 < hi) {
          EXPECT_EQ(v, u);
          found = true;
        }
      }
    EXPECT_TRUE(found);
  }
}

TEST(RefineCircleRoot, NarrowIntervals) {
  CircleRootSet r = unit_circle_roots(cyclotomic(5));
  ASSERT_EQ(r.x_intervals.size(), 2u);
  for (const auto& iv : r.x_intervals) {
    RootInterval t = refine_root(r.x_poly, iv, q(1, 1000000));
    EXPECT_LT(Rational(t.hi - t.lo), q(1, 1000000));
    EXPECT_EQ(sturm_count(r.x_poly, t.lo, t.hi), 1);
  }
}

}  // namespace
}  // namespace tlsig
