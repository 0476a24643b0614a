#pragma once

// Test-only helpers: fixture access, random generators and oracles that are
// independent of the production code paths they check.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "tlsig/tlsig.hpp"

namespace tlsig::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(TLSIG_FIXTURE_DIR) + "/" + name;
}

inline LinkFile fixture(const std::string& name) { return load_link_file(fixture_path(name)); }

inline SeifertMatrix fixture_matrix(const std::string& name) {
  return fixture(name).seifert_matrix();
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"hopf.json",        "hopf_extended.json",
                                              "hopf_chain3.json", "l5a1.json",
                                              "l7a2.json",        "trefoil.json",
                                              "figure_eight.json"};
  return names;
}

inline IntPolynomial ipoly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

inline RationalPolynomial rpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RationalPolynomial(std::move(v));
}

inline Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

inline IntMatrix imat(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_bound, long den_bound) {
    return make_rational(Integer(integer(-num_bound, num_bound)), Integer(integer(1, den_bound)));
  }

  GaussianRational gaussian(long num_bound, long den_bound) {
    return {rational(num_bound, den_bound), rational(num_bound, den_bound)};
  }

  IntMatrix int_matrix(std::size_t n, long bound) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(-bound, bound);
    return m;
  }

  std::vector<Integer> int_vector(std::size_t n, long bound) {
    std::vector<Integer> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(integer(-bound, bound));
    return v;
  }

  /// Product of elementary row operations, a permutation and sign flips.
  IntMatrix unimodular(std::size_t n, int steps = 6) {
    IntMatrix p = IntMatrix::identity(n);
    if (n == 0) return p;
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      if (i != j) {
        Integer f = integer(-2, 2);
        for (std::size_t k = 0; k < n; ++k) p(i, k) += f * p(j, k);
      }
      if (coin()) p.swap_rows(i, j);
      if (integer(0, 4) == 0)
        for (std::size_t k = 0; k < n; ++k) p(i, k) = -p(i, k);
    }
    return p;
  }

  /// Random invertible Gaussian-rational matrix (unit triangular factors
  /// times a random invertible diagonal).
  GaussianMatrix invertible_gaussian(std::size_t n) {
    GaussianMatrix l = GaussianMatrix::identity(n), u = GaussianMatrix::identity(n);
    GaussianMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      GaussianRational x;
      do x = gaussian(4, 3);
      while (x.is_zero());
      d(i, i) = x;
      for (std::size_t j = 0; j < i; ++j) {
        l(i, j) = gaussian(3, 2);
        u(j, i) = gaussian(3, 2);
      }
    }
    GaussianMatrix p = l * d * u;
    for (int s = 0; s < 2 && n > 1; ++s)
      p.swap_rows(static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)),
                  static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)));
    return p;
  }

  /// Random Hermitian matrix; `shape` selects generic, low rank or zero
  /// diagonal constructions so every elimination branch is reached.
  GaussianMatrix hermitian(std::size_t n, int shape) {
    GaussianMatrix m(n, n);
    if (shape == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = GaussianRational(rational(5, 3));
        for (std::size_t j = i + 1; j < n; ++j) {
          m(i, j) = gaussian(5, 3);
          m(j, i) = conj(m(i, j));
        }
      }
    } else if (shape == 1) {
      // P^* D P with D carrying zeros: known low rank.
      GaussianMatrix d(n, n);
      for (std::size_t i = 0; i < n; ++i) d(i, i) = GaussianRational(Rational(integer(-2, 2)));
      GaussianMatrix p = invertible_gaussian(n);
      m = adjoint(p) * d * p;
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (integer(0, 2) == 0) continue;
          m(i, j) = gaussian(3, 2);
          m(j, i) = conj(m(i, j));
        }
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

/// det of a polynomial matrix by Laplace expansion along the first row.
inline IntPolynomial laplace_determinant(const std::vector<std::vector<IntPolynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return ipoly({1});
  if (n == 1) return m[0][0];
  IntPolynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<IntPolynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPolynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    IntPolynomial term = m[0][c] * laplace_determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// det(tS - S^T) by cofactor expansion over Z[t].
inline IntPolynomial pencil_by_laplace(const IntMatrix& s) {
  std::vector<std::vector<IntPolynomial>> m(s.rows(), std::vector<IntPolynomial>(s.cols()));
  for (std::size_t i = 0; i < s.rows(); ++i)
    for (std::size_t j = 0; j < s.cols(); ++j)
      m[i][j] = IntPolynomial{Integer(-s(j, i)), s(i, j)};
  return laplace_determinant(m);
}

/// Polynomial with prescribed rational roots (repeats allowed) times a
/// positive-definite quadratic factor, so its real roots are known.
struct ConstructedPolynomial {
  RationalPolynomial poly;
  std::vector<Rational> distinct_roots;  // sorted
};

inline ConstructedPolynomial constructed_polynomial(Random& rnd, int max_roots) {
  ConstructedPolynomial out;
  RationalPolynomial p = RationalPolynomial::constant(Rational(rnd.integer(1, 5)));
  if (rnd.coin()) p = -p;
  int k = static_cast<int>(rnd.integer(0, max_roots));
  std::vector<Rational> roots;
  for (int i = 0; i < k; ++i) {
    Rational r = rnd.rational(8, 4);
    int mult = rnd.integer(0, 3) == 0 ? 2 : 1;
    for (int m = 0; m < mult; ++m) p = p * RationalPolynomial{Rational(-r), Rational(1)};
    roots.push_back(r);
  }
  if (rnd.coin()) {
    // x^2 + b x + c with b^2 < 4c.
    long b = rnd.integer(-3, 3);
    long c = b * b / 4 + rnd.integer(1, 4);
    p = p * RationalPolynomial{Rational(c), Rational(b), Rational(1)};
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  out.poly = p;
  out.distinct_roots = roots;
  return out;
}

/// Counts sign changes of the squarefree part on a uniform grid of (a, b)
/// finer than half the smallest root gap; grid points that hit a root are
/// nudged. Equal to the number of distinct roots in (a, b) when the roots
/// are known to be separated by more than two grid steps.
inline int grid_sign_changes(const RationalPolynomial& p, const Rational& a, const Rational& b,
                             int steps) {
  RationalPolynomial sf = squarefree_part(p);
  int count = 0;
  int last = sign(sf.evaluate(a));
  Rational h = (b - a) / steps;
  for (int k = 1; k <= steps; ++k) {
    Rational x = a + h * k;
    if (sf.evaluate(x) == 0) x -= h / 3;
    int s = sign(sf.evaluate(x));
    if (s != 0 && s != last) {
      ++count;
      last = s;
    }
  }
  return count;
}

/// Signature of the Tristram-Levine matrix at the rational point with
/// parameter u, i.e. z = ((1 - u^2) + 2ui) / (1 + u^2).
inline InertiaTriple signature_at_parameter(const SeifertMatrix& s, const Rational& u) {
  return signature(levine_tristram_matrix(s, unit_circle_point(u)));
}

}  // namespace tlsig::testing
