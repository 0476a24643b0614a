#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tlsig/seifert.hpp"

namespace tlsig {

/// Counts of positive, negative and zero eigenvalues.
struct InertiaTriple {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int signature() const { return positive - negative; }
  int nullity() const { return zero; }
  int size() const { return positive + negative + zero; }

  friend bool operator==(const InertiaTriple& a, const InertiaTriple& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
  friend bool operator!=(const InertiaTriple& a, const InertiaTriple& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const InertiaTriple& t) {
    return os << "(" << t.positive << "," << t.negative << "," << t.zero << ")";
  }
};

/// Square Gaussian-rational matrix equal to its conjugate transpose.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(GaussianMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_square()) throw DimensionError("Hermitian matrix must be square");
    if (adjoint(entries_) != entries_) throw NotHermitianError("matrix is not Hermitian");
  }

  const GaussianMatrix& entries() const { return entries_; }
  std::size_t size() const { return entries_.rows(); }

 private:
  GaussianMatrix entries_;
};

/// Gram matrix of S + S^T on a basis of ker(S - S^T).
struct RestrictedForm {
  std::vector<std::vector<Rational>> basis;
  RationalMatrix gram;

  std::size_t dimension() const { return basis.size(); }
};

/// Inertia of a self-adjoint matrix over Q or Q(i) by symmetric elimination.
/// Pivots on the first nonzero diagonal entry; when the diagonal vanishes the
/// first nonzero off-diagonal pair (lexicographic) is split off as a
/// hyperbolic plane contributing one positive and one negative direction.
/// The caller guarantees m is self-adjoint.
template <typename F>
InertiaTriple inertia(Matrix<F> m) {
  InertiaTriple out;
  std::vector<std::size_t> live(m.rows());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  auto erase = [&live](std::size_t idx) {
    for (std::size_t k = 0; k < live.size(); ++k)
      if (live[k] == idx) {
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(k));
        return;
      }
  };

  while (!live.empty()) {
    std::size_t piv = m.rows();
    for (auto i : live)
      if (!is_zero(m(i, i))) {
        piv = i;
        break;
      }

    if (piv != m.rows()) {
      const Rational d = real_part(m(piv, piv));
      (sign(d) > 0 ? out.positive : out.negative) += 1;
      erase(piv);
      // Schur complement: M_kl -= M_kp * M_pl / d.
      for (auto k : live) {
        if (is_zero(m(k, piv))) continue;
        F f = m(k, piv) / F(d);
        for (auto l : live) m(k, l) -= f * m(piv, l);
      }
      continue;
    }

    std::size_t pi = m.rows(), pj = m.rows();
    for (std::size_t a = 0; a < live.size() && pi == m.rows(); ++a)
      for (std::size_t b = a + 1; b < live.size(); ++b)
        if (!is_zero(m(live[a], live[b]))) {
          pi = live[a];
          pj = live[b];
          break;
        }
    if (pi == m.rows()) {
      out.zero += static_cast<int>(live.size());
      break;
    }

    // Block B = [[0, a], [conj(a), 0]] with inverse [[0, 1/conj(a)], [1/a, 0]].
    out.positive += 1;
    out.negative += 1;
    const F a = m(pi, pj);
    const F inv_a = F(1) / a;
    const F inv_ca = F(1) / conj(a);
    erase(pi);
    erase(pj);
    std::vector<F> ci, cj;
    for (auto k : live) {
      ci.push_back(m(k, pi));
      cj.push_back(m(k, pj));
    }
    for (std::size_t x = 0; x < live.size(); ++x)
      for (std::size_t y = 0; y < live.size(); ++y) {
        F delta = ci[x] * inv_ca * conj(cj[y]) + cj[x] * inv_a * conj(ci[y]);
        m(live[x], live[y]) -= delta;
      }
  }
  return out;
}

inline InertiaTriple signature(const HermitianMatrix& m) { return inertia(m.entries()); }

/// Inertia of a symmetric rational matrix.
inline InertiaTriple signature(const RationalMatrix& m) {
  if (!m.is_square() || m.transpose() != m) throw NotHermitianError("matrix is not symmetric");
  return inertia(m);
}

inline InertiaTriple signature(const IntMatrix& m) { return signature(convert<Rational>(m)); }

namespace detail {

/// Sign changes in the coefficient sequence, zeros skipped.
inline int coefficient_variations(const RationalPolynomial& p) {
  int count = 0, last = 0;
  for (const auto& c : p.coefficients()) {
    int s = sign(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace detail

/// Independent route to the inertia: characteristic polynomial by
/// Faddeev-LeVerrier, then root counts by Descartes' rule, which is exact
/// because every root of a Hermitian characteristic polynomial is real.
inline InertiaTriple signature_oracle(const HermitianMatrix& m) {
  Polynomial<GaussianRational> chi = characteristic_polynomial(m.entries());
  std::vector<Rational> c;
  for (const auto& z : chi.coefficients()) {
    if (!z.is_real()) throw Error("characteristic polynomial has non-real coefficients");
    c.push_back(z.re);
  }
  RationalPolynomial p(std::move(c));
  InertiaTriple out;
  out.zero = static_cast<int>(trailing_zero_count(p));
  RationalPolynomial q = strip_t_power(p);
  out.positive = detail::coefficient_variations(q);
  out.negative = detail::coefficient_variations(reflect(q));
  if (out.size() != static_cast<int>(m.size()))
    throw Error("characteristic polynomial is not real-rooted");
  return out;
}

/// (1 - z) S + (1 - conj z) S^T for |z| = 1.
inline HermitianMatrix levine_tristram_matrix(const SeifertMatrix& s, const GaussianRational& z) {
  if (z.norm() != 1)
    throw NotOnUnitCircleError("|z|^2 = " + to_string(z.norm()) + ", expected 1");
  const GaussianRational a = GaussianRational(1) - z;
  const GaussianRational b = conj(a);
  const auto& e = s.entries();
  GaussianMatrix m(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      m(i, j) = a * GaussianRational(e(i, j)) + b * GaussianRational(e(j, i));
  return HermitianMatrix(std::move(m));
}

inline RestrictedForm restricted_form(const SeifertMatrix& s) {
  RestrictedForm f;
  f.basis = kernel_basis(antisymmetric_part(s));
  const RationalMatrix sym = convert<Rational>(symmetric_part(s));
  const std::size_t k = f.basis.size(), n = s.size();
  f.gram = RationalMatrix(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Rational> sv(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sv[i] += sym(i, j) * f.basis[a][j];
    for (std::size_t b = 0; b < k; ++b) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc += f.basis[b][i] * sv[i];
      f.gram(b, a) = acc;
    }
  }
  return f;
}

inline InertiaTriple restricted_signature(const SeifertMatrix& s) {
  return signature(restricted_form(s).gram);
}

/// (S^T)^{-1} S over Q.
inline RationalMatrix monodromy(const SeifertMatrix& s) {
  const RationalMatrix q = convert<Rational>(s.entries());
  RationalMatrix inv;
  try {
    inv = inverse(RationalMatrix(q.transpose()));
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("monodromy needs an invertible Seifert matrix");
  }
  return inv * q;
}

}  // namespace tlsig
