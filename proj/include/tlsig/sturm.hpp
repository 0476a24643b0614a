#pragma once

#include <cstddef>
#include <vector>

#include "tlsig/polynomial.hpp"

namespace tlsig {

/// Open interval (lo, hi) with rational endpoints.
struct RootInterval {
  Rational lo;
  Rational hi;

  friend bool operator==(const RootInterval& a, const RootInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

/// Sturm chain of a squarefree polynomial. Each member is stored as a
/// primitive integer polynomial; content is removed with a positive factor so
/// sign patterns are unchanged.
class SturmSequence {
 public:
  /// `p` is made squarefree internally.
  explicit SturmSequence(const RationalPolynomial& p) {
    if (p.is_zero()) throw ZeroPolynomialError("Sturm sequence of the zero polynomial");
    RationalPolynomial sf = squarefree_part(p);
    chain_.push_back(primitive_part(sf));
    if (sf.degree() < 1) return;
    chain_.push_back(primitive_part(derivative(sf)));
    while (true) {
      RationalPolynomial r =
          remainder(to_rational(chain_[chain_.size() - 2]), to_rational(chain_.back()));
      if (r.is_zero()) break;
      chain_.push_back(primitive_part(-r));
    }
  }

  const IntPolynomial& squarefree() const { return chain_.front(); }
  const std::vector<IntPolynomial>& chain() const { return chain_; }

  /// Sign changes of the chain evaluated at x, zeros skipped.
  int variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& q : chain_) {
      int s = sign(q.evaluate(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Distinct roots in (a, b); endpoints must not be roots.
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<IntPolynomial> chain_;
};

namespace detail {

inline void check_query(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw ZeroPolynomialError("root query on the zero polynomial");
  if (!(a < b)) throw EmptyIntervalError("root query needs a < b");
  if (p.evaluate(a) == 0) throw EndpointRootError("left endpoint " + to_string(a) + " is a root");
  if (p.evaluate(b) == 0) throw EndpointRootError("right endpoint " + to_string(b) + " is a root");
}

/// A dyadic point of (lo, hi) that is not a root of p: the midpoint, else the
/// first non-root among midpoint +- (hi - lo) / 2^j.
inline Rational split_point(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
  Rational m = midpoint(lo, hi);
  if (p.evaluate(m) != 0) return m;
  Rational width = hi - lo;
  for (unsigned long j = 2;; ++j) {
    Rational step = width;
    mpq_div_2exp(step.get_mpq_t(), width.get_mpq_t(), j);
    Rational c = m + step;
    if (p.evaluate(c) != 0) return c;
    c = m - step;
    if (p.evaluate(c) != 0) return c;
  }
}

/// Moves one endpoint of an isolating interval strictly inward along dyadic
/// steps, keeping the root inside and the new endpoint a non-root.
inline RootInterval pull_in(const SturmSequence& sturm, RootInterval iv, bool upper) {
  const IntPolynomial& sf = sturm.squarefree();
  for (unsigned long j = 1;; ++j) {
    Rational step = iv.hi - iv.lo;
    mpq_div_2exp(step.get_mpq_t(), step.get_mpq_t(), j);
    RootInterval cand = iv;
    (upper ? cand.hi : cand.lo) = upper ? Rational(iv.hi - step) : Rational(iv.lo + step);
    const Rational& moved = upper ? cand.hi : cand.lo;
    if (sf.evaluate(moved) != 0 && sturm.count(cand.lo, cand.hi) == 1) return cand;
  }
}

}  // namespace detail

/// Number of distinct real roots of p in the open interval (a, b).
inline int sturm_count(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  detail::check_query(p, a, b);
  return SturmSequence(p).count(a, b);
}

/// Disjoint isolating intervals, sorted ascending, for the real roots of p in
/// (a, b). Endpoints are dyadic refinements of a and b, never roots, and
/// consecutive intervals do not share an endpoint.
inline std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& p, const Rational& a,
                                                    const Rational& b) {
  detail::check_query(p, a, b);
  SturmSequence sturm(p);
  const IntPolynomial& sf = sturm.squarefree();

  std::vector<RootInterval> out;
  std::vector<RootInterval> stack{{a, b}};
  while (!stack.empty()) {
    RootInterval cur = stack.back();
    stack.pop_back();
    int n = sturm.count(cur.lo, cur.hi);
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(cur);
      continue;
    }
    Rational m = detail::split_point(sf, cur.lo, cur.hi);
    // Upper half first so the lower half is popped (and emitted) first.
    stack.push_back({m, cur.hi});
    stack.push_back({cur.lo, m});
  }

  // Pull shared endpoints apart: shrink the upper end of the left interval.
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i].hi == out[i + 1].lo) out[i] = detail::pull_in(sturm, out[i], true);
  return out;
}

/// Shrinks an isolating interval of p so that its upper (or lower) endpoint
/// moves strictly inward.
inline RootInterval shrink_endpoint(const RationalPolynomial& p, const RootInterval& iv,
                                    bool upper) {
  return detail::pull_in(SturmSequence(p), iv, upper);
}

/// Bisects an isolating interval of p until its width is below `width`.
inline RootInterval refine_root(const RationalPolynomial& p, RootInterval iv,
                                const Rational& width) {
  SturmSequence sturm(p);
  const IntPolynomial& sf = sturm.squarefree();
  while (iv.hi - iv.lo >= width) {
    Rational m = midpoint(iv.lo, iv.hi);
    if (sf.evaluate(m) == 0) {
      // Exact rational root: a symmetric interval around it.
      Rational d = (iv.hi - iv.lo) / 4;
      while (true) {
        RootInterval cand{m - d, m + d};
        if (sf.evaluate(cand.lo) != 0 && sf.evaluate(cand.hi) != 0 &&
            sturm.count(cand.lo, cand.hi) == 1) {
          iv = cand;
          break;
        }
        d /= 2;
      }
      continue;
    }
    if (sturm.count(iv.lo, m) == 1)
      iv.hi = m;
    else
      iv.lo = m;
  }
  return iv;
}

}  // namespace tlsig
