#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tlsig/rational.hpp"

namespace tlsig {

/// Dense univariate polynomial, coefficients in ascending degree. The leading
/// coefficient is nonzero; the zero polynomial has no coefficients.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  static Polynomial monomial(T value, std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = std::move(value);
    return Polynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const T& lead() const { return c_.back(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  /// Horner evaluation at a point of a ring containing T.
  template <typename U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

template <typename T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> c(p.coefficients().size() - 1);
  for (std::size_t i = 1; i < p.coefficients().size(); ++i)
    c[i - 1] = p.coefficients()[i] * static_cast<unsigned long>(i);
  return Polynomial<T>(std::move(c));
}

/// Number of factors t dividing p (0 for the zero polynomial).
template <typename T>
std::size_t trailing_zero_count(const Polynomial<T>& p) {
  std::size_t k = 0;
  const auto& c = p.coefficients();
  while (k < c.size() && c[k] == 0) ++k;
  return k == c.size() ? 0 : k;
}

/// p / t^k with k = trailing_zero_count(p).
template <typename T>
Polynomial<T> strip_t_power(const Polynomial<T>& p) {
  const auto& c = p.coefficients();
  std::size_t k = trailing_zero_count(p);
  return Polynomial<T>(std::vector<T>(c.begin() + static_cast<std::ptrdiff_t>(k), c.end()));
}

/// t^deg(p) * p(1/t), after stripping factors of t.
template <typename T>
Polynomial<T> poly_reverse(const Polynomial<T>& p) {
  auto c = strip_t_power(p).coefficients();
  std::reverse(c.begin(), c.end());
  return Polynomial<T>(std::move(c));
}

/// p(-x)
template <typename T>
Polynomial<T> reflect(const Polynomial<T>& p) {
  auto c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial<T>(std::move(c));
}

inline RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) c.emplace_back(x);
  return RationalPolynomial(std::move(c));
}

/// Integer gcd of the coefficients (0 for the zero polynomial).
inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& x : p.coefficients()) g = gcd(g, x);
  return g;
}

/// Scales by a positive rational so the result has coprime integer
/// coefficients; signs are preserved.
inline IntPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& x : p.coefficients()) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& x : p.coefficients()) {
    Integer v = x.get_num() * (den / x.get_den());
    c.push_back(std::move(v));
  }
  IntPolynomial q(std::move(c));
  Integer g = content(q);
  std::vector<Integer> r = q.coefficients();
  for (auto& x : r) x /= g;
  return IntPolynomial(std::move(r));
}

inline IntPolynomial primitive_part(const IntPolynomial& p) {
  return primitive_part(to_rational(p));
}

/// Multiplies by -1 if the leading coefficient is negative.
template <typename T>
Polynomial<T> with_positive_lead(Polynomial<T> p) {
  if (!p.is_zero() && p.lead() < 0) p = -p;
  return p;
}

/// Euclidean division over Q.
inline std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                 const RationalPolynomial& b) {
  if (b.is_zero()) throw ZeroPolynomialError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
  std::vector<Rational> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quot(rem.size() - db);
  const auto& bc = b.coefficients();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational f = rem[k + db] / b.lead();
    quot[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * bc[j];
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

inline RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b) {
  return divmod(a, b).second;
}

/// Exact quotient a / b in Z[t]; throws if b does not divide a.
inline IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw InvalidArgument("polynomial does not divide exactly");
  std::vector<Integer> c;
  for (const auto& x : q.coefficients()) {
    if (x.get_den() != 1) throw InvalidArgument("quotient is not integral");
    c.emplace_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

/// Monic gcd over Q.
inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    RationalPolynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = 1 / a.lead();
  return a * inv;
}

/// Primitive gcd with positive leading coefficient; gcd(p, 0) is the
/// primitive part of p.
inline IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
  return with_positive_lead(primitive_part(poly_gcd(to_rational(p), to_rational(q))));
}

/// p / gcd(p, p'), monic.
inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("squarefree part of the zero polynomial");
  RationalPolynomial g = poly_gcd(p, derivative(p));
  RationalPolynomial q = divmod(p, g).first;
  return q * Rational(1 / q.lead());
}

/// Largest m with (t - root)^m | p, by repeated synthetic division. Returns
/// the cofactor through `rest` when given.
template <typename T>
int root_multiplicity(const Polynomial<T>& p, const T& root, Polynomial<T>* rest = nullptr) {
  if (p.is_zero()) throw ZeroPolynomialError("root multiplicity in the zero polynomial");
  Polynomial<T> cur = p;
  int m = 0;
  while (cur.degree() >= 1 && cur.evaluate(root) == 0) {
    const auto& c = cur.coefficients();
    std::vector<T> q(c.size() - 1);
    T carry(0);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      carry = c[k + 1] + carry * root;
      q[k] = carry;
    }
    cur = Polynomial<T>(std::move(q));
    ++m;
  }
  if (rest) *rest = std::move(cur);
  return m;
}

/// Human-readable form such as "3t^2-4t+3".
template <typename T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const T& c = p.coefficients()[k];
    if (c == 0) continue;
    T mag = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace tlsig
