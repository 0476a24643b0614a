#pragma once

#include <ostream>
#include <string>

#include "tlsig/rational.hpp"

namespace tlsig {

/// Element of Q(i).
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}  // NOLINT(implicit)
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(const Integer& real) : re(real) {}  // NOLINT(implicit)
  GaussianRational(int real) : re(real) {}  // NOLINT(implicit)

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  /// |z|^2
  Rational norm() const {
    Rational n = re * re + im * im;
    return n;
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational n = o.norm();
    if (n == 0) throw InvalidArgument("division by zero Gaussian rational");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) {
    return {Rational(-a.re), Rational(-a.im)};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.re << (sgn(z.im) < 0 ? "-" : "+") << abs(z.im) << "i";
  }
};

// Field helpers shared by the generic matrix code. Rationals are their own
// conjugates.
inline Rational conj(const Rational& x) { return x; }
inline GaussianRational conj(const GaussianRational& z) { return {z.re, Rational(-z.im)}; }

inline const Rational& real_part(const Rational& x) { return x; }
inline const Rational& real_part(const GaussianRational& z) { return z.re; }

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

inline bool is_real(const Rational&) { return true; }
inline bool is_real(const GaussianRational& z) { return z.is_real(); }

inline std::string to_string(const GaussianRational& z) {
  return to_string(z.re) + "," + to_string(z.im);
}

/// Parses "re,im" with each part in "p/q" syntax.
inline GaussianRational parse_gaussian(std::string_view text) {
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return GaussianRational(parse_rational(text));
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

}  // namespace tlsig
