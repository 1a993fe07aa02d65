#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace quiverlab {

// Exact arbitrary-precision rational scalar. mpq_class keeps values canonical
// (reduced, positive denominator), so operator== is exact equality.
using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s));
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

// mpq_class(num, den) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

// Complex number with exact rational real and imaginary parts.
struct RationalComplex {
  Rational re;
  Rational im;

  RationalComplex() : re(0), im(0) {}
  RationalComplex(long r) : re(r), im(0) {}
  RationalComplex(const Rational& r) : re(r), im(0) {}
  RationalComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static RationalComplex i() { return RationalComplex(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  RationalComplex conj() const { return RationalComplex(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend RationalComplex operator-(const RationalComplex& a) { return {-a.re, -a.im}; }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    Rational n = b.norm2();
    if (n == 0) throw std::domain_error("division by zero RationalComplex");
    RationalComplex c = a * b.conj();
    return {c.re / n, c.im / n};
  }
  RationalComplex& operator+=(const RationalComplex& o) { re += o.re; im += o.im; return *this; }
  RationalComplex& operator-=(const RationalComplex& o) { re -= o.re; im -= o.im; return *this; }
  RationalComplex& operator*=(const RationalComplex& o) { *this = *this * o; return *this; }

  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }
};

}  // namespace quiverlab
