#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverlab/rational.hpp"

namespace quiverlab {

// Element of the cyclotomic field Q(w), w a fixed primitive m-th root of
// unity. Stored as a polynomial in w of degree < phi(m), the canonical form
// after reduction modulo the m-th cyclotomic polynomial. Canonical form makes
// equality (and in particular the zero test) exact: the representation of 0
// is the empty coefficient vector.
class CyclotomicNumber {
 public:
  CyclotomicNumber() : order_(1), coeffs_(1, Rational(0)) {}
  explicit CyclotomicNumber(int order);

  static CyclotomicNumber from_rational(int order, const Rational& value);
  // w^exponent (exponent taken mod order)
  static CyclotomicNumber root_power(int order, long exponent);

  int order() const { return order_; }

  bool is_zero() const;
  bool is_rational() const;
  // The value as a rational if it lies in Q, otherwise nullopt.
  std::optional<Rational> as_rational() const;
  bool is_real() const;  // fixed by complex conjugation

  // Sparse canonical coefficients, exponent -> nonzero rational.
  std::map<int, Rational> coeffs() const;

  CyclotomicNumber conj() const;  // w^e -> w^(m-e)

  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  // Adds c * w^exponent, then re-reduces. Used by parsers.
  void add_term(long exponent, const Rational& c);

 private:
  void reduce();
  static void check_same_order(const CyclotomicNumber& a, const CyclotomicNumber& b);

  int order_;
  std::vector<Rational> coeffs_;  // length phi(order_) once reduced
};

// Coefficients of the m-th cyclotomic polynomial, constant term first,
// monic of degree phi(m). Cached internally.
const std::vector<long long>& cyclotomic_polynomial(int m);

int euler_phi(int m);

}  // namespace quiverlab
