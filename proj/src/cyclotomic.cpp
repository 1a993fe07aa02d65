#include "quiverlab/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace quiverlab {

int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials, used to build Phi_m from x^m - 1.
std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  std::vector<long long> quot(dn - dd + 1, 0);
  for (int k = dn - dd; k >= 0; --k) {
    long long c = num[k + dd] / den[dd];
    quot[k] = c;
    for (int i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  return quot;
}

std::unordered_map<int, std::vector<long long>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<long long> compute_cyclotomic(int m);

const std::vector<long long>& cyclotomic_cached(int m) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto it = g_phi_cache.find(m);
  if (it != g_phi_cache.end()) return it->second;
  auto poly = compute_cyclotomic(m);
  return g_phi_cache.emplace(m, std::move(poly)).first->second;
}

std::vector<long long> compute_cyclotomic(int m) {
  // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    // compute divisor polynomial without re-entering the cache lock
    std::vector<long long> phid;
    auto it = g_phi_cache.find(d);
    if (it != g_phi_cache.end()) {
      phid = it->second;
    } else {
      phid = compute_cyclotomic(d);
      g_phi_cache.emplace(d, phid);
    }
    num = poly_divide_exact(std::move(num), phid);
  }
  return num;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  return cyclotomic_cached(m);
}

CyclotomicNumber::CyclotomicNumber(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  coeffs_.assign(euler_phi(order), Rational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(int order, const Rational& value) {
  CyclotomicNumber c(order);
  c.coeffs_[0] = value;
  return c;
}

CyclotomicNumber CyclotomicNumber::root_power(int order, long exponent) {
  CyclotomicNumber c(order);
  long e = exponent % order;
  if (e < 0) e += order;
  std::vector<Rational> raw(order, Rational(0));
  raw[static_cast<size_t>(e)] = 1;
  c.coeffs_ = std::move(raw);
  c.reduce();
  return c;
}

void CyclotomicNumber::add_term(long exponent, const Rational& c) {
  long e = exponent % order_;
  if (e < 0) e += order_;
  std::vector<Rational> raw(std::max<size_t>(coeffs_.size(), order_), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) raw[k] = coeffs_[k];
  raw[static_cast<size_t>(e)] += c;
  coeffs_ = std::move(raw);
  reduce();
}

void CyclotomicNumber::reduce() {
  const auto& phi = cyclotomic_polynomial(order_);
  const int deg = static_cast<int>(phi.size()) - 1;
  // fold exponents >= order back first (w^order = 1)
  if (coeffs_.size() > static_cast<size_t>(order_)) {
    for (size_t k = coeffs_.size(); k-- > static_cast<size_t>(order_);) {
      coeffs_[k - order_] += coeffs_[k];
      coeffs_[k] = 0;
    }
    coeffs_.resize(order_);
  }
  // synthetic division by the monic Phi_m
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= deg; --k) {
    if (coeffs_[k] == 0) continue;
    Rational c = coeffs_[k];
    coeffs_[k] = 0;
    for (int i = 0; i < deg; ++i) coeffs_[k - deg + i] -= c * static_cast<long>(phi[i]);
  }
  coeffs_.resize(deg, Rational(0));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return false;
  return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool CyclotomicNumber::is_real() const { return conj() == *this; }

std::map<int, Rational> CyclotomicNumber::coeffs() const {
  std::map<int, Rational> out;
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) out.emplace(static_cast<int>(k), coeffs_[k]);
  return out;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  CyclotomicNumber out(order_);
  std::vector<Rational> raw(order_, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    int e = (order_ - static_cast<int>(k)) % order_;
    raw[static_cast<size_t>(e)] += coeffs_[k];
  }
  out.coeffs_ = std::move(raw);
  out.reduce();
  return out;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  const double tau = 2.0 * std::numbers::pi / order_;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    acc += coeffs_[k].get_d() *
           std::complex<double>(std::cos(tau * static_cast<double>(k)),
                                std::sin(tau * static_cast<double>(k)));
  }
  return acc;
}

std::string CyclotomicNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << "+";
    os << coeffs_[k].get_str();
    if (k > 0) os << "@" << k;
    first = false;
  }
  return os.str();
}

void CyclotomicNumber::check_same_order(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ != b.order_)
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order_) +
                                " vs " + std::to_string(b.order_));
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber::check_same_order(a, b);
  CyclotomicNumber out = a;
  for (size_t k = 0; k < b.coeffs_.size(); ++k) out.coeffs_[k] += b.coeffs_[k];
  return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber::check_same_order(a, b);
  CyclotomicNumber out = a;
  for (size_t k = 0; k < b.coeffs_.size(); ++k) out.coeffs_[k] -= b.coeffs_[k];
  return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber::check_same_order(a, b);
  CyclotomicNumber out(a.order_);
  std::vector<Rational> raw(2 * a.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  out.coeffs_ = std::move(raw);
  out.reduce();
  return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

}  // namespace quiverlab
