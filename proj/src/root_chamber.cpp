#include "quiverlab/root_chamber.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace quiverlab {

CartanMatrix cartan_matrix(const McKayGraph& graph) {
  CartanMatrix c;
  c.entries.assign(graph.d, std::vector<long>(graph.d, 0));
  for (int k = 0; k < graph.d; ++k)
    for (int l = 0; l < graph.d; ++l)
      c.entries[k][l] = (k == l ? 2 : 0) - graph.adjacency[k][l];
  return c;
}

long long root_norm(const CartanMatrix& c, std::span<const long> theta) {
  const int d = c.size();
  long long q = 0;
  for (int k = 0; k < d; ++k) {
    if (theta[k] == 0) continue;
    long long row = 0;
    for (int l = 0; l < d; ++l) row += static_cast<long long>(c.entries[k][l]) * theta[l];
    q += theta[k] * row;
  }
  return q;
}

std::vector<Root> bounded_positive_roots(const CartanMatrix& c, std::span<const long> v) {
  const int d = c.size();
  if (static_cast<int>(v.size()) != d)
    throw std::invalid_argument("dimension vector length does not match Cartan matrix");

  struct Node {
    std::vector<long> theta;
    std::vector<long long> c_theta;  // C * theta, kept incrementally
    long long norm;
  };

  std::set<std::vector<long>> seen;
  std::vector<Node> frontier;
  for (int k = 0; k < d; ++k) {
    if (v[k] < 1) continue;
    Node n;
    n.theta.assign(d, 0);
    n.theta[k] = 1;
    n.c_theta.assign(d, 0);
    for (int l = 0; l < d; ++l) n.c_theta[l] = c.entries[l][k];
    n.norm = c.entries[k][k];
    if (n.norm <= 2 && seen.insert(n.theta).second) frontier.push_back(std::move(n));
  }

  std::vector<Root> out;
  while (!frontier.empty()) {
    Node n = std::move(frontier.back());
    frontier.pop_back();
    out.push_back({n.theta, n.norm});
    for (int j = 0; j < d; ++j) {
      if (n.theta[j] + 1 > v[j]) continue;
      // q(theta + e_j) = q(theta) + 2 (C theta)_j + C_jj
      long long q = n.norm + 2 * n.c_theta[j] + c.entries[j][j];
      if (q > 2) continue;
      Node m = n;
      m.theta[j] += 1;
      if (!seen.insert(m.theta).second) continue;
      for (int l = 0; l < d; ++l) m.c_theta[l] += c.entries[l][j];
      m.norm = q;
      frontier.push_back(std::move(m));
    }
  }

  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    long sa = 0, sb = 0;
    for (long x : a.theta) sa += x;
    for (long x : b.theta) sb += x;
    if (sa != sb) return sa < sb;
    return a.theta > b.theta;  // reverse-lexicographic within a height level
  });
  return out;
}

namespace {

template <class S>
S pairing(std::span<const S> zeta, std::span<const long> theta) {
  S acc{};
  for (size_t k = 0; k < zeta.size(); ++k) acc += zeta[k] * static_cast<long>(theta[k]);
  return acc;
}

std::complex<double> pairing_c(std::span<const std::complex<double>> zeta,
                               std::span<const long> theta) {
  std::complex<double> acc{};
  for (size_t k = 0; k < zeta.size(); ++k) acc += zeta[k] * static_cast<double>(theta[k]);
  return acc;
}

RationalComplex pairing_c(std::span<const RationalComplex> zeta, std::span<const long> theta) {
  RationalComplex acc;
  for (size_t k = 0; k < zeta.size(); ++k) {
    RationalComplex t = zeta[k];
    t.re *= static_cast<long>(theta[k]);
    t.im *= static_cast<long>(theta[k]);
    acc += t;
  }
  return acc;
}

int sign_with_tol(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }
int sign_exact(const Rational& x) { return sgn(x); }

}  // namespace

GenericityResult is_generic(const Parameter& zeta, const CartanMatrix& c,
                            std::span<const long> v, double tol) {
  if (static_cast<int>(zeta.zeta_r.size()) != c.size())
    throw std::invalid_argument("zeta_R length does not match Cartan matrix");
  GenericityResult res;
  for (const Root& r : bounded_positive_roots(c, v)) {
    bool zc_zero = zeta.zeta_c.empty() ||
                   std::abs(pairing_c(std::span<const std::complex<double>>(zeta.zeta_c),
                                      r.theta)) <= tol;
    bool zr_zero =
        std::abs(pairing(std::span<const double>(zeta.zeta_r), r.theta)) <= tol;
    if (zc_zero && zr_zero) {
      res.generic = false;
      res.witness = r;
      return res;
    }
  }
  return res;
}

GenericityResult is_generic(const ExactParameter& zeta, const CartanMatrix& c,
                            std::span<const long> v) {
  if (static_cast<int>(zeta.zeta_r.size()) != c.size())
    throw std::invalid_argument("zeta_R length does not match Cartan matrix");
  GenericityResult res;
  for (const Root& r : bounded_positive_roots(c, v)) {
    bool zc_zero =
        zeta.zeta_c.empty() ||
        pairing_c(std::span<const RationalComplex>(zeta.zeta_c), r.theta).is_zero();
    bool zr_zero = pairing(std::span<const Rational>(zeta.zeta_r), r.theta) == 0;
    if (zc_zero && zr_zero) {
      res.generic = false;
      res.witness = r;
      return res;
    }
  }
  return res;
}

ChamberSignature chamber_signature(std::span<const double> zeta_r, const CartanMatrix& c,
                                   std::span<const long> v, double tol) {
  ChamberSignature sig;
  sig.roots = bounded_positive_roots(c, v);
  for (const Root& r : sig.roots)
    sig.signs.push_back(sign_with_tol(pairing(zeta_r, r.theta), tol));
  return sig;
}

ChamberSignature chamber_signature(std::span<const Rational> zeta_r, const CartanMatrix& c,
                                   std::span<const long> v) {
  ChamberSignature sig;
  sig.roots = bounded_positive_roots(c, v);
  for (const Root& r : sig.roots) sig.signs.push_back(sign_exact(pairing(zeta_r, r.theta)));
  return sig;
}

bool in_c_plus(std::span<const double> zeta_r) {
  for (double z : zeta_r)
    if (!(z > 0.0)) return false;
  return !zeta_r.empty();
}

bool in_c_plus(std::span<const Rational> zeta_r) {
  for (const Rational& z : zeta_r)
    if (!(z > 0)) return false;
  return !zeta_r.empty();
}

std::vector<std::vector<long>> k_n_set(int n, std::span<const long> v0) {
  if (n < 0) throw std::invalid_argument("K_n needs n >= 0");
  const int d = static_cast<int>(v0.size());
  double box = 1;
  for (long x : v0) box *= static_cast<double>(n) * x + 1;
  if (box > 5e7)
    throw std::runtime_error("K_n box too large to enumerate (" + std::to_string(box) + ")");

  std::vector<std::vector<long>> out;
  std::vector<long> cur(d, 0);
  // iterate the box [0, n v0] in odometer order
  while (true) {
    long t = cur[0];  // candidate v_0
    bool lower_ok = true, is_lower = true, is_upper = true;
    for (int k = 0; k < d; ++k) {
      if (cur[k] < t * v0[k]) lower_ok = false;
      if (cur[k] != t * v0[k]) is_lower = false;
      if (cur[k] != static_cast<long>(n) * v0[k]) is_upper = false;
    }
    if (lower_ok && !is_lower && !is_upper) out.push_back(cur);

    int j = 0;
    while (j < d && cur[j] == static_cast<long>(n) * v0[j]) {
      cur[j] = 0;
      ++j;
    }
    if (j == d) break;
    ++cur[j];
  }
  return out;
}

bool in_c_minus(std::span<const double> zeta_r, int n, std::span<const long> v0) {
  double level = pairing(zeta_r, v0);
  if (!(level > 0.0)) return false;
  for (const auto& v : k_n_set(n, v0))
    if (!(pairing(zeta_r, std::span<const long>(v)) > n * level)) return false;
  return true;
}

namespace {

// Exact evaluation; scales to a common denominator and works in integers
// when everything fits, falling back to rational arithmetic otherwise.
bool in_c_minus_scaled(std::span<const Rational> zeta_r, int n, std::span<const long> v0,
                       const std::vector<std::vector<long>>& kn) {
  const size_t d = zeta_r.size();
  mpz_class lcm_den(1);
  for (const Rational& q : zeta_r) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                           q.get_den().get_mpz_t());
  bool fits = lcm_den.fits_slong_p();
  std::vector<long long> z(d, 0);
  if (fits) {
    for (size_t k = 0; k < d && fits; ++k) {
      mpz_class scaled = zeta_r[k].get_num() * (lcm_den / zeta_r[k].get_den());
      if (!scaled.fits_slong_p()) fits = false;
      else z[k] = scaled.get_si();
    }
  }
  if (fits) {
    __int128 level = 0;
    for (size_t k = 0; k < d; ++k) level += static_cast<__int128>(z[k]) * v0[k];
    if (level <= 0) return false;
    for (const auto& v : kn) {
      __int128 val = 0;
      for (size_t k = 0; k < d; ++k) val += static_cast<__int128>(z[k]) * v[k];
      if (val <= static_cast<__int128>(n) * level) return false;
    }
    return true;
  }
  Rational level = pairing(zeta_r, v0);
  if (!(level > 0)) return false;
  for (const auto& v : kn)
    if (!(pairing(zeta_r, std::span<const long>(v)) > n * level)) return false;
  return true;
}

}  // namespace

bool in_c_minus(std::span<const Rational> zeta_r, int n, std::span<const long> v0) {
  return in_c_minus_scaled(zeta_r, n, v0, k_n_set(n, v0));
}

bool in_c_minus_with(std::span<const Rational> zeta_r, int n, std::span<const long> v0,
                     const std::vector<std::vector<long>>& kn) {
  return in_c_minus_scaled(zeta_r, n, v0, kn);
}

bool in_c_minus_closed_form(std::span<const double> zeta_r, int n, std::span<const long> v0) {
  const size_t d = zeta_r.size();
  if (d < 2)
    throw std::invalid_argument("closed-form C_-(n) test needs d >= 2");
  if (n < 1) throw std::invalid_argument("closed-form C_-(n) test needs n >= 1");
  double mn = zeta_r[1], tail = 0;
  for (size_t k = 1; k < d; ++k) {
    mn = std::min(mn, zeta_r[k]);
    tail += zeta_r[k] * static_cast<double>(v0[k]);
  }
  return mn / n - tail > zeta_r[0] && zeta_r[0] > -tail;
}

bool in_c_minus_closed_form(std::span<const Rational> zeta_r, int n, std::span<const long> v0) {
  const size_t d = zeta_r.size();
  if (d < 2)
    throw std::invalid_argument("closed-form C_-(n) test needs d >= 2");
  if (n < 1) throw std::invalid_argument("closed-form C_-(n) test needs n >= 1");
  Rational mn = zeta_r[1], tail = 0;
  for (size_t k = 1; k < d; ++k) {
    if (zeta_r[k] < mn) mn = zeta_r[k];
    tail += zeta_r[k] * v0[k];
  }
  return mn / n - tail > zeta_r[0] && zeta_r[0] > -tail;
}

}  // namespace quiverlab
