#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "quiverlab/group_atlas.hpp"
#include "quiverlab/rational.hpp"

namespace quiverlab {

// Generalized Cartan matrix C = 2I - A of a McKay graph. Symmetric with
// diagonal 2, except the Jordan quiver (one loop) where C = (0).
struct CartanMatrix {
  std::vector<std::vector<long>> entries;
  int size() const { return static_cast<int>(entries.size()); }
};

CartanMatrix cartan_matrix(const McKayGraph& graph);

long long root_norm(const CartanMatrix& c, std::span<const long> theta);

// A bounded positive root: nonzero theta with 0 <= theta <= v and
// theta^T C theta <= 2 (norm 0 or 2 on the affine graphs).
struct Root {
  std::vector<long> theta;
  long long norm = 0;
};

// All of R_+(v), ordered by total height then reverse-lexicographically.
// Enumerated by closure from the unit vectors under +e_j steps, which visits
// exactly the lattice points of the box with norm <= 2 (the tests compare
// against a full box scan).
std::vector<Root> bounded_positive_roots(const CartanMatrix& c, std::span<const long> v);

// Parameter zeta = (zeta_C, zeta_R), floating-point carrier.
struct Parameter {
  std::vector<std::complex<double>> zeta_c;
  std::vector<double> zeta_r;
};

// Exact-rational carrier for wall arithmetic without tolerances.
struct ExactParameter {
  std::vector<RationalComplex> zeta_c;
  std::vector<Rational> zeta_r;
};

struct GenericityResult {
  bool generic = true;
  std::optional<Root> witness;  // a root with zeta_C(theta) = 0 = zeta_R(theta)
};

// zeta is generic iff no theta in R_+(v) annihilates all three real
// components of zeta. Floating-point equality means |.| <= tol.
GenericityResult is_generic(const Parameter& zeta, const CartanMatrix& c,
                            std::span<const long> v, double tol = 1e-12);
GenericityResult is_generic(const ExactParameter& zeta, const CartanMatrix& c,
                            std::span<const long> v);

// Per-root sign of zeta_R(theta) in the canonical root order. Two parameters
// lie in the same chamber iff their signatures are equal and contain no 0.
struct ChamberSignature {
  std::vector<Root> roots;
  std::vector<int> signs;  // -1, 0, +1

  bool on_wall() const {
    for (int s : signs)
      if (s == 0) return true;
    return false;
  }
};

ChamberSignature chamber_signature(std::span<const double> zeta_r, const CartanMatrix& c,
                                   std::span<const long> v, double tol = 1e-12);
ChamberSignature chamber_signature(std::span<const Rational> zeta_r, const CartanMatrix& c,
                                   std::span<const long> v);

bool in_c_plus(std::span<const double> zeta_r);
bool in_c_plus(std::span<const Rational> zeta_r);

// K_n = { v : v_0 v0 <= v <= n v0 componentwise, v != v_0 v0, v != n v0 },
// where v_0 is the 0-th component of v itself.
std::vector<std::vector<long>> k_n_set(int n, std::span<const long> v0);

// Membership in C_-(n) by direct enumeration of K_n:
// zeta_R(v0) > 0 and zeta_R(v) > n zeta_R(v0) for every v in K_n.
bool in_c_minus(std::span<const double> zeta_r, int n, std::span<const long> v0);
bool in_c_minus(std::span<const Rational> zeta_r, int n, std::span<const long> v0);
// Same test against a precomputed K_n (bulk sampling).
bool in_c_minus_with(std::span<const Rational> zeta_r, int n, std::span<const long> v0,
                     const std::vector<std::vector<long>>& kn);

// The explicit inequality form:
// (1/n) min_{k>=1} zeta_R^k - sum_{k>=1} zeta_R^k v0_k > zeta_R^0 > -sum_{k>=1} zeta_R^k v0_k.
// Requires d >= 2; agreement with in_c_minus is a tested property, not an
// assumption.
bool in_c_minus_closed_form(std::span<const double> zeta_r, int n, std::span<const long> v0);
bool in_c_minus_closed_form(std::span<const Rational> zeta_r, int n, std::span<const long> v0);

}  // namespace quiverlab
