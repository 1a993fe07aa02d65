#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "quiverlab/group_atlas.hpp"
#include "quiverlab/matrix.hpp"
#include "quiverlab/partition_lab.hpp"

namespace quiverlab {

// Double quiver of a graph: one arrow per oriented edge. Arrows 0..E-1 are
// the chosen orientation Omega (eps = +1); arrow E+h is the reversal of h
// (eps = -1). B_h maps V_{out(h)} -> V_{in(h)}.
//
// Cyclic graphs carry the x/y orientation: omega[k] is the x-type arrow
// k -> k+1 (mod d), so the reversal of omega[k-1] is the y-type arrow out of
// vertex k. Other graphs get a fixed low-to-high orientation.
struct DoubleQuiver {
  struct Arrow {
    int from = 0, to = 0;
  };

  int vertices = 0;
  std::vector<Arrow> omega;
  bool cyclic = false;

  int edge_count() const { return static_cast<int>(omega.size()); }
  int arrow_count() const { return 2 * edge_count(); }
  int out_of(int h) const { return h < edge_count() ? omega[h].from : omega[h - edge_count()].to; }
  int in_of(int h) const { return h < edge_count() ? omega[h].to : omega[h - edge_count()].from; }
  int reverse(int h) const { return h < edge_count() ? h + edge_count() : h - edge_count(); }
  int eps(int h) const { return h < edge_count() ? 1 : -1; }
};

DoubleQuiver double_quiver(const McKayGraph& graph);
McKayGraph cyclic_mckay_graph(int d);  // affine A_{d-1} (Jordan quiver at d=1)

// Framed quiver Q(w): base double quiver plus w_k arrow pairs * <-> k.
struct FramedQuiver {
  DoubleQuiver base;
  std::vector<int> w;

  int framing_arrows() const {
    int s = 0;
    for (int x : w) s += x;
    return 2 * s;
  }
};

FramedQuiver build_framed_quiver(const McKayGraph& graph, std::vector<int> w);

// Matrix data (B_h, i_k, j_k) of a framed representation with dimension
// vector (1, v) implicit in the framing.
template <class S>
struct Representation {
  DoubleQuiver quiver;
  std::vector<int> v;
  std::vector<int> w;
  std::vector<Mat<S>> b;      // by arrow index, shape v_in x v_out
  std::vector<Mat<S>> i_map;  // v_k x w_k
  std::vector<Mat<S>> j_map;  // w_k x v_k

  static Representation zero(const FramedQuiver& fq, std::vector<int> dims) {
    Representation rep;
    rep.quiver = fq.base;
    rep.v = std::move(dims);
    rep.w = fq.w;
    if (static_cast<int>(rep.v.size()) != fq.base.vertices ||
        rep.w.size() != rep.v.size())
      throw std::invalid_argument("dimension vector length mismatch");
    for (int h = 0; h < fq.base.arrow_count(); ++h)
      rep.b.emplace_back(rep.v[fq.base.in_of(h)], rep.v[fq.base.out_of(h)]);
    for (int k = 0; k < fq.base.vertices; ++k) {
      rep.i_map.emplace_back(rep.v[k], rep.w[k]);
      rep.j_map.emplace_back(rep.w[k], rep.v[k]);
    }
    return rep;
  }

  bool j_is_zero() const {
    for (const auto& m : j_map)
      if (!m.is_zero()) return false;
    return true;
  }
};

using NumericRep = Representation<std::complex<double>>;
using ExactRep = Representation<RationalComplex>;

NumericRep to_numeric(const ExactRep& rep);

namespace detail {
template <class S>
S half_i();
template <>
inline std::complex<double> half_i<std::complex<double>>() { return {0.0, 0.5}; }
template <>
inline RationalComplex half_i<RationalComplex>() {
  return RationalComplex(Rational(0), Rational(1, 2));
}
}  // namespace detail

// mu_C(B,i,j)_k = sum_{in(h)=k} eps(h) B_h B_hbar + i_k j_k
template <class S>
std::vector<Mat<S>> complex_moment(const Representation<S>& rep) {
  std::vector<Mat<S>> out;
  const auto& q = rep.quiver;
  for (int k = 0; k < q.vertices; ++k) {
    Mat<S> acc(rep.v[k], rep.v[k]);
    for (int h = 0; h < q.arrow_count(); ++h) {
      if (q.in_of(h) != k) continue;
      Mat<S> term = rep.b[h] * rep.b[q.reverse(h)];
      acc = q.eps(h) > 0 ? acc + term : acc - term;
    }
    acc = acc + rep.i_map[k] * rep.j_map[k];
    out.push_back(std::move(acc));
  }
  return out;
}

// mu_R(B,i,j)_k = (i/2)(sum_{in(h)=k} B_h B_h^+ - B_hbar^+ B_hbar
//                       + i_k i_k^+ - j_k^+ j_k), skew-hermitian blocks.
template <class S>
std::vector<Mat<S>> real_moment(const Representation<S>& rep) {
  std::vector<Mat<S>> out;
  const auto& q = rep.quiver;
  const S half_i = detail::half_i<S>();
  for (int k = 0; k < q.vertices; ++k) {
    Mat<S> acc(rep.v[k], rep.v[k]);
    for (int h = 0; h < q.arrow_count(); ++h) {
      if (q.in_of(h) != k) continue;
      const Mat<S>& bbar = rep.b[q.reverse(h)];
      acc = acc + rep.b[h] * rep.b[h].adjoint() - bbar.adjoint() * bbar;
    }
    acc = acc + rep.i_map[k] * rep.i_map[k].adjoint() -
          rep.j_map[k].adjoint() * rep.j_map[k];
    out.push_back(acc * half_i);
  }
  return out;
}

// Block-diagonal action of g = (g_k): B_h -> g_in B_h g_out^-1, i -> g i,
// j -> j g^-1. Caller supplies the inverses.
template <class S>
Representation<S> group_act(const std::vector<Mat<S>>& g, const std::vector<Mat<S>>& g_inv,
                            const Representation<S>& rep) {
  Representation<S> out = rep;
  const auto& q = rep.quiver;
  for (int h = 0; h < q.arrow_count(); ++h)
    out.b[h] = g[q.in_of(h)] * rep.b[h] * g_inv[q.out_of(h)];
  for (int k = 0; k < q.vertices; ++k) {
    out.i_map[k] = g[k] * rep.i_map[k];
    out.j_map[k] = rep.j_map[k] * g_inv[k];
  }
  return out;
}

// Polarization chi_v(zeta_R) = (-zeta_R(v), zeta_R); chi((1,v)) = 0.
template <class S>
std::vector<S> polarization(std::span<const S> zeta_r, std::span<const int> v) {
  if (zeta_r.size() != v.size())
    throw std::invalid_argument("polarization length mismatch");
  S head{};
  for (size_t k = 0; k < v.size(); ++k) head += zeta_r[k] * static_cast<long>(v[k]);
  std::vector<S> chi;
  chi.push_back(-head);
  for (const S& z : zeta_r) chi.push_back(z);
  return chi;
}

template <class S>
S chi_value(std::span<const S> chi, std::span<const long> dims) {
  if (chi.size() != dims.size()) throw std::invalid_argument("chi length mismatch");
  S acc{};
  for (size_t k = 0; k < chi.size(); ++k) acc += chi[k] * static_cast<long>(dims[k]);
  return acc;
}

namespace detail {
inline bool negligible(const std::complex<double>& x, double scale) {
  return std::abs(x) <= 1e-9 * std::max(1.0, scale);
}
inline bool negligible(const RationalComplex& x, double) { return x.is_zero(); }

// Column span with incremental rank growth (Gauss elimination per vector).
template <class S>
class ColumnSpan {
 public:
  explicit ColumnSpan(int n) : n_(n) {}

  int rank() const { return static_cast<int>(basis_.size()); }

  // Reduces vec against the basis; adds the remainder if independent.
  // Returns the inserted basis vector, or nullopt if dependent.
  std::optional<std::vector<S>> add(std::vector<S> vec, double scale) {
    for (size_t r = 0; r < basis_.size(); ++r) {
      const S& lead = vec[pivot_[r]];
      if (detail::negligible(lead, scale)) continue;
      S factor = lead / basis_[r][pivot_[r]];
      for (int c = 0; c < n_; ++c) vec[c] -= factor * basis_[r][c];
    }
    int piv = -1;
    double best = 0;
    for (int c = 0; c < n_; ++c) {
      if (detail::negligible(vec[c], scale)) continue;
      double a = abs_value(vec[c]);
      if (a > best) {
        best = a;
        piv = c;
      }
    }
    if (piv < 0) return std::nullopt;
    pivot_.push_back(piv);
    basis_.push_back(vec);
    return vec;
  }

 private:
  int n_;
  std::vector<std::vector<S>> basis_;
  std::vector<int> pivot_;
};
}  // namespace detail

// Dimension vector of the smallest B-invariant family of subspaces
// containing im(i). Requires j = 0. The representation is cyclic (hence
// chi_v(zeta_R)-stable for zeta_R in C_+) iff the result equals v.
template <class S>
std::vector<int> generated_subrep(const Representation<S>& rep) {
  if (!rep.j_is_zero())
    throw std::invalid_argument("generated_subrep requires j = 0");
  const auto& q = rep.quiver;
  double scale = 0;
  for (const auto& m : rep.b) scale = std::max(scale, std::sqrt(m.frobenius_norm_sq()));

  std::vector<detail::ColumnSpan<S>> spans;
  for (int k = 0; k < q.vertices; ++k) spans.emplace_back(rep.v[k]);

  // queue of newly inserted vectors per vertex
  std::vector<std::pair<int, std::vector<S>>> fresh;
  for (int k = 0; k < q.vertices; ++k) {
    for (int c = 0; c < rep.w[k]; ++c) {
      std::vector<S> col(rep.v[k]);
      for (int r = 0; r < rep.v[k]; ++r) col[r] = rep.i_map[k](r, c);
      if (auto ins = spans[k].add(std::move(col), scale)) fresh.emplace_back(k, *ins);
    }
  }
  while (!fresh.empty()) {
    auto [k, vec] = std::move(fresh.back());
    fresh.pop_back();
    for (int h = 0; h < q.arrow_count(); ++h) {
      if (q.out_of(h) != k) continue;
      const int kk = q.in_of(h);
      std::vector<S> img(rep.v[kk], S{});
      for (int r = 0; r < rep.v[kk]; ++r)
        for (int c = 0; c < rep.v[k]; ++c) img[r] += rep.b[h](r, c) * vec[c];
      if (auto ins = spans[kk].add(std::move(img), scale)) fresh.emplace_back(kk, *ins);
    }
  }

  std::vector<int> dims;
  for (auto& s : spans) dims.push_back(s.rank());
  return dims;
}

// |j_0 i_0| for w = w^0 framing; must vanish on any representation
// satisfying the J(0) relations.
template <class S>
double j0i0_residual(const Representation<S>& rep) {
  if (rep.w.empty() || rep.w[0] != 1)
    throw std::invalid_argument("j0i0 residual needs framing w = w^0");
  for (size_t k = 1; k < rep.w.size(); ++k)
    if (rep.w[k] != 0)
      throw std::invalid_argument("j0i0 residual needs framing w = w^0");
  Mat<S> prod = rep.j_map[0] * rep.i_map[0];  // 1x1
  return abs_value(prod(0, 0));
}

// Torus-fixed representation built from a labelled Young diagram: basis
// vectors are boxes, box (p,q) sits at vertex (p-q) mod d, x-arrows shift
// (p,q) -> (p+1,q), y-arrows (p,q) -> (p,q+1), i_0 hits box (0,0).
struct GradedRepresentation {
  ExactRep rep;
  YoungDiagram diagram;
  int d = 1;
  std::vector<std::pair<int, int>> boxes;  // (p,q) in row-major order
  std::vector<int> box_vertex;
  std::vector<int> box_slot;  // position inside the vertex space

  std::vector<long> extended_dims() const {
    std::vector<long> dims{1};
    for (int x : rep.v) dims.push_back(x);
    return dims;
  }
};

GradedRepresentation rep_from_diagram(const YoungDiagram& delta, int d);

// Minimum of chi over the proper nonzero arrow-closed graded subspaces
// (torus-fixed subrepresentation candidates, with or without the framing
// line). Stable iff every such value is positive. Refuses diagrams with
// more than 24 boxes (the scan is a 2^boxes sweep).
struct DestabilizerScan {
  std::optional<Rational> min_value;  // empty when no proper nonzero subspace exists
  bool witness_star = false;
  std::vector<int> witness_boxes;

  bool stable() const { return !min_value || *min_value > 0; }
};

DestabilizerScan graded_destabilizer_scan(const GradedRepresentation& grep,
                                          std::span<const Rational> chi);

// Gamma-equivariant module data of a cyclic-quiver representation: the full
// multiplication matrices on V = (+)_k V_k. Satisfies
// [x,y] + i j = blockdiag(complex_moment).
template <class S>
struct CyclicModuleData {
  Mat<S> x, y, i, j;
  std::vector<int> offsets;  // vertex k occupies rows [offsets[k], offsets[k+1])
};

template <class S>
CyclicModuleData<S> assemble_cyclic_module(const Representation<S>& rep) {
  const auto& q = rep.quiver;
  if (!q.cyclic)
    throw std::invalid_argument("assemble_cyclic_module needs the cyclic orientation");
  const int d = q.vertices;
  CyclicModuleData<S> out;
  out.offsets.assign(d + 1, 0);
  for (int k = 0; k < d; ++k) out.offsets[k + 1] = out.offsets[k] + rep.v[k];
  int wtot = 0;
  std::vector<int> woff(d + 1, 0);
  for (int k = 0; k < d; ++k) woff[k + 1] = (wtot += rep.w[k]);
  const int n = out.offsets[d];

  out.x = Mat<S>(n, n);
  out.y = Mat<S>(n, n);
  out.i = Mat<S>(n, wtot);
  out.j = Mat<S>(wtot, n);
  for (int k = 0; k < d; ++k) {
    const int kk = (k + 1) % d;
    const Mat<S>& bx = rep.b[k];  // omega[k]: k -> k+1
    for (int r = 0; r < bx.rows(); ++r)
      for (int c = 0; c < bx.cols(); ++c) out.x(out.offsets[kk] + r, out.offsets[k] + c) = bx(r, c);
    const Mat<S>& by = rep.b[q.reverse(k)];  // k+1 -> k
    for (int r = 0; r < by.rows(); ++r)
      for (int c = 0; c < by.cols(); ++c) out.y(out.offsets[k] + r, out.offsets[kk] + c) = by(r, c);
    for (int r = 0; r < rep.v[k]; ++r)
      for (int c = 0; c < rep.w[k]; ++c) out.i(out.offsets[k] + r, woff[k] + c) = rep.i_map[k](r, c);
    for (int r = 0; r < rep.w[k]; ++r)
      for (int c = 0; c < rep.v[k]; ++c) out.j(woff[k] + r, out.offsets[k] + c) = rep.j_map[k](r, c);
  }
  return out;
}

}  // namespace quiverlab
