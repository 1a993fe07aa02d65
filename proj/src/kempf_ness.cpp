#include "quiverlab/kempf_ness.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace quiverlab {

namespace {

Eigen::MatrixXcd to_eigen(const MatC& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
  return e;
}

MatC from_eigen(const Eigen::MatrixXcd& e) {
  MatC m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
  for (int r = 0; r < e.rows(); ++r)
    for (int c = 0; c < e.cols(); ++c) m(r, c) = e(r, c);
  return m;
}

double rep_norm_sq(const NumericRep& rep) {
  double s = 0;
  for (const auto& m : rep.b) s += m.frobenius_norm_sq();
  for (const auto& m : rep.i_map) s += m.frobenius_norm_sq();
  for (const auto& m : rep.j_map) s += m.frobenius_norm_sq();
  return s;
}

struct BlockEig {
  Eigen::MatrixXcd u;
  Eigen::VectorXd lambda;
};

std::vector<BlockEig> decompose_hermitian(const std::vector<MatC>& s) {
  std::vector<BlockEig> out;
  for (const auto& block : s) {
    Eigen::MatrixXcd e = to_eigen(block);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (e + e.adjoint()));
    out.push_back({es.eigenvectors(), es.eigenvalues()});
  }
  return out;
}

NumericRep act_decomposed(const NumericRep& rep, const std::vector<BlockEig>& eig, double t) {
  std::vector<MatC> g, g_inv;
  for (const auto& blk : eig) {
    Eigen::VectorXd ex = (t * blk.lambda.array()).exp();
    Eigen::MatrixXcd gm = blk.u * ex.matrix().asDiagonal() * blk.u.adjoint();
    Eigen::MatrixXcd gi = blk.u * ex.cwiseInverse().matrix().asDiagonal() * blk.u.adjoint();
    g.push_back(from_eigen(gm));
    g_inv.push_back(from_eigen(gi));
  }
  return group_act(g, g_inv, rep);
}

}  // namespace

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::diverged: return "diverged";
    case SolveStatus::max_iters: return "max_iters";
  }
  return "?";
}

std::vector<MatC> moment_residual(const NumericRep& rep, std::span<const double> zeta_r) {
  if (zeta_r.size() != rep.v.size())
    throw std::invalid_argument("zeta_R length does not match vertex count");
  auto mu = real_moment(rep);
  const std::complex<double> minus_i{0.0, -1.0};
  std::vector<MatC> out;
  for (size_t k = 0; k < mu.size(); ++k) {
    MatC h = mu[k] * minus_i;
    for (int r = 0; r < h.rows(); ++r) h(r, r) -= zeta_r[k];
    out.push_back(std::move(h));
  }
  return out;
}

double residual_norm(const std::vector<MatC>& blocks) {
  double s = 0;
  for (const auto& b : blocks) s += b.frobenius_norm_sq();
  return std::sqrt(s);
}

double complex_residual_norm(const NumericRep& rep,
                             std::span<const std::complex<double>> zeta_c) {
  auto mu = complex_moment(rep);
  double s = 0;
  for (size_t k = 0; k < mu.size(); ++k) {
    MatC m = mu[k];
    if (!zeta_c.empty())
      for (int r = 0; r < m.rows(); ++r) m(r, r) += zeta_c[k];
    s += m.frobenius_norm_sq();
  }
  return std::sqrt(s);
}

NumericRep act_by_hermitian_exp(const NumericRep& rep, const std::vector<MatC>& s, double t) {
  return act_decomposed(rep, decompose_hermitian(s), t);
}

double kn_line_value(const NumericRep& rep, std::span<const double> zeta_r,
                     const std::vector<MatC>& s, double t) {
  NumericRep moved = act_by_hermitian_exp(rep, s, t);
  double value = 0.25 * rep_norm_sq(moved);
  for (size_t k = 0; k < s.size(); ++k) value -= t * zeta_r[k] * s[k].trace().real();
  return value;
}

double kn_directional_derivative(const NumericRep& rep, std::span<const double> zeta_r,
                                 const std::vector<MatC>& s) {
  auto h = moment_residual(rep, zeta_r);
  double acc = 0;
  for (size_t k = 0; k < s.size(); ++k) acc += (s[k] * h[k]).trace().real();
  return acc;
}

SolveReport solve_real_moment(const NumericRep& rep, std::span<const double> zeta_r,
                              const SolveOptions& opts,
                              std::span<const std::complex<double>> zeta_c) {
  SolveReport report;
  report.solution = rep;

  double c_res = complex_residual_norm(rep, zeta_c);
  if (c_res > opts.tol)
    throw std::invalid_argument(
        "input does not satisfy the complex moment-map constraint (residual " +
        std::to_string(c_res) + ")");

  NumericRep cur = rep;
  double step = opts.step;
  double g_log = 0;
  int iter = 0;

  auto h = moment_residual(cur, zeta_r);
  double res = residual_norm(h);

  for (; iter < opts.max_iters; ++iter) {
    if (res <= opts.tol) break;
    if (g_log > opts.divergence_bound) break;

    // direction s = -h, walked through exp(t s)
    std::vector<MatC> s;
    s.reserve(h.size());
    for (const auto& blk : h) s.push_back(-blk);
    auto eig = decompose_hermitian(s);

    const double f0 = 0.25 * rep_norm_sq(cur);
    const double slope = -res * res;  // F'(0) = -|h|^2
    double zeta_trace = 0;
    for (size_t k = 0; k < s.size(); ++k) zeta_trace += zeta_r[k] * s[k].trace().real();

    double t = step;
    bool accepted = false;
    NumericRep cand;
    std::vector<MatC> cand_h;
    double cand_res = 0;
    while (t > 1e-14) {
      cand = act_decomposed(cur, eig, t);
      double f = 0.25 * rep_norm_sq(cand) - t * zeta_trace;
      cand_h = moment_residual(cand, zeta_r);
      cand_res = residual_norm(cand_h);
      if (f <= f0 + opts.sufficient_decrease * t * slope &&
          cand_res * cand_res <= res * res * (1.0 + 1e-12)) {
        accepted = true;
        break;
      }
      t *= opts.backtrack;
    }
    if (!accepted) break;  // stalled: no admissible step left

    double smax = 0;
    for (const auto& blk : eig)
      if (blk.lambda.size() > 0) smax = std::max(smax, blk.lambda.cwiseAbs().maxCoeff());
    g_log += t * smax;

    cur = std::move(cand);
    h = std::move(cand_h);
    res = cand_res;
    step = std::min(t * 1.5, opts.step * 1e3);
  }

  report.iterations = iter;
  report.final_residual = res;
  report.group_log_norm = g_log;
  report.final_complex_residual = complex_residual_norm(cur, zeta_c);
  report.solution = std::move(cur);
  if (res <= opts.tol)
    report.status = SolveStatus::converged;
  else if (g_log > opts.divergence_bound)
    report.status = SolveStatus::diverged;
  else
    report.status = SolveStatus::max_iters;
  return report;
}

CartanMatrix cartan_from_quiver(const DoubleQuiver& q) {
  McKayGraph g;
  g.d = q.vertices;
  g.adjacency.assign(q.vertices, std::vector<long>(q.vertices, 0));
  for (const auto& a : q.omega) {
    if (a.from == a.to) {
      g.adjacency[a.from][a.to] += 2;
    } else {
      g.adjacency[a.from][a.to] += 1;
      g.adjacency[a.to][a.from] += 1;
    }
  }
  CartanMatrix c;
  c.entries.assign(q.vertices, std::vector<long>(q.vertices, 0));
  for (int k = 0; k < q.vertices; ++k)
    for (int l = 0; l < q.vertices; ++l)
      c.entries[k][l] = (k == l ? 2 : 0) - g.adjacency[k][l];
  return c;
}

namespace {

// Layout of the real coordinates of M(v,w): all B entries then i then j,
// real and imaginary parts interleaved.
struct CoordLayout {
  std::vector<std::pair<int, int>> b_shapes, i_shapes, j_shapes;
  int complex_dim = 0;

  explicit CoordLayout(const NumericRep& rep) {
    for (const auto& m : rep.b) {
      b_shapes.emplace_back(m.rows(), m.cols());
      complex_dim += m.rows() * m.cols();
    }
    for (const auto& m : rep.i_map) {
      i_shapes.emplace_back(m.rows(), m.cols());
      complex_dim += m.rows() * m.cols();
    }
    for (const auto& m : rep.j_map) {
      j_shapes.emplace_back(m.rows(), m.cols());
      complex_dim += m.rows() * m.cols();
    }
  }

  int real_dim() const { return 2 * complex_dim; }
};

NumericRep delta_from_coord(const NumericRep& rep, const CoordLayout& layout, int coord) {
  NumericRep delta = rep;
  for (auto& m : delta.b) m = MatC(m.rows(), m.cols());
  for (auto& m : delta.i_map) m = MatC(m.rows(), m.cols());
  for (auto& m : delta.j_map) m = MatC(m.rows(), m.cols());
  const std::complex<double> value = coord % 2 == 0 ? std::complex<double>{1, 0}
                                                    : std::complex<double>{0, 1};
  int idx = coord / 2;
  auto place = [&](std::vector<MatC>& mats) {
    for (auto& m : mats) {
      int n = m.rows() * m.cols();
      if (idx < n) {
        m(idx / m.cols(), idx % m.cols()) = value;
        idx = -1;
        return true;
      }
      idx -= n;
    }
    return false;
  };
  if (!place(delta.b) && !place(delta.i_map) && !place(delta.j_map))
    throw std::logic_error("coordinate index out of range");
  return delta;
}

// Differential of mu = (mu_C, mu_R) at rep applied to a tangent vector.
std::pair<std::vector<MatC>, std::vector<MatC>> moment_differential(const NumericRep& rep,
                                                                    const NumericRep& delta) {
  const auto& q = rep.quiver;
  std::vector<MatC> dmu_c, dmu_r;
  const std::complex<double> half_i{0, 0.5};
  for (int k = 0; k < q.vertices; ++k) {
    MatC dc(rep.v[k], rep.v[k]);
    MatC dr(rep.v[k], rep.v[k]);
    for (int h = 0; h < q.arrow_count(); ++h) {
      if (q.in_of(h) != k) continue;
      const int hb = q.reverse(h);
      MatC term = delta.b[h] * rep.b[hb] + rep.b[h] * delta.b[hb];
      dc = q.eps(h) > 0 ? dc + term : dc - term;
      dr = dr + delta.b[h] * rep.b[h].adjoint() + rep.b[h] * delta.b[h].adjoint() -
           delta.b[hb].adjoint() * rep.b[hb] - rep.b[hb].adjoint() * delta.b[hb];
    }
    dc = dc + delta.i_map[k] * rep.j_map[k] + rep.i_map[k] * delta.j_map[k];
    dr = dr + delta.i_map[k] * rep.i_map[k].adjoint() + rep.i_map[k] * delta.i_map[k].adjoint() -
         delta.j_map[k].adjoint() * rep.j_map[k] - rep.j_map[k].adjoint() * delta.j_map[k];
    dmu_c.push_back(std::move(dc));
    dmu_r.push_back(dr * half_i);
  }
  return {std::move(dmu_c), std::move(dmu_r)};
}

void stack_blocks(const std::vector<MatC>& blocks, Eigen::MatrixXd& target, int col, int row0) {
  int r = row0;
  for (const auto& b : blocks)
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) {
        target(r++, col) = b(i, j).real();
        target(r++, col) = b(i, j).imag();
      }
}

int svd_rank(const Eigen::MatrixXd& m, double rel_threshold) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 0;
  double cut = rel_threshold * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return rank;
}

}  // namespace

int tangent_dimension(const SolveReport& report, const Parameter& zeta, double rel_threshold) {
  if (report.status != SolveStatus::converged)
    throw std::invalid_argument("tangent_dimension needs a converged solve report");
  const NumericRep& rep = report.solution;
  CartanMatrix c = cartan_from_quiver(rep.quiver);
  std::vector<long> v(rep.v.begin(), rep.v.end());
  Parameter z = zeta;
  if (z.zeta_c.empty()) z.zeta_c.assign(rep.v.size(), {0, 0});
  if (!is_generic(z, c, v).generic)
    throw std::invalid_argument("tangent_dimension needs a generic parameter");

  CoordLayout layout(rep);
  int mu_rows = 0;
  for (int vk : rep.v) mu_rows += 4 * vk * vk;  // mu_C and mu_R blocks, re+im

  Eigen::MatrixXd jac(mu_rows, layout.real_dim());
  for (int col = 0; col < layout.real_dim(); ++col) {
    NumericRep delta = delta_from_coord(rep, layout, col);
    auto [dc, dr] = moment_differential(rep, delta);
    int half = 0;
    for (int vk : rep.v) half += 2 * vk * vk;
    stack_blocks(dc, jac, col, 0);
    stack_blocks(dr, jac, col, half);
  }

  // orbit map u(v) -> M: real basis of each u(v_k)
  int lie_dim = 0;
  for (int vk : rep.v) lie_dim += vk * vk;
  Eigen::MatrixXd orbit(layout.real_dim(), lie_dim);
  int col = 0;
  auto fill_orbit_column = [&](int k, const MatC& s) {
    std::vector<MatC> blocks;
    for (int l = 0; l < static_cast<int>(rep.v.size()); ++l)
      blocks.emplace_back(rep.v[l], rep.v[l]);
    blocks[k] = s;
    // infinitesimal action: dB = s_in B - B s_out, di = s i, dj = -j s
    NumericRep delta = rep;
    const auto& q = rep.quiver;
    for (int h = 0; h < q.arrow_count(); ++h)
      delta.b[h] = blocks[q.in_of(h)] * rep.b[h] - rep.b[h] * blocks[q.out_of(h)];
    for (int l = 0; l < q.vertices; ++l) {
      delta.i_map[l] = blocks[l] * rep.i_map[l];
      delta.j_map[l] = -(rep.j_map[l] * blocks[l]);
    }
    int r = 0;
    auto emit = [&](const std::vector<MatC>& mats) {
      for (const auto& m : mats)
        for (int i = 0; i < m.rows(); ++i)
          for (int j = 0; j < m.cols(); ++j) {
            orbit(r++, col) = m(i, j).real();
            orbit(r++, col) = m(i, j).imag();
          }
    };
    emit(delta.b);
    emit(delta.i_map);
    emit(delta.j_map);
    ++col;
  };
  for (int k = 0; k < static_cast<int>(rep.v.size()); ++k) {
    const int n = rep.v[k];
    for (int p = 0; p < n; ++p) {
      MatC s(n, n);
      s(p, p) = {0, 1};
      fill_orbit_column(k, s);
    }
    for (int p = 0; p < n; ++p)
      for (int qq = p + 1; qq < n; ++qq) {
        MatC s1(n, n);
        s1(p, qq) = {1, 0};
        s1(qq, p) = {-1, 0};
        fill_orbit_column(k, s1);
        MatC s2(n, n);
        s2(p, qq) = {0, 1};
        s2(qq, p) = {0, 1};
        fill_orbit_column(k, s2);
      }
  }

  int rank_mu = svd_rank(jac, rel_threshold);
  int rank_orbit = svd_rank(orbit, rel_threshold);
  return (layout.real_dim() - rank_mu) - rank_orbit;
}

}  // namespace quiverlab
