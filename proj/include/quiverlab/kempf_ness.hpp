#pragma once

#include <string>

#include "quiverlab/quiver_core.hpp"
#include "quiverlab/root_chamber.hpp"

namespace quiverlab {

struct SolveOptions {
  double tol = 1e-10;           // residual threshold
  int max_iters = 5000;
  double step = 0.1;            // initial line-search step
  double backtrack = 0.5;
  double sufficient_decrease = 1e-4;
  double divergence_bound = 50.0;  // cap on the log-scale of the group element
};

enum class SolveStatus { converged, diverged, max_iters };
std::string to_string(SolveStatus s);

struct SolveReport {
  SolveStatus status = SolveStatus::max_iters;
  double final_residual = 0;
  int iterations = 0;
  double group_log_norm = 0;
  double final_complex_residual = 0;
  NumericRep solution;
};

// Hermitian residual blocks h_k = -i mu_R(rep)_k - zeta_R^k Id. The solve
// target h = 0 reads mu_R = i zeta_R Id blockwise; this sign of the
// zeta_R <-> u(1) identification is the one under which the d = 1 closed
// form is |i|^2 = 2 zeta_R and the C_+ diagram representations are solvable.
std::vector<MatC> moment_residual(const NumericRep& rep, std::span<const double> zeta_r);
double residual_norm(const std::vector<MatC>& blocks);

// Frobenius norm of mu_C(rep) + zeta_C Id blocks.
double complex_residual_norm(const NumericRep& rep,
                             std::span<const std::complex<double>> zeta_c = {});

// rep -> exp(t s) . rep for a hermitian block tuple s.
NumericRep act_by_hermitian_exp(const NumericRep& rep, const std::vector<MatC>& s, double t);

// Kempf-Ness functional along the direction s:
//   F(t) = (1/4) |exp(t s) . rep|^2 - t sum_k zeta_R^k tr(s_k),
// with F'(0) = sum_k tr(s_k h_k). The solver walks s = -h downhill; the
// finite-difference agreement of F'(0) is an acceptance check.
double kn_line_value(const NumericRep& rep, std::span<const double> zeta_r,
                     const std::vector<MatC>& s, double t);
double kn_directional_derivative(const NumericRep& rep, std::span<const double> zeta_r,
                                 const std::vector<MatC>& s);

// Gradient flow over hermitian group directions with Armijo backtracking on
// the Kempf-Ness functional; accepted steps never increase the residual.
// Convergence certifies polystability of the input orbit. Divergence
// (group log-norm beyond divergence_bound with the residual floored above
// tol) is a heuristic instability signal, not a proof.
//
// Precondition: rep satisfies the complex moment-map constraint
// |mu_C + zeta_C| <= tol; the solver never touches the complex equation.
SolveReport solve_real_moment(const NumericRep& rep, std::span<const double> zeta_r,
                              const SolveOptions& opts = {},
                              std::span<const std::complex<double>> zeta_c = {});

// Real dimension of ker(d mu) minus the dimension of the G_v-orbit at the
// converged solution, ranks by singular-value thresholding at
// rel_threshold * sigma_max. Expected 4n at v = n v0, w = w0.
int tangent_dimension(const SolveReport& report, const Parameter& zeta,
                      double rel_threshold = 1e-6);

// Cartan matrix recovered from the double quiver carried by a representation.
CartanMatrix cartan_from_quiver(const DoubleQuiver& q);

}  // namespace quiverlab
