// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "quiverlab/kempf_ness.hpp"
#include "quiverlab/serialize.hpp"

using namespace quiverlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            Clock::time_point t0) {
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream line;
  line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << name << " — "
       << detail << " (" << secs << " s)";
  std::cout << line.str() << std::endl;
  if (!pass) ++g_failures;
}

const std::vector<std::string> kSupportedGroups = {
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "binary_dihedral:2",
    "binary_dihedral:3",
    "binary_dihedral:4",
    "binary_dihedral:5",
    "binary_tetrahedral",
    "binary_octahedral",
    "binary_icosahedral",
};

// --- criterion 1: UCY(n,d) = CY(n,d) for 1 <= n <= 8, 1 <= d <= 5 ---
void criterion_counts() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  long pairs = 0;
  for (int n = 1; n <= 8 && pass; ++n)
    for (int d = 1; d <= 5 && pass; ++d) {
      IdentityReport rep = verify_identity(n, d);
      ++pairs;
      if (!rep.equal) {
        pass = false;
        detail = "mismatch at n=" + std::to_string(n) + ", d=" + std::to_string(d) + ": UCY=" +
                 std::to_string(rep.ucy) + " CY=" + std::to_string(rep.cy);
      }
    }
  if (pass) detail = std::to_string(pairs) + " (n,d) pairs, exact equality";
  report(1, "UCY(n,d) = CY(n,d), n <= 8, d <= 5", pass, detail, t0);
}

// --- criterion 2: UCY(1,d) = d for d <= 12 ---
void criterion_ucy_one() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail = "UCY(1,d) = d for d = 1..12";
  for (int d = 1; d <= 12; ++d) {
    long got = static_cast<long>(enumerate_ucy(1, d).size());
    if (got != d) {
      pass = false;
      detail = "UCY(1," + std::to_string(d) + ") = " + std::to_string(got);
      break;
    }
  }
  report(2, "UCY(1,d) = d", pass, detail, t0);
}

// --- criterion 3: empty-core <=> uniform (size <= 24, d <= 4) and the bijection ---
void criterion_core_quotient() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  long checked = 0;
  for (int size = 0; size <= 24 && pass; ++size)
    for (const auto& delta : enumerate_partitions(size)) {
      for (int d = 1; d <= 4; ++d) {
        ++checked;
        if (core_and_quotient(delta, d).core.empty() != is_uniform(delta, d)) {
          pass = false;
          detail = "core/uniform mismatch at (" + delta.to_string() + "), d=" +
                   std::to_string(d);
          break;
        }
      }
      if (!pass) break;
    }
  long maps = 0;
  for (int n = 0; n <= 6 && pass; ++n)
    for (int d = 1; d <= 4 && pass; ++d) {
      auto ucy = enumerate_ucy(n, d);
      std::set<Multipartition> images;
      for (const auto& delta : ucy) {
        CoreQuotient cq = core_and_quotient(delta, d);
        if (!cq.core.empty() || cq.quotient.total_size() != n) {
          pass = false;
          detail = "quotient of (" + delta.to_string() + ") is not a size-n multipartition";
          break;
        }
        images.insert(cq.quotient);
        ++maps;
      }
      if (pass && (images.size() != ucy.size() || ucy.size() != enumerate_cy(n, d).size())) {
        pass = false;
        detail = "not bijective at n=" + std::to_string(n) + ", d=" + std::to_string(d);
      }
    }
  if (pass)
    detail = std::to_string(checked) + " core checks, " + std::to_string(maps) +
             " bijection images, all exact";
  report(3, "core/quotient bijection and empty-core <=> uniform", pass, detail, t0);
}

// --- criterion 4: McKay graph shapes and C v0 = 0 ---
void criterion_mckay() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;

  auto check_cyclic = [&](int d) {
    McKayGraph g = mckay_graph(load_group({GroupKind::cyclic, d}));
    if (g.d != d) return false;
    for (int k = 0; k < d && pass; ++k)
      for (int l = 0; l < d; ++l) {
        long expected;
        if (d == 1)
          expected = 2;
        else if (d == 2)
          expected = k != l ? 2 : 0;
        else {
          int diff = (k - l + d) % d;
          expected = (diff == 1 || diff == d - 1) ? 1 : 0;
        }
        if (g.adjacency[k][l] != expected) return false;
      }
    return true;
  };
  for (int d = 1; d <= 8 && pass; ++d)
    if (!check_cyclic(d)) {
      pass = false;
      detail = "cyclic(" + std::to_string(d) + ") is not the affine A cycle";
    }

  struct Exceptional {
    const char* name;
    int vertices;
    long order;
  };
  for (const Exceptional& e : {Exceptional{"binary_tetrahedral", 7, 24},
                               Exceptional{"binary_octahedral", 8, 48},
                               Exceptional{"binary_icosahedral", 9, 120}}) {
    if (!pass) break;
    McKayGraph g = mckay_graph(load_group(GroupSpec::parse(e.name)));
    long sumsq = 0;
    for (long v : g.v0) sumsq += v * v;
    if (g.d != e.vertices || sumsq != e.order) {
      pass = false;
      detail = std::string(e.name) + ": vertices=" + std::to_string(g.d) + " sum v0^2 = " +
               std::to_string(sumsq);
    }
  }

  long kernel_checks = 0;
  for (const auto& name : kSupportedGroups) {
    if (!pass) break;
    McKayGraph g = mckay_graph(load_group(GroupSpec::parse(name)));
    CartanMatrix c = cartan_matrix(g);
    for (int k = 0; k < g.d; ++k) {
      long acc = 0;
      for (int l = 0; l < g.d; ++l) acc += c.entries[k][l] * g.v0[l];
      ++kernel_checks;
      if (acc != 0) {
        pass = false;
        detail = "C v0 != 0 for " + name;
        break;
      }
    }
  }
  if (pass)
    detail = "cyclic d<=8 cycles, E6/E7/E8 vertex+order checks, C v0 = 0 (" +
             std::to_string(kernel_checks) + " rows) across " +
             std::to_string(kSupportedGroups.size()) + " groups";
  report(4, "McKay graphs", pass, detail, t0);
}

// --- criterion 5: C_-(n) enumeration <=> closed form, 1e4 exact samples per (d,n) ---
void criterion_cone_agreement() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> den_dist(1, 16);
  long samples = 0;
  for (int d = 2; d <= 5 && pass; ++d) {
    std::vector<long> v0(d, 1);
    for (int n = 1; n <= 4 && pass; ++n) {
      auto kn = k_n_set(n, v0);
      for (int trial = 0; trial < 10000; ++trial) {
        std::vector<Rational> z;
        for (int k = 0; k < d; ++k) {
          int q = den_dist(rng);
          std::uniform_int_distribution<long> num(-10L * q, 10L * q);
          z.push_back(make_rational(num(rng), q));
        }
        ++samples;
        bool a = in_c_minus_with(z, n, v0, kn);
        bool b = in_c_minus_closed_form(std::span<const Rational>(z), n, v0);
        if (a != b) {
          pass = false;
          std::string zs;
          for (const auto& q : z) zs += q.get_str() + " ";
          detail = "mismatch at d=" + std::to_string(d) + ", n=" + std::to_string(n) +
                   ", zeta = " + zs;
          break;
        }
      }
    }
  }
  if (pass) detail = std::to_string(samples) + " exact samples, zero mismatches";
  report(5, "C_-(n): K_n enumeration <=> closed form", pass, detail, t0);
}

// --- criterion 6: moment map / stability loop over UCY(n,d), n <= 4, d <= 3 ---
void criterion_stability_loop() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 12), den(1, 6);
  long diagrams = 0, scans = 0;
  for (int d = 1; d <= 3 && pass; ++d)
    for (int n = 1; n <= 4 && pass; ++n)
      for (const auto& delta : enumerate_ucy(n, d)) {
        ++diagrams;
        GradedRepresentation grep = rep_from_diagram(delta, d);
        for (const auto& m : complex_moment(grep.rep))
          if (!m.is_zero()) {
            pass = false;
            detail = "complex moment nonzero for (" + delta.to_string() + "), d=" +
                     std::to_string(d);
          }
        if (!pass) break;
        if (generated_subrep(grep.rep) != grep.rep.v) {
          pass = false;
          detail = "generated subrep not full for (" + delta.to_string() + ")";
          break;
        }
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<Rational> zr;
          for (int k = 0; k < d; ++k) zr.push_back(make_rational(num(rng), den(rng)));
          auto chi =
              polarization(std::span<const Rational>(zr), std::span<const int>(grep.rep.v));
          auto scan = graded_destabilizer_scan(grep, chi);
          ++scans;
          if (!scan.stable()) {
            pass = false;
            detail = "destabilizer found for (" + delta.to_string() + ") at positive zeta";
            break;
          }
        }
        if (!pass) break;
      }
  if (pass)
    detail = std::to_string(diagrams) + " diagrams, exact zero moments, full generation, " +
             std::to_string(scans) + " positive scans";
  report(6, "moment-map and stability certificates on UCY(n,d)", pass, detail, t0);
}

// --- criterion 7: solver loop over UCY(n,d), n <= 3, d <= 3 ---
void criterion_solver_loop() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  long solves = 0, tangents = 0;
  for (int d = 1; d <= 3 && pass; ++d)
    for (int n = 1; n <= 3 && pass; ++n) {
      int tangent_done = 0;
      auto diagrams = enumerate_ucy(n, d);
      for (const auto& delta : diagrams) {
        NumericRep rep = to_numeric(rep_from_diagram(delta, d).rep);
        std::vector<double> zr(d, 0.1);
        SolveOptions opts;
        opts.tol = 1e-8;
        opts.max_iters = 5000;
        SolveReport rpt = solve_real_moment(rep, zr, opts);
        ++solves;
        if (rpt.status != SolveStatus::converged || rpt.final_residual > 1e-8 ||
            rpt.iterations > 5000) {
          pass = false;
          detail = "no convergence for (" + delta.to_string() + "), d=" + std::to_string(d) +
                   ": " + to_string(rpt.status) + ", residual " +
                   std::to_string(rpt.final_residual);
          break;
        }
        if (j0i0_residual(rpt.solution) > 1e-8) {
          pass = false;
          detail = "|j0 i0| > 1e-8 for (" + delta.to_string() + ")";
          break;
        }
        if (tangent_done < 3) {
          Parameter zeta;
          zeta.zeta_r = zr;
          zeta.zeta_c.assign(d, {0, 0});
          int dim = tangent_dimension(rpt, zeta);
          ++tangents;
          ++tangent_done;
          if (dim != 4 * n) {
            pass = false;
            detail = "tangent dimension " + std::to_string(dim) + " != " +
                     std::to_string(4 * n) + " for (" + delta.to_string() + "), d=" +
                     std::to_string(d);
            break;
          }
        }
      }
    }
  if (pass)
    detail = std::to_string(solves) + " solves converged at 1e-8 with j0i0 clean, " +
             std::to_string(tangents) + " tangent dimensions = 4n";
  report(7, "Kempf-Ness solves over UCY(n,d), n <= 3, d <= 3", pass, detail, t0);
}

// --- criterion 8: gradient versus finite differences at 10 feasible points ---
void criterion_gradient_check() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);

  auto rand_matrix = [&](int r, int c) {
    MatC m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = std::complex<double>{u(rng), u(rng)};
    return m;
  };
  // small dense inverse (sizes <= 2)
  auto invert = [](const MatC& a) {
    const int nn = a.rows();
    if (nn == 1) {
      MatC inv(1, 1);
      inv(0, 0) = 1.0 / a(0, 0);
      return inv;
    }
    MatC inv(2, 2);
    std::complex<double> det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    inv(0, 0) = a(1, 1) / det;
    inv(1, 1) = a(0, 0) / det;
    inv(0, 1) = -a(0, 1) / det;
    inv(1, 0) = -a(1, 0) / det;
    return inv;
  };

  const std::vector<std::pair<const char*, int>> cases = {
      {"1", 1}, {"2", 1}, {"2", 2}, {"1,1", 2}, {"2,2", 2},
      {"2,1,1", 2}, {"2,2", 1}, {"1,1", 1}, {"3,1", 2}, {"2,1,1", 1}};
  int checked = 0;
  double worst = 0;
  for (const auto& [text, d] : cases) {
    YoungDiagram delta = YoungDiagram::parse(text);
    if (delta.size() % d != 0) continue;
    NumericRep rep = to_numeric(rep_from_diagram(delta, d).rep);
    std::vector<MatC> g, g_inv;
    for (int k = 0; k < d; ++k) {
      MatC gk = rand_matrix(rep.v[k], rep.v[k]) +
                MatC::identity(rep.v[k]) * std::complex<double>{2.0, 0};
      g.push_back(gk);
      g_inv.push_back(invert(gk));
    }
    rep = group_act(g, g_inv, rep);

    std::vector<double> zr(d, 0.25);
    auto h = moment_residual(rep, zr);
    std::vector<MatC> s;
    for (const auto& blk : h) s.push_back(-blk);
    double analytic = kn_directional_derivative(rep, zr, s);
    const double eps = 1e-4;
    double fd = (kn_line_value(rep, zr, s, eps) - kn_line_value(rep, zr, s, -eps)) / (2 * eps);
    double rel = std::abs(fd - analytic) / std::max(1.0, std::abs(analytic));
    worst = std::max(worst, rel);
    ++checked;
    if (rel > 1e-5) {
      pass = false;
      detail = "relative error " + std::to_string(rel) + " at (" + std::string(text) + "), d=" +
               std::to_string(d);
      break;
    }
  }
  if (pass && checked < 10) {
    pass = false;
    detail = "only " + std::to_string(checked) + " feasible points checked";
  }
  if (pass) {
    std::ostringstream os;
    os << checked << " points, worst relative error " << worst;
    detail = os.str();
  }
  report(8, "descent direction matches finite differences", pass, detail, t0);
}

// --- criterion 9: strictly positive zeta_R is generic for v = n v0, n <= 4 ---
void criterion_positive_generic() {
  auto t0 = Clock::now();
  bool pass = true;
  std::string detail;
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> den_dist(1, 16);
  long pairings = 0;
  for (const auto& name : kSupportedGroups) {
    if (!pass) break;
    McKayGraph g = mckay_graph(load_group(GroupSpec::parse(name)));
    CartanMatrix c = cartan_matrix(g);
    for (int n = 1; n <= 4 && pass; ++n) {
      std::vector<long> v;
      for (long x : g.v0) v.push_back(n * x);
      auto roots = bounded_positive_roots(c, v);
      for (int trial = 0; trial < 1000 && pass; ++trial) {
        // exact positive rationals p/q scaled to a common denominator
        std::vector<long long> num(g.d), den(g.d);
        long long lcm = 1;
        for (int k = 0; k < g.d; ++k) {
          den[k] = den_dist(rng);
          std::uniform_int_distribution<long long> p(1, 60 * den[k]);
          num[k] = p(rng);
          lcm = std::lcm(lcm, den[k]);
        }
        std::vector<long long> z(g.d);
        for (int k = 0; k < g.d; ++k) z[k] = num[k] * (lcm / den[k]);
        for (const auto& r : roots) {
          long long pairing = 0;
          for (int k = 0; k < g.d; ++k) pairing += z[k] * r.theta[k];
          ++pairings;
          if (pairing <= 0) {
            pass = false;
            detail = "non-generic positive sample for " + name + " at n=" + std::to_string(n);
            break;
          }
        }
      }
    }
  }
  if (pass)
    detail = std::to_string(pairings) + " exact root pairings strictly positive across " +
             std::to_string(kSupportedGroups.size()) + " groups";
  report(9, "positive zeta_R generic for v = n v0", pass, detail, t0);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion_counts();
  criterion_ucy_one();
  criterion_core_quotient();
  criterion_mckay();
  criterion_cone_agreement();
  criterion_stability_loop();
  criterion_solver_loop();
  criterion_gradient_check();
  criterion_positive_generic();
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cout << (g_failures == 0 ? "all criteria passed" : std::to_string(g_failures) +
                " criterion(s) failed")
            << " in " << secs << " s" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
