#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quiverlab/quiver_core.hpp"
#include "quiverlab/root_chamber.hpp"
#include "test_support.hpp"

using namespace quiverlab;
using namespace quiverlab::testing;

namespace {

std::vector<Rational> positive_rational_zeta(int d) {
  std::uniform_int_distribution<int> num(1, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> z;
  for (int k = 0; k < d; ++k) z.push_back(make_rational(num(rng()), den(rng())));
  return z;
}

}  // namespace

TEST_CASE("framed quiver arrow counts") {
  // cyclic(2), w=(1,0): 3 vertices incl *, 4 base arrows, 2 framing arrows
  FramedQuiver f2 = build_framed_quiver(cyclic_mckay_graph(2), {1, 0});
  CHECK(f2.base.arrow_count() == 4);
  CHECK(f2.framing_arrows() == 2);

  FramedQuiver f1 = build_framed_quiver(cyclic_mckay_graph(1), {1});
  CHECK(f1.base.arrow_count() == 2);
  CHECK(f1.base.omega[0].from == 0);
  CHECK(f1.base.omega[0].to == 0);
  CHECK(f1.framing_arrows() == 2);

  FramedQuiver f3 = build_framed_quiver(cyclic_mckay_graph(3), {1, 0, 0});
  CHECK(f3.base.arrow_count() == 6);
  CHECK(f3.framing_arrows() == 2);

  CHECK_THROWS_AS(build_framed_quiver(cyclic_mckay_graph(3), {1, 0}), std::invalid_argument);
}

TEST_CASE("double quiver involution bookkeeping") {
  DoubleQuiver q = double_quiver(cyclic_mckay_graph(3));
  CHECK(q.cyclic);
  for (int h = 0; h < q.arrow_count(); ++h) {
    CHECK(q.reverse(q.reverse(h)) == h);
    CHECK(q.in_of(q.reverse(h)) == q.out_of(h));
    CHECK(q.out_of(q.reverse(h)) == q.in_of(h));
    CHECK(q.eps(h) == -q.eps(q.reverse(h)));
  }

  DoubleQuiver e6 = double_quiver(mckay_graph(load_group(GroupSpec::parse("binary_tetrahedral"))));
  CHECK_FALSE(e6.cyclic);
  CHECK(e6.edge_count() == 6);  // tree with 7 vertices
}

TEST_CASE("complex moment examples") {
  FramedQuiver fq = cyclic_framed(1);
  NumericRep rep = NumericRep::zero(fq, {1});
  for (const auto& m : complex_moment(rep)) CHECK(m.is_zero());

  // d=1, v=w=1, b=0, i=j=1: moment is the 1x1 matrix (1)
  rep.i_map[0](0, 0) = 1;
  rep.j_map[0](0, 0) = 1;
  auto mu = complex_moment(rep);
  REQUIRE(mu.size() == 1);
  CHECK(mu[0](0, 0) == std::complex<double>{1, 0});
}

TEST_CASE("real moment examples") {
  FramedQuiver fq = cyclic_framed(1);
  NumericRep rep = NumericRep::zero(fq, {1});
  for (const auto& m : real_moment(rep)) CHECK(m.is_zero());

  rep.i_map[0](0, 0) = 0.7;
  auto mu = real_moment(rep);
  CHECK(mu[0](0, 0).real() == doctest::Approx(0.0));
  CHECK(mu[0](0, 0).imag() == doctest::Approx(0.5 * 0.7 * 0.7));
}

TEST_CASE("real moment is exactly skew-hermitian in exact arithmetic") {
  GradedRepresentation grep = rep_from_diagram(YoungDiagram::parse("3,1"), 2);
  ExactRep rep = grep.rep;
  // make it less trivial: nonzero j entry
  rep.j_map[0] = MatQ(1, rep.v[0]);
  rep.j_map[0](0, 0) = RationalComplex(Rational(1, 3), Rational(2, 5));
  for (const auto& m : real_moment(rep)) {
    MatC dummy(0, 0);
    (void)dummy;
    CHECK((m + m.adjoint()).is_zero());
  }
}

TEST_CASE("moment maps are G-equivariant") {
  for (int d : {1, 2, 3}) {
    FramedQuiver fq = cyclic_framed(d);
    std::vector<int> v(d, 2);
    NumericRep rep = random_rep(fq, v);

    std::vector<MatC> g, g_inv, u, u_adj;
    for (int k = 0; k < d; ++k) {
      MatC gk = rand_matrix(2, 2) + MatC::identity(2) * std::complex<double>{2.5, 0};
      g.push_back(gk);
      g_inv.push_back(invert(gk));
      MatC uk = rand_unitary(2);
      u.push_back(uk);
      u_adj.push_back(uk.adjoint());
    }

    // complex moment: invertible g, mu(g.rep) = g mu g^-1 blockwise
    NumericRep moved = group_act(g, g_inv, rep);
    auto mu0 = complex_moment(rep);
    auto mu1 = complex_moment(moved);
    for (int k = 0; k < d; ++k)
      CHECK(max_abs_diff(mu1[k], g[k] * mu0[k] * g_inv[k]) < 1e-9);

    // real moment: unitary u only
    NumericRep rotated = group_act(u, u_adj, rep);
    auto mr0 = real_moment(rep);
    auto mr1 = real_moment(rotated);
    for (int k = 0; k < d; ++k)
      CHECK(max_abs_diff(mr1[k], u[k] * mr0[k] * u_adj[k]) < 1e-9);
  }
}

TEST_CASE("trace identity: sum tr mu_C = sum tr(i j)") {
  FramedQuiver fq = cyclic_framed(3);
  NumericRep rep = random_rep(fq, {2, 2, 2});
  auto mu = complex_moment(rep);
  std::complex<double> lhs{0, 0}, rhs{0, 0};
  for (int k = 0; k < 3; ++k) {
    lhs += mu[k].trace();
    rhs += (rep.i_map[k] * rep.j_map[k]).trace();
  }
  CHECK(std::abs(lhs - rhs) < 1e-9);

  // with j = 0 the total trace vanishes exactly, even in floating point
  for (auto& m : rep.j_map) m = MatC(m.rows(), m.cols());
  auto mu0 = complex_moment(rep);
  std::complex<double> total{0, 0};
  for (int k = 0; k < 3; ++k) total += mu0[k].trace();
  CHECK(std::abs(total) < 1e-12);
}

TEST_CASE("polarization and chi") {
  std::vector<double> zr{1, 1};
  std::vector<int> v{1, 1};
  auto chi = polarization(std::span<const double>(zr), std::span<const int>(v));
  CHECK(chi == std::vector<double>{-2, 1, 1});
  CHECK(chi_value(std::span<const double>(chi), std::vector<long>{0, 1, 0}) == 1);
  CHECK(chi_value(std::span<const double>(chi), std::vector<long>{1, 0, 0}) == -2);
  CHECK(chi_value(std::span<const double>(chi), std::vector<long>{1, 1, 1}) == 0);

  std::vector<double> zr2{-1, 2};
  std::vector<int> v2{2, 2};
  CHECK(polarization(std::span<const double>(zr2), std::span<const int>(v2)) ==
        std::vector<double>{-2, -1, 2});

  // chi((1, n v0)) = 0 for every n
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> vn{n, n};
    auto chin = polarization(std::span<const double>(zr2), std::span<const int>(vn));
    std::vector<long> dims{1, n, n};
    CHECK(chi_value(std::span<const double>(chin), std::span<const long>(dims)) ==
          doctest::Approx(0.0));
  }
}

TEST_CASE("rep_from_diagram structure") {
  GradedRepresentation g1 = rep_from_diagram(YoungDiagram::parse("2"), 2);
  CHECK(g1.rep.v == std::vector<int>{1, 1});
  CHECK(g1.extended_dims() == std::vector<long>{1, 1, 1});
  int nonzero_b = 0;
  for (const auto& m : g1.rep.b)
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) ++nonzero_b;
  CHECK(nonzero_b == 1);  // a single x-arrow entry
  for (const auto& m : complex_moment(g1.rep)) CHECK(m.is_zero());

  GradedRepresentation g2 = rep_from_diagram(YoungDiagram::parse("1"), 4);
  CHECK(g2.rep.v == std::vector<int>{1, 0, 0, 0});
  for (const auto& m : g2.rep.b) CHECK(m.is_zero());

  GradedRepresentation g3 = rep_from_diagram(YoungDiagram::parse("2,1,1"), 2);
  CHECK(g3.rep.v == std::vector<int>{2, 2});

  GradedRepresentation g0 = rep_from_diagram(YoungDiagram(), 3);
  CHECK(g0.rep.v == std::vector<int>{0, 0, 0});
  CHECK(g0.rep.i_map[0].is_zero());
}

TEST_CASE("complex moment vanishes exactly on diagram reps (exhaustive to 14 boxes)") {
  for (int d = 1; d <= 5; ++d)
    for (int n = 0; n <= 14; ++n)
      for (const auto& delta : enumerate_partitions(n)) {
        GradedRepresentation grep = rep_from_diagram(delta, d);
        for (const auto& m : complex_moment(grep.rep)) {
          CAPTURE(d);
          CAPTURE(delta.to_string());
          CHECK(m.is_zero());
        }
      }
}

TEST_CASE("generated subrep") {
  // monomial ideals are cyclic
  for (const char* text : {"2", "2,1", "3,1,1", "2,2"}) {
    for (int d : {1, 2, 3}) {
      GradedRepresentation grep = rep_from_diagram(YoungDiagram::parse(text), d);
      CHECK(generated_subrep(grep.rep) == grep.rep.v);
    }
  }

  // i = 0 generates nothing
  FramedQuiver fq = cyclic_framed(2);
  NumericRep rep = NumericRep::zero(fq, {2, 2});
  rep.b[0] = rand_matrix(2, 2);
  CHECK(generated_subrep(rep) == std::vector<int>{0, 0});

  // d=1, v=2, w=1: nilpotent Jordan block with i = e1 spans everything
  FramedQuiver f1 = cyclic_framed(1);
  NumericRep jb = NumericRep::zero(f1, {2});
  jb.b[0](1, 0) = 1;  // x: e1 -> e2
  jb.i_map[0](0, 0) = 1;
  CHECK(generated_subrep(jb) == std::vector<int>{2});

  // j != 0 is rejected
  jb.j_map[0](0, 0) = 1;
  CHECK_THROWS_AS(generated_subrep(jb), std::invalid_argument);
}

TEST_CASE("graded destabilizer scan") {
  // Delta=(2), d=2, zeta=(1,1): all proper invariant subspaces have chi > 0
  GradedRepresentation g1 = rep_from_diagram(YoungDiagram::parse("2"), 2);
  std::vector<Rational> zr{Rational(1), Rational(1)};
  auto chi = polarization(std::span<const Rational>(zr), std::span<const int>(g1.rep.v));
  auto scan = graded_destabilizer_scan(g1, chi);
  REQUIRE(scan.min_value.has_value());
  CHECK(*scan.min_value == 1);
  CHECK(scan.stable());

  // Delta=(1), d=1, chi=(-1,1): the box alone has chi = 1
  GradedRepresentation g2 = rep_from_diagram(YoungDiagram::parse("1"), 1);
  std::vector<Rational> chi2{Rational(-1), Rational(1)};
  auto scan2 = graded_destabilizer_scan(g2, chi2);
  REQUIRE(scan2.min_value.has_value());
  CHECK(*scan2.min_value == 1);
  CHECK(scan2.stable());

  // zero polarization: semistable but never stable
  std::vector<Rational> chi0{Rational(0), Rational(0)};
  auto scan3 = graded_destabilizer_scan(g2, chi0);
  REQUIRE(scan3.min_value.has_value());
  CHECK(*scan3.min_value == 0);
  CHECK_FALSE(scan3.stable());

  // guard on the subset sweep
  GradedRepresentation big = rep_from_diagram(YoungDiagram::parse("7,6,5,4,3"), 2);
  std::vector<Rational> zr2{Rational(1), Rational(1)};
  auto chi_big = polarization(std::span<const Rational>(zr2), std::span<const int>(big.rep.v));
  CHECK_THROWS_AS(graded_destabilizer_scan(big, chi_big), std::invalid_argument);
}

TEST_CASE("both stability certificates agree on uniform diagrams") {
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 3; ++n)
      for (const auto& delta : enumerate_ucy(n, d)) {
        GradedRepresentation grep = rep_from_diagram(delta, d);
        CHECK(generated_subrep(grep.rep) == grep.rep.v);
        for (int trial = 0; trial < 10; ++trial) {
          auto zr = positive_rational_zeta(d);
          auto chi =
              polarization(std::span<const Rational>(zr), std::span<const int>(grep.rep.v));
          auto scan = graded_destabilizer_scan(grep, chi);
          CAPTURE(delta.to_string());
          CHECK(scan.stable());
        }
      }
}

TEST_CASE("destabilizer finds a negative witness outside C_+") {
  // Delta=(2), d=2 with zeta_R = (2,-1): the top box spans an invariant
  // line of chi-value -1
  GradedRepresentation grep = rep_from_diagram(YoungDiagram::parse("2"), 2);
  std::vector<Rational> zr{Rational(2), Rational(-1)};
  auto chi = polarization(std::span<const Rational>(zr), std::span<const int>(grep.rep.v));
  auto scan = graded_destabilizer_scan(grep, chi);
  REQUIRE(scan.min_value.has_value());
  CHECK(*scan.min_value == -1);
  CHECK_FALSE(scan.stable());
  CHECK_FALSE(scan.witness_star);
  REQUIRE(scan.witness_boxes.size() == 1);
  CHECK(grep.boxes[scan.witness_boxes[0]] == std::pair<int, int>{1, 0});
}

TEST_CASE("j0 i0 residual") {
  GradedRepresentation grep = rep_from_diagram(YoungDiagram::parse("2,1"), 2);
  CHECK(j0i0_residual(grep.rep) == 0.0);

  ExactRep corrupted = grep.rep;
  corrupted.j_map[0] = MatQ(1, corrupted.v[0]);
  corrupted.j_map[0](0, 0) = RationalComplex(Rational(1));
  CHECK(j0i0_residual(corrupted) == 1.0);

  // wrong framing is rejected
  FramedQuiver fq = build_framed_quiver(cyclic_mckay_graph(2), {1, 1});
  NumericRep bad = NumericRep::zero(fq, {1, 1});
  CHECK_THROWS_AS(j0i0_residual(bad), std::invalid_argument);
}

TEST_CASE("cyclic module assembly satisfies [x,y] + i j = blockdiag mu_C") {
  for (int d : {1, 2, 3}) {
    FramedQuiver fq = cyclic_framed(d);
    std::vector<int> v(d, 2);
    NumericRep rep = random_rep(fq, v);
    auto mod = assemble_cyclic_module(rep);
    MatC lhs = mod.x * mod.y - mod.y * mod.x + mod.i * mod.j;
    auto mu = complex_moment(rep);
    for (int k = 0; k < d; ++k)
      for (int r = 0; r < rep.v[k]; ++r)
        for (int c = 0; c < rep.v[k]; ++c) {
          CHECK(std::abs(lhs(mod.offsets[k] + r, mod.offsets[k] + c) - mu[k](r, c)) < 1e-9);
        }
    // off-diagonal blocks vanish
    double off = 0;
    for (int r = 0; r < lhs.rows(); ++r)
      for (int c = 0; c < lhs.cols(); ++c) {
        int rk = int(std::upper_bound(mod.offsets.begin(), mod.offsets.end(), r) -
                     mod.offsets.begin()) - 1;
        int ck = int(std::upper_bound(mod.offsets.begin(), mod.offsets.end(), c) -
                     mod.offsets.begin()) - 1;
        if (rk != ck) off = std::max(off, std::abs(lhs(r, c)));
      }
    CHECK(off < 1e-9);
  }
}

TEST_CASE("to_numeric embeds exact data") {
  GradedRepresentation grep = rep_from_diagram(YoungDiagram::parse("2,2"), 2);
  NumericRep num = to_numeric(grep.rep);
  CHECK(num.v == grep.rep.v);
  for (const auto& m : complex_moment(num)) CHECK(m.frobenius_norm_sq() == 0.0);
}
