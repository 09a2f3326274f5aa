#include <doctest.h>

#include <cmath>

#include "locsid/density.hpp"
#include "locsid/errors.hpp"
#include "locsid/harness.hpp"
#include "oracles.hpp"

using namespace locsid;

namespace {

RationalKernel constant_kernel(const Rational& c) { return RationalKernel({1}, {1}, {c}); }

}  // namespace

TEST_CASE("expression evaluation on constant kernels")
{
  auto c4 = DensityExpr::graph(cycle_graph(4));
  for (const Rational& c : {Rational(-1, 2), Rational(1, 3), Rational(2)}) {
    auto v = evaluate(pow(c4, Rational(1, 4)), constant_kernel(c));
    CHECK(!v.exact);
    CHECK(v.d == doctest::Approx(std::fabs(c.get_d())).epsilon(1e-12));
    auto w = evaluate(c4 * c4 + Rational(3) * DensityExpr::constant(2), constant_kernel(c));
    CHECK(w.exact);
    CHECK(w.q == pow_int(c, 8) + 6);
  }
  CHECK_THROWS_AS(evaluate(pow(DensityExpr::graph(path_graph(2)), Rational(1, 2)), constant_kernel(-1)), InvalidArgument);
  CHECK(evaluate(pow(abs(DensityExpr::graph(path_graph(2))), Rational(1, 2)), constant_kernel(Rational(-1, 4))).d ==
        doctest::Approx(0.5));
}

TEST_CASE("engine and direct summation agree on rooted and plain atoms")
{
  SampleOptions s;
  s.blocks = 3;
  s.col_blocks = 2;
  s.measures = MeasureMode::random;
  s.resolution = 8;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    s.seed = seed;
    RationalKernel u = sample_kernel(s);
    Bigraph p = construct_family({Family::doubly_labeled_path, 5});
    auto e = DensityExpr::rooted(p, {0, 1}) * DensityExpr::graph(theta_graph({1, 3, 3})) +
             DensityExpr::rooted(construct_family({Family::rooted_cycle, 6}), {0});
    for (int x = 0; x < u.rows(); ++x) {
      for (int y = 0; y < u.rows(); ++y) {
        auto a = evaluate(e, u, {x, y});
        auto b = evaluate(e, u, {x, y}, EvalMethod::brute_force);
        CHECK(a.exact);
        CHECK(a.q == b.q);
      }
    }
  }
}

TEST_CASE("homogeneity: scaling U by c scales t(F,U) by c^m")
{
  SampleOptions s;
  s.blocks = 3;
  s.resolution = 8;
  s.seed = 4;
  RationalKernel u = sample_kernel(s);
  const Rational c(3, 5);
  RationalKernel cu = affine(u, c, Rational(0));
  for (const auto& f : {path_graph(4), cycle_graph(6), complete_bipartite(2, 3)}) {
    auto g = DensityExpr::graph(f);
    CHECK(evaluate(g, cu).q == pow_int(c, static_cast<unsigned>(f.edge_count())) * evaluate(g, u).q);
  }
}

TEST_CASE("t(K_{n,m}, U) = 1/2 for U = -1 on the upper corner and +1 elsewhere")
{
  RationalKernel u = corner_sign_kernel();
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      // Each node lands in the upper half with probability 1/2; the edge
      // product is (-1)^(a*b) for a, b upper nodes on each side.
      Rational oracle = 0;
      for (unsigned mask = 0; mask < (1u << (n + m)); ++mask) {
        int a = __builtin_popcount(mask & ((1u << n) - 1));
        int b = __builtin_popcount(mask >> n);
        oracle += (a * b) % 2 ? -1 : 1;
      }
      oracle /= Rational(1u << (n + m));
      CHECK(oracle == Rational(1, 2));
      CHECK(density(complete_bipartite(n, m), u) == oracle);
    }
  }
}

TEST_CASE("exact decision handles fractional exponents")
{
  RationalKernel u = rank_one_sign_kernel();
  auto c4 = DensityExpr::graph(cycle_graph(4));
  auto cut = DensityExpr::cut_norm();
  CHECK(decide_exactly(c4, Rational(4) * cut, u) == std::optional<bool>(true));
  CHECK(decide_exactly(c4, cut, u) == std::optional<bool>(false));
  CHECK(decide_exactly(pow(cut, Rational(4)), c4, u) == std::optional<bool>(true));
  CHECK(decide_exactly(pow(c4, Rational(1, 4)), pow(c4, Rational(1, 2)), u) == std::optional<bool>(true));
  CHECK(!decide_exactly(c4 + c4, cut, u).has_value());
}

TEST_CASE("registry covers the required entries")
{
  auto reg = builtin_registry();
  int paper = 0;
  for (const auto& e : reg) {
    if (e.status == EntryStatus::paper) ++paper;
    if (!e.custom) CHECK(!e.clauses.empty());
  }
  CHECK(paper >= 24);
  CHECK_THROWS_AS(find_entry(reg, "NOPE"), InvalidArgument);
  CHECK(find_entry(reg, "C4-UPPER-LITERAL").status == EntryStatus::erratum_suspect);
}

TEST_CASE("literal C4 upper bound fails on the rank-one sign kernel by exactly 3/4")
{
  auto reg = builtin_registry();
  HarnessOptions o;
  o.trials = 10;
  auto r = check_entry(find_entry(reg, "C4-UPPER-LITERAL"), o);
  CHECK(!r.passed);
  REQUIRE(r.worst_margin_exact.has_value());
  CHECK(*r.worst_margin_exact == Rational(-3, 4));
  CHECK(r.worst_trial == 0);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->values() == rank_one_sign_kernel().values());
  CHECK(r.revalidation == "brute-force");
}

TEST_CASE("every registry entry except the erratum passes a short run")
{
  auto reg = builtin_registry();
  HarnessOptions o;
  o.trials = 12;
  o.threads = 4;
  for (const auto& e : reg) {
    auto r = check_entry(e, o);
    INFO(e.id << " worst " << r.worst_clause << " margin " << r.worst_margin << " trial " << r.worst_trial);
    CHECK(r.passed == (e.status != EntryStatus::erratum_suspect));
  }
}

TEST_CASE("reports are deterministic across thread counts")
{
  auto reg = builtin_registry();
  HarnessOptions a;
  a.trials = 16;
  HarnessOptions b = a;
  b.threads = 3;
  const auto& e = find_entry(reg, "MAIN");
  CHECK(dump_json(report_to_json(check_entry(e, a))) == dump_json(report_to_json(check_entry(e, b))));
}

TEST_CASE("sum expression matches an independently coded evaluation")
{
  SampleOptions s;
  s.blocks = 4;
  s.symmetric = true;
  s.measures = MeasureMode::random;
  s.resolution = 16;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    s.seed = seed;
    RationalKernel u = sample_kernel(s);
    auto c4 = DensityExpr::graph(cycle_graph(4));
    auto e = (Rational(1, 2) * c4 + Rational(1, 2) * DensityExpr::graph(path_graph(3))) * pow(c4, Rational(1, 8));
    double c4v = oracle::density(cycle_graph(4), u).get_d();
    double p3v = oracle::density(path_graph(3), u).get_d();
    CHECK(evaluate(e, u).d == doctest::Approx(0.5 * (c4v + p3v) * std::pow(c4v, 0.125)).epsilon(1e-12));
    CHECK(evaluate(e, to_float(u)).d == doctest::Approx(evaluate(e, u).d).epsilon(1e-12));
  }
}

TEST_CASE("scaling the trial kernels by c in (0,1] keeps homogeneous entries passing")
{
  auto reg = builtin_registry();
  HarnessOptions o;
  for (const auto* id : {"MAIN", "CYCLE0", "4CYCLE", "HANGING", "PATHS-B"}) {
    const auto& e = find_entry(reg, id);
    for (int trial = 0; trial < 8; ++trial) {
      RationalKernel u = trial_kernel(e, o, trial);
      for (const Rational& c : {Rational(1, 3), Rational(3, 4)}) {
        RationalKernel cu = affine(u, c, Rational(0));
        for (const auto& cl : e.clauses) {
          double margin = evaluate(cl.rhs, cu).d - evaluate(cl.lhs, cu).d;
          INFO(id << " " << cl.label << " trial " << trial);
          CHECK(margin >= -1e-9);
        }
      }
    }
  }
}
