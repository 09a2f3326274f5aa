#include <doctest.h>

#include "locsid/density.hpp"
#include "locsid/errors.hpp"
#include "locsid/verifier.hpp"
#include "oracles.hpp"

using namespace locsid;

namespace {

RationalKernel diagonal_kernel() { return RationalKernel({Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}, {1, 0, 0, -1}); }

/// 1 + delta U0 with delta chosen so that the cut norm of delta U0 is `cut`.
RationalKernel perturbation(const RationalKernel& u0, const Rational& cut)
{
  Rational delta = cut / cut_norm(u0).value;
  return affine(u0, delta, Rational(1));
}

const HypothesisCheck& hypothesis(const Certificate& c, const std::string& name)
{
  for (const auto& h : c.hypotheses) {
    if (h.name == name) return h;
  }
  FAIL("missing hypothesis " << name);
  return c.hypotheses.front();
}

}  // namespace

TEST_CASE("rigorous roots")
{
  for (const Rational& x : {Rational(1, 3), Rational(16), pow2_neg(300), Rational(7, 1000000)}) {
    for (unsigned k : {2u, 4u, 8u}) {
      Rational r = root_upper(x, k);
      CHECK(pow_int(r, k) >= x);
      CHECK(r.get_d() <= std::pow(x.get_d(), 1.0 / k) * (1 + 1e-6) + 1e-300);
    }
  }
  CHECK(root_upper(Rational(0), 4) == 0);
}

TEST_CASE("constant W certifies with every term zero")
{
  RationalKernel one = RationalKernel::constant(Rational(1));
  for (const auto& f : {cycle_graph(4), path_graph(5), complete_bipartite(2, 3)}) {
    auto c = verify_close(f, one);
    CHECK(c.verdict == Verdict::certified);
    CHECK(c.density == 1);
    for (const auto& ce : c.cases) CHECK(ce.exact == 0);
  }
}

TEST_CASE("C_4 expansion on a small perturbation")
{
  const int m = 4;
  RationalKernel w = perturbation(diagonal_kernel(), pow2_neg(8 * m));
  auto c = verify_close(cycle_graph(4), w);
  CHECK(c.verdict == Verdict::certified);
  RationalKernel u = affine(w, Rational(1), Rational(-1));
  // P_3 appears twice in each orientation.
  Rational expect = 1 + 2 * oracle::density(path_graph(3), u) + 2 * oracle::density(transpose(path_graph(3)), u) +
           4 * oracle::density(path_graph(4), u) + oracle::density(cycle_graph(4), u);
  CHECK(c.density == expect);
  CHECK(c.density >= 1);
  CHECK(c.chain_holds);
}

TEST_CASE("ledger adds up and case bounds hold on many kernels")
{
  SampleOptions s;
  s.mean_zero = true;
  s.measures = MeasureMode::random;
  s.resolution = 16;
  const std::vector<Bigraph> fs{path_graph(5), cycle_graph(6), complete_bipartite(2, 3), theta_graph({1, 3, 3}),
                                subdivide(complete_bipartite(2, 3))};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    s.seed = seed;
    s.blocks = 1 + static_cast<int>(seed % 4);
    s.symmetric = seed % 2 == 0;
    RationalKernel w = affine(sample_kernel(s), Rational(1, 2), Rational(1));
    for (const auto& f : fs) {
      auto c = verify_close(f, w);
      INFO("seed " << seed << " graph " << c.graph);
      if (f.node_count() <= 7) CHECK(c.expansion_total == oracle::density(f, w));
      CHECK(c.expansion_total == c.density);
      for (const auto& ce : c.cases) {
        if (ce.name == "a:stars" || ce.name.rfind("c:", 0) == 0) CHECK(ce.holds);
      }
    }
  }
}

TEST_CASE("threshold logic for the cut-norm hypothesis")
{
  for (const auto& f : {cycle_graph(4), cycle_graph(6), path_graph(5)}) {
    const int m = f.edge_count();
    for (const auto& u0 : {rank_one_sign_kernel(), diagonal_kernel()}) {
      auto at = verify_close(f, perturbation(u0, pow2_neg(8 * m)));
      auto above = verify_close(f, perturbation(u0, pow2_neg(8 * m) * Rational(3, 2)));
      CHECK(at.verdict == Verdict::certified);
      CHECK(above.verdict == Verdict::hypotheses_failed);
      CHECK(hypothesis(at, "cut norm of W-1").holds);
      CHECK(!hypothesis(above, "cut norm of W-1").holds);
      CHECK(above.density >= 1);
      CHECK(above.chain_holds == at.chain_holds);
      for (std::size_t i = 0; i < at.cases.size(); ++i) CHECK(above.cases[i].holds == at.cases[i].holds);
    }
  }
}

TEST_CASE("variants")
{
  const Bigraph f = cycle_graph(6);
  const int m = 6;
  // sup norm 1/(8m)
  RationalKernel w = affine(diagonal_kernel(), Rational(1, 8 * m), Rational(1));
  auto inf = verify_variant(f, w, Variant::infty);
  CHECK(inf.verdict == Verdict::certified);
  CHECK(inf.density >= 1);
  auto inf_bad = verify_variant(f, affine(diagonal_kernel(), Rational(1, 2 * m), Rational(1)), Variant::infty);
  CHECK(inf_bad.verdict == Verdict::hypotheses_failed);

  // t(C_4, delta U) = delta^4 for the rank-one sign kernel.
  const Rational delta(1, 64);
  auto c4 = verify_variant(f, affine(rank_one_sign_kernel(), delta, Rational(1)), Variant::c4);
  CHECK(hypothesis(c4, "t(C_4, W-1)").value == pow_int(delta, 4));
  CHECK(hypothesis(c4, "t(C_4, W-1)").holds == (pow_int(delta, 4) <= pow2_neg(4 * m)));

  const Rational eps = pow2_neg(8 * m + 2);
  CHECK_THROWS_AS(verify_variant(f, w, Variant::reg, pow2_neg(8 * m + 1)), InvalidArgument);
  CHECK_THROWS_AS(verify_variant(f, w, Variant::reg, Rational(0)), InvalidArgument);
  RationalKernel small = perturbation(diagonal_kernel(), pow2_neg(8 * m + 1));
  auto reg = verify_variant(f, small, Variant::reg, eps);
  auto direct = verify_close(f, small);
  CHECK(reg.verdict == Verdict::certified);
  REQUIRE(reg.inner.size() == 1);
  CHECK(reg.inner.front().density == direct.density);
  CHECK(reg.regularity->discrepancy == 0);
  CHECK(reg.density == direct.density);
}

TEST_CASE("weak regularity partitions")
{
  auto trivial = weak_regularity_partition(RationalKernel::constant(Rational(3, 2)), Rational(1, 100));
  CHECK(trivial.discrepancy == 0);
  CHECK(trivial.partition.row_classes() == 1);

  SampleOptions s;
  s.blocks = 4;
  s.symmetric = true;
  s.resolution = 16;
  s.seed = 11;
  RationalKernel w = sample_kernel(s);
  auto full = weak_regularity_partition(w, Rational(1, 1000000));
  CHECK(full.discrepancy == 0);
  CHECK(step_average(w, full.partition).values() == w.values());

  // Each refinement step never increases ||W - W_P||_2.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    s.seed = seed;
    s.blocks = 5;
    RationalKernel k = sample_kernel(s);
    Rational prev = l2_squared(k) + 1;
    for (int target_exp = 1; target_exp <= 8; ++target_exp) {
      auto r = weak_regularity_partition(k, pow2_neg(static_cast<unsigned>(target_exp)));
      CHECK(r.discrepancy <= pow2_neg(static_cast<unsigned>(target_exp)));
      Rational err = l2_squared(subtract(k, step_average(k, r.partition)));
      CHECK(err <= prev);
      prev = err;
    }
  }
  CHECK_THROWS_AS(weak_regularity_partition(w, Rational(0)), InvalidArgument);
}

TEST_CASE("graph certificates")
{
  const Bigraph c4 = cycle_graph(4);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) edges.emplace_back(a, b);
  }
  PlainGraph k10(10, edges);
  const Rational eps = pow2_neg(40);
  auto c = certify_graph(k10, c4, eps);
  CHECK(c.p == 1);
  Rational expect_density(oracle::hom_count(c4, k10), 10000);
  expect_density.canonicalize();
  CHECK(c.density == expect_density);
  CHECK(c.verdict == Verdict::hypotheses_failed);
  // The witness attains the reported discrepancy.
  long e = 0;
  for (int u : c.discrepancy_s) {
    for (int v : c.discrepancy_t) e += k10.adjacent(u, v) ? 1 : 0;
  }
  Rational dev = Rational(e) - c.p * static_cast<long>(c.discrepancy_s.size() * c.discrepancy_t.size());
  CHECK(abs(dev) == c.discrepancy.value);
  CHECK(c.discrepancy.value == Rational(10));

  CHECK_THROWS_AS(certify_graph(k10, c4, pow2_neg(33)), InvalidArgument);
  CHECK_THROWS_AS(certify_graph(PlainGraph(25, {}), c4, eps), CapExceeded);
  CHECK(certify_graph(k10, c4, eps, 4).discrepancy.value == c.discrepancy.value);
}

TEST_CASE("graph discrepancy matches subset enumeration")
{
  for (const auto& g : oracle::labeled_graphs(4)) {
    if (g.edge_count() == 0) continue;
    auto c = certify_graph(g, path_graph(4), pow2_neg(30));
    const int n = g.node_count();
    Rational p(g.edge_count(), n * (n - 1) / 2);
    p.canonicalize();
    Rational best = 0;
    Rational worst_density = 0;
    for (unsigned s = 0; s < (1u << n); ++s) {
      for (unsigned t = 0; t < (1u << n); ++t) {
        long e = 0;
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            if ((s >> u & 1u) && (t >> v & 1u) && g.adjacent(u, v)) ++e;
          }
        }
        Rational st(__builtin_popcount(s) * __builtin_popcount(t));
        best = std::max(best, Rational(abs(Rational(e - p * st))));
        if (s && t) worst_density = std::max(worst_density, Rational(e - 2 * p * st));
      }
    }
    CHECK(c.discrepancy.value == best);
    CHECK(c.density_condition.value == worst_density);
  }
}
