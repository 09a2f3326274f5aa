#include <doctest.h>

#include <cmath>

#include "locsid/density.hpp"
#include "locsid/errors.hpp"
#include "locsid/kernel.hpp"
#include "oracles.hpp"

using namespace locsid;

namespace {

RationalKernel sampled(std::uint64_t seed, int blocks, bool random_measures = false)
{
  SampleOptions o;
  o.blocks = blocks;
  o.seed = seed;
  o.measures = random_measures ? MeasureMode::random : MeasureMode::equal;
  o.resolution = 64;
  return sample_kernel(o);
}

// Cut norm by enumerating both subset families outright.
Rational cut_norm_oracle(const RationalKernel& k)
{
  Rational best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k.rows()); ++s) {
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << k.cols()); ++t) {
      Rational v = 0;
      for (int i = 0; i < k.rows(); ++i) {
        for (int j = 0; j < k.cols(); ++j) {
          if (((s >> i) & 1u) && ((t >> j) & 1u)) v += k.row_measure(i) * k.col_measure(j) * k.at(i, j);
        }
      }
      best = std::max(best, Rational(abs(v)));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("kernel validation")
{
  CHECK_THROWS_AS(RationalKernel({Rational(1, 2)}, {1}, {1}), InvalidArgument);
  CHECK_THROWS_AS(RationalKernel({0, 1}, {1}, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(RationalKernel({1}, {1}, {1, 2}), InvalidArgument);
  CHECK_NOTHROW(FloatKernel({0.1, 0.2, 0.7}, {1.0}, {1, 2, 3}));
}

TEST_CASE("kernel from graph")
{
  auto k2 = kernel_from_graph<Rational>(complete_graph(2));
  CHECK(k2.row_measures() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(k2.values() == std::vector<Rational>{0, 1, 1, 0});
  auto k3 = kernel_from_graph<Rational>(complete_graph(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(k3.at(i, j) == (i == j ? 0 : 1));
  }
  CHECK(density(path_graph(2), k3) == Rational(2, 3));
  CHECK(k3.is_symmetric());
  CHECK(in_unit_ball(k3));
}

TEST_CASE("bounds and affine maps")
{
  CHECK(in_unit_ball(RationalKernel::constant(Rational(1, 2))));
  CHECK(!in_unit_ball(RationalKernel::constant(-2)));
  auto zero = affine(RationalKernel::constant(1), Rational(1), Rational(-1));
  CHECK(zero.values() == std::vector<Rational>{0});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto u = sampled(seed, 3);
    auto neg = affine(u, Rational(-1), Rational(0));
    for (auto f : {path_graph(2), path_graph(4), complete_bipartite(1, 3)}) CHECK(density(f, neg) == -density(f, u));
    auto [lo, hi] = bounds(u);
    CHECK(lo >= -1);
    CHECK(hi <= 1);
  }
  auto g = kernel_from_graph<Rational>(complete_graph(4));
  auto scaled = affine(g, Rational(2), Rational(0));
  CHECK(integral(scaled) == 2 * integral(g));
}

TEST_CASE("composition")
{
  auto c = compose(RationalKernel::constant(Rational(1, 3)), RationalKernel::constant(Rational(1, 3)));
  CHECK(c.values() == std::vector<Rational>{Rational(1, 9)});
  auto k2 = kernel_from_graph<Rational>(complete_graph(2));
  auto sq = compose(k2, k2);
  CHECK(sq.values() == std::vector<Rational>{Rational(1, 2), 0, 0, Rational(1, 2)});

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    SampleOptions o;
    o.blocks = 2 + static_cast<int>(seed % 3);
    o.col_blocks = 3;
    o.seed = seed;
    o.measures = MeasureMode::random;
    o.resolution = 32;
    auto u = sample_kernel(o);
    auto uu = compose(u, transpose(u));
    CHECK(uu.is_symmetric());
    for (auto f : {path_graph(2), path_graph(3), cycle_graph(4), complete_bipartite(1, 3)}) {
      CHECK(density(subdivide(f), u) == density(f, uu));
    }
    // The trace of U o U^T is ||U||_2^2.
    Rational trace = 0;
    for (int i = 0; i < uu.rows(); ++i) trace += uu.row_measure(i) * uu.at(i, i);
    CHECK(trace == l2_squared(u));
  }
}

TEST_CASE("common refinement")
{
  RationalKernel a({Rational(1, 2), Rational(1, 2)}, {1}, {1, 2});
  RationalKernel b({Rational(1, 3), Rational(2, 3)}, {Rational(1, 4), Rational(3, 4)}, {1, 2, 3, 4});
  auto [ra, rb] = common_refinement(a, b);
  CHECK(ra.row_measures() == std::vector<Rational>{Rational(1, 3), Rational(1, 6), Rational(1, 2)});
  CHECK(ra.col_measures() == rb.col_measures());
  CHECK(integral(ra) == integral(a));
  CHECK(integral(rb) == integral(b));
  auto s = add(a, b);
  CHECK(integral(s) == integral(a) + integral(b));
  CHECK(integral(subtract(a, b)) == integral(a) - integral(b));
  for (auto f : {path_graph(3), cycle_graph(4)}) CHECK(density(f, ra) == density(f, a));
}

TEST_CASE("norms of constants and the rank-one sign kernel")
{
  for (Rational c : {Rational(1, 3), Rational(-2, 5), Rational(0)}) {
    auto k = RationalKernel::constant(c);
    CHECK(cut_norm(k).value == abs(c));
    CHECK(linf_norm(k) == abs(c));
    CHECK(l2_squared(k) == c * c);
    CHECK(std::fabs(l2_norm(k) - std::fabs(c.get_d())) < 1e-15);
  }
  auto s = rank_one_sign_kernel();
  auto cut = cut_norm(s);
  CHECK(cut.value == Rational(1, 4));
  CHECK(cut.exact);
  CHECK(density(cycle_graph(4), s) == 1);
  CHECK(std::fabs(schatten_norm(s, 2) - 1.0) < 1e-15);
}

TEST_CASE("cut norm matches full enumeration and reports a witness")
{
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SampleOptions o;
    o.blocks = 1 + static_cast<int>(seed % 4);
    o.col_blocks = 1 + static_cast<int>((seed / 4) % 5);
    o.seed = seed;
    o.measures = seed % 2 ? MeasureMode::random : MeasureMode::equal;
    o.resolution = 16;
    auto k = sample_kernel(o);
    auto r = cut_norm(k);
    CHECK(r.value == cut_norm_oracle(k));
    Rational w = 0;
    for (int i : r.rows) {
      for (int j : r.cols) w += k.row_measure(i) * k.col_measure(j) * k.at(i, j);
    }
    CHECK(abs(w) == r.value);
    CHECK((w < 0 ? -1 : 1) * r.sign >= 0);

    auto fr = cut_norm(to_float(k));
    CHECK(std::fabs(fr.value - r.value.get_d()) < 1e-12);
  }
}

TEST_CASE("cut norm is independent of thread count and falls back above the cap")
{
  SampleOptions o;
  o.blocks = 14;
  o.seed = 5;
  o.resolution = 1000;
  auto k = sample_kernel(o);
  CutNormOptions one;
  CutNormOptions many;
  many.threads = 4;
  auto a = cut_norm(k, one);
  auto b = cut_norm(k, many);
  CHECK(a.value == b.value);
  CHECK(a.rows == b.rows);
  CHECK(a.cols == b.cols);

  CutNormOptions tight;
  tight.cap = 4;
  auto c = cut_norm(k, tight);
  CHECK(!c.exact);
  CHECK(c.value <= a.value);
  CHECK(c.value > 0);
}

TEST_CASE("C4 sandwich and the counting lemma on samples")
{
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto u = sampled(seed, 1 + static_cast<int>(seed % 5), seed % 2 == 1);
    Rational cut = cut_norm(u).value;
    Rational c4 = density(cycle_graph(4), u);
    CHECK(cut * cut * cut * cut <= c4);
    CHECK(c4 <= 4 * cut);
  }
}

TEST_CASE("step averaging")
{
  auto w = sampled(3, 4, true);
  CHECK(step_average(w, Partition::identity(4, 4)) == w);
  auto flat = coarsen(w, Partition::single(4, 4));
  CHECK(flat.values() == std::vector<Rational>{integral(w)});

  Partition p;
  p.row_class = {0, 1, 0, 1};
  p.col_class = {0, 0, 1, 2};
  auto avg = step_average(w, p);
  CHECK(integral(avg) == integral(w));
  CHECK(step_average(avg, p) == avg);
  auto small = coarsen(w, p);
  CHECK(small.rows() == 2);
  CHECK(small.cols() == 3);
  for (auto f : {path_graph(3), cycle_graph(4), complete_bipartite(2, 3)}) CHECK(density(f, small) == density(f, avg));

  auto g = affine(sampled(9, 4), Rational(1), Rational(1));  // values in [0, 2]
  auto ga = step_average(g, p);
  auto [lo, hi] = bounds(ga);
  CHECK(lo >= 0);
  CHECK(hi <= 2);

  Partition bad;
  bad.row_class = {0, 2, 0, 2};
  bad.col_class = {0, 0, 0, 0};
  CHECK_THROWS_AS(step_average(w, bad), InvalidArgument);
}

TEST_CASE("sampling")
{
  SampleOptions o;
  o.blocks = 3;
  o.symmetric = true;
  o.seed = 7;
  CHECK(sample_kernel(o) == sample_kernel(o));
  CHECK(sample_kernel(o).is_symmetric());
  CHECK(in_unit_ball(sample_kernel(o)));
  o.mean_zero = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    o.seed = seed;
    o.measures = seed % 2 ? MeasureMode::random : MeasureMode::equal;
    auto u = sample_kernel(o);
    CHECK(density(path_graph(2), u) == 0);
    CHECK(in_unit_ball(u));
  }
  o.low = -3;
  o.high = 3;
  o.mean_zero = false;
  o.symmetric = false;
  o.seed = 3;
  auto [lo, hi] = bounds(sample_kernel(o));
  CHECK(lo >= -3);
  CHECK(hi <= 3);
}

TEST_CASE("adversarial kernels")
{
  auto cb = checkerboard_kernel(4);
  CHECK(integral(cb) == 0);
  CHECK(density(cycle_graph(4), cb) == 1);
  auto dev = graph_deviation_kernel(complete_graph(3));
  CHECK(integral(dev) == 0);
}
