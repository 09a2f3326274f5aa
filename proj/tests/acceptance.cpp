// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "locsid/canonical.hpp"
#include "locsid/cli.hpp"
#include "locsid/density.hpp"
#include "locsid/errors.hpp"
#include "locsid/harness.hpp"
#include "locsid/io.hpp"
#include "locsid/structure.hpp"
#include "locsid/verifier.hpp"
#include "oracles.hpp"

using namespace locsid;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

Result criterion_oracle_equivalence()
{
  auto start = std::chrono::steady_clock::now();
  long pairs = 0;
  for (int nf = 1; nf <= 5; ++nf) {
    for (const auto& f : oracle::connected_bigraphs(nf)) {
      for (int ng = 1; ng <= 4; ++ng) {
        for (const auto& g : oracle::labeled_graphs(ng)) {
          Rational t = density(f, kernel_from_graph<Rational>(g));
          BigInt scale = 1;
          for (int i = 0; i < f.node_count(); ++i) scale *= ng;
          Rational hom = t * scale;
          if (hom != Rational(static_cast<unsigned long>(oracle::hom_count(f, g))) ||
              hom_count(f, g) != BigInt(static_cast<unsigned long>(oracle::hom_count(f, g)))) {
            return {false, "mismatch for F = " + describe(f)};
          }
          ++pairs;
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << pairs << " (F,G) pairs in " << secs << " s";
  return {secs < 60, d.str()};
}

Result criterion_expansion_identity()
{
  int checked = 0;
  for (const auto& f : {path_graph(4), cycle_graph(4), cycle_graph(6), complete_bipartite(2, 3)}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      SampleOptions s;
      s.blocks = 1 + static_cast<int>(seed % 5);
      s.col_blocks = seed % 3 == 0 ? 1 + static_cast<int>((seed / 3) % 4) : 0;
      s.symmetric = seed % 2 == 1 && s.col_blocks == 0;
      s.measures = seed % 4 < 2 ? MeasureMode::random : MeasureMode::equal;
      s.resolution = 32;
      s.seed = 1000 + seed;
      RationalKernel u = sample_kernel(s);
      auto ledger = expansion(f, u);
      Rational sum = 0;
      for (const auto& e : ledger.entries) sum += Rational(static_cast<unsigned long>(e.multiplicity)) * e.value;
      Rational direct = oracle::density(f, affine(u, Rational(1), Rational(1)));
      if (sum != ledger.total || sum != direct) return {false, describe(f) + " seed " + std::to_string(seed)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " kernels, exact equality"};
}

Result criterion_monotone_chain()
{
  double worst = 1;
  for (std::uint64_t k = 0; k < 200; ++k) {
    SampleOptions s;
    s.blocks = 1 + static_cast<int>(k % 6);
    s.col_blocks = k % 3 == 0 ? 1 + static_cast<int>((k / 3) % 6) : 0;
    s.symmetric = k % 2 == 1;
    if (s.symmetric) s.col_blocks = 0;
    s.mean_zero = k % 5 == 0;
    s.measures = k % 4 == 0 ? MeasureMode::random : MeasureMode::equal;
    s.resolution = 64;
    s.seed = 7000 + k;
    RationalKernel u = sample_kernel(s);
    std::vector<Rational> c(5);
    // t(C_2, U) is the squared L2 norm.
    c[1] = l2_squared(u);
    for (int r = 2; r <= 4; ++r) c[static_cast<std::size_t>(r)] = density(cycle_graph(2 * r), u);
    auto cyc = [&](int len) { return c[static_cast<std::size_t>(len / 2)]; };
    for (int r = 1; r < 4; ++r) {
      if (c[static_cast<std::size_t>(r)] < c[static_cast<std::size_t>(r + 1)]) return {false, "chain breaks at seed " + std::to_string(s.seed)};
    }
    if (c[4] < 0) return {false, "C_8 negative"};
    for (int a = 1; a <= 4; ++a) {
      for (int b = a; b <= 4; ++b) {
        if ((a + b) % 2) continue;
        Rational mid = cyc(a + b);
        double margin = Rational(cyc(2 * a) * cyc(2 * b) - mid * mid).get_d();
        worst = std::min(worst, margin);
        if (margin < -1e-9) return {false, "log-convexity fails at seed " + std::to_string(s.seed)};
      }
    }
  }
  std::ostringstream d;
  d << "200 kernels; worst log-convexity margin " << worst;
  return {true, d.str()};
}

Result criterion_registry()
{
  auto reg = builtin_registry();
  HarnessOptions o;
  o.trials = 100;
  o.tol = 1e-9;
  o.threads = 2;
  int paper = 0;
  int passed = 0;
  std::string failures;
  bool literal_ok = false;
  bool corrected_ok = true;
  for (const auto& e : reg) {
    auto r = check_entry(e, o);
    if (e.status == EntryStatus::paper) {
      ++paper;
      if (r.passed) {
        ++passed;
      } else {
        failures += " " + e.id;
      }
    } else if (e.status == EntryStatus::corrected) {
      if (!r.passed) {
        corrected_ok = false;
        failures += " " + e.id;
      }
    } else if (e.id == "C4-UPPER-LITERAL") {
      literal_ok = !r.passed && r.worst_margin_exact && *r.worst_margin_exact == Rational(-3, 4) && r.witness &&
                   r.witness->values() == rank_one_sign_kernel().values() && r.revalidation == "brute-force";
    }
  }
  const auto& main = find_entry(reg, "MAIN");
  const std::string theta = describe(theta_graph({3, 3, 3})) + " <= C_";
  const std::string s33 = describe(subdivide(complete_bipartite(3, 3))) + " <= C_";
  bool has_theta = false;
  bool has_s33 = false;
  for (const auto& c : main.clauses) {
    has_theta = has_theta || c.label.rfind(theta, 0) == 0;
    has_s33 = has_s33 || c.label.rfind(s33, 0) == 0;
  }
  std::ostringstream d;
  d << passed << "/" << paper << " paper entries pass; literal C4 upper bound "
    << (literal_ok ? "fails with margin -3/4 on the rank-one sign kernel" : "did not fail as expected");
  if (!failures.empty()) d << "; failing:" << failures;
  return {paper >= 24 && passed == paper && corrected_ok && literal_ok && has_theta && has_s33, d.str()};
}

std::string write_temp(const std::string& name, const Json& j)
{
  auto path = std::filesystem::temp_directory_path() / ("locsid_acceptance_" + name);
  std::ofstream(path) << j.dump();
  return path.string();
}

Result criterion_close()
{
  // Mean-zero, non-regular: U0 = diag(1, -1) on two halves.
  RationalKernel u0({Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}, {1, 0, 0, -1});
  const Rational cut0 = cut_norm(u0).value;
  std::string detail;
  for (const auto& f : {cycle_graph(4), cycle_graph(6), path_graph(5)}) {
    const int m = f.edge_count();
    const Rational delta = pow2_neg(static_cast<unsigned>(8 * m)) / cut0;
    RationalKernel at = affine(u0, delta, Rational(1));
    RationalKernel above = affine(u0, Rational(delta * Rational(3, 2)), Rational(1));
    auto c1 = verify_close(f, at);
    auto c2 = verify_close(f, above);
    if (c1.verdict != Verdict::certified || c1.density < 1) return {false, describe(f) + " not certified"};
    if (c2.verdict != Verdict::hypotheses_failed || c2.density < 1 || c2.chain_holds != c1.chain_holds) {
      return {false, describe(f) + " perturbation changed more than the hypothesis"};
    }
    for (std::size_t i = 0; i < c1.hypotheses.size(); ++i) {
      bool is_cut = c1.hypotheses[i].name == "cut norm of W-1";
      if (c1.hypotheses[i].holds != true || c2.hypotheses[i].holds != !is_cut) return {false, "hypothesis flags"};
    }
    for (std::size_t i = 0; i < c1.cases.size(); ++i) {
      if (c1.cases[i].holds != c2.cases[i].holds) return {false, "case flags changed"};
    }
    // Same through the command line.
    std::string gp = write_temp("graph.json", graph_to_json(f));
    std::string w1 = write_temp("w_at.json", kernel_to_json(at));
    std::string w2 = write_temp("w_above.json", kernel_to_json(above));
    std::ostringstream out;
    std::ostringstream err;
    int e1 = run({"verify", gp, w1, "--variant", "close"}, out, err);
    int e2 = run({"verify", gp, w2, "--variant", "close"}, out, err);
    if (e1 != exit_ok || e2 != exit_negative) return {false, "CLI exit codes " + std::to_string(e1) + ", " + std::to_string(e2)};
    std::ostringstream d;
    d << describe(f) << " t-1 = " << Rational(c1.density - 1).get_d() << "; ";
    detail += d.str();
  }
  return {true, detail + "delta above threshold flips only the cut-norm hypothesis"};
}

Result criterion_trees()
{
  int checked = 0;
  for (int n = 2; n <= 9; ++n) {
    for (const auto& parent : oracle::rooted_trees(n)) {
      auto t = rooted_tree_from_parents(parent);
      auto st = tree_stats(t);
      auto h = double_tree_hps(t);
      if (!validate_hanging_paths(double_tree(t), h).empty()) return {false, "invalid system"};
      if (h.value() < st.depth + std::max(0, st.min_depth - 3)) return {false, "value below bound"};
      if (h.max_length() > std::max(st.depth, 2)) return {false, "path too long"};
      ++checked;
    }
  }
  return {checked == 485, std::to_string(checked) + " rooted trees with 2..9 nodes"};
}

Result criterion_cut_grid()
{
  double max_gap = 0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    SampleOptions s;
    s.blocks = 1 + static_cast<int>(k % 4);
    s.col_blocks = 1 + static_cast<int>((k / 4) % 4);
    s.measures = k % 2 ? MeasureMode::random : MeasureMode::equal;
    s.resolution = 64;
    s.seed = 500 + k;
    RationalKernel u = sample_kernel(s);
    double vertex = cut_norm(u).value.get_d();
    FloatKernel fu = to_float(u);
    // For fixed row weights the best column weights on the grid are 0/1,
    // both of which lie on the grid, so this is the exact grid maximum.
    const int r = fu.rows();
    const int c = fu.cols();
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    double grid_max = 0;
    while (true) {
      double pos = 0;
      double neg = 0;
      for (int j = 0; j < c; ++j) {
        double a = 0;
        for (int i = 0; i < r; ++i) a += idx[static_cast<std::size_t>(i)] / 20.0 * fu.row_measure(i) * fu.col_measure(j) * fu.at(i, j);
        (a > 0 ? pos : neg) += a;
      }
      double v = std::max(pos, -neg);
      if (v > vertex + 1e-12) return {false, "grid point above the vertex value at seed " + std::to_string(s.seed)};
      grid_max = std::max(grid_max, v);
      int p = 0;
      while (p < r && ++idx[static_cast<std::size_t>(p)] > 20) idx[static_cast<std::size_t>(p++)] = 0;
      if (p == r) break;
    }
    max_gap = std::max(max_gap, std::fabs(grid_max - vertex));
    if (std::fabs(grid_max - vertex) > 1e-12) return {false, "grid maximum differs at seed " + std::to_string(s.seed)};
  }
  std::ostringstream d;
  d << "50 kernels; largest |grid max - vertex value| " << max_gap;
  return {true, d.str()};
}

Result criterion_counting_lemma()
{
  const std::vector<Bigraph> fs{path_graph(2), path_graph(3),  path_graph(4),  cycle_graph(4),          complete_bipartite(1, 3),
                                path_graph(5), path_graph(6), cycle_graph(6), complete_bipartite(2, 3), path_graph(7)};
  double worst = 1e9;
  for (std::uint64_t k = 0; k < 200; ++k) {
    SampleOptions s;
    s.low = 0;
    s.high = 1;
    s.resolution = 64;
    s.blocks = 1 + static_cast<int>(k % 3);
    s.symmetric = k % 2 == 0;
    s.measures = k % 3 == 0 ? MeasureMode::random : MeasureMode::equal;
    s.seed = 20000 + 2 * k;
    RationalKernel w1 = sample_kernel(s);
    s.seed += 1;
    s.blocks = 1 + static_cast<int>((k / 3) % 3);
    RationalKernel w2 = sample_kernel(s);
    const Rational cut = cut_norm(subtract(w1, w2)).value;
    const Bigraph& f = fs[k % fs.size()];
    const int m = f.edge_count();
    Rational slack = m * cut - abs(Rational(density(f, w1) - density(f, w2)));
    worst = std::min(worst, slack.get_d());
    if (slack.get_d() < -1e-9) return {false, describe(f) + " violates the bound at seed " + std::to_string(s.seed)};
  }
  std::ostringstream d;
  d << "200 pairs; smallest slack m*cut - |dt| = " << worst;
  return {true, d.str()};
}

Result criterion_graph_certificates()
{
  int graphs = 0;
  int certified = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const auto& g : oracle::unlabeled_graphs(n)) {
      ++graphs;
      for (const auto& f : {cycle_graph(4), path_graph(4)}) {
        const int m = f.edge_count();
        auto c = certify_graph(g, f, pow2_neg(static_cast<unsigned>(8 * m + 2)));
        if (c.verdict != Verdict::certified) continue;
        ++certified;
        Rational brute(static_cast<unsigned long>(oracle::hom_count(f, g)));
        for (int i = 0; i < f.node_count(); ++i) brute /= n;
        if (brute < c.floor) return {false, "certified graph below the floor"};
      }
    }
  }
  std::ostringstream d;
  d << graphs << " graphs with 2..8 nodes, " << certified << " certified (no counterexample)";
  return {true, d.str()};
}

std::string run_capture(const std::vector<std::string>& args, int& code)
{
  std::ostringstream out;
  std::ostringstream err;
  code = run(args, out, err);
  return out.str() + "|" + err.str();
}

Result criterion_determinism()
{
  const std::string gp = write_temp("det_graph.json", graph_to_json(cycle_graph(6)));
  const std::vector<std::string> sample{"sample", "--blocks", "4", "--seed", "99", "--symmetric", "--random-measures"};
  int code = 0;
  std::string s1 = run_capture(sample, code);
  std::string s2 = run_capture(sample, code);
  if (s1 != s2 || code != exit_ok) return {false, "sample differs between runs"};

  const std::string wp = write_temp("det_kernel.json", parse_json(s1.substr(0, s1.find('|'))));
  std::vector<std::vector<std::string>> commands{
      {"check", "MON", "--trials", "40", "--seed", "5"},
      {"check", "MAIN", "--trials", "40", "--seed", "5", "--threads", "1"},
      {"verify", gp, wp, "--variant", "close"},
      {"density", gp, wp},
  };
  for (const auto& cmd : commands) {
    int c1 = 0;
    int c2 = 0;
    if (run_capture(cmd, c1) != run_capture(cmd, c2) || c1 != c2) return {false, cmd[0] + " " + cmd[1] + " differs"};
  }
  auto threaded = commands[1];
  threaded.back() = "3";
  int c1 = 0;
  int c3 = 0;
  if (run_capture(commands[1], c1) != run_capture(threaded, c3) || c1 != c3) return {false, "check MAIN depends on --threads"};
  return {true, "sample, check MON, check MAIN (1 and 3 threads), verify and density are byte-identical"};
}

}  // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"1 density engine vs homomorphism counts", criterion_oracle_equivalence},
      {"2 expansion identity", criterion_expansion_identity},
      {"3 even-cycle chain and log-convexity", criterion_monotone_chain},
      {"4 inequality registry", criterion_registry},
      {"5 closeness certificate threshold", criterion_close},
      {"6 doubled-tree hanging paths", criterion_trees},
      {"7 cut norm vs grid search", criterion_cut_grid},
      {"8 counting lemma", criterion_counting_lemma},
      {"9 graph certificates", criterion_graph_certificates},
      {"10 determinism", criterion_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << " [" << secs << " s]" << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
