#include "locsid/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>

#include "locsid/canonical.hpp"
#include "locsid/density.hpp"
#include "locsid/errors.hpp"
#include "locsid/harness.hpp"
#include "locsid/io.hpp"
#include "locsid/verifier.hpp"

namespace locsid {

namespace {

int default_threads()
{
  if (const char* env = std::getenv("LOCSID_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

/// Accepts p/q, decimals and 2^-k.
Rational parse_number(const std::string& text)
{
  if (text.rfind("2^-", 0) == 0) {
    try {
      int k = std::stoi(text.substr(3));
      if (k >= 0) return pow2_neg(static_cast<unsigned>(k));
    } catch (const std::exception&) {
    }
    throw ParseError("bad power of two '" + text + "'");
  }
  return parse_rational(text);
}

struct Output {
  std::string path;
  bool pretty = false;
};

void emit(const Json& j, const std::string& summary, const Output& o, std::ostream& out)
{
  std::string text = o.pretty ? summary : j.dump() + "\n";
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write " + o.path);
  f << text;
}

std::string value_string(const Rational& x) { return to_string(x); }
std::string value_string(double x) { return to_string(x); }

template <class Fn>
auto with_kernel(const std::string& path, Fn fn)
{
  Json j = read_json_file(path);
  if (kernel_mode(j) == "float") return fn(float_kernel_from_json(j));
  return fn(rational_kernel_from_json(j));
}

std::vector<int> parse_anchors(const std::string& text)
{
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    try {
      out.push_back(std::stoi(text.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw ParseError("bad anchor list '" + text + "'", pos);
    }
    pos = next + 1;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Homomorphism densities, inequality checks and local certificates for bipartite graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Output o;
  int threads = default_threads();
  app.add_option("-o,--output", o.path, "Write the result to a file");
  app.add_flag("--pretty", o.pretty, "Human-readable summary instead of JSON");
  app.add_option("--threads", threads, "Worker threads (default: LOCSID_THREADS or 1)")->check(CLI::PositiveNumber);

  std::string graph_path;
  std::string kernel_path;
  std::string other_path;
  std::string anchors_text;
  std::string kind = "cut";
  int schatten_r = 2;
  bool kernel_is_u = false;
  std::string entry_id;
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int max_blocks = 6;
  std::string variant = "close";
  std::string eps_text;
  int blocks = 3;
  int col_blocks = 0;
  std::string range = "-1,1";
  bool symmetric = false;
  bool mean_zero = false;
  bool random_measures = false;
  int resolution = 1 << 16;

  auto* density_cmd = app.add_subcommand("density", "t(F,W) for a graph and a kernel");
  density_cmd->add_option("graph", graph_path)->required();
  density_cmd->add_option("kernel", kernel_path)->required();
  density_cmd->add_option("--anchors", anchors_text, "Block of each label, comma separated (rooted density)");

  auto* hom_cmd = app.add_subcommand("hom", "hom(F,G) for a bigraph F and a simple graph G");
  hom_cmd->add_option("F", graph_path)->required();
  hom_cmd->add_option("G", other_path)->required();

  auto* norm_cmd = app.add_subcommand("norm", "Kernel norms");
  norm_cmd->add_option("kernel", kernel_path)->required();
  norm_cmd->add_option("--kind", kind, "l2, linf, cut or schatten")
      ->check(CLI::IsMember({"l2", "linf", "cut", "schatten"}));
  norm_cmd->add_option("--r", schatten_r, "Schatten index")->check(CLI::PositiveNumber);

  auto* expand_cmd = app.add_subcommand("expand", "Terms of t(F,W) = sum over spanning F' of t(F',W-1)");
  expand_cmd->add_option("graph", graph_path)->required();
  expand_cmd->add_option("kernel", kernel_path)->required();
  expand_cmd->add_flag("--kernel-is-u", kernel_is_u, "The kernel file holds U rather than W");

  auto* check_cmd = app.add_subcommand("check", "Property-test registry entries");
  check_cmd->add_option("entry", entry_id, "Entry id or 'all'")->required();
  check_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);
  check_cmd->add_option("--seed", seed);
  check_cmd->add_option("--tol", tol)->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-blocks", max_blocks)->check(CLI::Range(1, 12));

  auto* verify_cmd = app.add_subcommand("verify", "Certificate that t(F,W) >= 1 near the constant kernel");
  verify_cmd->add_option("graph", graph_path)->required();
  verify_cmd->add_option("kernel", kernel_path)->required();
  verify_cmd->add_option("--variant", variant)->check(CLI::IsMember({"close", "infty", "c4", "reg"}));
  verify_cmd->add_option("--eps", eps_text, "Slack for the reg variant (p/q, decimal or 2^-k)");

  auto* certify_cmd = app.add_subcommand("certify-graph", "Finite-graph certificate t(F,G) >= p^m - eps");
  certify_cmd->add_option("G", other_path)->required();
  certify_cmd->add_option("F", graph_path)->required();
  certify_cmd->add_option("--eps", eps_text, "p/q, decimal or 2^-k")->required();

  auto* sample_cmd = app.add_subcommand("sample", "Seeded random step kernel");
  sample_cmd->add_option("--blocks", blocks)->check(CLI::Range(1, 64));
  sample_cmd->add_option("--col-blocks", col_blocks)->check(CLI::Range(0, 64));
  sample_cmd->add_option("--range", range, "lo,hi");
  sample_cmd->add_option("--seed", seed)->required();
  sample_cmd->add_flag("--symmetric", symmetric);
  sample_cmd->add_flag("--mean-zero", mean_zero);
  sample_cmd->add_flag("--random-measures", random_measures);
  sample_cmd->add_option("--resolution", resolution)->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"locsid"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*density_cmd) {
      Bigraph f = graph_from_json(read_json_file(graph_path));
      std::vector<int> anchors = parse_anchors(anchors_text);
      return with_kernel(kernel_path, [&](const auto& k) {
        Json j;
        if (!anchors.empty()) {
          j["value"] = value_string(rooted_density(f, k, anchors));
          j["anchors"] = anchors;
        } else {
          j["value"] = value_string(density(unlabel(f), k));
        }
        emit(j, "t(" + describe(f) + ", W) = " + j["value"].get<std::string>() + "\n", o, out);
        return exit_ok;
      });
    }
    if (*hom_cmd) {
      Bigraph f = graph_from_json(read_json_file(graph_path));
      PlainGraph g = plain_graph_from_json(read_json_file(other_path));
      BigInt h = hom_count(unlabel(f), g);
      BigInt norm = 1;
      for (int i = 0; i < f.node_count(); ++i) norm *= g.node_count();
      Rational t(h, norm);
      t.canonicalize();
      Json j;
      j["hom"] = h.get_str();
      j["density"] = to_string(t);
      emit(j, "hom(F,G) = " + h.get_str() + ", t(F,G) = " + to_string(t) + "\n", o, out);
      return exit_ok;
    }
    if (*norm_cmd) {
      return with_kernel(kernel_path, [&](const auto& k) {
        Json j;
        j["kind"] = kind;
        if (kind == "l2") {
          j["value"] = to_string(l2_norm(k));
          j["squared"] = value_string(l2_squared(k));
        } else if (kind == "linf") {
          j["value"] = value_string(linf_norm(k));
        } else if (kind == "cut") {
          CutNormOptions co;
          co.threads = threads;
          auto r = cut_norm(k, co);
          j["value"] = value_string(r.value);
          j["exact"] = r.exact;
          j["rows"] = r.rows;
          j["cols"] = r.cols;
          j["sign"] = r.sign;
        } else {
          j["r"] = schatten_r;
          j["value"] = to_string(schatten_norm(k, schatten_r));
          j["cycle_density"] = value_string(density(cycle_graph(2 * schatten_r), k));
        }
        emit(j, kind + " norm = " + j["value"].get<std::string>() + "\n", o, out);
        return exit_ok;
      });
    }
    if (*expand_cmd) {
      Bigraph f = unlabel(graph_from_json(read_json_file(graph_path)));
      return with_kernel(kernel_path, [&](const auto& k) {
        using T = std::decay_t<decltype(k.at(0, 0))>;
        StepKernel<T> u = kernel_is_u ? k : affine(k, T(1), T(-1));
        auto ledger = expansion(f, u);
        Json terms = Json::array();
        std::string summary;
        for (const auto& e : ledger.entries) {
          Json t;
          t["term"] = e.name;
          t["multiplicity"] = e.multiplicity;
          t["value"] = value_string(e.value);
          terms.push_back(t);
          summary += std::to_string(e.multiplicity) + " x t(" + e.name + ", U) = " + value_string(e.value) + "\n";
        }
        Json j;
        j["terms"] = terms;
        j["total"] = value_string(ledger.total);
        emit(j, summary + "total = " + value_string(ledger.total) + "\n", o, out);
        return exit_ok;
      });
    }
    if (*check_cmd) {
      auto reg = builtin_registry();
      std::vector<InequalityEntry> chosen;
      if (entry_id == "all") {
        chosen = reg;
      } else {
        chosen.push_back(find_entry(reg, entry_id));
      }
      HarnessOptions ho;
      ho.trials = trials;
      ho.seed = seed;
      ho.tol = tol;
      ho.threads = threads;
      ho.max_blocks = max_blocks;
      Json reports = Json::array();
      bool ok = true;
      std::string summary;
      for (const auto& r : check_entries(chosen, ho)) {
        reports.push_back(report_to_json(r));
        bool expected = r.status == EntryStatus::erratum_suspect ? !r.passed : r.passed;
        ok = ok && (r.passed || r.status == EntryStatus::erratum_suspect);
        summary += (r.passed ? "pass " : "FAIL ") + r.id + "  worst margin " +
                   (r.worst_margin_exact ? to_string(*r.worst_margin_exact) : to_string(r.worst_margin)) + "  (" +
                   r.worst_clause + ")" + (expected ? "" : "  unexpected") + "\n";
      }
      Json j;
      j["trials"] = trials;
      j["seed"] = seed;
      j["tol"] = to_string(tol);
      j["reports"] = reports;
      j["passed"] = ok;
      emit(j, summary, o, out);
      return ok ? exit_ok : exit_negative;
    }
    if (*verify_cmd) {
      Bigraph f = unlabel(graph_from_json(read_json_file(graph_path)));
      Json kj = read_json_file(kernel_path);
      RationalKernel w = kernel_mode(kj) == "float" ? to_rational(float_kernel_from_json(kj)) : rational_kernel_from_json(kj);
      Variant v = variant_from_string(variant);
      if (v == Variant::reg && eps_text.empty()) throw InvalidArgument("--eps is required for the reg variant");
      Rational eps = eps_text.empty() ? Rational(0) : parse_number(eps_text);
      Certificate c = verify_variant(f, w, v, eps);
      std::string summary = "verdict: " + to_string(c.verdict) + "\nt(F,W) = " + to_string(c.density) + "\n";
      for (const auto& h : c.hypotheses) {
        summary += std::string(h.holds ? "  ok   " : "  FAIL ") + h.name + " = " + to_string(h.value) + " " + h.relation +
                   " " + to_string(h.threshold) + "\n";
      }
      emit(certificate_to_json(c), summary, o, out);
      return c.verdict == Verdict::certified ? exit_ok : exit_negative;
    }
    if (*certify_cmd) {
      PlainGraph g = plain_graph_from_json(read_json_file(other_path));
      Bigraph f = unlabel(graph_from_json(read_json_file(graph_path)));
      GraphCertificate c = certify_graph(g, f, parse_number(eps_text), threads);
      std::string summary = "verdict: " + to_string(c.verdict) + "\nt(F,G) = " + to_string(c.density) +
                            ", p^m - eps = " + to_string(c.floor) + "\n";
      emit(certificate_to_json(c), summary, o, out);
      return c.verdict == Verdict::certified ? exit_ok : exit_negative;
    }
    if (*sample_cmd) {
      auto comma = range.find(',');
      if (comma == std::string::npos) throw ParseError("--range must be lo,hi", 0);
      SampleOptions so;
      so.blocks = blocks;
      so.col_blocks = col_blocks;
      so.low = parse_number(range.substr(0, comma));
      so.high = parse_number(range.substr(comma + 1));
      so.symmetric = symmetric;
      so.mean_zero = mean_zero;
      so.measures = random_measures ? MeasureMode::random : MeasureMode::equal;
      so.seed = seed;
      so.resolution = resolution;
      RationalKernel k = sample_kernel(so);
      emit(kernel_to_json(k), "sampled " + std::to_string(k.rows()) + " x " + std::to_string(k.cols()) + " kernel\n", o, out);
      return exit_ok;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.position() > 0) err << " (at byte " << e.position() << ")";
    err << "\n";
    return exit_usage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace locsid
