#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "locsid/bigraph.hpp"
#include "locsid/io.hpp"
#include "locsid/kernel.hpp"
#include "locsid/scalar.hpp"

namespace locsid {

/// One quantity of a kernel U: t(F, U), a rooted density with its labels
/// pinned to the clause's anchor blocks, or the cut norm.
struct Atom {
  enum class Kind { graph, rooted, cut_norm };
  Kind kind = Kind::graph;
  Bigraph graph;
  /// For rooted atoms: anchor variable used by each label, in label order.
  std::vector<int> anchor_vars;
};

struct Factor {
  Atom atom;
  Rational exponent = 1;
  bool absolute = false;
};

struct Monomial {
  Rational coefficient = 1;
  std::vector<Factor> factors;
};

/// Sum of coefficient * product of atom^exponent. Fractional exponents
/// require a nonnegative base: an even-cycle-like quantity or an absolute
/// value. Negative exponents are rejected.
struct DensityExpr {
  std::vector<Monomial> terms;

  static DensityExpr constant(Rational c);
  static DensityExpr graph(Bigraph f);
  static DensityExpr rooted(Bigraph f, std::vector<int> anchor_vars);
  static DensityExpr cut_norm();

  std::string to_string() const;
  /// True when every exponent is an integer.
  bool integral_exponents() const;
};

DensityExpr operator*(const DensityExpr& a, const DensityExpr& b);
DensityExpr operator+(const DensityExpr& a, const DensityExpr& b);
DensityExpr operator*(const Rational& c, const DensityExpr& a);
/// Single-monomial expressions only; multiplies every exponent by q.
DensityExpr pow(const DensityExpr& a, const Rational& q);
/// Single-factor expressions only.
DensityExpr abs(const DensityExpr& a);

struct ExprValue {
  bool exact = false;
  Rational q;  // meaningful when exact
  double d = 0;
};

enum class EvalMethod {
  engine,
  /// Direct summation over block assignments; used to re-check violations.
  brute_force,
};

/// Anchors are block indices for the anchor variables (row blocks for
/// first-side labels, column blocks otherwise). Throws InvalidArgument when
/// a fractional power meets a negative base.
ExprValue evaluate(const DensityExpr& e, const RationalKernel& u, const std::vector<int>& anchors = {},
                   EvalMethod method = EvalMethod::engine);
ExprValue evaluate(const DensityExpr& e, const FloatKernel& u, const std::vector<int>& anchors = {});

/// Exact decision of lhs <= rhs for single monomials by raising both sides
/// to the common denominator of all exponents. nullopt when not decidable
/// that way (sums, or cut norms on float kernels).
std::optional<bool> decide_exactly(const DensityExpr& lhs, const DensityExpr& rhs, const RationalKernel& u,
                                   const std::vector<int>& anchors = {});

struct Clause {
  std::string label;
  DensityExpr lhs;
  DensityExpr rhs;
  /// Sides of the anchor variables; the clause is checked at every
  /// combination of anchor blocks.
  std::vector<Side> anchors;
};

enum class Domain {
  /// Values in [-1, 1].
  unit_ball,
  /// Unrestricted; sampled in [-3, 3].
  unbounded,
};

enum class EntryStatus { paper, corrected, erratum_suspect };

std::string to_string(Domain d);
std::string to_string(EntryStatus s);

struct TrialOutcome {
  std::string label;
  double margin = 0;
  bool exact = false;
  Rational exact_margin;
  bool holds = true;
};

struct InequalityEntry {
  std::string id;
  std::string citation;
  EntryStatus status = EntryStatus::paper;
  Domain domain = Domain::unit_ball;
  bool symmetric_only = false;
  std::vector<Clause> clauses;
  /// Replaces clause evaluation; receives the trial's seed.
  std::function<std::vector<TrialOutcome>(std::uint64_t)> custom;
  std::string note;
};

struct HarnessOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  int threads = 1;
  int max_blocks = 6;
  int resolution = 16;
};

struct EntryReport {
  std::string id;
  std::string citation;
  EntryStatus status = EntryStatus::paper;
  Domain domain = Domain::unit_ball;
  int trials = 0;
  int clauses = 0;
  double worst_margin = 0;
  std::optional<Rational> worst_margin_exact;
  std::string worst_clause;
  int worst_trial = -1;
  bool passed = true;
  std::optional<RationalKernel> witness;
  /// How a violation was re-checked: "brute-force", "engine-only" (too large
  /// for direct summation) or empty when nothing failed.
  std::string revalidation;
  std::string note;
};

/// Kernel used for a given trial: fixed adversarial kernels first (the
/// rank-one sign kernel at trial 0), then seeded samples.
RationalKernel trial_kernel(const InequalityEntry& e, const HarnessOptions& o, int trial);

EntryReport check_entry(const InequalityEntry& e, const HarnessOptions& o);
std::vector<EntryReport> check_entries(const std::vector<InequalityEntry>& entries, const HarnessOptions& o);

std::vector<InequalityEntry> builtin_registry();
/// Throws InvalidArgument for an unknown id.
const InequalityEntry& find_entry(const std::vector<InequalityEntry>& registry, const std::string& id);

Json report_to_json(const EntryReport& r);

}  // namespace locsid
