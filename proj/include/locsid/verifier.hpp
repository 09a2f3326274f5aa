#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locsid/bigraph.hpp"
#include "locsid/io.hpp"
#include "locsid/kernel.hpp"
#include "locsid/plain_graph.hpp"
#include "locsid/scalar.hpp"

namespace locsid {

enum class Variant {
  /// ||W-1||_cut <= 2^-8m and 0 <= W <= 2.
  close,
  /// ||W-1||_inf <= 1/(4m).
  infty,
  /// t(C_4, W-1) <= 2^-4m and 0 <= W <= 2.
  c4,
  /// ||W-1||_cut <= 2^(-1-8m), the block density condition, and t(F,W) >= 1 - eps.
  reg,
};

std::string to_string(Variant v);
/// Throws InvalidArgument for unknown names.
Variant variant_from_string(const std::string& name);

enum class Verdict {
  certified,
  hypotheses_failed,
  bound_chain_failed_but_exact_total_ok,
  failed,
};

std::string to_string(Verdict v);

struct HypothesisCheck {
  std::string name;
  Rational value;
  /// "<=", ">=" or "=".
  std::string relation;
  Rational threshold;
  bool holds = false;
};

/// One bucket of spanning terms of the expansion of t(F, 1+U).
struct CaseEntry {
  std::string name;
  int terms = 0;
  Rational exact;
  /// Lower bound for `exact` given by the corresponding density inequality;
  /// equal to `exact` for buckets taken as they are.
  Rational bound;
  bool holds = true;
  std::string note;
};

struct RegularityInfo {
  Partition partition;
  int row_classes = 0;
  int col_classes = 0;
  Rational discrepancy;
  Rational target;
  int steps = 0;
};

struct Certificate {
  Variant variant = Variant::close;
  std::string graph;
  int m = 0;
  int n = 0;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<CaseEntry> cases;
  Rational expansion_total;
  Rational density;
  /// 1 for every variant except reg, where it is 1 - eps.
  Rational required;
  Rational chain_lower;
  bool chain_holds = false;
  /// False for variants whose proof is not the per-case chain.
  bool chain_applies = true;
  Verdict verdict = Verdict::failed;
  std::vector<std::string> notes;
  /// reg only.
  std::optional<RegularityInfo> regularity;
  std::vector<Certificate> inner;
};

/// Rational r >= x^(1/k) with r / x^(1/k) - 1 below about 1e-9.
Rational root_upper(const Rational& x, unsigned k);

/// Throws InvalidArgument for a non-simple F and CapExceeded when F has too
/// many edges to expand or W too many blocks for an exact cut norm.
Certificate verify_close(const Bigraph& f, const RationalKernel& w);
/// eps is used by reg only and must lie in (0, 2^(-1-8m)).
Certificate verify_variant(const Bigraph& f, const RationalKernel& w, Variant variant, const Rational& eps = 0);

struct RegularityResult {
  Partition partition;
  Rational discrepancy;
  int steps = 0;
};

/// Greedy refinement: split every class by the cut-norm witness of W - W_P
/// until ||W - W_P||_cut <= target. Throws CapExceeded when the number of
/// classes on a side would exceed class_cap.
RegularityResult weak_regularity_partition(const RationalKernel& w, const Rational& target, int class_cap = 1 << 20);

struct GraphCertificate {
  int n_nodes = 0;
  int edges = 0;
  int m = 0;
  Rational p;
  Rational eps;
  HypothesisCheck discrepancy;
  std::vector<int> discrepancy_s;
  std::vector<int> discrepancy_t;
  HypothesisCheck density_condition;
  std::vector<int> density_s;
  std::vector<int> density_t;
  Rational density;
  Rational floor;
  Verdict verdict = Verdict::failed;
  std::vector<std::string> notes;
};

inline constexpr int certify_graph_cap = 24;

/// Hypotheses checked by exhaustive subset enumeration (N <= 24), then the
/// exact t(F,G) from the homomorphism count compared with p^m - eps.
GraphCertificate certify_graph(const PlainGraph& g, const Bigraph& f, const Rational& eps, int threads = 1);

Json certificate_to_json(const Certificate& c);
Json certificate_to_json(const GraphCertificate& c);

}  // namespace locsid
