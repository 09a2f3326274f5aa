#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "locsid/bigraph.hpp"
#include "locsid/canonical.hpp"
#include "locsid/kernel.hpp"
#include "locsid/plain_graph.hpp"

namespace locsid {

/// Elimination order for the free nodes of a pattern. `width` is the largest
/// number of other variables a step's summed factor depends on; `cost` is
/// the predicted work, sum over steps of blocks^(width_step + 1).
struct ContractionPlan {
  std::vector<int> order;
  std::vector<int> step_width;
  int width = 0;
  double cost = 0;
};

/// Greedy min-fill, then min-degree, then smallest node id. Nodes in
/// `anchored` are fixed and never eliminated. Parallel edges count once.
ContractionPlan plan_contraction(const Bigraph& f, const std::vector<int>& anchored = {}, int blocks = 1);

inline constexpr std::uint64_t default_table_cap = std::uint64_t{1} << 26;

struct DensityOptions {
  /// Largest intermediate table (entries) before CapExceeded.
  std::uint64_t table_cap = default_table_cap;
};

/// t(F, K): first-side nodes range over row blocks, second-side nodes over
/// column blocks, and every edge contributes a factor K(x_first, y_second).
template <Scalar T>
T density(const Bigraph& f, const StepKernel<T>& k, const DensityOptions& options = {});

/// density with an explicit elimination order (a permutation of all nodes).
template <Scalar T>
T density_with_order(const Bigraph& f, const StepKernel<T>& k, const std::vector<int>& order);

/// Direct sum over all blocks^n assignments.
template <Scalar T>
T brute_force_density(const Bigraph& f, const StepKernel<T>& k);

/// t_{x_1..x_k}(F, K) with label i's node pinned to block anchors[i - 1]
/// (a row block for first-side labels, a column block otherwise).
template <Scalar T>
T rooted_density(const Bigraph& f, const StepKernel<T>& k, const std::vector<int>& anchors,
                 const DensityOptions& options = {});

/// hom(F, G) for simple G, exact.
BigInt hom_count(const Bigraph& f, const PlainGraph& g);

/// r-th Schatten norm t(C_{2r}, K)^{1/(2r)}.
template <Scalar T>
double schatten_norm(const StepKernel<T>& k, int r);

/// Node tables over edge variables. The multigraph (any, not necessarily
/// bipartite) has edges (u, v); edge variable e ranges over blocks with
/// measures edge_measures[e]. Node i's table is indexed by the block values
/// of its incident edges, taken in increasing edge index (an edge appears
/// once), the first incident edge varying slowest.
template <Scalar T>
struct EdgeFactorModel {
  int nodes = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<T>> edge_measures;
  std::vector<std::vector<T>> tables;

  std::vector<int> incident(int node) const;
  /// Throws InvalidArgument when table sizes do not match.
  void validate() const;
};

/// tr(G, f) = integral over I^E of the product of the node tables.
template <Scalar T>
T edge_factor_value(const EdgeFactorModel<T>& model, const DensityOptions& options = {});

/// ||f_i||_2 for node i's table under the product measure of its edges.
template <Scalar T>
T node_factor_norm_squared(const EdgeFactorModel<T>& model, int node);
template <Scalar T>
double node_factor_norm(const EdgeFactorModel<T>& model, int node);

/// Densities of spanning terms keyed by side-preserving canonical form, so
/// isomorphic terms are evaluated once. Terms above the canonical cap are
/// keyed by their exact structure.
template <Scalar T>
class DensityCache {
 public:
  explicit DensityCache(StepKernel<T> k) : k_(std::move(k)) {}
  const T& get(const Bigraph& f);
  const StepKernel<T>& kernel() const { return k_; }
  std::size_t size() const { return cache_.size(); }

 private:
  StepKernel<T> k_;
  std::unordered_map<std::string, T> cache_;
};

/// Identity of a term for grouping: canonical key when within the cap,
/// otherwise the exact edge structure.
std::string term_key(const Bigraph& f);

template <Scalar T>
struct ExpansionEntry {
  std::string key;
  std::string name;
  Bigraph representative;
  std::uint64_t multiplicity = 0;
  T value{};
};

template <Scalar T>
struct ExpansionLedger {
  /// Ordered by first occurrence in edge-mask order.
  std::vector<ExpansionEntry<T>> entries;
  T total{};
};

/// t(F, 1 + U) = sum over spanning subgraphs F' of t(F', U).
template <Scalar T>
ExpansionLedger<T> expansion(const Bigraph& f, const StepKernel<T>& u, int edge_cap = 20);

}  // namespace locsid
