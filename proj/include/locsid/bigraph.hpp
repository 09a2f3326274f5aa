#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace locsid {

enum class Side : std::uint8_t { first = 0, second = 1 };

inline Side opposite(Side s) { return s == Side::first ? Side::second : Side::first; }

/// An edge always joins a first-side node to a second-side node.
struct Edge {
  int first = 0;
  int second = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Bipartite multigraph with a fixed ordered bipartition and an optional
/// labeling of k nodes by 1..k. Nodes are the integers 0..n-1; the edge list
/// is a sorted multiset, so two values compare equal iff they have identical
/// node numbering, sides, edges and labels.
class Bigraph {
 public:
  Bigraph() = default;

  /// `edges` may list endpoints in either order; each pair must cross sides.
  /// `labels[k]` is the node carrying label k+1.
  Bigraph(std::vector<Side> sides, const std::vector<std::pair<int, int>>& edges, std::vector<int> labels = {});

  int node_count() const { return static_cast<int>(sides_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int label_count() const { return static_cast<int>(labels_.size()); }

  Side side(int v) const { return sides_[static_cast<std::size_t>(v)]; }
  const std::vector<Side>& sides() const { return sides_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& labels() const { return labels_; }

  /// Label index (0-based) carried by v, or -1.
  int label_of(int v) const;
  std::vector<int> degrees() const;
  /// Neighbor lists; a neighbor appears once per parallel edge.
  std::vector<std::vector<int>> adjacency() const;
  bool is_simple() const;
  int count_side(Side s) const;

  friend bool operator==(const Bigraph&, const Bigraph&) = default;

 private:
  std::vector<Side> sides_;
  std::vector<Edge> edges_;
  std::vector<int> labels_;
};

enum class Family {
  path,                         // P_n: n nodes, n-1 edges
  labeled_path,                 // P'_n: one endpoint labeled
  doubly_labeled_path,          // P''_n: both endpoints labeled
  cycle,                        // C_n, n even
  rooted_cycle,                 // C'_n
  complete_bipartite,           // K_{a,b}
  labeled_complete_bipartite,   // K'_{a,b}: the a-class labeled 1..a
  empty,                        // K_0
  edge,                         // K_2
};

struct FamilySpec {
  Family kind = Family::empty;
  int a = 0;
  int b = 0;
};

/// Node 0 of paths and cycles is on the first side; complete bipartite
/// graphs put their a-class on the first side.
Bigraph construct_family(const FamilySpec& spec);

Bigraph path_graph(int nodes);
Bigraph cycle_graph(int nodes);
Bigraph complete_bipartite(int a, int b);

/// Paths of the given lengths (edge counts) joining a first-side node to a
/// common second node; all lengths must have equal parity.
Bigraph theta_graph(const std::vector<int>& lengths);

/// Disjoint union followed by identification of equally labeled nodes.
Bigraph glue(const Bigraph& f1, const Bigraph& f2);
Bigraph unlabel(const Bigraph& f);
/// unlabel(glue(f1, f2)).
Bigraph glue_product(const Bigraph& f1, const Bigraph& f2);
/// glue_product(f, f).
Bigraph square(const Bigraph& f);
/// One new node on every edge; original nodes on the first side.
Bigraph subdivide(const Bigraph& f);
Bigraph transpose(const Bigraph& f);
/// Labels of f1 keep their indices; labels of f2 are numbered after them.
Bigraph disjoint_union(const Bigraph& f1, const Bigraph& f2);

/// Keeps the edges whose bit is set in `keep` (bit i = edges()[i]); all
/// nodes survive.
Bigraph edge_subgraph(const Bigraph& f, std::uint64_t keep);
/// Removes unlabeled nodes of degree 0, renumbering the rest in order.
Bigraph remove_isolated_nodes(const Bigraph& f);
/// Deletes edges inside `subset` and labels the subset (in the given order).
Bigraph erase_within(const Bigraph& f, std::span<const int> subset);
/// Node v of f becomes node perm[v].
Bigraph relabel_nodes(const Bigraph& f, std::span<const int> perm);
Bigraph with_labels(const Bigraph& f, std::vector<int> labels);

inline constexpr int infinite_girth = std::numeric_limits<int>::max();

struct StructureInfo {
  int girth = infinite_girth;
  std::vector<int> degrees;
  std::vector<std::vector<int>> components;
  int endnode_count = 0;
  /// Pairs of degree-1 nodes joined by an edge (isolated K_2 components).
  std::vector<std::pair<int, int>> adjacent_endnodes;
  bool is_star = false;
  bool is_single_cycle = false;
  bool is_complete_bipartite = false;
  int min_degree = 0;
};

StructureInfo structure_queries(const Bigraph& f);
int girth(const Bigraph& f);
/// Isolated nodes form singleton components. Components are sorted lists,
/// ordered by smallest node.
std::vector<std::vector<int>> connected_components(const Bigraph& f);
bool is_connected(const Bigraph& f);
/// Subgraph induced by the given nodes (renumbered in the order given).
Bigraph induced_subgraph(const Bigraph& f, std::span<const int> nodes);

}  // namespace locsid
