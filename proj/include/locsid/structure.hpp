#pragma once

#include <string>
#include <vector>

#include "locsid/bigraph.hpp"

namespace locsid {

/// Openly disjoint paths (node sequences) whose internal nodes have degree 2
/// in the host graph, with at most two paths ending at any node.
struct HangingPathSystem {
  std::vector<std::vector<int>> paths;

  /// Total number of internal nodes.
  int value() const;
  /// Longest path, in edges.
  int max_length() const;
  std::vector<int> lengths() const;
};

/// Empty when `system` is a valid hanging path system in f, otherwise the
/// first violated condition.
std::string validate_hanging_paths(const Bigraph& f, const HangingPathSystem& system);

inline constexpr int hanging_search_cap = 16;

/// Maximum-value system whose paths have length at most max_len (paths of
/// length 1 add nothing and are never chosen). Exact branch and bound;
/// throws CapExceeded above hanging_search_cap nodes.
HangingPathSystem find_hanging_path_system(const Bigraph& f, int max_len);

/// A tree with a distinguished root. Nodes at even depth are on the first side.
struct RootedTree {
  Bigraph tree;
  int root = 0;
};

/// parent[v] is v's parent; exactly one entry is -1 (the root).
RootedTree rooted_tree_from_parents(const std::vector<int>& parent);
/// Throws InvalidArgument unless t.tree is a tree containing t.root.
void validate_tree(const RootedTree& t);

struct TreeStats {
  /// Smallest and largest distance from the root to a leaf, where a leaf
  /// is a non-root node of degree 1. Both are 0 for a single node.
  int min_depth = 0;
  int depth = 0;
};

TreeStats tree_stats(const RootedTree& t);

/// Two copies of the tree with corresponding leaves identified. Node v of
/// the tree keeps id v; the mirror copies of non-leaf nodes follow in
/// increasing order of v. The root is not a leaf and is never identified.
Bigraph double_tree(const RootedTree& t);
/// Node id of the mirror image of tree node v inside double_tree(t).
int mirror_node(const RootedTree& t, int v);

/// The recursive construction (prune to the deepest root branch, then split
/// on the length a of the root path) producing a system in double_tree(t)
/// of value >= depth + max(0, min_depth - 3) with paths no longer than
/// max(depth, 2). Throws InvalidArgument for a single-node tree.
HangingPathSystem double_tree_hps(const RootedTree& t);

enum class TermTag {
  Empty,
  HasIsolatedEdgeComponent,
  Star,
  TwoEndnodesNonStar,
  CompleteBipartiteNonStar,
  SingleCycle,
  MinDegreeTwoOther,
  OneEndnode,
  /// Several components, none of them K_2.
  Composite,
};

std::string to_string(TermTag tag);

struct ComponentClass {
  TermTag tag = TermTag::Empty;
  /// infinite_girth for trees.
  int girth = infinite_girth;
  std::vector<int> nodes;
  /// Star center, otherwise -1.
  int center = -1;
};

struct TermClass {
  TermTag tag = TermTag::Empty;
  int girth = infinite_girth;
  std::vector<ComponentClass> components;
};

/// Per-component classification, first match wins: K_2; star (all edges
/// share a node); at least two degree-1 nodes; 2-regular; complete bipartite
/// with both classes >= 2; minimum degree >= 2; exactly one degree-1 node.
/// Throws InvalidArgument when f has an isolated node.
TermClass classify_term(const Bigraph& f);

}  // namespace locsid
