#pragma once

#include <utility>
#include <vector>

#include "locsid/bigraph.hpp"

namespace locsid {

/// Simple undirected graph on nodes 0..n-1 (the target side of hom counts).
class PlainGraph {
 public:
  PlainGraph() = default;
  /// Rejects loops, parallel edges and out-of-range endpoints.
  PlainGraph(int nodes, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  /// Sorted, with u < v in each pair.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u * n_ + v)] != 0; }
  int degree(int v) const;

  friend bool operator==(const PlainGraph& a, const PlainGraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<char> adj_;
};

PlainGraph complete_graph(int n);

/// Forgets sides and labels; f must be simple.
PlainGraph plain_from_bigraph(const Bigraph& f);

/// Two-colors g, each component's smallest node going to the first side.
/// Throws InvalidArgument when g has an odd cycle.
Bigraph bigraph_from_plain(const PlainGraph& g);

}  // namespace locsid
