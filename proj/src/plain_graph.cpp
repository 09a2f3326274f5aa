#include "locsid/plain_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "locsid/errors.hpp"

namespace locsid {

PlainGraph::PlainGraph(int nodes, const std::vector<std::pair<int, int>>& edges) : n_(nodes)
{
  if (nodes < 0) throw InvalidArgument("negative node count");
  adj_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a missing node");
    }
    if (u == v) throw InvalidArgument("loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) {
      throw InvalidArgument("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    adj_[static_cast<std::size_t>(u * n_ + v)] = 1;
    adj_[static_cast<std::size_t>(v * n_ + u)] = 1;
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

int PlainGraph::degree(int v) const
{
  int d = 0;
  for (int w = 0; w < n_; ++w) d += adjacent(v, w);
  return d;
}

PlainGraph complete_graph(int n)
{
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return PlainGraph(n, edges);
}

PlainGraph plain_from_bigraph(const Bigraph& f)
{
  if (!f.is_simple()) throw InvalidArgument("graph has parallel edges");
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : f.edges()) edges.emplace_back(e.first, e.second);
  return PlainGraph(f.node_count(), edges);
}

Bigraph bigraph_from_plain(const PlainGraph& g)
{
  const int n = g.node_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
          throw InvalidArgument("graph is not bipartite");
        }
      }
    }
  }
  std::vector<Side> sides;
  for (int c : color) sides.push_back(c == 0 ? Side::first : Side::second);
  return Bigraph(std::move(sides), g.edges());
}

}  // namespace locsid
