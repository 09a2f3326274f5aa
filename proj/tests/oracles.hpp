#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls the contraction engine or the canonical-form search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "locsid/bigraph.hpp"
#include "locsid/kernel.hpp"
#include "locsid/plain_graph.hpp"
#include "locsid/scalar.hpp"

namespace oracle {

using locsid::Bigraph;
using locsid::PlainGraph;
using locsid::Rational;
using locsid::Side;

/// Number of maps V(F) -> V(G) sending every edge to an edge.
inline std::uint64_t hom_count(const Bigraph& f, const PlainGraph& g)
{
  const int n = f.node_count();
  const int N = g.node_count();
  if (n == 0) return 1;
  if (N == 0) return 0;
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (const auto& e : f.edges()) {
      if (!g.adjacent(x[static_cast<std::size_t>(e.first)], x[static_cast<std::size_t>(e.second)])) {
        ok = false;
        break;
      }
    }
    count += ok;
    int p = n - 1;
    while (p >= 0 && ++x[static_cast<std::size_t>(p)] == N) x[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
  }
  return count;
}

/// Sum over all block assignments, multiplying values edge by edge.
inline Rational density(const Bigraph& f, const locsid::RationalKernel& k)
{
  const int n = f.node_count();
  std::vector<int> size;
  for (int v = 0; v < n; ++v) size.push_back(f.side(v) == Side::first ? k.rows() : k.cols());
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  Rational total = 0;
  while (true) {
    Rational term = 1;
    for (int v = 0; v < n; ++v) {
      term *= f.side(v) == Side::first ? k.row_measure(x[static_cast<std::size_t>(v)]) : k.col_measure(x[static_cast<std::size_t>(v)]);
    }
    for (const auto& e : f.edges()) term *= k.at(x[static_cast<std::size_t>(e.first)], x[static_cast<std::size_t>(e.second)]);
    total += term;
    int p = n - 1;
    while (p >= 0 && ++x[static_cast<std::size_t>(p)] == size[static_cast<std::size_t>(p)]) x[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
  }
  return total;
}

/// Isomorphism by trying every side-preserving, label-preserving bijection.
inline bool isomorphic(const Bigraph& a, const Bigraph& b)
{
  const int n = a.node_count();
  if (n != b.node_count() || a.edge_count() != b.edge_count() || a.label_count() != b.label_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      ok = a.side(v) == b.side(perm[static_cast<std::size_t>(v)]) && a.label_of(v) == b.label_of(perm[static_cast<std::size_t>(v)]);
    }
    if (!ok) continue;
    std::vector<std::pair<int, int>> mapped;
    for (const auto& e : a.edges()) {
      mapped.emplace_back(perm[static_cast<std::size_t>(e.first)], perm[static_cast<std::size_t>(e.second)]);
    }
    std::sort(mapped.begin(), mapped.end());
    std::vector<std::pair<int, int>> target;
    for (const auto& e : b.edges()) target.emplace_back(e.first, e.second);
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Shortest cycle length by trying every closed walk start and BFS layers
/// on the simple graph; 2 for multigraphs; 0 when acyclic.
inline int girth(const Bigraph& f)
{
  if (!f.is_simple()) return 2;
  const int n = f.node_count();
  int best = 0;
  // Remove each edge and measure the distance between its endpoints.
  for (std::size_t skip = 0; skip < f.edges().size(); ++skip) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    const auto& e = f.edges()[skip];
    dist[static_cast<std::size_t>(e.first)] = 0;
    std::vector<int> frontier{e.first};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int v : frontier) {
        for (std::size_t k = 0; k < f.edges().size(); ++k) {
          if (k == skip) continue;
          const auto& g = f.edges()[k];
          int w = g.first == v ? g.second : (g.second == v ? g.first : -1);
          if (w >= 0 && dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            next.push_back(w);
          }
        }
      }
      frontier = std::move(next);
    }
    int d = dist[static_cast<std::size_t>(e.second)];
    if (d >= 0 && (best == 0 || d + 1 < best)) best = d + 1;
  }
  return best;
}

/// All connected bigraphs with exactly n nodes (simple), one per
/// side-preserving isomorphism class, deduplicated with `isomorphic`.
inline std::vector<Bigraph> connected_bigraphs(int n)
{
  std::vector<Bigraph> out;
  for (int a = 1; a < n; ++a) {
    const int b = n - a;
    std::vector<Side> sides;
    for (int i = 0; i < a; ++i) sides.push_back(Side::first);
    for (int i = 0; i < b; ++i) sides.push_back(Side::second);
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < a; ++i) {
      for (int j = a; j < n; ++j) all.emplace_back(i, j);
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if ((mask >> k) & 1u) edges.push_back(all[k]);
      }
      Bigraph f(sides, edges);
      if (!locsid::is_connected(f)) continue;
      bool seen = false;
      for (const auto& g : out) {
        if (oracle::isomorphic(f, g)) {
          seen = true;
          break;
        }
      }
      if (!seen) out.push_back(f);
    }
  }
  if (n == 1) out.push_back(Bigraph({Side::first}, {}));
  return out;
}

/// All labeled simple graphs on n nodes.
inline std::vector<PlainGraph> labeled_graphs(int n)
{
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::vector<PlainGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(all[k]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

/// Canonical string of a plain graph: lexicographically smallest adjacency
/// matrix over all permutations compatible with degree order (exact for the
/// small sizes used here).
inline std::string plain_canonical(const PlainGraph& g)
{
  const int n = g.node_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::sort(perm.begin(), perm.end(), [&](int x, int y) { return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y; });
  // Groups of equal degree are permuted independently.
  std::vector<std::pair<int, int>> groups;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && g.degree(perm[static_cast<std::size_t>(j)]) == g.degree(perm[static_cast<std::size_t>(i)])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (gi == groups.size()) {
      std::string code;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) code.push_back(g.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]) ? '1' : '0');
      }
      if (best.empty() || code < best) best = code;
      return;
    }
    auto [lo, hi] = groups[gi];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      rec(gi + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  rec(0);
  return std::to_string(n) + ":" + best;
}

/// Unlabeled simple graphs on exactly n nodes, built by adding one node at a
/// time to every graph on n-1 nodes, with every possible neighborhood.
inline std::vector<PlainGraph> unlabeled_graphs(int n)
{
  std::vector<PlainGraph> level{PlainGraph(n == 0 ? 0 : 1, {})};
  if (n == 0) return level;
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, PlainGraph> next;
    for (const auto& g : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (size - 1)); ++mask) {
        auto edges = g.edges();
        for (int u = 0; u < size - 1; ++u) {
          if ((mask >> u) & 1u) edges.emplace_back(u, size - 1);
        }
        PlainGraph h(size, edges);
        next.emplace(plain_canonical(h), h);
      }
    }
    level.clear();
    for (auto& [key, g] : next) level.push_back(g);
  }
  return level;
}

/// Rooted unlabeled trees with exactly n nodes as parent arrays (node 0 is
/// the root), deduplicated by the AHU encoding.
inline std::string ahu(const std::vector<std::vector<int>>& children, int v)
{
  std::vector<std::string> parts;
  for (int c : children[static_cast<std::size_t>(v)]) parts.push_back(ahu(children, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

inline std::vector<std::vector<int>> rooted_trees(int n)
{
  std::map<std::string, std::vector<int>> level{{"()", {-1}}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, std::vector<int>> next;
    for (const auto& [code, parent] : level) {
      for (int p = 0; p < size - 1; ++p) {
        auto q = parent;
        q.push_back(p);
        std::vector<std::vector<int>> children(static_cast<std::size_t>(size));
        for (int v = 1; v < size; ++v) children[static_cast<std::size_t>(q[static_cast<std::size_t>(v)])].push_back(v);
        next.emplace(ahu(children, 0), q);
      }
    }
    level = std::move(next);
  }
  std::vector<std::vector<int>> out;
  for (auto& [code, parent] : level) out.push_back(parent);
  return out;
}

}  // namespace oracle
