#include "locsid/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "locsid/errors.hpp"

namespace locsid {

namespace {

std::size_t ix(int v) { return static_cast<std::size_t>(v); }

}  // namespace

int HangingPathSystem::value() const
{
  int total = 0;
  for (const auto& p : paths) total += std::max(0, static_cast<int>(p.size()) - 2);
  return total;
}

int HangingPathSystem::max_length() const
{
  int best = 0;
  for (const auto& p : paths) best = std::max(best, static_cast<int>(p.size()) - 1);
  return best;
}

std::vector<int> HangingPathSystem::lengths() const
{
  std::vector<int> out;
  for (const auto& p : paths) out.push_back(static_cast<int>(p.size()) - 1);
  return out;
}

std::string validate_hanging_paths(const Bigraph& f, const HangingPathSystem& system)
{
  const int n = f.node_count();
  const auto deg = f.degrees();
  std::multiset<std::pair<int, int>> edges;
  for (const auto& e : f.edges()) edges.emplace(e.first, e.second);
  auto has_edge = [&](int u, int v) {
    return f.side(u) == Side::first ? edges.count({u, v}) > 0 : edges.count({v, u}) > 0;
  };

  std::vector<int> internal_owner(ix(n), -1);
  std::vector<int> ends(ix(n), 0);
  for (std::size_t k = 0; k < system.paths.size(); ++k) {
    const auto& p = system.paths[k];
    const std::string where = "path " + std::to_string(k);
    if (p.size() < 2) return where + " has no edge";
    std::set<int> seen;
    for (int v : p) {
      if (v < 0 || v >= n) return where + " leaves the graph";
      if (!seen.insert(v).second) return where + " repeats node " + std::to_string(v);
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!has_edge(p[i], p[i + 1])) return where + " uses a missing edge";
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      int v = p[i];
      if (deg[ix(v)] != 2) return where + " has internal node " + std::to_string(v) + " of degree " + std::to_string(deg[ix(v)]);
      internal_owner[ix(v)] = static_cast<int>(k);
    }
    ++ends[ix(p.front())];
    ++ends[ix(p.back())];
  }
  for (std::size_t k = 0; k < system.paths.size(); ++k) {
    const auto& p = system.paths[k];
    for (std::size_t i = 0; i < p.size(); ++i) {
      int owner = internal_owner[ix(p[i])];
      if (owner >= 0 && owner != static_cast<int>(k)) {
        return "paths " + std::to_string(owner) + " and " + std::to_string(k) + " share node " + std::to_string(p[i]);
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (ends[ix(v)] > 2) return "node " + std::to_string(v) + " ends " + std::to_string(ends[ix(v)]) + " paths";
  }
  return {};
}

HangingPathSystem find_hanging_path_system(const Bigraph& f, int max_len)
{
  const int n = f.node_count();
  if (n > hanging_search_cap) throw CapExceeded("hanging path search", static_cast<std::uint64_t>(n), hanging_search_cap);
  if (max_len < 0) throw InvalidArgument("max_len must be non-negative");
  const auto deg = f.degrees();
  const auto adj = f.adjacency();

  // Candidates: simple paths of length 2..max_len with degree-2 interiors,
  // each kept in one orientation.
  std::vector<std::vector<int>> cand;
  std::set<std::vector<int>> seen;
  std::vector<int> cur;
  std::vector<char> on(ix(n), 0);
  std::function<void()> extend = [&]() {
    const int len = static_cast<int>(cur.size()) - 1;
    if (len >= 2) {
      auto rev = cur;
      std::reverse(rev.begin(), rev.end());
      const auto& key = std::min(cur, rev);
      if (seen.insert(key).second) cand.push_back(key);
    }
    if (len >= max_len) return;
    int last = cur.back();
    if (len >= 1 && deg[ix(last)] != 2) return;
    for (int w : adj[ix(last)]) {
      if (on[ix(w)]) continue;
      on[ix(w)] = 1;
      cur.push_back(w);
      extend();
      cur.pop_back();
      on[ix(w)] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    cur = {s};
    on[ix(s)] = 1;
    extend();
    on[ix(s)] = 0;
  }

  std::vector<std::vector<int>> through(ix(n));
  for (std::size_t c = 0; c < cand.size(); ++c) {
    for (std::size_t i = 1; i + 1 < cand[c].size(); ++i) through[ix(cand[c][i])].push_back(static_cast<int>(c));
  }

  // 0 free, 1 internal, 2 skipped.
  std::vector<int> state(ix(n), 0);
  std::vector<int> ends(ix(n), 0);
  std::vector<int> chosen;
  std::vector<int> best;
  int best_value = -1;
  int value = 0;

  auto fits = [&](const std::vector<int>& p) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (state[ix(p[i])] != 0 || ends[ix(p[i])] > 0) return false;
    }
    for (int v : {p.front(), p.back()}) {
      if (state[ix(v)] == 1 || ends[ix(v)] >= 2) return false;
    }
    return true;
  };

  std::function<void()> search = [&]() {
    int pick = -1;
    int open = 0;
    for (int v = 0; v < n; ++v) {
      if (deg[ix(v)] == 2 && state[ix(v)] == 0 && ends[ix(v)] == 0 && !through[ix(v)].empty()) {
        if (pick < 0) pick = v;
        ++open;
      }
    }
    if (value + open <= best_value) return;
    if (pick < 0) {
      best_value = value;
      best = chosen;
      return;
    }
    for (int c : through[ix(pick)]) {
      const auto& p = cand[ix(c)];
      if (!fits(p)) continue;
      for (std::size_t i = 1; i + 1 < p.size(); ++i) state[ix(p[i])] = 1;
      ++ends[ix(p.front())];
      ++ends[ix(p.back())];
      chosen.push_back(c);
      value += static_cast<int>(p.size()) - 2;
      search();
      value -= static_cast<int>(p.size()) - 2;
      chosen.pop_back();
      --ends[ix(p.front())];
      --ends[ix(p.back())];
      for (std::size_t i = 1; i + 1 < p.size(); ++i) state[ix(p[i])] = 0;
    }
    state[ix(pick)] = 2;
    search();
    state[ix(pick)] = 0;
  };
  search();

  HangingPathSystem out;
  for (int c : best) out.paths.push_back(cand[ix(c)]);
  return out;
}

RootedTree rooted_tree_from_parents(const std::vector<int>& parent)
{
  const int n = static_cast<int>(parent.size());
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (parent[ix(v)] == -1) {
      if (root >= 0) throw InvalidArgument("parent array has two roots");
      root = v;
    } else if (parent[ix(v)] < 0 || parent[ix(v)] >= n || parent[ix(v)] == v) {
      throw InvalidArgument("parent array entry out of range");
    }
  }
  if (root < 0) throw InvalidArgument("parent array has no root");
  std::vector<int> depth(ix(n), -1);
  depth[ix(root)] = 0;
  std::function<int(int, int)> depth_of = [&](int v, int steps) -> int {
    if (depth[ix(v)] >= 0) return depth[ix(v)];
    if (steps > n) throw InvalidArgument("parent array has a cycle");
    return depth[ix(v)] = depth_of(parent[ix(v)], steps + 1) + 1;
  };
  std::vector<Side> sides;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) sides.push_back(depth_of(v, 0) % 2 == 0 ? Side::first : Side::second);
  for (int v = 0; v < n; ++v) {
    if (v != root) edges.emplace_back(parent[ix(v)], v);
  }
  return {Bigraph(sides, edges), root};
}

void validate_tree(const RootedTree& t)
{
  const int n = t.tree.node_count();
  if (t.root < 0 || t.root >= n) throw InvalidArgument("root is not a node of the tree");
  if (t.tree.edge_count() != n - 1 || !is_connected(t.tree)) throw InvalidArgument("graph is not a tree");
}

namespace {

struct TreeShape {
  std::vector<std::vector<int>> children;
  std::vector<int> height;  // longest distance down to a leaf
  std::vector<int> low;     // shortest distance down to a leaf
};

TreeShape shape_of(const RootedTree& t)
{
  validate_tree(t);
  const int n = t.tree.node_count();
  const auto adj = t.tree.adjacency();
  TreeShape s;
  s.children.resize(ix(n));
  s.height.assign(ix(n), 0);
  s.low.assign(ix(n), 0);
  std::vector<int> order{t.root};
  std::vector<int> parent(ix(n), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int w : adj[ix(v)]) {
      if (w == t.root || w == parent[ix(v)]) continue;
      parent[ix(w)] = v;
      s.children[ix(v)].push_back(w);
      order.push_back(w);
    }
  }
  for (auto& c : s.children) std::sort(c.begin(), c.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (s.children[ix(v)].empty()) continue;
    int hi = 0;
    int lo = n;
    for (int c : s.children[ix(v)]) {
      hi = std::max(hi, s.height[ix(c)] + 1);
      lo = std::min(lo, s.low[ix(c)] + 1);
    }
    s.height[ix(v)] = hi;
    s.low[ix(v)] = lo;
  }
  return s;
}

bool is_leaf(const RootedTree& t, const TreeShape& s, int v) { return v != t.root && s.children[ix(v)].empty(); }

}  // namespace

TreeStats tree_stats(const RootedTree& t)
{
  auto s = shape_of(t);
  return {s.low[ix(t.root)], s.height[ix(t.root)]};
}

int mirror_node(const RootedTree& t, int v)
{
  auto s = shape_of(t);
  if (is_leaf(t, s, v)) return v;
  int id = t.tree.node_count();
  for (int u = 0; u < v; ++u) id += !is_leaf(t, s, u);
  return id;
}

namespace {

std::vector<int> mirror_table(const RootedTree& t, const TreeShape& s)
{
  const int n = t.tree.node_count();
  std::vector<int> m(ix(n));
  int next = n;
  for (int v = 0; v < n; ++v) m[ix(v)] = is_leaf(t, s, v) ? v : next++;
  return m;
}

}  // namespace

Bigraph double_tree(const RootedTree& t)
{
  auto s = shape_of(t);
  const auto m = mirror_table(t, s);
  const int n = t.tree.node_count();
  std::vector<Side> sides = t.tree.sides();
  for (int v = 0; v < n; ++v) {
    if (!is_leaf(t, s, v)) sides.push_back(t.tree.side(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : t.tree.edges()) {
    edges.emplace_back(e.first, e.second);
    edges.emplace_back(m[ix(e.first)], m[ix(e.second)]);
  }
  return Bigraph(sides, edges);
}

HangingPathSystem double_tree_hps(const RootedTree& t)
{
  auto s = shape_of(t);
  if (t.tree.node_count() < 2) throw InvalidArgument("tree needs at least one edge");
  const auto m = mirror_table(t, s);

  // Deepest first; ties by smaller id.
  auto by_depth = [&](std::vector<int> kids) {
    std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) { return s.height[ix(a)] > s.height[ix(b)]; });
    return kids;
  };

  HangingPathSystem out;
  auto mirrored = [&](const std::vector<int>& p) {
    std::vector<int> q;
    for (int v : p) q.push_back(m[ix(v)]);
    return q;
  };

  // Subtree made of `root` and the branch below `child`.
  std::function<void(int, int)> branch = [&](int root, int child) {
    std::vector<int> path{root, child};
    int v = child;
    while (s.children[ix(v)].size() == 1) {
      v = s.children[ix(v)][0];
      path.push_back(v);
    }
    const int a = static_cast<int>(path.size()) - 1;
    if (s.children[ix(v)].empty()) {
      if (a == 1) {
        out.paths.push_back({root, v, m[ix(root)]});
      } else {
        out.paths.push_back(path);
        auto back = mirrored(path);
        std::reverse(back.begin(), back.end());
        out.paths.push_back(back);
      }
      return;
    }
    auto kids = by_depth(s.children[ix(v)]);
    branch(v, kids[0]);
    if (a == 1) {
      branch(v, kids[1]);
    } else {
      if (!s.children[ix(kids[1])].empty()) branch(kids[1], by_depth(s.children[ix(kids[1])])[0]);
      out.paths.push_back(path);
      out.paths.push_back(mirrored(path));
    }
  };
  branch(t.root, by_depth(s.children[ix(t.root)])[0]);
  return out;
}

std::string to_string(TermTag tag)
{
  switch (tag) {
    case TermTag::Empty: return "Empty";
    case TermTag::HasIsolatedEdgeComponent: return "HasIsolatedEdgeComponent";
    case TermTag::Star: return "Star";
    case TermTag::TwoEndnodesNonStar: return "TwoEndnodesNonStar";
    case TermTag::CompleteBipartiteNonStar: return "CompleteBipartiteNonStar";
    case TermTag::SingleCycle: return "SingleCycle";
    case TermTag::MinDegreeTwoOther: return "MinDegreeTwoOther";
    case TermTag::OneEndnode: return "OneEndnode";
    case TermTag::Composite: return "Composite";
  }
  return "?";
}

namespace {

ComponentClass classify_component(const Bigraph& f, const std::vector<int>& nodes)
{
  ComponentClass c;
  c.nodes = nodes;
  Bigraph sub = induced_subgraph(f, nodes);
  const int n = sub.node_count();
  const int m = sub.edge_count();
  const auto d = sub.degrees();
  int endnodes = 0;
  int min_deg = m;
  int max_at = 0;
  for (int v = 0; v < n; ++v) {
    endnodes += d[ix(v)] == 1;
    min_deg = std::min(min_deg, d[ix(v)]);
    if (d[ix(v)] > d[ix(max_at)]) max_at = v;
  }
  c.girth = girth(sub);
  if (n == 2 && m == 1) {
    c.tag = TermTag::HasIsolatedEdgeComponent;
    return c;
  }
  if (sub.is_simple() && m == n - 1 && d[ix(max_at)] == m) {
    c.tag = TermTag::Star;
    c.center = nodes[ix(max_at)];
    return c;
  }
  if (endnodes >= 2) {
    c.tag = TermTag::TwoEndnodesNonStar;
    return c;
  }
  if (min_deg == 2 && d[ix(max_at)] == 2) {
    c.tag = TermTag::SingleCycle;
    return c;
  }
  const int a = sub.count_side(Side::first);
  const int b = n - a;
  if (sub.is_simple() && a >= 2 && b >= 2 && m == a * b) {
    c.tag = TermTag::CompleteBipartiteNonStar;
    return c;
  }
  c.tag = min_deg >= 2 ? TermTag::MinDegreeTwoOther : TermTag::OneEndnode;
  return c;
}

}  // namespace

TermClass classify_term(const Bigraph& f)
{
  TermClass out;
  const auto deg = f.degrees();
  for (int v = 0; v < f.node_count(); ++v) {
    if (deg[ix(v)] == 0) throw InvalidArgument("term has an isolated node");
  }
  for (const auto& comp : connected_components(f)) out.components.push_back(classify_component(f, comp));
  if (out.components.empty()) return out;
  for (const auto& c : out.components) out.girth = std::min(out.girth, c.girth);
  bool has_edge = std::any_of(out.components.begin(), out.components.end(),
                              [](const ComponentClass& c) { return c.tag == TermTag::HasIsolatedEdgeComponent; });
  if (has_edge) {
    out.tag = TermTag::HasIsolatedEdgeComponent;
  } else if (out.components.size() == 1) {
    out.tag = out.components[0].tag;
  } else {
    out.tag = TermTag::Composite;
  }
  return out;
}

}  // namespace locsid
