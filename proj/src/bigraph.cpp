#include "locsid/bigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "locsid/errors.hpp"

namespace locsid {

Bigraph::Bigraph(std::vector<Side> sides, const std::vector<std::pair<int, int>>& edges, std::vector<int> labels)
    : sides_(std::move(sides)), labels_(std::move(labels))
{
  const int n = node_count();
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") references a missing node");
    }
    if (side(u) == side(v)) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross the bipartition");
    }
    edges_.push_back(side(u) == Side::first ? Edge{u, v} : Edge{v, u});
  }
  std::sort(edges_.begin(), edges_.end());

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int node : labels_) {
    if (node < 0 || node >= n) throw InvalidArgument("label refers to missing node " + std::to_string(node));
    if (seen[static_cast<std::size_t>(node)]) {
      throw InvalidArgument("node " + std::to_string(node) + " carries two labels");
    }
    seen[static_cast<std::size_t>(node)] = true;
  }
}

int Bigraph::label_of(int v) const
{
  auto it = std::find(labels_.begin(), labels_.end(), v);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

std::vector<int> Bigraph::degrees() const
{
  std::vector<int> deg(sides_.size(), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<std::size_t>(e.first)];
    ++deg[static_cast<std::size_t>(e.second)];
  }
  return deg;
}

std::vector<std::vector<int>> Bigraph::adjacency() const
{
  std::vector<std::vector<int>> adj(sides_.size());
  for (const Edge& e : edges_) {
    adj[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  return adj;
}

bool Bigraph::is_simple() const
{
  return std::adjacent_find(edges_.begin(), edges_.end()) == edges_.end();
}

int Bigraph::count_side(Side s) const
{
  return static_cast<int>(std::count(sides_.begin(), sides_.end(), s));
}

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Bigraph& f)
{
  std::vector<std::pair<int, int>> out;
  out.reserve(f.edges().size());
  for (const Edge& e : f.edges()) out.emplace_back(e.first, e.second);
  return out;
}

std::vector<Side> alternating_sides(int n)
{
  std::vector<Side> sides(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sides[static_cast<std::size_t>(i)] = (i % 2 == 0) ? Side::first : Side::second;
  return sides;
}

void require_positive(int v, const char* what)
{
  if (v <= 0) throw InvalidArgument(std::string(what) + " must be positive, got " + std::to_string(v));
}

}  // namespace

Bigraph path_graph(int nodes)
{
  require_positive(nodes, "path node count");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < nodes; ++i) edges.emplace_back(i, i + 1);
  return Bigraph(alternating_sides(nodes), edges);
}

Bigraph cycle_graph(int nodes)
{
  require_positive(nodes, "cycle length");
  if (nodes % 2 != 0) throw InvalidArgument("odd cycle C_" + std::to_string(nodes) + " is not bipartite");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < nodes; ++i) edges.emplace_back(i, (i + 1) % nodes);
  return Bigraph(alternating_sides(nodes), edges);
}

Bigraph complete_bipartite(int a, int b)
{
  require_positive(a, "class size");
  require_positive(b, "class size");
  std::vector<Side> sides(static_cast<std::size_t>(a), Side::first);
  sides.resize(static_cast<std::size_t>(a + b), Side::second);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Bigraph(std::move(sides), edges);
}

Bigraph construct_family(const FamilySpec& spec)
{
  switch (spec.kind) {
    case Family::path:
      return path_graph(spec.a);
    case Family::labeled_path:
      return with_labels(path_graph(spec.a), {0});
    case Family::doubly_labeled_path:
      require_positive(spec.a - 1, "doubly labeled path length");
      return with_labels(path_graph(spec.a), {0, spec.a - 1});
    case Family::cycle:
      return cycle_graph(spec.a);
    case Family::rooted_cycle:
      return with_labels(cycle_graph(spec.a), {0});
    case Family::complete_bipartite:
      return complete_bipartite(spec.a, spec.b);
    case Family::labeled_complete_bipartite: {
      std::vector<int> labels(static_cast<std::size_t>(spec.a));
      std::iota(labels.begin(), labels.end(), 0);
      return with_labels(complete_bipartite(spec.a, spec.b), labels);
    }
    case Family::empty:
      return Bigraph();
    case Family::edge:
      return path_graph(2);
  }
  throw InvalidArgument("unknown family");
}

Bigraph theta_graph(const std::vector<int>& lengths)
{
  if (lengths.size() < 2) throw InvalidArgument("theta graph needs at least two paths");
  for (int len : lengths) require_positive(len, "theta path length");
  const int parity = lengths.front() % 2;
  for (int len : lengths) {
    if (len % 2 != parity) throw InvalidArgument("theta path lengths must share parity");
  }
  std::vector<Side> sides{Side::first, parity == 1 ? Side::second : Side::first};
  std::vector<std::pair<int, int>> edges;
  for (int len : lengths) {
    int prev = 0;
    for (int step = 1; step < len; ++step) {
      int node = static_cast<int>(sides.size());
      sides.push_back(step % 2 == 1 ? Side::second : Side::first);
      edges.emplace_back(prev, node);
      prev = node;
    }
    edges.emplace_back(prev, 1);
  }
  return Bigraph(std::move(sides), edges);
}

Bigraph with_labels(const Bigraph& f, std::vector<int> labels)
{
  return Bigraph(f.sides(), edge_pairs(f), std::move(labels));
}

Bigraph unlabel(const Bigraph& f) { return with_labels(f, {}); }

Bigraph glue(const Bigraph& f1, const Bigraph& f2)
{
  if (f1.label_count() != f2.label_count()) {
    throw InvalidArgument("cannot glue a " + std::to_string(f1.label_count()) + "-labeled graph to a " +
                          std::to_string(f2.label_count()) + "-labeled graph");
  }
  std::vector<Side> sides = f1.sides();
  std::vector<int> map(static_cast<std::size_t>(f2.node_count()), -1);
  for (int k = 0; k < f2.label_count(); ++k) {
    int a = f1.labels()[static_cast<std::size_t>(k)];
    int b = f2.labels()[static_cast<std::size_t>(k)];
    if (f1.side(a) != f2.side(b)) {
      throw InvalidArgument("label " + std::to_string(k + 1) + " sits on different sides in the two factors");
    }
    map[static_cast<std::size_t>(b)] = a;
  }
  for (int v = 0; v < f2.node_count(); ++v) {
    if (map[static_cast<std::size_t>(v)] < 0) {
      map[static_cast<std::size_t>(v)] = static_cast<int>(sides.size());
      sides.push_back(f2.side(v));
    }
  }
  std::vector<std::pair<int, int>> edges = edge_pairs(f1);
  for (const Edge& e : f2.edges()) {
    edges.emplace_back(map[static_cast<std::size_t>(e.first)], map[static_cast<std::size_t>(e.second)]);
  }
  return Bigraph(std::move(sides), edges, f1.labels());
}

Bigraph glue_product(const Bigraph& f1, const Bigraph& f2) { return unlabel(glue(f1, f2)); }

Bigraph square(const Bigraph& f) { return glue_product(f, f); }

Bigraph subdivide(const Bigraph& f)
{
  std::vector<Side> sides(static_cast<std::size_t>(f.node_count()), Side::first);
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : f.edges()) {
    int mid = static_cast<int>(sides.size());
    sides.push_back(Side::second);
    edges.emplace_back(e.first, mid);
    edges.emplace_back(e.second, mid);
  }
  return Bigraph(std::move(sides), edges, f.labels());
}

Bigraph transpose(const Bigraph& f)
{
  std::vector<Side> sides = f.sides();
  for (Side& s : sides) s = opposite(s);
  return Bigraph(std::move(sides), edge_pairs(f), f.labels());
}

Bigraph disjoint_union(const Bigraph& f1, const Bigraph& f2)
{
  std::vector<Side> sides = f1.sides();
  sides.insert(sides.end(), f2.sides().begin(), f2.sides().end());
  const int offset = f1.node_count();
  std::vector<std::pair<int, int>> edges = edge_pairs(f1);
  for (const Edge& e : f2.edges()) edges.emplace_back(e.first + offset, e.second + offset);
  std::vector<int> labels = f1.labels();
  for (int v : f2.labels()) labels.push_back(v + offset);
  return Bigraph(std::move(sides), edges, std::move(labels));
}

Bigraph edge_subgraph(const Bigraph& f, std::uint64_t keep)
{
  if (f.edge_count() > 64) throw CapExceeded("edge mask addresses at most 64 edges", static_cast<std::uint64_t>(f.edge_count()), 64);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < f.edge_count(); ++i) {
    if ((keep >> i) & 1u) {
      const Edge& e = f.edges()[static_cast<std::size_t>(i)];
      edges.emplace_back(e.first, e.second);
    }
  }
  return Bigraph(f.sides(), edges, f.labels());
}

Bigraph remove_isolated_nodes(const Bigraph& f)
{
  std::vector<int> deg = f.degrees();
  std::vector<int> map(static_cast<std::size_t>(f.node_count()), -1);
  std::vector<Side> sides;
  for (int v = 0; v < f.node_count(); ++v) {
    if (deg[static_cast<std::size_t>(v)] > 0 || f.label_of(v) >= 0) {
      map[static_cast<std::size_t>(v)] = static_cast<int>(sides.size());
      sides.push_back(f.side(v));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : f.edges()) {
    edges.emplace_back(map[static_cast<std::size_t>(e.first)], map[static_cast<std::size_t>(e.second)]);
  }
  std::vector<int> labels;
  for (int v : f.labels()) labels.push_back(map[static_cast<std::size_t>(v)]);
  return Bigraph(std::move(sides), edges, std::move(labels));
}

Bigraph erase_within(const Bigraph& f, std::span<const int> subset)
{
  std::vector<bool> in(static_cast<std::size_t>(f.node_count()), false);
  for (int v : subset) {
    if (v < 0 || v >= f.node_count()) throw InvalidArgument("subset node out of range");
    in[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : f.edges()) {
    if (!(in[static_cast<std::size_t>(e.first)] && in[static_cast<std::size_t>(e.second)])) {
      edges.emplace_back(e.first, e.second);
    }
  }
  return Bigraph(f.sides(), edges, std::vector<int>(subset.begin(), subset.end()));
}

Bigraph relabel_nodes(const Bigraph& f, std::span<const int> perm)
{
  if (static_cast<int>(perm.size()) != f.node_count()) throw InvalidArgument("permutation size mismatch");
  std::vector<Side> sides(perm.size());
  std::vector<bool> hit(perm.size(), false);
  for (int v = 0; v < f.node_count(); ++v) {
    int w = perm[static_cast<std::size_t>(v)];
    if (w < 0 || w >= f.node_count() || hit[static_cast<std::size_t>(w)]) throw InvalidArgument("not a permutation");
    hit[static_cast<std::size_t>(w)] = true;
    sides[static_cast<std::size_t>(w)] = f.side(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : f.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(e.first)], perm[static_cast<std::size_t>(e.second)]);
  }
  std::vector<int> labels;
  for (int v : f.labels()) labels.push_back(perm[static_cast<std::size_t>(v)]);
  return Bigraph(std::move(sides), edges, std::move(labels));
}

Bigraph induced_subgraph(const Bigraph& f, std::span<const int> nodes)
{
  std::vector<int> map(static_cast<std::size_t>(f.node_count()), -1);
  std::vector<Side> sides;
  for (int v : nodes) {
    map[static_cast<std::size_t>(v)] = static_cast<int>(sides.size());
    sides.push_back(f.side(v));
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : f.edges()) {
    int a = map[static_cast<std::size_t>(e.first)];
    int b = map[static_cast<std::size_t>(e.second)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Bigraph(std::move(sides), edges);
}

std::vector<std::vector<int>> connected_components(const Bigraph& f)
{
  const auto adj = f.adjacency();
  std::vector<int> comp(static_cast<std::size_t>(f.node_count()), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < f.node_count(); ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::deque<int> queue{start};
    comp[static_cast<std::size_t>(start)] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      out.back().push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Bigraph& f) { return connected_components(f).size() <= 1; }

int girth(const Bigraph& f)
{
  if (!f.is_simple()) return 2;
  const auto adj = f.adjacency();
  const int n = f.node_count();
  int best = infinite_girth;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        } else if (parent[static_cast<std::size_t>(v)] != w) {
          best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best;
}

StructureInfo structure_queries(const Bigraph& f)
{
  StructureInfo info;
  info.girth = girth(f);
  info.degrees = f.degrees();
  info.components = connected_components(f);
  info.min_degree = info.degrees.empty() ? 0 : *std::min_element(info.degrees.begin(), info.degrees.end());
  for (int d : info.degrees) info.endnode_count += (d == 1);
  for (const Edge& e : f.edges()) {
    if (info.degrees[static_cast<std::size_t>(e.first)] == 1 && info.degrees[static_cast<std::size_t>(e.second)] == 1) {
      info.adjacent_endnodes.emplace_back(e.first, e.second);
    }
  }

  const int n = f.node_count();
  const int m = f.edge_count();
  const bool connected = info.components.size() == 1;
  const bool simple = f.is_simple();
  if (connected && simple && m >= 1) {
    info.is_star = std::any_of(info.degrees.begin(), info.degrees.end(), [m](int d) { return d == m; }) && n == m + 1;
  }
  if (connected && m >= 2) {
    info.is_single_cycle = std::all_of(info.degrees.begin(), info.degrees.end(), [](int d) { return d == 2; });
  }
  if (connected && simple && n >= 2) {
    const int a = f.count_side(Side::first);
    const int b = f.count_side(Side::second);
    info.is_complete_bipartite = a >= 1 && b >= 1 && m == a * b;
  }
  return info;
}

}  // namespace locsid
