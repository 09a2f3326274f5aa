#include "locsid/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "locsid/errors.hpp"

namespace locsid {

// ---------------------------------------------------------------------------
// Planner

ContractionPlan plan_contraction(const Bigraph& f, const std::vector<int>& anchored, int blocks)
{
  const int n = f.node_count();
  std::vector<char> fixed(static_cast<std::size_t>(n), 0);
  for (int v : anchored) fixed[static_cast<std::size_t>(v)] = 1;
  std::vector<std::set<int>> nb(static_cast<std::size_t>(n));
  for (const Edge& e : f.edges()) {
    if (fixed[static_cast<std::size_t>(e.first)] || fixed[static_cast<std::size_t>(e.second)]) continue;
    nb[static_cast<std::size_t>(e.first)].insert(e.second);
    nb[static_cast<std::size_t>(e.second)].insert(e.first);
  }
  std::vector<char> done(fixed);
  ContractionPlan plan;
  const double b = std::max(1, blocks);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long best_fill = 0;
    std::size_t best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (done[static_cast<std::size_t>(v)]) continue;
      const auto& nv = nb[static_cast<std::size_t>(v)];
      long fill = 0;
      for (auto a = nv.begin(); a != nv.end(); ++a) {
        for (auto c = std::next(a); c != nv.end(); ++c) {
          if (!nb[static_cast<std::size_t>(*a)].count(*c)) ++fill;
        }
      }
      if (best < 0 || fill < best_fill || (fill == best_fill && nv.size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = nv.size();
      }
    }
    if (best < 0) break;
    const auto nv = nb[static_cast<std::size_t>(best)];
    for (int a : nv) {
      nb[static_cast<std::size_t>(a)].erase(best);
      for (int c : nv) {
        if (a != c) nb[static_cast<std::size_t>(a)].insert(c);
      }
    }
    nb[static_cast<std::size_t>(best)].clear();
    done[static_cast<std::size_t>(best)] = 1;
    const int w = static_cast<int>(nv.size());
    plan.order.push_back(best);
    plan.step_width.push_back(w);
    plan.width = std::max(plan.width, w);
    plan.cost += std::pow(b, w + 1);
  }
  return plan;
}

// ---------------------------------------------------------------------------
// Factor networks

namespace {

template <Scalar T>
struct Factor {
  std::vector<int> vars;  // sorted ascending; vars[0] varies slowest
  std::vector<T> table;
};

template <Scalar T>
struct Network {
  std::vector<std::vector<T>> weights;  // per variable
  std::vector<Factor<T>> factors;
};

// Saturates at UINT64_MAX.
std::uint64_t table_size(const std::vector<int>& vars, const std::vector<std::size_t>& dom)
{
  std::uint64_t s = 1;
  for (int v : vars) {
    const std::uint64_t d = dom[static_cast<std::size_t>(v)];
    if (d != 0 && s > UINT64_MAX / d) return UINT64_MAX;
    s *= d;
  }
  return s;
}

// Sums out variables in the given order (which must list every variable).
template <Scalar T>
T contract(Network<T> net, const std::vector<int>& order, std::uint64_t cap)
{
  const std::size_t nvars = net.weights.size();
  std::vector<std::size_t> dom(nvars);
  for (std::size_t v = 0; v < nvars; ++v) dom[v] = net.weights[v].size();

  std::vector<Factor<T>> live = std::move(net.factors);
  T scalar = T(1);
  for (int x : order) {
    std::vector<Factor<T>> touched;
    std::vector<Factor<T>> rest;
    for (auto& fct : live) {
      if (std::binary_search(fct.vars.begin(), fct.vars.end(), x)) {
        touched.push_back(std::move(fct));
      } else {
        rest.push_back(std::move(fct));
      }
    }
    live = std::move(rest);
    const auto& wx = net.weights[static_cast<std::size_t>(x)];
    if (touched.empty()) {
      T s = T(0);
      for (const T& w : wx) s += w;
      scalar *= s;
      continue;
    }
    std::vector<int> out_vars;
    for (const auto& fct : touched) {
      for (int v : fct.vars) {
        if (v != x) out_vars.push_back(v);
      }
    }
    std::sort(out_vars.begin(), out_vars.end());
    out_vars.erase(std::unique(out_vars.begin(), out_vars.end()), out_vars.end());
    const std::uint64_t size = table_size(out_vars, dom);
    if (size > cap) {
      throw CapExceeded("contraction table of width " + std::to_string(out_vars.size()), size, cap);
    }

    // Combined assignment: out_vars in order, then x last.
    std::vector<int> all = out_vars;
    all.push_back(x);
    std::vector<std::vector<std::size_t>> strides(touched.size(), std::vector<std::size_t>(all.size(), 0));
    for (std::size_t f = 0; f < touched.size(); ++f) {
      std::size_t stride = 1;
      const auto& vars = touched[f].vars;
      for (std::size_t p = vars.size(); p-- > 0;) {
        auto pos = std::find(all.begin(), all.end(), vars[p]) - all.begin();
        strides[f][static_cast<std::size_t>(pos)] = stride;
        stride *= dom[static_cast<std::size_t>(vars[p])];
      }
    }
    Factor<T> out;
    out.vars = out_vars;
    out.table.assign(static_cast<std::size_t>(size), T(0));
    std::vector<std::size_t> digit(all.size(), 0);
    std::vector<std::size_t> offset(touched.size(), 0);
    const std::size_t xpos = all.size() - 1;
    const std::size_t dx = dom[static_cast<std::size_t>(x)];
    T prod;
    for (std::uint64_t cell = 0; cell < size; ++cell) {
      T& acc = out.table[static_cast<std::size_t>(cell)];
      for (std::size_t xv = 0; xv < dx; ++xv) {
        prod = wx[xv];
        for (std::size_t f = 0; f < touched.size(); ++f) {
          prod *= touched[f].table[offset[f] + xv * strides[f][xpos]];
        }
        acc += prod;
      }
      // Advance the odometer over out_vars (last varies fastest).
      for (std::size_t p = out_vars.size(); p-- > 0;) {
        ++digit[p];
        for (std::size_t f = 0; f < touched.size(); ++f) offset[f] += strides[f][p];
        if (digit[p] < dom[static_cast<std::size_t>(out_vars[p])]) break;
        for (std::size_t f = 0; f < touched.size(); ++f) offset[f] -= strides[f][p] * digit[p];
        digit[p] = 0;
      }
    }
    live.push_back(std::move(out));
  }
  for (const auto& fct : live) scalar *= fct.table[0];
  return scalar;
}

// Network for t(F, K) with some nodes pinned to single blocks. Nodes of F
// are the variables; parallel edges become pointwise powers.
template <Scalar T>
Network<T> density_network(const Bigraph& f, const StepKernel<T>& k, const std::vector<int>& pinned_block,
                           bool unit_weights)
{
  const int n = f.node_count();
  Network<T> net;
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const bool first = f.side(v) == Side::first;
    const int count = first ? k.rows() : k.cols();
    auto& b = blocks[static_cast<std::size_t>(v)];
    std::vector<T> w;
    if (pinned_block[static_cast<std::size_t>(v)] >= 0) {
      b.push_back(pinned_block[static_cast<std::size_t>(v)]);
      w.push_back(T(1));
    } else {
      for (int i = 0; i < count; ++i) {
        b.push_back(i);
        w.push_back(unit_weights ? T(1) : (first ? k.row_measure(i) : k.col_measure(i)));
      }
    }
    net.weights.push_back(std::move(w));
  }
  std::map<std::pair<int, int>, unsigned> mult;
  for (const Edge& e : f.edges()) ++mult[{e.first, e.second}];
  for (const auto& [edge, m] : mult) {
    const auto [a, b] = edge;  // a first side, b second side
    Factor<T> fct;
    fct.vars = {std::min(a, b), std::max(a, b)};
    const auto& ba = blocks[static_cast<std::size_t>(a)];
    const auto& bb = blocks[static_cast<std::size_t>(b)];
    const auto& slow = a < b ? ba : bb;
    const auto& fast = a < b ? bb : ba;
    for (int s : slow) {
      for (int t : fast) {
        const int i = a < b ? s : t;
        const int j = a < b ? t : s;
        fct.table.push_back(pow_int(k.at(i, j), m));
      }
    }
    net.factors.push_back(std::move(fct));
  }
  return net;
}

std::vector<int> full_order(const Bigraph& f, const std::vector<int>& anchored)
{
  auto order = plan_contraction(f, anchored).order;
  for (int v : anchored) order.push_back(v);
  return order;
}

}  // namespace

template <Scalar T>
T density(const Bigraph& f, const StepKernel<T>& k, const DensityOptions& options)
{
  std::vector<int> pinned(static_cast<std::size_t>(f.node_count()), -1);
  return contract(density_network(f, k, pinned, false), full_order(f, {}), options.table_cap);
}

template <Scalar T>
T density_with_order(const Bigraph& f, const StepKernel<T>& k, const std::vector<int>& order)
{
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int v = 0; v < f.node_count(); ++v) {
    if (static_cast<int>(sorted.size()) != f.node_count() || sorted[static_cast<std::size_t>(v)] != v) {
      throw InvalidArgument("elimination order is not a permutation of the nodes");
    }
  }
  std::vector<int> pinned(static_cast<std::size_t>(f.node_count()), -1);
  return contract(density_network(f, k, pinned, false), order, default_table_cap);
}

template <Scalar T>
T brute_force_density(const Bigraph& f, const StepKernel<T>& k)
{
  const int n = f.node_count();
  std::vector<int> size(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) size[static_cast<std::size_t>(v)] = f.side(v) == Side::first ? k.rows() : k.cols();
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  T total = T(0);
  T term;
  while (true) {
    term = T(1);
    for (int v = 0; v < n; ++v) {
      term *= f.side(v) == Side::first ? k.row_measure(x[static_cast<std::size_t>(v)]) : k.col_measure(x[static_cast<std::size_t>(v)]);
    }
    for (const Edge& e : f.edges()) term *= k.at(x[static_cast<std::size_t>(e.first)], x[static_cast<std::size_t>(e.second)]);
    total += term;
    int p = n - 1;
    while (p >= 0 && ++x[static_cast<std::size_t>(p)] == size[static_cast<std::size_t>(p)]) {
      x[static_cast<std::size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
  }
  return total;
}

template <Scalar T>
T rooted_density(const Bigraph& f, const StepKernel<T>& k, const std::vector<int>& anchors, const DensityOptions& options)
{
  if (static_cast<int>(anchors.size()) != f.label_count()) {
    throw InvalidArgument("rooted density needs one anchor per label (" + std::to_string(f.label_count()) + "), got " +
                          std::to_string(anchors.size()));
  }
  std::vector<int> pinned(static_cast<std::size_t>(f.node_count()), -1);
  for (int l = 0; l < f.label_count(); ++l) {
    const int v = f.labels()[static_cast<std::size_t>(l)];
    const int limit = f.side(v) == Side::first ? k.rows() : k.cols();
    const int a = anchors[static_cast<std::size_t>(l)];
    if (a < 0 || a >= limit) throw InvalidArgument("anchor block " + std::to_string(a) + " out of range");
    pinned[static_cast<std::size_t>(v)] = a;
  }
  return contract(density_network(f, k, pinned, false), full_order(f, f.labels()), options.table_cap);
}

BigInt hom_count(const Bigraph& f, const PlainGraph& g)
{
  if (g.node_count() == 0) return f.node_count() == 0 ? BigInt(1) : BigInt(0);
  auto k = kernel_from_graph<Rational>(g);
  std::vector<int> pinned(static_cast<std::size_t>(f.node_count()), -1);
  Rational r = contract(density_network(f, k, pinned, true), full_order(f, {}), default_table_cap);
  return r.get_num();
}

template <Scalar T>
double schatten_norm(const StepKernel<T>& k, int r)
{
  if (r < 1) throw InvalidArgument("Schatten index must be at least 1");
  double t = to_double(density(cycle_graph(2 * r), k));
  if (t < 0) {
    if (t > -1e-12) return 0;
    throw InvalidArgument("negative even-cycle density");
  }
  return std::pow(t, 1.0 / (2.0 * r));
}

// ---------------------------------------------------------------------------
// Edge-factor models

template <Scalar T>
std::vector<int> EdgeFactorModel<T>::incident(int node) const
{
  std::vector<int> out;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].first == node || edges[e].second == node) out.push_back(static_cast<int>(e));
  }
  return out;
}

template <Scalar T>
void EdgeFactorModel<T>::validate() const
{
  if (static_cast<int>(tables.size()) != nodes) throw InvalidArgument("one table per node is required");
  if (edge_measures.size() != edges.size()) throw InvalidArgument("one measure vector per edge is required");
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= nodes || v >= nodes || u == v) throw InvalidArgument("invalid edge in factor model");
  }
  for (const auto& m : edge_measures) {
    if (m.empty()) throw InvalidArgument("edge variable with no blocks");
    T s = T(0);
    for (const T& x : m) {
      if (!(x > 0)) throw InvalidArgument("edge measures must be positive");
      s += x;
    }
    if (abs_value(T(s - 1)) > T(1e-12)) throw InvalidArgument("edge measures must sum to 1");
  }
  for (int i = 0; i < nodes; ++i) {
    std::size_t size = 1;
    for (int e : incident(i)) size *= edge_measures[static_cast<std::size_t>(e)].size();
    if (tables[static_cast<std::size_t>(i)].size() != size) {
      throw InvalidArgument("table of node " + std::to_string(i) + " has " +
                            std::to_string(tables[static_cast<std::size_t>(i)].size()) + " entries, expected " +
                            std::to_string(size));
    }
  }
}

template <Scalar T>
T edge_factor_value(const EdgeFactorModel<T>& model, const DensityOptions& options)
{
  model.validate();
  Network<T> net;
  net.weights = model.edge_measures;
  for (int i = 0; i < model.nodes; ++i) {
    Factor<T> fct;
    fct.vars = model.incident(i);
    fct.table = model.tables[static_cast<std::size_t>(i)];
    net.factors.push_back(std::move(fct));
  }
  // Edges sharing a node interact.
  const int m = static_cast<int>(model.edges.size());
  std::vector<int> order;
  {
    // Greedy min-degree over the interaction graph of edge variables.
    std::vector<std::set<int>> nb(static_cast<std::size_t>(m));
    for (int i = 0; i < model.nodes; ++i) {
      auto inc = model.incident(i);
      for (int a : inc) {
        for (int b : inc) {
          if (a != b) nb[static_cast<std::size_t>(a)].insert(b);
        }
      }
    }
    std::vector<char> done(static_cast<std::size_t>(m), 0);
    for (int step = 0; step < m; ++step) {
      int best = -1;
      for (int v = 0; v < m; ++v) {
        if (!done[static_cast<std::size_t>(v)] &&
            (best < 0 || nb[static_cast<std::size_t>(v)].size() < nb[static_cast<std::size_t>(best)].size())) {
          best = v;
        }
      }
      const auto nv = nb[static_cast<std::size_t>(best)];
      for (int a : nv) {
        nb[static_cast<std::size_t>(a)].erase(best);
        for (int c : nv) {
          if (a != c) nb[static_cast<std::size_t>(a)].insert(c);
        }
      }
      done[static_cast<std::size_t>(best)] = 1;
      order.push_back(best);
    }
  }
  return contract(std::move(net), order, options.table_cap);
}

template <Scalar T>
T node_factor_norm_squared(const EdgeFactorModel<T>& model, int node)
{
  auto inc = model.incident(node);
  const auto& table = model.tables[static_cast<std::size_t>(node)];
  T total = T(0);
  std::vector<std::size_t> digit(inc.size(), 0);
  for (std::size_t cell = 0; cell < table.size(); ++cell) {
    T w = T(1);
    for (std::size_t p = 0; p < inc.size(); ++p) w *= model.edge_measures[static_cast<std::size_t>(inc[p])][digit[p]];
    total += w * table[cell] * table[cell];
    for (std::size_t p = inc.size(); p-- > 0;) {
      if (++digit[p] < model.edge_measures[static_cast<std::size_t>(inc[p])].size()) break;
      digit[p] = 0;
    }
  }
  return total;
}

template <Scalar T>
double node_factor_norm(const EdgeFactorModel<T>& model, int node)
{
  return std::sqrt(to_double(node_factor_norm_squared(model, node)));
}

// ---------------------------------------------------------------------------
// Expansion

std::string term_key(const Bigraph& f)
{
  if (auto key = try_canonical_form(f, IsoMode::side_preserving)) return "c" + key->to_string();
  std::ostringstream out;
  out << "r" << f.node_count() << ':';
  for (Side s : f.sides()) out << static_cast<int>(s);
  for (const Edge& e : f.edges()) out << ':' << e.first << ',' << e.second;
  return out.str();
}

template <Scalar T>
const T& DensityCache<T>::get(const Bigraph& f)
{
  std::string key = term_key(f);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(std::move(key), density(f, k_)).first;
  return it->second;
}

template <Scalar T>
ExpansionLedger<T> expansion(const Bigraph& f, const StepKernel<T>& u, int edge_cap)
{
  const Bigraph g = unlabel(f);
  if (g.edge_count() > edge_cap) {
    throw CapExceeded("expansion edge cap", static_cast<std::uint64_t>(g.edge_count()), static_cast<std::uint64_t>(edge_cap));
  }
  ExpansionLedger<T> ledger;
  std::unordered_map<std::string, std::size_t> index;
  const std::uint64_t count = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Bigraph term = remove_isolated_nodes(edge_subgraph(g, mask));
    std::string key = term_key(term);
    auto it = index.find(key);
    if (it == index.end()) {
      ExpansionEntry<T> entry;
      entry.key = key;
      entry.name = describe(term);
      entry.value = density(term, u);
      entry.representative = std::move(term);
      index.emplace(std::move(key), ledger.entries.size());
      ledger.entries.push_back(std::move(entry));
      it = index.find(ledger.entries.back().key);
    }
    ++ledger.entries[it->second].multiplicity;
  }
  ledger.total = T(0);
  for (const auto& e : ledger.entries) ledger.total += T(e.value * T(static_cast<long>(e.multiplicity)));
  return ledger;
}

#define LOCSID_INSTANTIATE(T)                                                                                 \
  template T density(const Bigraph&, const StepKernel<T>&, const DensityOptions&);                            \
  template T density_with_order(const Bigraph&, const StepKernel<T>&, const std::vector<int>&);               \
  template T brute_force_density(const Bigraph&, const StepKernel<T>&);                                       \
  template T rooted_density(const Bigraph&, const StepKernel<T>&, const std::vector<int>&, const DensityOptions&); \
  template double schatten_norm(const StepKernel<T>&, int);                                                   \
  template struct EdgeFactorModel<T>;                                                                         \
  template T edge_factor_value(const EdgeFactorModel<T>&, const DensityOptions&);                             \
  template T node_factor_norm_squared(const EdgeFactorModel<T>&, int);                                         \
  template double node_factor_norm(const EdgeFactorModel<T>&, int);                                           \
  template class DensityCache<T>;                                                                             \
  template ExpansionLedger<T> expansion(const Bigraph&, const StepKernel<T>&, int);

LOCSID_INSTANTIATE(Rational)
LOCSID_INSTANTIATE(double)

#undef LOCSID_INSTANTIATE

}  // namespace locsid
