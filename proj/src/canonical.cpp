#include "locsid/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>

#include "locsid/errors.hpp"

namespace locsid {

std::string CanonicalKey::to_string() const
{
  std::ostringstream out;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i) out << '.';
    out << code[i];
  }
  return out.str();
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept
{
  std::size_t h = 1469598103934665603ull;
  for (int c : key.code) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Bigraph& f) : f_(f), n_(f.node_count())
  {
    mult_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (const Edge& e : f.edges()) {
      ++at(e.first, e.second);
      ++at(e.second, e.first);
    }
    refine_colors();
  }

  CanonicalKey run()
  {
    pos_color_ = color_;
    std::sort(pos_color_.begin(), pos_color_.end());
    used_.assign(static_cast<std::size_t>(n_), false);
    order_.clear();
    current_.clear();
    have_best_ = false;
    place(0, true);

    CanonicalKey key;
    key.code.reserve(best_.size() + 2 + 2 * static_cast<std::size_t>(n_));
    key.code.push_back(n_);
    key.code.push_back(f_.label_count());
    for (int v : best_order_) {
      key.code.push_back(static_cast<int>(f_.side(v)));
      key.code.push_back(f_.label_of(v));
    }
    key.code.insert(key.code.end(), best_.begin(), best_.end());
    return key;
  }

 private:
  int& at(int a, int b) { return mult_[static_cast<std::size_t>(a * n_ + b)]; }
  int get(int a, int b) const { return mult_[static_cast<std::size_t>(a * n_ + b)]; }

  // Color refinement with canonical (sorted-signature) color names.
  void refine_colors()
  {
    const auto deg = f_.degrees();
    using Sig = std::vector<int>;
    std::vector<Sig> sigs(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      int label = f_.label_of(v);
      sigs[static_cast<std::size_t>(v)] = {label < 0 ? 1 : 0, label, static_cast<int>(f_.side(v)),
                                           deg[static_cast<std::size_t>(v)]};
    }
    color_ = rank(sigs);
    std::size_t classes = count_classes();
    while (true) {
      for (int v = 0; v < n_; ++v) {
        std::vector<std::pair<int, int>> nb;
        for (int w = 0; w < n_; ++w) {
          if (get(v, w) > 0) nb.emplace_back(color_[static_cast<std::size_t>(w)], get(v, w));
        }
        std::sort(nb.begin(), nb.end());
        Sig s{color_[static_cast<std::size_t>(v)]};
        for (auto [c, m] : nb) {
          s.push_back(c);
          s.push_back(m);
        }
        sigs[static_cast<std::size_t>(v)] = std::move(s);
      }
      color_ = rank(sigs);
      std::size_t next = count_classes();
      if (next == classes) break;
      classes = next;
    }
  }

  static std::vector<int> rank(const std::vector<std::vector<int>>& sigs)
  {
    std::vector<std::vector<int>> uniq = sigs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> out(sigs.size());
    for (std::size_t v = 0; v < sigs.size(); ++v) {
      out[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[v]) - uniq.begin());
    }
    return out;
  }

  std::size_t count_classes() const
  {
    std::vector<int> c = color_;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  // `tied` is true while the current prefix equals the best code's prefix.
  void place(int p, bool tied)
  {
    if (p == n_) {
      if (!have_best_ || !tied) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
        ++best_version_;
      }
      return;
    }
    const int want = pos_color_[static_cast<std::size_t>(p)];
    const std::size_t base = current_.size();
    std::uint64_t version = best_version_;
    for (int v = 0; v < n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || color_[static_cast<std::size_t>(v)] != want) continue;
      // A new best found below this node shares the current prefix.
      if (version != best_version_) {
        tied = true;
        version = best_version_;
      }
      for (int q = 0; q < p; ++q) current_.push_back(get(v, order_[static_cast<std::size_t>(q)]));
      bool next_tied = tied && have_best_;
      bool prune = false;
      if (next_tied) {
        for (std::size_t i = base; i < current_.size(); ++i) {
          if (current_[i] != best_[i]) {
            if (current_[i] > best_[i]) prune = true;
            next_tied = false;
            break;
          }
        }
      }
      if (!prune) {
        used_[static_cast<std::size_t>(v)] = true;
        order_.push_back(v);
        place(p + 1, next_tied || !have_best_);
        order_.pop_back();
        used_[static_cast<std::size_t>(v)] = false;
      }
      current_.resize(base);
    }
  }

  const Bigraph& f_;
  int n_;
  std::vector<int> mult_;
  std::vector<int> color_;
  std::vector<int> pos_color_;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<int> best_order_;
  bool have_best_ = false;
  std::uint64_t best_version_ = 0;
};

}  // namespace

std::optional<CanonicalKey> try_canonical_form(const Bigraph& f, IsoMode mode, int cap)
{
  if (f.node_count() > cap) return std::nullopt;
  CanonicalKey key = CanonicalSearch(f).run();
  if (mode == IsoMode::allow_side_swap) {
    CanonicalKey other = CanonicalSearch(transpose(f)).run();
    if (other < key) key = std::move(other);
  }
  return key;
}

CanonicalKey canonical_form(const Bigraph& f, IsoMode mode, int cap)
{
  auto key = try_canonical_form(f, mode, cap);
  if (!key) {
    throw CapExceeded("canonical form node cap", static_cast<std::uint64_t>(f.node_count()),
                      static_cast<std::uint64_t>(cap));
  }
  return *key;
}

bool isomorphic(const Bigraph& a, const Bigraph& b, IsoMode mode)
{
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count() || a.label_count() != b.label_count()) {
    return false;
  }
  const int cap = std::max(a.node_count(), default_canonical_cap);
  return canonical_form(a, mode, cap) == canonical_form(b, mode, cap);
}

namespace {

std::string describe_component(const Bigraph& c)
{
  const int n = c.node_count();
  const int m = c.edge_count();
  if (m == 0) return "K_1";
  const auto info = structure_queries(c);
  const int first = c.count_side(Side::first);
  const int second = c.count_side(Side::second);
  if (info.is_single_cycle) return "C_" + std::to_string(n);
  if (c.is_simple() && m == n - 1) {
    int max_deg = *std::max_element(info.degrees.begin(), info.degrees.end());
    if (max_deg <= 2) {
      if (n == 2) return "K_2";
      std::string name = "P_" + std::to_string(n);
      if (n % 2 == 1) {
        // Endpoints share a side; the reference orientation has them first.
        auto end = std::find(info.degrees.begin(), info.degrees.end(), 1) - info.degrees.begin();
        if (c.side(static_cast<int>(end)) == Side::second) name += "^T";
      }
      return name;
    }
  }
  if (info.is_complete_bipartite) return "K_{" + std::to_string(first) + "," + std::to_string(second) + "}";
  return "G(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
}

}  // namespace

std::string describe(const Bigraph& f)
{
  if (f.node_count() == 0) return "K_0";
  std::map<std::string, int> counts;
  for (const auto& comp : connected_components(f)) {
    counts[describe_component(induced_subgraph(f, comp))]++;
  }
  std::string out;
  for (const auto& [name, count] : counts) {
    if (!out.empty()) out += "+";
    if (count > 1) out += std::to_string(count);
    out += name;
  }
  return out;
}

}  // namespace locsid
