#include "locsid/kernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "locsid/errors.hpp"

namespace locsid {

namespace {

template <Scalar T>
bool sums_to_one(const std::vector<T>& m)
{
  T s = T(0);
  for (const T& x : m) s += x;
  if constexpr (is_rational_v<T>) {
    return s == 1;
  } else {
    return std::fabs(s - 1.0) <= 1e-12;
  }
}

template <Scalar T>
void check_measures(const std::vector<T>& m, const char* what)
{
  if (m.empty()) throw InvalidArgument(std::string(what) + " measures are empty");
  for (const T& x : m) {
    if (!(x > 0)) throw InvalidArgument(std::string(what) + " measures must be positive");
  }
  if (!sums_to_one(m)) throw InvalidArgument(std::string(what) + " measures must sum to 1");
}

}  // namespace

template <Scalar T>
StepKernel<T>::StepKernel(std::vector<T> row_measures, std::vector<T> col_measures, std::vector<T> values)
    : row_measures_(std::move(row_measures)), col_measures_(std::move(col_measures)), values_(std::move(values))
{
  check_measures(row_measures_, "row");
  check_measures(col_measures_, "column");
  if (values_.size() != row_measures_.size() * col_measures_.size()) {
    throw InvalidArgument("kernel has " + std::to_string(values_.size()) + " values for a " +
                          std::to_string(row_measures_.size()) + "x" + std::to_string(col_measures_.size()) +
                          " block grid");
  }
  if constexpr (!is_rational_v<T>) {
    for (double v : values_) {
      if (!std::isfinite(v)) throw InvalidArgument("kernel value is not finite");
    }
  }
}

template <Scalar T>
StepKernel<T> StepKernel<T>::constant(T c)
{
  return StepKernel(Unchecked{}, {T(1)}, {T(1)}, {std::move(c)});
}

template <Scalar T>
StepKernel<T> StepKernel<T>::square(std::vector<T> measures, std::vector<T> values)
{
  std::vector<T> cols = measures;
  return StepKernel(std::move(measures), std::move(cols), std::move(values));
}

template <Scalar T>
bool StepKernel<T>::is_symmetric() const
{
  if (row_measures_ != col_measures_) return false;
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < i; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

FloatKernel to_float(const RationalKernel& k)
{
  auto conv = [](const std::vector<Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.get_d());
    return out;
  };
  // Rounded measures may miss 1 by more than an ulp; renormalize.
  auto measures = [&](const std::vector<Rational>& v) {
    auto out = conv(v);
    double s = 0;
    for (double x : out) s += x;
    for (double& x : out) x /= s;
    return out;
  };
  return FloatKernel(measures(k.row_measures()), measures(k.col_measures()), conv(k.values()));
}

RationalKernel to_rational(const FloatKernel& k)
{
  auto conv = [](const std::vector<double>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (double x : v) out.push_back(rational_from_double(x));
    return out;
  };
  auto measures = [&](const std::vector<double>& v) {
    auto out = conv(v);
    Rational s = 0;
    for (const auto& x : out) s += x;
    for (auto& x : out) x /= s;
    return out;
  };
  return RationalKernel(measures(k.row_measures()), measures(k.col_measures()), conv(k.values()));
}

template <Scalar T>
StepKernel<T> kernel_from_graph(const PlainGraph& g)
{
  const int n = g.node_count();
  if (n < 1) throw InvalidArgument("graph has no nodes");
  std::vector<T> measures(static_cast<std::size_t>(n), T(1) / T(n));
  if constexpr (is_rational_v<T>) {
    measures.assign(static_cast<std::size_t>(n), Rational(1, n));
  }
  std::vector<T> values(static_cast<std::size_t>(n * n), T(0));
  for (auto [u, v] : g.edges()) {
    values[static_cast<std::size_t>(u * n + v)] = T(1);
    values[static_cast<std::size_t>(v * n + u)] = T(1);
  }
  return StepKernel<T>::square(std::move(measures), std::move(values));
}

template <Scalar T>
std::pair<T, T> bounds(const StepKernel<T>& k)
{
  auto [lo, hi] = std::minmax_element(k.values().begin(), k.values().end());
  return {*lo, *hi};
}

template <Scalar T>
bool in_unit_ball(const StepKernel<T>& k)
{
  auto [lo, hi] = bounds(k);
  return lo >= -1 && hi <= 1;
}

template <Scalar T>
StepKernel<T> affine(const StepKernel<T>& k, const T& scale, const T& shift)
{
  std::vector<T> values;
  values.reserve(k.values().size());
  for (const T& v : k.values()) values.push_back(T(scale * v + shift));
  return StepKernel<T>(k.row_measures(), k.col_measures(), std::move(values));
}

template <Scalar T>
StepKernel<T> transpose(const StepKernel<T>& k)
{
  std::vector<T> values(k.values().size());
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) values[static_cast<std::size_t>(j * k.rows() + i)] = k.at(i, j);
  }
  return StepKernel<T>(k.col_measures(), k.row_measures(), std::move(values));
}

namespace {

template <Scalar T>
bool same_point(const T& a, const T& b)
{
  if constexpr (is_rational_v<T>) {
    return a == b;
  } else {
    return std::fabs(a - b) <= 1e-12;
  }
}

// Merged interval structure of two measure vectors: the new measures and,
// for each new interval, the index of the old block containing it on each
// side.
template <Scalar T>
struct Merge {
  std::vector<T> measures;
  std::vector<int> from_a;
  std::vector<int> from_b;
};

template <Scalar T>
Merge<T> merge_measures(const std::vector<T>& a, const std::vector<T>& b)
{
  Merge<T> out;
  std::size_t i = 0;
  std::size_t j = 0;
  T end_a = a[0];
  T end_b = b[0];
  T pos = T(0);
  while (i < a.size() && j < b.size()) {
    const bool a_first = end_a < end_b;
    T next = a_first ? end_a : end_b;
    const bool last = i + 1 == a.size() && j + 1 == b.size();
    if (last) next = T(1);
    out.measures.push_back(T(next - pos));
    out.from_a.push_back(static_cast<int>(i));
    out.from_b.push_back(static_cast<int>(j));
    if (last) break;
    pos = next;
    const bool tie = same_point(end_a, end_b);
    if (a_first || tie) {
      ++i;
      if (i < a.size()) end_a += a[i];
    }
    if (!a_first || tie) {
      ++j;
      if (j < b.size()) end_b += b[j];
    }
  }
  if constexpr (!is_rational_v<T>) {
    // Drop slivers produced by rounding.
    Merge<T> clean;
    for (std::size_t k = 0; k < out.measures.size(); ++k) {
      if (out.measures[k] <= 1e-13) continue;
      clean.measures.push_back(out.measures[k]);
      clean.from_a.push_back(out.from_a[k]);
      clean.from_b.push_back(out.from_b[k]);
    }
    double s = 0;
    for (double x : clean.measures) s += x;
    for (double& x : clean.measures) x /= s;
    return clean;
  } else {
    return out;
  }
}

template <Scalar T>
StepKernel<T> reindex(const StepKernel<T>& k, const Merge<T>& rows, const std::vector<int>& row_src, const Merge<T>& cols,
                      const std::vector<int>& col_src)
{
  std::vector<T> values;
  values.reserve(rows.measures.size() * cols.measures.size());
  for (int r : row_src) {
    for (int c : col_src) values.push_back(k.at(r, c));
  }
  return StepKernel<T>(rows.measures, cols.measures, std::move(values));
}

}  // namespace

template <Scalar T>
std::pair<StepKernel<T>, StepKernel<T>> common_refinement(const StepKernel<T>& a, const StepKernel<T>& b)
{
  auto rows = merge_measures(a.row_measures(), b.row_measures());
  auto cols = merge_measures(a.col_measures(), b.col_measures());
  return {reindex(a, rows, rows.from_a, cols, cols.from_a), reindex(b, rows, rows.from_b, cols, cols.from_b)};
}

namespace {

template <Scalar T, class Op>
StepKernel<T> combine(const StepKernel<T>& a, const StepKernel<T>& b, Op op)
{
  auto [ra, rb] = common_refinement(a, b);
  std::vector<T> values;
  values.reserve(ra.values().size());
  for (std::size_t i = 0; i < ra.values().size(); ++i) values.push_back(T(op(ra.values()[i], rb.values()[i])));
  return StepKernel<T>(ra.row_measures(), ra.col_measures(), std::move(values));
}

}  // namespace

template <Scalar T>
StepKernel<T> add(const StepKernel<T>& a, const StepKernel<T>& b)
{
  return combine(a, b, [](const T& x, const T& y) { return T(x + y); });
}

template <Scalar T>
StepKernel<T> subtract(const StepKernel<T>& a, const StepKernel<T>& b)
{
  return combine(a, b, [](const T& x, const T& y) { return T(x - y); });
}

template <Scalar T>
StepKernel<T> compose(const StepKernel<T>& a, const StepKernel<T>& b)
{
  // Align a's columns with b's rows; the outer block structures are kept.
  auto mid = merge_measures(a.col_measures(), b.row_measures());
  const int n = a.rows();
  const int m = b.cols();
  std::vector<T> values(static_cast<std::size_t>(n * m), T(0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      T s = T(0);
      for (std::size_t z = 0; z < mid.measures.size(); ++z) {
        s += mid.measures[z] * a.at(i, mid.from_a[z]) * b.at(mid.from_b[z], j);
      }
      values[static_cast<std::size_t>(i * m + j)] = s;
    }
  }
  return StepKernel<T>(a.row_measures(), b.col_measures(), std::move(values));
}

template <Scalar T>
T integral(const StepKernel<T>& k)
{
  T s = T(0);
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) s += k.row_measure(i) * k.col_measure(j) * k.at(i, j);
  }
  return s;
}

template <Scalar T>
T l2_squared(const StepKernel<T>& k)
{
  T s = T(0);
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) s += k.row_measure(i) * k.col_measure(j) * k.at(i, j) * k.at(i, j);
  }
  return s;
}

template <Scalar T>
double l2_norm(const StepKernel<T>& k)
{
  return std::sqrt(to_double(l2_squared(k)));
}

template <Scalar T>
T linf_norm(const StepKernel<T>& k)
{
  T best = T(0);
  for (const T& v : k.values()) best = std::max<T>(best, abs_value(v));
  return best;
}

// ---------------------------------------------------------------------------
// Cut norm

namespace {

// Outer-subset enumeration over the rows of `a` (k x cols). For a fixed row
// subset s the column sums c_j are known and the best column set for either
// sign is read off; the search is a Gray-code walk so each step costs O(cols).
template <class Num>
struct CutSearch {
  const std::vector<std::vector<Num>>& a;
  int k;
  int cols;

  struct Best {
    Num value{};
    std::uint64_t mask = 0;
    int sign = 1;
    bool set = false;

    void offer(const Num& v, std::uint64_t m, int s)
    {
      if (!set || v > value || (v == value && m < mask)) {
        value = v;
        mask = m;
        sign = s;
        set = true;
      }
    }
  };

  void score(const std::vector<Num>& c, std::uint64_t mask, Best& best) const
  {
    Num pos = Num(0);
    Num neg = Num(0);
    for (const Num& x : c) {
      if (x > 0) {
        pos += x;
      } else {
        neg -= x;
      }
    }
    best.offer(pos, mask, 1);
    best.offer(neg, mask, -1);
  }

  // Enumerates all masks whose bits >= low_bits equal `high`.
  Best chunk(std::uint64_t high, int low_bits) const
  {
    Best best;
    std::vector<Num> c(static_cast<std::size_t>(cols), Num(0));
    std::uint64_t mask = high << low_bits;
    for (int i = low_bits; i < k; ++i) {
      if ((mask >> i) & 1u) {
        for (int j = 0; j < cols; ++j) c[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    score(c, mask, best);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    for (std::uint64_t g = 1; g < steps; ++g) {
      const int bit = std::countr_zero(g);
      const std::uint64_t flip = std::uint64_t{1} << bit;
      const auto& row = a[static_cast<std::size_t>(bit)];
      if (mask & flip) {
        for (int j = 0; j < cols; ++j) c[static_cast<std::size_t>(j)] -= row[static_cast<std::size_t>(j)];
      } else {
        for (int j = 0; j < cols; ++j) c[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
      }
      mask ^= flip;
      score(c, mask, best);
    }
    return best;
  }

  Best run(int threads) const
  {
    const int high_bits = std::min(k, 6);
    const int low_bits = k - high_bits;
    const std::uint64_t chunks = std::uint64_t{1} << high_bits;
    std::vector<Best> results(chunks);
    auto work = [&](std::uint64_t begin, std::uint64_t stride) {
      for (std::uint64_t q = begin; q < chunks; q += stride) results[q] = chunk(q, low_bits);
    };
    const int t = std::max(1, std::min<int>(threads, static_cast<int>(chunks)));
    if (t == 1 || k < 12) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < t; ++i) pool.emplace_back(work, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(t));
      for (auto& th : pool) th.join();
    }
    Best best;
    for (const auto& r : results) best.offer(r.value, r.mask, r.sign);
    return best;
  }
};

// Weighted block integrals laid out with the enumerated side first.
template <Scalar T>
std::vector<std::vector<T>> weighted(const StepKernel<T>& k, bool outer_rows)
{
  const int outer = outer_rows ? k.rows() : k.cols();
  const int inner = outer_rows ? k.cols() : k.rows();
  std::vector<std::vector<T>> w(static_cast<std::size_t>(outer), std::vector<T>(static_cast<std::size_t>(inner)));
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) {
      T v = k.row_measure(i) * k.col_measure(j) * k.at(i, j);
      if (outer_rows) {
        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      } else {
        w[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
      }
    }
  }
  return w;
}

template <Scalar T>
T block_sum(const StepKernel<T>& k, const std::vector<int>& rows, const std::vector<int>& cols)
{
  T s = T(0);
  for (int i : rows) {
    for (int j : cols) s += k.row_measure(i) * k.col_measure(j) * k.at(i, j);
  }
  return s;
}

// Turns an outer mask and sign into explicit witness sets.
template <Scalar T>
CutNormResult<T> witness(const StepKernel<T>& k, const std::vector<std::vector<T>>& w, bool outer_rows,
                         std::uint64_t mask, int sign)
{
  const int outer = static_cast<int>(w.size());
  const int inner = outer ? static_cast<int>(w[0].size()) : 0;
  std::vector<int> s_set;
  std::vector<int> t_set;
  std::vector<T> c(static_cast<std::size_t>(inner), T(0));
  for (int i = 0; i < outer; ++i) {
    if ((mask >> i) & 1u) {
      s_set.push_back(i);
      for (int j = 0; j < inner; ++j) c[static_cast<std::size_t>(j)] += w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  for (int j = 0; j < inner; ++j) {
    if ((sign > 0 && c[static_cast<std::size_t>(j)] > 0) || (sign < 0 && c[static_cast<std::size_t>(j)] < 0)) t_set.push_back(j);
  }
  CutNormResult<T> out;
  out.rows = outer_rows ? s_set : t_set;
  out.cols = outer_rows ? t_set : s_set;
  T v = block_sum(k, out.rows, out.cols);
  out.sign = v < 0 ? -1 : 1;
  out.value = abs_value(v);
  return out;
}

template <Scalar T>
CutNormResult<T> local_search(const StepKernel<T>& k, const CutNormOptions& options)
{
  auto w = weighted(k, true);
  const int n = k.rows();
  const int m = k.cols();
  std::mt19937_64 gen(options.seed);
  CutNormResult<T> best;
  bool have = false;
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    for (int sign : {1, -1}) {
      std::vector<char> s(static_cast<std::size_t>(n));
      std::vector<char> t(static_cast<std::size_t>(m));
      for (auto& x : s) x = static_cast<char>(gen() & 1u);
      double last = -1;
      for (int iter = 0; iter < 100; ++iter) {
        for (int j = 0; j < m; ++j) {
          double c = 0;
          for (int i = 0; i < n; ++i) {
            if (s[static_cast<std::size_t>(i)]) c += to_double(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          }
          t[static_cast<std::size_t>(j)] = static_cast<char>(sign * c > 0);
        }
        double total = 0;
        for (int i = 0; i < n; ++i) {
          double r = 0;
          for (int j = 0; j < m; ++j) {
            if (t[static_cast<std::size_t>(j)]) r += to_double(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
          }
          s[static_cast<std::size_t>(i)] = static_cast<char>(sign * r > 0);
          if (sign * r > 0) total += sign * r;
        }
        if (total <= last) break;
        last = total;
      }
      std::vector<int> rows;
      std::vector<int> cols;
      for (int i = 0; i < n; ++i) {
        if (s[static_cast<std::size_t>(i)]) rows.push_back(i);
      }
      for (int j = 0; j < m; ++j) {
        if (t[static_cast<std::size_t>(j)]) cols.push_back(j);
      }
      T v = block_sum(k, rows, cols);
      T av = abs_value(v);
      if (!have || av > best.value) {
        best.value = av;
        best.rows = rows;
        best.cols = cols;
        best.sign = v < 0 ? -1 : 1;
        have = true;
      }
    }
  }
  best.exact = false;
  return best;
}

}  // namespace

template <Scalar T>
CutNormResult<T> cut_norm(const StepKernel<T>& k, const CutNormOptions& options)
{
  const bool outer_rows = k.rows() <= k.cols();
  const int outer = std::min(k.rows(), k.cols());
  if (outer > options.cap || outer > 62) return local_search(k, options);
  auto w = weighted(k, outer_rows);
  const int inner = static_cast<int>(w[0].size());

  if constexpr (is_rational_v<T>) {
    // Scale to a common denominator and search over integers.
    BigInt denom = 1;
    for (const auto& row : w) {
      for (const auto& x : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<std::vector<BigInt>> big(w.size(), std::vector<BigInt>(static_cast<std::size_t>(inner)));
    BigInt total = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (int j = 0; j < inner; ++j) {
        const Rational& x = w[i][static_cast<std::size_t>(j)];
        BigInt v = x.get_num() * (denom / x.get_den());
        total += abs(v);
        big[i][static_cast<std::size_t>(j)] = v;
      }
    }
    std::uint64_t mask = 0;
    int sign = 1;
    if (total.fits_slong_p() && total < (BigInt(1) << 62)) {
      std::vector<std::vector<std::int64_t>> small(w.size(), std::vector<std::int64_t>(static_cast<std::size_t>(inner)));
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (int j = 0; j < inner; ++j) small[i][static_cast<std::size_t>(j)] = big[i][static_cast<std::size_t>(j)].get_si();
      }
      auto best = CutSearch<std::int64_t>{small, outer, inner}.run(options.threads);
      mask = best.mask;
      sign = best.sign;
    } else {
      auto best = CutSearch<BigInt>{big, outer, inner}.run(options.threads);
      mask = best.mask;
      sign = best.sign;
    }
    return witness(k, w, outer_rows, mask, sign);
  } else {
    auto best = CutSearch<double>{w, outer, inner}.run(options.threads);
    return witness(k, w, outer_rows, best.mask, best.sign);
  }
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

int class_count(const std::vector<int>& cls)
{
  int n = 0;
  for (int c : cls) n = std::max(n, c + 1);
  return n;
}

void check_partition(const Partition& p, int rows, int cols)
{
  if (static_cast<int>(p.row_class.size()) != rows || static_cast<int>(p.col_class.size()) != cols) {
    throw InvalidArgument("partition does not match the kernel's block counts");
  }
  auto check = [](const std::vector<int>& cls) {
    std::vector<char> used(static_cast<std::size_t>(class_count(cls)), 0);
    for (int c : cls) {
      if (c < 0) throw InvalidArgument("negative partition class");
      used[static_cast<std::size_t>(c)] = 1;
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) throw InvalidArgument("empty partition class");
  };
  check(p.row_class);
  check(p.col_class);
}

}  // namespace

int Partition::row_classes() const { return class_count(row_class); }
int Partition::col_classes() const { return class_count(col_class); }

Partition Partition::identity(int rows, int cols)
{
  Partition p;
  for (int i = 0; i < rows; ++i) p.row_class.push_back(i);
  for (int j = 0; j < cols; ++j) p.col_class.push_back(j);
  return p;
}

Partition Partition::single(int rows, int cols)
{
  Partition p;
  p.row_class.assign(static_cast<std::size_t>(rows), 0);
  p.col_class.assign(static_cast<std::size_t>(cols), 0);
  return p;
}

template <Scalar T>
StepKernel<T> coarsen(const StepKernel<T>& k, const Partition& p)
{
  check_partition(p, k.rows(), k.cols());
  const int rc = p.row_classes();
  const int cc = p.col_classes();
  std::vector<T> rm(static_cast<std::size_t>(rc), T(0));
  std::vector<T> cm(static_cast<std::size_t>(cc), T(0));
  for (int i = 0; i < k.rows(); ++i) rm[static_cast<std::size_t>(p.row_class[static_cast<std::size_t>(i)])] += k.row_measure(i);
  for (int j = 0; j < k.cols(); ++j) cm[static_cast<std::size_t>(p.col_class[static_cast<std::size_t>(j)])] += k.col_measure(j);
  std::vector<T> mass(static_cast<std::size_t>(rc * cc), T(0));
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) {
      mass[static_cast<std::size_t>(p.row_class[static_cast<std::size_t>(i)] * cc + p.col_class[static_cast<std::size_t>(j)])] +=
          k.row_measure(i) * k.col_measure(j) * k.at(i, j);
    }
  }
  for (int a = 0; a < rc; ++a) {
    for (int b = 0; b < cc; ++b) mass[static_cast<std::size_t>(a * cc + b)] /= rm[static_cast<std::size_t>(a)] * cm[static_cast<std::size_t>(b)];
  }
  if constexpr (!is_rational_v<T>) {
    double s = 0;
    for (double x : rm) s += x;
    for (double& x : rm) x /= s;
    s = 0;
    for (double x : cm) s += x;
    for (double& x : cm) x /= s;
  }
  return StepKernel<T>(std::move(rm), std::move(cm), std::move(mass));
}

template <Scalar T>
StepKernel<T> step_average(const StepKernel<T>& k, const Partition& p)
{
  auto c = coarsen(k, p);
  std::vector<T> values;
  values.reserve(k.values().size());
  for (int i = 0; i < k.rows(); ++i) {
    for (int j = 0; j < k.cols(); ++j) {
      values.push_back(c.at(p.row_class[static_cast<std::size_t>(i)], p.col_class[static_cast<std::size_t>(j)]));
    }
  }
  return StepKernel<T>(k.row_measures(), k.col_measures(), std::move(values));
}

// ---------------------------------------------------------------------------
// Sampling and adversarial kernels

namespace {

std::vector<Rational> sample_measures(std::mt19937_64& gen, int n, MeasureMode mode, int resolution)
{
  std::vector<Rational> out;
  if (mode == MeasureMode::equal) {
    out.assign(static_cast<std::size_t>(n), Rational(1, n));
    return out;
  }
  std::vector<BigInt> w;
  BigInt total = 0;
  for (int i = 0; i < n; ++i) {
    BigInt x = static_cast<unsigned long>(1 + gen() % static_cast<std::uint64_t>(resolution));
    total += x;
    w.push_back(x);
  }
  for (const auto& x : w) {
    Rational r(x, total);
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

}  // namespace

RationalKernel sample_kernel(const SampleOptions& o)
{
  if (o.blocks < 1 || o.col_blocks < 0) throw InvalidArgument("block count must be positive");
  if (o.resolution < 1) throw InvalidArgument("sampling resolution must be positive");
  if (o.low > o.high) throw InvalidArgument("empty sampling range");
  if (o.mean_zero && (o.low > 0 || o.high < 0)) throw InvalidArgument("mean-zero sampling needs 0 in the range");
  const int rows = o.blocks;
  const int cols = o.symmetric || o.col_blocks == 0 ? o.blocks : o.col_blocks;
  std::mt19937_64 gen(o.seed);
  auto row_measures = sample_measures(gen, rows, o.measures, o.resolution);
  auto col_measures = o.symmetric ? row_measures : sample_measures(gen, cols, o.measures, o.resolution);
  const Rational width = o.high - o.low;
  auto draw = [&] {
    Rational r(static_cast<unsigned long>(gen() % (static_cast<std::uint64_t>(o.resolution) + 1)), static_cast<unsigned long>(o.resolution));
    r.canonicalize();
    return Rational(o.low + width * r);
  };
  std::vector<Rational> values(static_cast<std::size_t>(rows * cols));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (o.symmetric && j < i) {
        values[static_cast<std::size_t>(i * cols + j)] = values[static_cast<std::size_t>(j * cols + i)];
      } else {
        values[static_cast<std::size_t>(i * cols + j)] = draw();
      }
    }
  }
  RationalKernel k(row_measures, col_measures, values);
  if (!o.mean_zero) return k;

  const Rational mean = integral(k);
  for (auto& v : values) v -= mean;
  Rational scale = 1;
  for (const auto& v : values) {
    if (v > o.high) scale = std::min(scale, Rational(o.high / v));
    if (v < o.low) scale = std::min(scale, Rational(o.low / v));
  }
  if (scale != 1) {
    for (auto& v : values) v *= scale;
  }
  return RationalKernel(std::move(row_measures), std::move(col_measures), std::move(values));
}

RationalKernel rank_one_sign_kernel()
{
  return RationalKernel::square({Rational(1, 2), Rational(1, 2)}, {1, -1, -1, 1});
}

RationalKernel checkerboard_kernel(int n)
{
  if (n < 1) throw InvalidArgument("checkerboard size must be positive");
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) values.push_back((i + j) % 2 == 0 ? 1 : -1);
  }
  return RationalKernel::square(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)), std::move(values));
}

RationalKernel corner_sign_kernel()
{
  return RationalKernel::square({Rational(1, 2), Rational(1, 2)}, {1, 1, 1, -1});
}

RationalKernel graph_deviation_kernel(const PlainGraph& g)
{
  auto w = kernel_from_graph<Rational>(g);
  const Rational p = integral(w);
  return affine(w, Rational(1), Rational(-p));
}

#define LOCSID_INSTANTIATE(T)                                                                            \
  template class StepKernel<T>;                                                                          \
  template StepKernel<T> kernel_from_graph<T>(const PlainGraph&);                                        \
  template std::pair<T, T> bounds(const StepKernel<T>&);                                                 \
  template bool in_unit_ball(const StepKernel<T>&);                                                      \
  template StepKernel<T> affine(const StepKernel<T>&, const T&, const T&);                               \
  template StepKernel<T> transpose(const StepKernel<T>&);                                                \
  template std::pair<StepKernel<T>, StepKernel<T>> common_refinement(const StepKernel<T>&, const StepKernel<T>&); \
  template StepKernel<T> add(const StepKernel<T>&, const StepKernel<T>&);                                \
  template StepKernel<T> subtract(const StepKernel<T>&, const StepKernel<T>&);                           \
  template StepKernel<T> compose(const StepKernel<T>&, const StepKernel<T>&);                            \
  template T integral(const StepKernel<T>&);                                                             \
  template T l2_squared(const StepKernel<T>&);                                                           \
  template double l2_norm(const StepKernel<T>&);                                                         \
  template T linf_norm(const StepKernel<T>&);                                                            \
  template CutNormResult<T> cut_norm(const StepKernel<T>&, const CutNormOptions&);                       \
  template StepKernel<T> coarsen(const StepKernel<T>&, const Partition&);                                \
  template StepKernel<T> step_average(const StepKernel<T>&, const Partition&);

LOCSID_INSTANTIATE(Rational)
LOCSID_INSTANTIATE(double)

#undef LOCSID_INSTANTIATE

}  // namespace locsid
