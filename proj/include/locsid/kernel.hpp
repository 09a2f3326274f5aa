#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "locsid/plain_graph.hpp"
#include "locsid/scalar.hpp"

namespace locsid {

/// A step function on [0,1]^2: row block i has measure row_measures[i],
/// column block j has measure col_measures[j], and the value on block
/// i x j is values[i * cols + j]. Blocks are laid out left to right in
/// index order, so block boundaries are the prefix sums of the measures.
template <Scalar T>
class StepKernel {
 public:
  StepKernel() : StepKernel(constant(T(1))) {}
  /// Throws InvalidArgument unless measures are positive, each side sums to
  /// one (exactly for rationals, within 1e-12 for doubles) and the value
  /// matrix has rows * cols entries.
  StepKernel(std::vector<T> row_measures, std::vector<T> col_measures, std::vector<T> values);

  static StepKernel constant(T c);
  /// The same measures on both sides.
  static StepKernel square(std::vector<T> measures, std::vector<T> values);

  int rows() const { return static_cast<int>(row_measures_.size()); }
  int cols() const { return static_cast<int>(col_measures_.size()); }
  const T& at(int i, int j) const { return values_[static_cast<std::size_t>(i * cols() + j)]; }
  const T& row_measure(int i) const { return row_measures_[static_cast<std::size_t>(i)]; }
  const T& col_measure(int j) const { return col_measures_[static_cast<std::size_t>(j)]; }
  const std::vector<T>& row_measures() const { return row_measures_; }
  const std::vector<T>& col_measures() const { return col_measures_; }
  const std::vector<T>& values() const { return values_; }
  bool is_symmetric() const;

  friend bool operator==(const StepKernel&, const StepKernel&) = default;

 private:
  struct Unchecked {};
  StepKernel(Unchecked, std::vector<T> r, std::vector<T> c, std::vector<T> v)
      : row_measures_(std::move(r)), col_measures_(std::move(c)), values_(std::move(v))
  {
  }

  std::vector<T> row_measures_;
  std::vector<T> col_measures_;
  std::vector<T> values_;
};

using RationalKernel = StepKernel<Rational>;
using FloatKernel = StepKernel<double>;

FloatKernel to_float(const RationalKernel& k);
RationalKernel to_rational(const FloatKernel& k);

/// N equal blocks, value 1 exactly on adjacent pairs.
template <Scalar T>
StepKernel<T> kernel_from_graph(const PlainGraph& g);

template <Scalar T>
std::pair<T, T> bounds(const StepKernel<T>& k);
/// All values in [-1, 1].
template <Scalar T>
bool in_unit_ball(const StepKernel<T>& k);

/// Blockwise scale * K + shift.
template <Scalar T>
StepKernel<T> affine(const StepKernel<T>& k, const T& scale, const T& shift);
template <Scalar T>
StepKernel<T> transpose(const StepKernel<T>& k);

/// Both kernels re-expressed on the merged row and column boundaries.
template <Scalar T>
std::pair<StepKernel<T>, StepKernel<T>> common_refinement(const StepKernel<T>& a, const StepKernel<T>& b);
template <Scalar T>
StepKernel<T> add(const StepKernel<T>& a, const StepKernel<T>& b);
template <Scalar T>
StepKernel<T> subtract(const StepKernel<T>& a, const StepKernel<T>& b);
/// (A o B)(x, y) = integral of A(x, z) B(z, y) dz.
template <Scalar T>
StepKernel<T> compose(const StepKernel<T>& a, const StepKernel<T>& b);

template <Scalar T>
T integral(const StepKernel<T>& k);
template <Scalar T>
T l2_squared(const StepKernel<T>& k);
template <Scalar T>
double l2_norm(const StepKernel<T>& k);
template <Scalar T>
T linf_norm(const StepKernel<T>& k);

inline constexpr int default_cut_norm_cap = 24;

struct CutNormOptions {
  /// Exact enumeration runs over 2^min(rows, cols) subsets up to this cap.
  int cap = default_cut_norm_cap;
  int threads = 1;
  /// Seed and restarts of the local search used above the cap.
  std::uint64_t seed = 0;
  int restarts = 64;
};

template <Scalar T>
struct CutNormResult {
  T value{};
  /// Row blocks S and column blocks T with |integral over S x T| = value.
  std::vector<int> rows;
  std::vector<int> cols;
  /// Sign of the witnessing integral.
  int sign = 1;
  /// False when the local search fallback produced a lower bound only.
  bool exact = true;
};

/// max over block unions S, T of |integral of K over S x T|. Optimal S and T
/// can always be taken to be unions of blocks, because the objective is
/// bilinear in the fraction of each block that is included.
template <Scalar T>
CutNormResult<T> cut_norm(const StepKernel<T>& k, const CutNormOptions& options = {});

/// Class assignment of row blocks and of column blocks. When the two maps
/// coincide on a square kernel the partition is symmetric.
struct Partition {
  std::vector<int> row_class;
  std::vector<int> col_class;
  int row_classes() const;
  int col_classes() const;

  static Partition identity(int rows, int cols);
  static Partition single(int rows, int cols);
};

/// W_P on the original blocks: every block takes the average of its class.
template <Scalar T>
StepKernel<T> step_average(const StepKernel<T>& k, const Partition& p);
/// W_P with one block per class. Densities agree with step_average.
template <Scalar T>
StepKernel<T> coarsen(const StepKernel<T>& k, const Partition& p);

enum class MeasureMode { equal, random };

struct SampleOptions {
  int blocks = 3;
  /// Number of column blocks; 0 means the same as `blocks`.
  int col_blocks = 0;
  Rational low = -1;
  Rational high = 1;
  bool symmetric = false;
  /// Shifted, then scaled towards zero if needed, so the integral is 0 and
  /// values stay in [low, high]. Requires low <= 0 <= high.
  bool mean_zero = false;
  MeasureMode measures = MeasureMode::equal;
  std::uint64_t seed = 0;
  /// Values and random measures are multiples of 1/resolution.
  int resolution = 1 << 16;
};

/// Deterministic in the options (raw mt19937_64 output, no distributions).
RationalKernel sample_kernel(const SampleOptions& options);

/// +1 on [0,1/2)^2 and [1/2,1]^2, -1 elsewhere (the rank-one sign kernel).
RationalKernel rank_one_sign_kernel();
/// +1 / -1 alternating over an n x n equal grid.
RationalKernel checkerboard_kernel(int n);
/// -1 on [1/2,1]^2, +1 elsewhere.
RationalKernel corner_sign_kernel();
/// W_G - p where p is the edge density 2M / N^2 of W_G.
RationalKernel graph_deviation_kernel(const PlainGraph& g);

}  // namespace locsid
