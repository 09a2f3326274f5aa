#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "locsid/bigraph.hpp"

namespace locsid {

enum class IsoMode {
  side_preserving,   // isomorphisms must map first class to first class
  allow_side_swap,   // a transpose is also an isomorphism
};

/// Opaque isomorphism-invariant code; labeled nodes are matched label-wise.
struct CanonicalKey {
  std::vector<int> code;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  std::string to_string() const;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept;
};

inline constexpr int default_canonical_cap = 12;

/// Exhaustive search over orderings compatible with a color refinement of
/// the nodes. Throws CapExceeded above `cap` nodes.
CanonicalKey canonical_form(const Bigraph& f, IsoMode mode = IsoMode::side_preserving, int cap = default_canonical_cap);
std::optional<CanonicalKey> try_canonical_form(const Bigraph& f, IsoMode mode = IsoMode::side_preserving,
                                               int cap = default_canonical_cap);
bool isomorphic(const Bigraph& a, const Bigraph& b, IsoMode mode = IsoMode::side_preserving);

/// Short human-readable name: "K_0", "K_2", "P_4", "C_6", "K_{2,3}", unions
/// such as "2K_2", a "^T" suffix for the transposed orientation of a
/// side-sensitive family member, otherwise "G(n=..,m=..)".
std::string describe(const Bigraph& f);

}  // namespace locsid
