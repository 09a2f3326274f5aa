#pragma once

#include <cstdint>

#include "locsid/bigraph.hpp"

namespace locsid {

inline constexpr int default_spanning_cap = 20;

/// The 2^m spanning subgraphs of f, each with isolated nodes removed. Terms
/// are addressed by edge mask (bit i keeps edges()[i]) so that ranges of
/// masks can be handed to different threads.
class SpanningTerms {
 public:
  /// Throws CapExceeded when f has more than `cap` edges.
  explicit SpanningTerms(Bigraph f, int cap = default_spanning_cap);

  std::uint64_t size() const { return std::uint64_t{1} << f_.edge_count(); }
  Bigraph term(std::uint64_t mask) const;
  const Bigraph& graph() const { return f_; }

  class iterator {
   public:
    iterator(const SpanningTerms* owner, std::uint64_t mask) : owner_(owner), mask_(mask) {}
    std::uint64_t mask() const { return mask_; }
    Bigraph operator*() const { return owner_->term(mask_); }
    iterator& operator++()
    {
      ++mask_;
      return *this;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    const SpanningTerms* owner_;
    std::uint64_t mask_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  Bigraph f_;
};

SpanningTerms spanning_terms(const Bigraph& f, int cap = default_spanning_cap);

}  // namespace locsid
