#include "locsid/spanning.hpp"

#include "locsid/errors.hpp"

namespace locsid {

SpanningTerms::SpanningTerms(Bigraph f, int cap) : f_(std::move(f))
{
  if (f_.edge_count() > cap || f_.edge_count() > 62) {
    throw CapExceeded("spanning-term edge cap", static_cast<std::uint64_t>(f_.edge_count()),
                      static_cast<std::uint64_t>(cap));
  }
}

Bigraph SpanningTerms::term(std::uint64_t mask) const { return remove_isolated_nodes(unlabel(edge_subgraph(f_, mask))); }

SpanningTerms spanning_terms(const Bigraph& f, int cap) { return SpanningTerms(f, cap); }

}  // namespace locsid
