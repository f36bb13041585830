#pragma once

// Enumerative Occam learning: walk a complexity-ordered hypothesis stream and
// return the first hypothesis consistent with the sample.

#include <functional>
#include <optional>
#include <utility>

#include "alf/core.hpp"

namespace alf {

/// A total quasi-order presented as a rank function plus a restartable
/// stream that emits hypotheses in nondecreasing rank with a fixed
/// tie-break. `exhaustive` marks a finite stream that covers the whole
/// hypothesis space.
template <class H>
struct ComplexityOrdering {
  using Cursor = std::function<std::optional<H>()>;

  std::function<Rank(const H&)> rank;
  std::function<Cursor()> stream;
  bool exhaustive = false;
};

template <class H, class S, class Consistent>
LearnerOutcome<H> occam_learn(const ComplexityOrdering<H>& ordering,
                              Consistent&& consistent, const S& sample,
                              const Rank& rank_cap) {
  auto next = ordering.stream();
  for (;;) {
    std::optional<H> h = next();
    if (!h) {
      if (ordering.exhaustive) return Unrealizable{};
      return CapExhausted{rank_cap};
    }
    if (rank_cap < ordering.rank(*h)) return CapExhausted{rank_cap};
    if (consistent(static_cast<const H&>(*h), sample)) {
      return Proposal<H>{std::move(*h)};
    }
  }
}

}  // namespace alf
