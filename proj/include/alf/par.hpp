#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// Data-parallel scan kernels used by the exhaustive teachers and the
// finite-universe audits. Every kernel returns the same value as its
// counterpart in alf::serial regardless of thread count: "first" always
// means the smallest index, never the first one found.
//
// Predicates must be pure and must not throw.

namespace alf {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

namespace serial {

template <class Pred>
std::size_t first_match(std::size_t n, Pred&& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) return i;
  }
  return npos;
}

template <class Pred>
std::vector<char> tabulate(std::size_t n, Pred&& pred) {
  std::vector<char> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = pred(i) ? 1 : 0;
  return out;
}

template <class Pred>
std::vector<std::size_t> matches(std::size_t n, Pred&& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

/// Smallest value of key(i) over [0, n); key returns npos to abstain.
template <class Key>
std::size_t min_key(std::size_t n, Key&& key) {
  std::size_t best = npos;
  for (std::size_t i = 0; i < n; ++i) best = std::min(best, key(i));
  return best;
}

}  // namespace serial

namespace par {

namespace detail {
inline constexpr std::int64_t kBlock = 1 << 14;
inline constexpr std::int64_t kSerialBelow = 2048;
}  // namespace detail

/// Smallest i in [0, n) with pred(i), or npos. Scans in blocks so a hit near
/// the front does not pay for the whole range.
template <class Pred>
std::size_t first_match(std::size_t n, Pred&& pred) {
  const auto total = static_cast<std::int64_t>(n);
  if (total < detail::kSerialBelow) return serial::first_match(n, pred);
  for (std::int64_t base = 0; base < total; base += detail::kBlock) {
    const std::int64_t end = std::min(total, base + detail::kBlock);
    std::size_t local = npos;
#pragma omp parallel for schedule(static) reduction(min : local)
    for (std::int64_t i = base; i < end; ++i) {
      if (pred(static_cast<std::size_t>(i))) {
        local = std::min(local, static_cast<std::size_t>(i));
      }
    }
    if (local != npos) return local;
  }
  return npos;
}

template <class Pred>
std::vector<char> tabulate(std::size_t n, Pred&& pred) {
  const auto total = static_cast<std::int64_t>(n);
  if (total < detail::kSerialBelow) return serial::tabulate(n, pred);
  std::vector<char> out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i) {
    out[static_cast<std::size_t>(i)] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
  }
  return out;
}

/// All i in [0, n) with pred(i), ascending.
template <class Pred>
std::vector<std::size_t> matches(std::size_t n, Pred&& pred) {
  const std::vector<char> flags = tabulate(n, pred);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

template <class Key>
std::size_t min_key(std::size_t n, Key&& key) {
  const auto total = static_cast<std::int64_t>(n);
  if (total < detail::kSerialBelow) return serial::min_key(n, key);
  std::size_t best = npos;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (std::int64_t i = 0; i < total; ++i) {
    best = std::min(best, key(static_cast<std::size_t>(i)));
  }
  return best;
}

template <class Pred>
bool all_of(std::size_t n, Pred&& pred) {
  return first_match(n, [&](std::size_t i) { return !pred(i); }) == npos;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace par
}  // namespace alf
