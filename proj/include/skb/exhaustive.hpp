#ifndef SKB_EXHAUSTIVE_HPP
#define SKB_EXHAUSTIVE_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

#include "skb/error.hpp"

namespace skb
{

/// Number of worker threads used by the exhaustive checkers. Results never
/// depend on this value.
unsigned worker_count();
void set_worker_count(unsigned n);

namespace detail
{

template <std::size_t N, class Pred>
std::optional<std::array<Elem, N>>
scan_block(std::array<Elem, N> const &extent, Elem outer_begin, Elem outer_end,
           Pred const &holds, std::atomic<Elem> const *cutoff)
{
  std::array<Elem, N> t{};
  for (Elem o = outer_begin; o < outer_end; ++o) {
    if (cutoff && o > cutoff->load(std::memory_order_relaxed))
      return std::nullopt;

    t.fill(0);
    t[0] = o;

    for (;;) {
      if (!holds(t))
        return t;

      std::size_t i = N - 1;
      while (i > 0 && ++t[i] == extent[i]) {
        t[i] = 0;
        --i;
      }
      if (i == 0)
        break;
    }
  }
  return std::nullopt;
}

} // namespace detail

/// Scans the box [0,extent[0]) x ... x [0,extent[N-1]) and returns the
/// lexicographically least tuple for which `holds` is false.
///
/// Large boxes are split along the outermost coordinate across
/// worker_count() threads; the merge keeps the least witness, so the result
/// is identical to a sequential scan.
template <std::size_t N, class Pred>
std::optional<Witness> first_violation(std::array<Elem, N> const &extent,
                                       Pred const &holds)
{
  static_assert(N >= 1);
  for (Elem e : extent)
    if (e == 0)
      return std::nullopt;

  std::size_t total = 1;
  for (Elem e : extent)
    total *= e;

  auto to_witness = [](std::array<Elem, N> const &t) {
    return Witness(t.begin(), t.end());
  };

  unsigned workers = std::min<unsigned>(worker_count(), extent[0]);
  if (workers <= 1 || total < (1u << 16)) {
    auto hit = detail::scan_block<N>(extent, 0, extent[0], holds, nullptr);
    if (!hit)
      return std::nullopt;
    return to_witness(*hit);
  }

  std::atomic<Elem> cutoff{extent[0]};
  std::vector<std::optional<std::array<Elem, N>>> hits(workers);
  {
    std::vector<std::jthread> pool;
    Elem chunk = (extent[0] + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      Elem begin = w * chunk;
      Elem end = std::min<Elem>(extent[0], begin + chunk);
      if (begin >= end)
        break;
      pool.emplace_back([&, w, begin, end] {
        auto hit = detail::scan_block<N>(extent, begin, end, holds, &cutoff);
        if (hit) {
          Elem cur = cutoff.load();
          while ((*hit)[0] < cur && !cutoff.compare_exchange_weak(cur, (*hit)[0]))
            ;
          hits[w] = hit;
        }
      });
    }
  }

  std::optional<std::array<Elem, N>> best;
  for (auto const &h : hits)
    if (h && (!best || *h < *best))
      best = h;
  if (!best)
    return std::nullopt;
  return to_witness(*best);
}

} // namespace skb

#endif // SKB_EXHAUSTIVE_HPP
