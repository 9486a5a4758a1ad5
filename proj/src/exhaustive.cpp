#include "skb/exhaustive.hpp"

#include <atomic>
#include <thread>

namespace skb
{

namespace
{

std::atomic<unsigned> &workers()
{
  static std::atomic<unsigned> n{std::max(1u, std::thread::hardware_concurrency())};
  return n;
}

} // namespace

unsigned worker_count() { return workers().load(); }

void set_worker_count(unsigned n) { workers().store(n == 0 ? 1 : n); }

} // namespace skb
