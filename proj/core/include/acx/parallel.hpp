#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace acx {

/// Process-wide parallelism hint (CLI --threads). Purely a performance knob:
/// work items write disjoint output slots, so results are bit-identical for
/// any thread count.
void set_thread_hint(int threads);
int thread_hint();

/// Runs body(i) for i in [0, count). Each index is handled exactly once by
/// one thread; body must only touch state owned by index i.
template <typename Body>
void parallel_for(long count, Body&& body) {
  int nt = std::min<long>(thread_hint(), count);
  if (nt <= 1) {
    for (long i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([=]() {
      for (long i = t; i < count; i += nt) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int thread_hint_storage(int set, bool write) {
  static int hint = 1;
  if (write) hint = set < 1 ? 1 : set;
  return hint;
}

inline void set_thread_hint(int threads) { thread_hint_storage(threads, true); }
inline int thread_hint() { return thread_hint_storage(0, false); }

}  // namespace acx
