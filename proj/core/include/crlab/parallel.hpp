#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace crlab {

/** Global worker cap, settable from the CLI (--jobs). 0 = hardware. */
int& job_cap();

inline int effective_jobs() {
  int cap = job_cap();
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  return cap > 0 ? std::min(cap, hw) : hw;
}

/**
 * Runs fn(i) for i in [0, count). Work is split into contiguous chunks, one
 * per worker, so results written by index are deterministic for any job
 * count.
 */
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  int jobs = effective_jobs();
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::size_t nthreads = std::min<std::size_t>(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace crlab
