#ifndef CYCLECUT_SCAN_HPP
#define CYCLECUT_SCAN_HPP

#include <cstdlib>
#include <exception>
#include <string>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cyclecut {

/// Resolves a requested job count: values >= 1 pass through, anything else
/// falls back to the CYCLECUT_JOBS environment variable, then to 1.
inline int effective_jobs(int requested) {
  if (requested >= 1) return requested;
  if (const char* env = std::getenv("CYCLECUT_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

/// Serial reference for the per-graph scan kernel. Kept separate from the
/// OpenMP variant so tests and the benchmark can compare the two directly.
template <typename In, typename Fn>
auto scan_map_serial(const std::vector<In>& items, Fn&& fn) {
  using Out = std::decay_t<decltype(fn(items[0]))>;
  std::vector<Out> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
  return out;
}

/// OpenMP scan kernel. Results land at the index of their input, so output
/// is identical to the serial reference for every job count.
template <typename In, typename Fn>
auto scan_map_parallel(const std::vector<In>& items, Fn&& fn, int jobs) {
  using Out = std::decay_t<decltype(fn(items[0]))>;
  std::vector<Out> out(items.size());
  const long count = static_cast<long>(items.size());
  std::exception_ptr err = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32) num_threads(effective_jobs(jobs))
#endif
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = fn(items[i]);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(cyclecut_scan_err)
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

template <typename In, typename Fn>
auto scan_map(const std::vector<In>& items, Fn&& fn, int jobs) {
  jobs = effective_jobs(jobs);
  if (jobs <= 1) return scan_map_serial(items, fn);
  return scan_map_parallel(items, fn, jobs);
}

}  // namespace cyclecut

#endif
