// Compares the serial reference kernels with their OpenMP variants on the
// two hot paths: augmentation-level expansion and the per-graph scan.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cyclecut/connectivity.hpp"
#include "cyclecut/cuts.hpp"
#include "cyclecut/enumeration.hpp"
#include "cyclecut/neighborhood.hpp"
#include "cyclecut/scan.hpp"
#include "cyclecut/verifier.hpp"

using namespace cyclecut;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double time_once(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace

int main() {
  const int jobs = hardware_jobs();
  std::printf("cyclecut kernel benchmark (OpenMP jobs: %d)\n\n", jobs);

  {
    // expansion workload: a mid-size level of the n=9 enumeration
    const int n = 9;
    std::vector<std::uint64_t> level{0};
    for (int m = 0; m < 15; ++m) level = expand_level_parallel(n, level, jobs);
    std::printf("level expansion, n=%d, %zu representatives at m=15\n", n, level.size());

    std::vector<std::uint64_t> out_serial, out_parallel;
    double ts = time_once([&] { out_serial = expand_level_serial(n, level); });
    double tp = time_once([&] { out_parallel = expand_level_parallel(n, level, jobs); });
    std::printf("  serial   %.3fs\n", ts);
    std::printf("  parallel %.3fs  (x%.2f, outputs %s)\n\n", tp, ts / tp,
                out_serial == out_parallel ? "identical" : "DIFFER");
  }

  {
    // scan workload: connectivity + neighborhood + forest-cut search over
    // all connected graphs on 8 vertices
    EnumerationConstraints c;
    c.n = 8;
    c.connected_only = true;
    std::vector<Graph> graphs = enumerate_graphs(c, jobs);
    std::printf("predicate scan, %zu connected graphs on 8 vertices\n", graphs.size());

    auto predicate = [](const Graph& g) {
      int score = vertex_connectivity(g);
      score += all_neighborhoods_cyclic(g) ? 1 : 0;
      score += find_forest_cut(g) ? 1 : 0;
      score += find_independent_cut(g) ? 1 : 0;
      score += static_cast<int>(compute_bound_report(twin_reduce(g).first).step_failures.size());
      return score;
    };
    std::vector<int> out_serial, out_parallel;
    double ts = time_once([&] { out_serial = scan_map_serial(graphs, predicate); });
    double tp = time_once([&] { out_parallel = scan_map_parallel(graphs, predicate, jobs); });
    std::printf("  serial   %.3fs\n", ts);
    std::printf("  parallel %.3fs  (x%.2f, outputs %s)\n", tp, ts / tp,
                out_serial == out_parallel ? "identical" : "DIFFER");
  }
  return 0;
}
