#ifndef CYCLECUT_SEARCH_HPP
#define CYCLECUT_SEARCH_HPP

#include <iosfwd>

#include "cyclecut/enumeration.hpp"
#include "cyclecut/serialize.hpp"

namespace cyclecut {

/// Where a harness draws its graphs: native generation (n within the cap)
/// or a newline-separated graph6 stream.
struct GraphSource {
  static GraphSource native() { return {nullptr}; }
  static GraphSource stream(std::istream& in) { return {&in}; }
  bool is_native() const { return in == nullptr; }
  std::istream* in = nullptr;
};

/// Outcome of one harness run. Counterexample order follows the scan order
/// (ascending canonical form for native runs, line order for streams), so
/// identical inputs give identical reports apart from elapsed_seconds.
struct SearchReport {
  std::string harness;
  std::string scope;  // which graphs the scan covers, and why
  std::string source; // "native" | "stream"
  EnumerationConstraints constraints;
  long graphs_scanned = 0;
  struct Counterexample {
    std::string graph6;
    Record diagnostics;
  };
  std::vector<Counterexample> counterexamples;
  std::optional<int> extremal_value;
  std::vector<std::string> extremal_witnesses;
  double elapsed_seconds = 0.0;
};

/// Connected graphs with m <= 2n-4: every one should have an independent
/// cut; a graph without one is a counterexample to the published bound.
SearchReport run_chen_yu_check(int n, const GraphSource& source, int jobs = 1);

/// Connected graphs with m < 3n-6: a graph without a forest cut would be a
/// counterexample to the conjecture (a discovery, not a harness failure).
SearchReport run_forest_cut_check(int n, const GraphSource& source, int jobs = 1);

/// 3-connected graphs whose every neighborhood contains a cycle: records
/// the minimum edge count and lists any graph with 8m < 15n together with
/// its bound report.
SearchReport run_extremal_search(int n, const GraphSource& source, int jobs = 1);

Record search_report_json(const SearchReport& r, bool include_elapsed = true);

}  // namespace cyclecut

#endif
