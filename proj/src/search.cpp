#include "cyclecut/search.hpp"

#include <chrono>

#include "cyclecut/connectivity.hpp"
#include "cyclecut/cuts.hpp"
#include "cyclecut/neighborhood.hpp"
#include "cyclecut/scan.hpp"

namespace cyclecut {

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Graph> load(const GraphSource& source, const EnumerationConstraints& c, int jobs) {
  if (source.is_native()) return enumerate_graphs(c, jobs);
  return ingest_graph6_stream(*source.in, c);
}

void require_n(int n, const char* harness) {
  if (n < 4) throw std::invalid_argument(std::string(harness) + ": requires n >= 4");
}

// run a cut-existence harness: a scanned graph with no cut of the given
// kind becomes a counterexample
SearchReport run_cut_harness(const char* name, const char* scope, CutKind kind,
                             const EnumerationConstraints& c, const GraphSource& source, int jobs) {
  auto start = Clock::now();
  SearchReport report;
  report.harness = name;
  report.scope = scope;
  report.source = source.is_native() ? "native" : "stream";
  report.constraints = c;

  std::vector<Graph> graphs = load(source, c, jobs);
  report.graphs_scanned = static_cast<long>(graphs.size());

  struct Verdict {
    bool missing_cut = false;
  };
  std::vector<Verdict> verdicts = scan_map(
      graphs,
      [&](const Graph& g) {
        auto cert = kind == CutKind::independent ? find_independent_cut(g) : find_forest_cut(g);
        if (cert && !validate_certificate(g, *cert))
          throw std::logic_error(std::string(name) + ": produced cut failed re-validation");
        return Verdict{!cert.has_value()};
      },
      jobs);

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!verdicts[i].missing_cut) continue;
    Record diag;
    diag["reason"] = kind == CutKind::independent ? "no independent cut" : "no forest cut";
    diag["n"] = graphs[i].vertex_count();
    diag["m"] = graphs[i].edge_count();
    report.counterexamples.push_back({encode_graph6(graphs[i]), std::move(diag)});
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace

SearchReport run_chen_yu_check(int n, const GraphSource& source, int jobs) {
  require_n(n, "run_chen_yu_check");
  EnumerationConstraints c;
  c.n = n;
  c.connected_only = true;
  c.max_edges = 2 * n - 4;
  return run_cut_harness("chen-yu",
                         "connected graphs with m <= 2n-4 (disconnected graphs have the empty "
                         "independent cut and are skipped)",
                         CutKind::independent, c, source, jobs);
}

SearchReport run_forest_cut_check(int n, const GraphSource& source, int jobs) {
  require_n(n, "run_forest_cut_check");
  EnumerationConstraints c;
  c.n = n;
  c.connected_only = true;
  c.max_edges = 3 * n - 7;  // m < 3n - 6
  return run_cut_harness("forest-cut",
                         "connected graphs with m < 3n-6 (disconnected graphs have the empty "
                         "forest cut and are skipped)",
                         CutKind::forest, c, source, jobs);
}

SearchReport run_extremal_search(int n, const GraphSource& source, int jobs) {
  require_n(n, "run_extremal_search");
  auto start = Clock::now();
  EnumerationConstraints c;
  c.n = n;
  c.connected_only = true;
  c.min_connectivity = 3;
  c.require_neighborhood_cycles = true;

  SearchReport report;
  report.harness = "extremal";
  report.scope = "3-connected graphs in which every vertex neighborhood contains a cycle";
  report.source = source.is_native() ? "native" : "stream";
  report.constraints = c;

  std::vector<Graph> graphs = load(source, c, jobs);
  report.graphs_scanned = static_cast<long>(graphs.size());

  struct Verdict {
    int m = 0;
    bool below_bound = false;
    Record bound_report;
  };
  std::vector<Verdict> verdicts = scan_map(
      graphs,
      [&](const Graph& g) {
        Verdict v;
        v.m = g.edge_count();
        EdgeBoundResult res = verify_edge_bound(g);
        v.below_bound = 8 * g.edge_count() < 15 * g.vertex_count();
        if (v.below_bound) {
          v.bound_report = bound_report_json(res.report);
          v.bound_report["removed_twins"] = res.removed_twins;
        }
        return v;
      },
      jobs);

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!report.extremal_value || verdicts[i].m < *report.extremal_value)
      report.extremal_value = verdicts[i].m;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (report.extremal_value && verdicts[i].m == *report.extremal_value)
      report.extremal_witnesses.push_back(encode_graph6(graphs[i]));
    if (verdicts[i].below_bound) {
      Record diag;
      diag["reason"] = "8m < 15n";
      diag["bound_report"] = verdicts[i].bound_report;
      report.counterexamples.push_back({encode_graph6(graphs[i]), std::move(diag)});
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

Record search_report_json(const SearchReport& r, bool include_elapsed) {
  Record j;
  j["harness"] = r.harness;
  j["scope"] = r.scope;
  j["source"] = r.source;
  j["constraints"] = constraints_json(r.constraints);
  j["graphs_scanned"] = r.graphs_scanned;
  Record ces = Record::array();
  for (const auto& ce : r.counterexamples) {
    Record e;
    e["graph6"] = ce.graph6;
    e["diagnostics"] = ce.diagnostics;
    ces.push_back(e);
  }
  j["counterexamples"] = ces;
  j["extremal_value"] = r.extremal_value ? Record(*r.extremal_value) : Record(nullptr);
  j["extremal_witnesses"] = r.extremal_witnesses;
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

}  // namespace cyclecut
