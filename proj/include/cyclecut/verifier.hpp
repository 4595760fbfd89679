#ifndef CYCLECUT_VERIFIER_HPP
#define CYCLECUT_VERIFIER_HPP

#include <optional>

#include "cyclecut/graph.hpp"

namespace cyclecut {

/// Thrown by verify_edge_bound when the input violates a hypothesis of the
/// edge bound (connectivity or the neighborhood-cycle property).
struct hypothesis_error : std::runtime_error {
  std::string hypothesis;  // "three-connected" | "neighborhood-cycles"
  hypothesis_error(std::string which, const std::string& what)
      : std::runtime_error(what), hypothesis(std::move(which)) {}
};

struct StepFailure {
  std::string step;     // fixed vocabulary, see compute_bound_report
  std::string witness;  // offending vertex / edge / pair, human-readable
  bool operator==(const StepFailure&) const = default;
};

/// Machine-checkable record of the counting argument on one graph:
///   (1)  2m >= 3n + 3|V3|      (2)  2m >= 4n - |V3|
///   combined: 8m >= (1) + 3*(2) = 15n.
struct BoundReport {
  int n = 0;
  int m = 0;
  int v3_size = 0;
  int lhs_handshake = 0;  // 2m
  int rhs_eq1 = 0;        // 3n + 3|V3|
  int rhs_eq2 = 0;        // 4n - |V3|
  bool eq1_holds = false;
  bool eq2_holds = false;
  int final_lhs = 0;  // 8m
  int final_rhs = 0;  // 15n
  bool bound_holds = false;
  std::vector<StepFailure> step_failures;
};

/// ok (nullopt) iff no edge joins two degree-3 vertices; otherwise the
/// lexicographically first offending edge. Requires min degree >= 3.
std::optional<std::pair<int, int>> check_v3_independent(const Graph& g);

/// N(u) n N(v) for an adjacent degree-3 pair whose neighborhoods induce
/// triangles; the result has size 2 and separates {u, v} from the rest.
/// Preconditions (adjacency, degrees, triangles, n >= 5) are checked and
/// the failing one is named in the thrown error.
VertexSet two_separator_witness(const Graph& g, int u, int v);

/// Lexicographically first degree-3 pair with identical neighborhoods.
std::optional<std::pair<int, int>> find_v3_twins(const Graph& g);

/// Repeatedly deletes the smaller vertex of the first twin pair until no
/// twins remain. Returned labels refer to the input graph.
std::pair<Graph, std::vector<int>> twin_reduce(const Graph& g);

/// ok (nullopt) iff every degree->=4 vertex has at least 3 neighbors outside
/// V3. Requires: min degree >= 3, triangle V3 neighborhoods, V3 independent,
/// no V3 twins; the failing precondition is named in the thrown error.
std::optional<int> check_big_vertex_bound(const Graph& g);

/// Fills every field from g alone; proof-step violations are recorded in
/// step_failures (steps: "min-degree", "v3-neighborhood-not-triangle",
/// "v3-not-independent", "v3-twins", "big-vertex-bound"), never thrown.
BoundReport compute_bound_report(const Graph& g);

struct EdgeBoundResult {
  BoundReport report;             // on the twin-reduced graph
  std::vector<int> removed_twins; // original labels, in removal order
};

/// The full pipeline: hypothesis checks (throwing hypothesis_error),
/// twin reduction with per-step preservation checks, then the bound report
/// on the reduced graph. Reduction violations and a reduced size below 5
/// (where the size-2 separator argument breaks) are extra step_failures:
/// "twin-removal-broke-3-connectivity", "twin-removal-broke-neighborhood-
/// cycles", "reduced-graph-small-n".
EdgeBoundResult verify_edge_bound(const Graph& g);

}  // namespace cyclecut

#endif
