#include "cyclecut/verifier.hpp"

#include <algorithm>

#include "cyclecut/connectivity.hpp"
#include "cyclecut/cuts.hpp"
#include "cyclecut/neighborhood.hpp"

namespace cyclecut {

namespace {

std::string vertex_witness(int v) { return "vertex " + std::to_string(v); }
std::string edge_witness(int u, int v) {
  return "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
}
std::string pair_witness(int u, int v) {
  return "pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

bool neighborhood_is_triangle(const Graph& g, int v) {
  Graph in = g.induced_subgraph(g.neighborhood(v));
  return in.vertex_count() == 3 && in.edge_count() == 3;
}

// non-throwing cores shared by the checked operations and the report
std::optional<std::pair<int, int>> v3_edge(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != 3) continue;
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.degree(v) == 3 && g.adjacent(u, v)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

std::optional<int> big_vertex_violation(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 4) continue;
    int outside = 0;
    for (int u : g.neighborhood(v).members())
      if (g.degree(u) != 3) ++outside;
    if (outside < 3) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<int, int>> check_v3_independent(const Graph& g) {
  if (g.vertex_count() > 0 && g.min_degree() < 3)
    throw std::invalid_argument("check_v3_independent: degree partition invalid (min degree < 3)");
  return v3_edge(g);
}

VertexSet two_separator_witness(const Graph& g, int u, int v) {
  auto fail = [](const std::string& which) {
    throw std::invalid_argument("two_separator_witness: precondition failed: " + which);
  };
  const int n = g.vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) fail("u, v must be distinct vertices");
  if (!g.adjacent(u, v)) fail("u and v must be adjacent");
  if (g.degree(u) != 3) fail("deg(u) = 3");
  if (g.degree(v) != 3) fail("deg(v) = 3");
  if (!neighborhood_is_triangle(g, u)) fail("N(u) must induce a triangle");
  if (!neighborhood_is_triangle(g, v)) fail("N(v) must induce a triangle");
  if (n < 5) fail("n >= 5 (for n = 4 the removal leaves a connected graph)");

  VertexSet w(n);
  for (int x = 0; x < n; ++x)
    if (g.adjacent(x, u) && g.adjacent(x, v)) w.add(x);
  if (w.size() != 2 || !is_separator(g, w))
    throw std::logic_error("two_separator_witness: postcondition failed");
  return w;
}

std::optional<std::pair<int, int>> find_v3_twins(const Graph& g) {
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != 3) continue;
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.degree(v) == 3 && g.neighborhood(u) == g.neighborhood(v)) return std::make_pair(u, v);
  }
  return std::nullopt;
}

std::pair<Graph, std::vector<int>> twin_reduce(const Graph& g) {
  Graph cur = g;
  std::vector<int> orig(cur.vertex_count());
  for (int v = 0; v < cur.vertex_count(); ++v) orig[v] = v;
  std::vector<int> removed;
  while (auto twins = find_v3_twins(cur)) {
    int drop = twins->first;  // the lexicographically smaller twin
    removed.push_back(orig[drop]);
    orig.erase(orig.begin() + drop);
    cur = cur.remove_vertices(VertexSet(cur.vertex_count(), {drop}));
  }
  return {std::move(cur), std::move(removed)};
}

std::optional<int> check_big_vertex_bound(const Graph& g) {
  auto fail = [](const std::string& which) {
    throw std::invalid_argument("check_big_vertex_bound: precondition failed: " + which);
  };
  if (g.vertex_count() > 0 && g.min_degree() < 3) fail("min degree >= 3");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 3 && !neighborhood_is_triangle(g, v))
      fail("every V3 neighborhood induces a triangle");
  if (v3_edge(g)) fail("V3 is an independent set");
  if (find_v3_twins(g)) fail("no V3 twins (run after twin_reduce)");
  return big_vertex_violation(g);
}

BoundReport compute_bound_report(const Graph& g) {
  BoundReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  for (int v = 0; v < r.n; ++v)
    if (g.degree(v) == 3) ++r.v3_size;
  r.lhs_handshake = 2 * r.m;
  r.rhs_eq1 = 3 * r.n + 3 * r.v3_size;
  r.rhs_eq2 = 4 * r.n - r.v3_size;
  r.eq1_holds = r.lhs_handshake >= r.rhs_eq1;
  r.eq2_holds = r.lhs_handshake >= r.rhs_eq2;
  r.final_lhs = 8 * r.m;
  r.final_rhs = 15 * r.n;
  r.bound_holds = r.final_lhs >= r.final_rhs;

  if (r.n > 0 && g.min_degree() < 3) {
    int v = 0;
    while (g.degree(v) >= 3) ++v;
    r.step_failures.push_back(
        {"min-degree", vertex_witness(v) + " has degree " + std::to_string(g.degree(v))});
  }
  for (int v = 0; v < r.n; ++v)
    if (g.degree(v) == 3 && !neighborhood_is_triangle(g, v)) {
      r.step_failures.push_back({"v3-neighborhood-not-triangle", vertex_witness(v)});
      break;
    }
  if (auto e = v3_edge(g))
    r.step_failures.push_back({"v3-not-independent", edge_witness(e->first, e->second)});
  if (auto t = find_v3_twins(g))
    r.step_failures.push_back({"v3-twins", pair_witness(t->first, t->second)});
  if (auto v = big_vertex_violation(g))
    r.step_failures.push_back({"big-vertex-bound", vertex_witness(*v)});
  return r;
}

EdgeBoundResult verify_edge_bound(const Graph& g) {
  if (!is_k_connected(g, 3))
    throw hypothesis_error("three-connected", "verify_edge_bound: input is not 3-connected");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!neighborhood_has_cycle(g, v))
      throw hypothesis_error("neighborhood-cycles",
                             "verify_edge_bound: neighborhood of " + vertex_witness(v) +
                                 " contains no cycle");

  std::vector<StepFailure> reduction_failures;
  Graph cur = g;
  std::vector<int> orig(cur.vertex_count());
  for (int v = 0; v < cur.vertex_count(); ++v) orig[v] = v;
  std::vector<int> removed;
  while (auto twins = find_v3_twins(cur)) {
    int drop = twins->first;
    int dropped_label = orig[drop];
    removed.push_back(dropped_label);
    orig.erase(orig.begin() + drop);
    cur = cur.remove_vertices(VertexSet(cur.vertex_count(), {drop}));
    if (!is_k_connected(cur, 3))
      reduction_failures.push_back({"twin-removal-broke-3-connectivity",
                                    "after removing " + vertex_witness(dropped_label)});
    if (!all_neighborhoods_cyclic(cur))
      reduction_failures.push_back({"twin-removal-broke-neighborhood-cycles",
                                    "after removing " + vertex_witness(dropped_label)});
  }

  EdgeBoundResult res{compute_bound_report(cur), std::move(removed)};
  if (cur.vertex_count() < 5)
    res.report.step_failures.push_back(
        {"reduced-graph-small-n",
         "n = " + std::to_string(cur.vertex_count()) + " < 5, size-2 separator argument inapplicable"});
  res.report.step_failures.insert(res.report.step_failures.end(), reduction_failures.begin(),
                                  reduction_failures.end());
  return res;
}

}  // namespace cyclecut
