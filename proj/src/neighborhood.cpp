#include "cyclecut/neighborhood.hpp"

#include "cyclecut/connectivity.hpp"

namespace cyclecut {

DegreePartition degree_partition(const Graph& g) {
  const int n = g.vertex_count();
  DegreePartition p{VertexSet(n), VertexSet(n), n == 0 ? 0 : g.min_degree(), false};
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 3)
      p.v3.add(v);
    else if (g.degree(v) >= 4)
      p.v_ge4.add(v);
  }
  p.valid = p.min_degree >= 3;
  return p;
}

bool is_forest(const Graph& g) {
  return g.edge_count() == g.vertex_count() - components(g).count;
}

bool neighborhood_has_cycle(const Graph& g, int v) {
  return !is_forest(g.induced_subgraph(g.neighborhood(v)));
}

bool all_neighborhoods_cyclic(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!neighborhood_has_cycle(g, v)) return false;
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.vertex_count())
    throw std::invalid_argument("is_independent_set: set belongs to another graph");
  std::vector<int> m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a + 1; b < m.size(); ++b)
      if (g.adjacent(m[a], m[b])) return false;
  return true;
}

bool induces_forest(const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.vertex_count())
    throw std::invalid_argument("induces_forest: set belongs to another graph");
  return is_forest(g.induced_subgraph(s));
}

}  // namespace cyclecut
