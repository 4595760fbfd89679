#ifndef CYCLECUT_NEIGHBORHOOD_HPP
#define CYCLECUT_NEIGHBORHOOD_HPP

#include "cyclecut/graph.hpp"

namespace cyclecut {

/// The (V3, V>=4) split used by the edge-bound argument. Only meaningful
/// when every degree is at least 3; otherwise `valid` is false and the two
/// sets still partition the vertices by the same degree test.
struct DegreePartition {
  VertexSet v3;
  VertexSet v_ge4;
  int min_degree = 0;
  bool valid = false;
};

DegreePartition degree_partition(const Graph& g);

/// True iff the subgraph induced by N(v) contains a cycle (i.e. is not a
/// forest, by the per-component edges == vertices - 1 criterion).
bool neighborhood_has_cycle(const Graph& g, int v);

/// Conjunction over all vertices; vacuously true for n == 0.
bool all_neighborhoods_cyclic(const Graph& g);

bool is_independent_set(const Graph& g, const VertexSet& s);
bool induces_forest(const Graph& g, const VertexSet& s);

bool is_forest(const Graph& g);

}  // namespace cyclecut

#endif
