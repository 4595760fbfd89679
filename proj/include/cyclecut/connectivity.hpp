#ifndef CYCLECUT_CONNECTIVITY_HPP
#define CYCLECUT_CONNECTIVITY_HPP

#include <functional>

#include "cyclecut/graph.hpp"

namespace cyclecut {

/// Component ids are 0..count-1 in order of each component's smallest vertex.
struct ComponentLabeling {
  std::vector<int> label;
  int count = 0;
};

ComponentLabeling components(const Graph& g);

/// Number of components of g with the vertices in `removed` deleted.
/// Cheaper than materializing the induced subgraph; used by every
/// separator-flavored check.
int component_count_excluding(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);  // true for n == 0 and n == 1

/// Exact vertex connectivity by exhaustive separator search: smallest |S|
/// whose removal disconnects g. Complete K_n returns n-1 by convention;
/// disconnected graphs return 0. Requires n >= 1.
int vertex_connectivity(const Graph& g);

/// n > k and no separator of size < k.
bool is_k_connected(const Graph& g, int k);

bool is_complete(const Graph& g);

/// Visits all size-k subsets of {0..n-1} in lexicographic order while
/// `visit` returns false; returns true iff some subset was accepted.
bool for_each_subset_of_size(int n, int k, const std::function<bool(const std::vector<int>&)>& visit);

}  // namespace cyclecut

#endif
