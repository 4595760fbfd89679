#ifndef CYCLECUT_CONSTRUCTIONS_HPP
#define CYCLECUT_CONSTRUCTIONS_HPP

#include "cyclecut/graph.hpp"

namespace cyclecut {

/// k triangles sharing one spine edge: n = k + 2 vertices, 2n - 3 edges.
/// Vertices 0,1 are the spine; 2..k+1 the pages.
Graph book_graph(int k);

/// C_t x K_2: outer cycle 0..t-1, inner cycle t..2t-1, matching i <-> t+i.
Graph prism(int t);

/// Bookkeeping for k4_substitution: which copy each output vertex belongs
/// to and which output pair carries each base edge. Copy i of K4 occupies
/// vertices 4i..4i+3; local vertex 3 never carries a base edge.
struct SubstitutionMap {
  std::vector<int> copy_of;  // output vertex -> base vertex
  struct PortEdge {
    int base_u, base_v;  // base edge, base_u < base_v
    int g_u, g_v;        // carrying vertices, g_u in copy base_u
  };
  std::vector<PortEdge> port_of;     // ascending (base_u, base_v)
  bool base_three_connected = false; // checked and reported, not required
};

/// Replaces each vertex of a cubic graph h by a K4 copy, routing the three
/// base edges at a vertex to copy-local vertices 0,1,2 in ascending order
/// of the base neighbor's index. Rejects non-3-regular input.
std::pair<Graph, SubstitutionMap> k4_substitution(const Graph& h);

Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph octahedron();         // K_{2,2,2}
Graph petersen();

/// Fixture supply by name: "complete:N", "cycle:N", "octahedron", "petersen".
Graph named_graph(const std::string& name);

}  // namespace cyclecut

#endif
