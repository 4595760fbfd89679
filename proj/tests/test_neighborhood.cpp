#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclecut/constructions.hpp"
#include "cyclecut/enumeration.hpp"
#include "cyclecut/neighborhood.hpp"
#include "oracles.hpp"

using namespace cyclecut;

TEST_CASE("neighborhood_has_cycle") {
  Graph k4 = complete_graph(4);
  for (int v = 0; v < 4; ++v) CHECK(neighborhood_has_cycle(k4, v));

  Graph p3 = prism(3);
  for (int v = 0; v < 6; ++v) CHECK_FALSE(neighborhood_has_cycle(p3, v));

  auto [sub, map] = k4_substitution(prism(3));
  for (int v = 0; v < sub.vertex_count(); ++v) CHECK(neighborhood_has_cycle(sub, v));

  CHECK_THROWS_AS(neighborhood_has_cycle(k4, 7), std::invalid_argument);
}

TEST_CASE("all_neighborhoods_cyclic") {
  CHECK(all_neighborhoods_cyclic(octahedron()));
  CHECK_FALSE(all_neighborhoods_cyclic(cycle_graph(6)));
  CHECK_FALSE(all_neighborhoods_cyclic(book_graph(3)));  // page neighborhoods induce one edge
  CHECK(all_neighborhoods_cyclic(Graph(0)));
}

TEST_CASE("degree_partition") {
  DegreePartition k4 = degree_partition(complete_graph(4));
  CHECK(k4.valid);
  CHECK(k4.v3.size() == 4);
  CHECK(k4.v_ge4.size() == 0);

  auto [sub, map] = k4_substitution(complete_graph(4));
  DegreePartition p = degree_partition(sub);
  CHECK(p.valid);
  CHECK(p.v3.size() == 4);  // one internal vertex per copy
  CHECK(p.v_ge4.size() == 12);

  DegreePartition c5 = degree_partition(cycle_graph(5));
  CHECK_FALSE(c5.valid);
  CHECK(c5.min_degree == 2);
  CHECK(c5.v3.size() + c5.v_ge4.size() == 0);
}

TEST_CASE("is_independent_set") {
  Graph c4 = cycle_graph(4);
  CHECK(is_independent_set(c4, VertexSet(4)));
  CHECK(is_independent_set(c4, VertexSet(4, {0, 2})));
  CHECK_FALSE(is_independent_set(c4, VertexSet(4, {0, 1})));
  CHECK_FALSE(is_independent_set(book_graph(2), VertexSet(4, {0, 1})));  // the spine is an edge
  CHECK_THROWS_AS(is_independent_set(c4, VertexSet(5, {0})), std::invalid_argument);
}

TEST_CASE("induces_forest") {
  Graph book2 = book_graph(2);
  CHECK(induces_forest(book2, VertexSet(4, {0, 1})));  // single edge
  CHECK(induces_forest(book2, VertexSet(4, {2, 3})));
  CHECK_FALSE(induces_forest(complete_graph(3), VertexSet(3, {0, 1, 2})));
}

TEST_CASE("degree-3 cyclic neighborhoods are exactly triangles") {
  // over every graph with n <= 6: if deg(v) = 3 and N(v) has a cycle, the
  // induced neighborhood is K3
  for (int n = 4; n <= 6; ++n) {
    EnumerationConstraints c;
    c.n = n;
    for (const Graph& g : enumerate_graphs(c))
      for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 3 || !neighborhood_has_cycle(g, v)) continue;
        Graph in = g.induced_subgraph(g.neighborhood(v));
        CHECK(in.vertex_count() == 3);
        CHECK(in.edge_count() == 3);
      }
  }
}

TEST_CASE("forest criterion agrees with DFS cycle detection on all subsets, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    EnumerationConstraints c;
    c.n = n;
    for (const Graph& g : enumerate_graphs(c))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
          if ((mask >> v) & 1) s.add(v);
        CHECK(induces_forest(g, s) == !oracle::induced_has_cycle(g, mask));
        if (is_independent_set(g, s)) CHECK(induces_forest(g, s));
      }
  }
}
