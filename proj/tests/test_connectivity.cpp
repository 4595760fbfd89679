#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclecut/connectivity.hpp"
#include "cyclecut/constructions.hpp"
#include "cyclecut/enumeration.hpp"
#include "oracles.hpp"

using namespace cyclecut;

TEST_CASE("components") {
  CHECK(components(complete_graph(4)).count == 1);
  CHECK(components(Graph(0)).count == 0);

  Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
  ComponentLabeling l = components(two_k2);
  CHECK(l.count == 2);
  CHECK(l.label == std::vector<int>{0, 0, 1, 1});

  Graph pages = book_graph(2).remove_vertices(VertexSet(4, {0, 1}));
  CHECK(components(pages).count == 2);

  // ids follow the smallest member of each component
  Graph g = build_graph(5, {{1, 3}, {0, 4}});
  CHECK(components(g).label == std::vector<int>{0, 1, 2, 1, 0});
}

TEST_CASE("vertex_connectivity on named graphs") {
  CHECK(vertex_connectivity(complete_graph(4)) == 3);
  CHECK(vertex_connectivity(complete_graph(1)) == 0);
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
  CHECK(vertex_connectivity(book_graph(3)) == 2);  // the spine pair separates
  CHECK(vertex_connectivity(build_graph(3, {{0, 1}})) == 0);
  CHECK(vertex_connectivity(petersen()) == 3);
  CHECK(vertex_connectivity(octahedron()) == 4);
  CHECK_THROWS_AS(vertex_connectivity(Graph(0)), std::invalid_argument);
}

TEST_CASE("is_k_connected") {
  CHECK(is_k_connected(complete_graph(4), 3));
  CHECK_FALSE(is_k_connected(complete_graph(4), 4));  // needs n > k
  CHECK(is_k_connected(prism(3), 3));
  CHECK_FALSE(is_k_connected(book_graph(4), 3));
  CHECK(is_k_connected(book_graph(4), 2));
  CHECK(is_k_connected(Graph(1), 0));
  CHECK_FALSE(is_k_connected(Graph(0), 0));
  CHECK_THROWS_AS(is_k_connected(Graph(1), -1), std::invalid_argument);
}

TEST_CASE("oracle equivalence for all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    EnumerationConstraints c;
    c.n = n;
    for (const Graph& g : enumerate_graphs(c)) {
      int kappa = vertex_connectivity(g);
      if (!is_connected(g)) {
        CHECK(kappa == 0);
        continue;
      }
      CHECK(kappa == oracle::vertex_connectivity(g));
      for (int k = 1; k <= kappa; ++k) CHECK(is_k_connected(g, k) == (n > k));
      CHECK_FALSE(is_k_connected(g, kappa + 1));
    }
  }
}

TEST_CASE("monotonicity over connected graphs, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    EnumerationConstraints c;
    c.n = n;
    c.connected_only = true;
    for (const Graph& g : enumerate_graphs(c)) {
      for (int k = 1; k < n; ++k)
        if (is_k_connected(g, k)) CHECK(is_k_connected(g, k - 1));
    }
  }
}

TEST_CASE("connectivity never exceeds minimum degree, connected non-complete n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    EnumerationConstraints c;
    c.n = n;
    c.connected_only = true;
    std::vector<Graph> graphs = enumerate_graphs(c, 2);
    long violations = 0;
    for (const Graph& g : graphs)
      if (!is_complete(g) && vertex_connectivity(g) > g.min_degree()) ++violations;
    CHECK(violations == 0);
  }
}
