#include "cyclecut/constructions.hpp"

#include <algorithm>

#include "cyclecut/connectivity.hpp"

namespace cyclecut {

Graph book_graph(int k) {
  if (k < 1) throw std::invalid_argument("book_graph: k must be >= 1");
  EdgeList edges{{0, 1}};
  for (int p = 0; p < k; ++p) {
    edges.emplace_back(0, 2 + p);
    edges.emplace_back(1, 2 + p);
  }
  return Graph(k + 2, edges);
}

Graph prism(int t) {
  if (t < 3) throw std::invalid_argument("prism: t must be >= 3");
  EdgeList edges;
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(i, (i + 1) % t);
    edges.emplace_back(t + i, t + (i + 1) % t);
    edges.emplace_back(i, t + i);
  }
  return Graph(2 * t, edges);
}

std::pair<Graph, SubstitutionMap> k4_substitution(const Graph& h) {
  const int hn = h.vertex_count();
  for (int v = 0; v < hn; ++v)
    if (h.degree(v) != 3)
      throw std::invalid_argument("k4_substitution: base vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(h.degree(v)) + ", need 3-regular");

  SubstitutionMap map;
  map.copy_of.resize(4 * hn);
  for (int v = 0; v < hn; ++v)
    for (int j = 0; j < 4; ++j) map.copy_of[4 * v + j] = v;

  EdgeList edges;
  for (int v = 0; v < hn; ++v)
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) edges.emplace_back(4 * v + a, 4 * v + b);

  // base edge (u,v) attaches at the local port indexed by v's rank among
  // u's neighbors (and vice versa)
  auto port = [&](int u, int v) {
    std::vector<int> nb = h.neighborhood(u).members();
    int rank = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
    return 4 * u + rank;
  };
  for (auto [u, v] : h.edges()) {
    int gu = port(u, v), gv = port(v, u);
    edges.emplace_back(gu, gv);
    map.port_of.push_back({u, v, gu, gv});
  }
  map.base_three_connected = hn >= 4 && is_k_connected(h, 3);
  return {Graph(4 * hn, edges), std::move(map)};
}

Graph complete_graph(int n) {
  if (n < 0) throw std::invalid_argument("complete_graph: negative n");
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  EdgeList edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph octahedron() {
  // K_{2,2,2}: antipodal pairs {0,3}, {1,4}, {2,5} are the non-edges
  EdgeList edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v - u != 3) edges.emplace_back(u, v);
  return Graph(6, edges);
}

Graph petersen() {
  EdgeList edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph named_graph(const std::string& name) {
  auto colon = name.find(':');
  std::string base = name.substr(0, colon);
  auto param = [&]() {
    if (colon == std::string::npos)
      throw std::invalid_argument("named_graph: '" + base + "' needs a parameter, e.g. '" + base + ":5'");
    return std::stoi(name.substr(colon + 1));
  };
  if (base == "complete") return complete_graph(param());
  if (base == "cycle") return cycle_graph(param());
  if (base == "book") return book_graph(param());
  if (base == "prism") return prism(param());
  if (base == "octahedron") return octahedron();
  if (base == "petersen") return petersen();
  if (base == "k4") return complete_graph(4);
  throw std::invalid_argument("named_graph: unknown name '" + name + "'");
}

}  // namespace cyclecut
