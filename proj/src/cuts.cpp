#include "cyclecut/cuts.hpp"

#include <numeric>

#include "cyclecut/connectivity.hpp"
#include "cyclecut/neighborhood.hpp"

namespace cyclecut {

bool is_separator(const Graph& g, const VertexSet& s) {
  if (s.host_n() != g.vertex_count())
    throw std::invalid_argument("is_separator: set belongs to another graph");
  if (s.size() == g.vertex_count()) throw std::invalid_argument("is_separator: S must be a proper subset");
  return component_count_excluding(g, s) >= 2;
}

namespace {

// Union-find over the members of the candidate set; kept by value so the
// DFS can copy per frame (n is small everywhere this runs).
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false iff x and y were already joined
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[x] = y;
    return true;
  }
};

struct CutSearch {
  const Graph& g;
  CutKind kind;
  int n;
  std::vector<int> chosen;
  VertexSet chosen_set;
  Dsu forest;

  CutSearch(const Graph& graph, CutKind k)
      : g(graph), kind(k), n(graph.vertex_count()), chosen_set(n), forest(n) {}

  // true once a cut of size `target` is found; `chosen` then holds it.
  bool extend(int first, int target) {
    if (static_cast<int>(chosen.size()) == target)
      return component_count_excluding(g, chosen_set) >= 2;
    for (int v = first; v < n; ++v) {
      if (n - v < target - static_cast<int>(chosen.size())) break;
      Dsu saved = forest;
      bool ok = true;
      for (int u : chosen) {
        if (!g.adjacent(u, v)) continue;
        if (kind == CutKind::independent || !forest.unite(u, v)) {
          ok = false;  // edge inside an independent set, or a closed cycle
          break;
        }
      }
      if (ok) {
        chosen.push_back(v);
        chosen_set.add(v);
        if (extend(v + 1, target)) return true;
        chosen_set.remove(v);
        chosen.pop_back();
      }
      forest = std::move(saved);
    }
    return false;
  }
};

}  // namespace

static std::optional<CutCertificate> find_cut(const Graph& g, CutKind kind) {
  const int n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("find_cut: requires n >= 2");
  if (!is_connected(g)) {
    // the empty set is independent, and G - {} is already disconnected
    return CutCertificate{kind, VertexSet(n), components(g).count};
  }
  for (int size = 1; size <= n - 2; ++size) {
    CutSearch search(g, kind);
    if (search.extend(0, size)) {
      VertexSet cut = search.chosen_set;
      return CutCertificate{kind, cut, component_count_excluding(g, cut)};
    }
  }
  return std::nullopt;
}

std::optional<CutCertificate> find_independent_cut(const Graph& g) {
  return find_cut(g, CutKind::independent);
}

std::optional<CutCertificate> find_forest_cut(const Graph& g) {
  return find_cut(g, CutKind::forest);
}

bool validate_certificate(const Graph& g, const CutCertificate& cert) {
  if (cert.cut.host_n() != g.vertex_count()) return false;
  if (g.vertex_count() - cert.cut.size() < 2) return false;
  if (cert.kind == CutKind::independent && !is_independent_set(g, cert.cut)) return false;
  if (cert.kind == CutKind::forest && !induces_forest(g, cert.cut)) return false;
  int count = component_count_excluding(g, cert.cut);
  return count == cert.component_count_after_removal && count >= 2;
}

}  // namespace cyclecut
