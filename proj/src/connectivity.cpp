#include "cyclecut/connectivity.hpp"

#include <bit>
#include <numeric>

namespace cyclecut {

namespace {

// Word-parallel BFS over the graph minus `removed`; returns component count
// and optionally per-vertex labels.
int flood_components(const Graph& g, std::span<const std::uint64_t> removed, std::vector<int>* labels) {
  const int n = g.vertex_count();
  const int words = g.words_per_row();
  std::vector<std::uint64_t> seen(words, 0);
  if (!removed.empty())
    for (int w = 0; w < words; ++w) seen[w] = removed[w];
  if (labels) labels->assign(n, -1);
  int count = 0;
  std::vector<std::uint64_t> frontier(words);
  for (int s = 0; s < n; ++s) {
    if ((seen[s >> 6] >> (s & 63)) & 1) continue;
    // new component seeded at s
    for (int w = 0; w < words; ++w) frontier[w] = 0;
    frontier[s >> 6] = std::uint64_t{1} << (s & 63);
    seen[s >> 6] |= frontier[s >> 6];
    if (labels) (*labels)[s] = count;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint64_t> next(words, 0);
      for (int w = 0; w < words; ++w) {
        std::uint64_t f = frontier[w];
        while (f) {
          int v = (w << 6) + std::countr_zero(f);
          f &= f - 1;
          auto row = g.row(v);
          for (int x = 0; x < words; ++x) next[x] |= row[x];
        }
      }
      for (int w = 0; w < words; ++w) {
        next[w] &= ~seen[w];
        if (next[w]) grew = true;
        seen[w] |= next[w];
        frontier[w] = next[w];
      }
      if (labels && grew) {
        for (int w = 0; w < words; ++w) {
          std::uint64_t f = frontier[w];
          while (f) {
            (*labels)[(w << 6) + std::countr_zero(f)] = count;
            f &= f - 1;
          }
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace

ComponentLabeling components(const Graph& g) {
  ComponentLabeling out;
  out.count = flood_components(g, {}, &out.label);
  return out;
}

int component_count_excluding(const Graph& g, const VertexSet& removed) {
  if (removed.host_n() != g.vertex_count())
    throw std::invalid_argument("component_count_excluding: set belongs to another graph");
  return flood_components(g, removed.words(), nullptr);
}

bool is_connected(const Graph& g) { return flood_components(g, {}, nullptr) <= 1; }

bool is_complete(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

bool for_each_subset_of_size(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

bool has_separator_of_size(const Graph& g, int size) {
  const int n = g.vertex_count();
  if (size >= n) return false;
  return for_each_subset_of_size(n, size, [&](const std::vector<int>& subset) {
    VertexSet s = VertexSet::from_members(n, subset);
    return component_count_excluding(g, s) >= 2;
  });
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("vertex_connectivity: requires n >= 1");
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return n - 1;
  // a non-complete connected graph has a separator of size <= n-2
  for (int s = 1; s <= n - 2; ++s)
    if (has_separator_of_size(g, s)) return s;
  return n - 1;  // unreachable for non-complete inputs
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("is_k_connected: k must be >= 0");
  const int n = g.vertex_count();
  if (n <= k) return false;
  if (k == 0) return true;
  if (!is_connected(g)) return false;
  if (is_complete(g)) return n - 1 >= k;
  for (int s = 1; s < k; ++s)
    if (has_separator_of_size(g, s)) return false;
  return true;
}

}  // namespace cyclecut
