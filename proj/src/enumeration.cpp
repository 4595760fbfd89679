#include "cyclecut/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <istream>

#include "cyclecut/connectivity.hpp"
#include "cyclecut/neighborhood.hpp"

namespace cyclecut {

namespace {

constexpr int kMaxN = kCanonicalCap;  // 11: n(n-1)/2 = 55 bits

// pair index of (i, j), i < j, in column order
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

inline std::uint64_t pair_bit(int i, int j) { return std::uint64_t{1} << (63 - pair_index(i, j)); }

// Minimal adjacency-row view used by the canonizer and the augmentation
// inner loop. Rows are uint16 bitmasks.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxN> row{};
};

SmallGraph small_from_key(int n, std::uint64_t key) {
  SmallGraph g;
  g.n = n;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((key >> (63 - t)) & 1) {
        g.row[i] |= std::uint16_t(1) << j;
        g.row[j] |= std::uint16_t(1) << i;
      }
  return g;
}

// Iterated refinement of an ordered partition: vertices start grouped by
// degree (ascending) and cells split by the per-cell neighbor counts until
// stable. The resulting cell order is a relabeling invariant, so the
// minimum over within-cell permutations is a canonical form.
struct Canonizer {
  int n;
  const SmallGraph& g;
  int order[kMaxN];        // vertices grouped by cell
  int cell_end[kMaxN];     // order positions [cell_begin, cell_end)
  int cell_begin[kMaxN];
  int ncells = 0;
  int pos_cell[kMaxN];     // canonical position -> cell index
  int tri_before[kMaxN + 1];

  std::uint64_t best;
  int perm[kMaxN];
  std::uint16_t used = 0;

  explicit Canonizer(const SmallGraph& graph) : n(graph.n), g(graph) {
    for (int p = 0; p <= n; ++p) tri_before[p] = p * (p - 1) / 2;
    refine();
    int c = 0;
    for (int p = 0; p < n; ++p) {
      if (p == cell_end[c]) ++c;
      pos_cell[p] = c;
    }
  }

  void refine() {
    int deg[kMaxN];
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(g.row[v]);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order, order + n, [&](int a, int b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    ncells = 0;
    for (int p = 0; p < n; ++p) {
      if (p == 0 || deg[order[p]] != deg[order[p - 1]]) {
        cell_begin[ncells] = p;
        ++ncells;
      }
      cell_end[ncells - 1] = p + 1;
    }

    std::uint16_t cell_mask[kMaxN];
    std::uint64_t sig[kMaxN];
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < ncells; ++c)
        cell_mask[c] = 0;
      for (int c = 0; c < ncells; ++c)
        for (int p = cell_begin[c]; p < cell_end[c]; ++p) cell_mask[c] |= std::uint16_t(1) << order[p];
      for (int c = 0; c < ncells && !changed; ++c) {
        if (cell_end[c] - cell_begin[c] <= 1) continue;
        for (int p = cell_begin[c]; p < cell_end[c]; ++p) {
          std::uint64_t s = 0;
          for (int d = 0; d < ncells; ++d)
            s = (s << 4) | std::uint64_t(std::popcount(std::uint16_t(g.row[order[p]] & cell_mask[d])));
          sig[order[p]] = s;
        }
        std::sort(order + cell_begin[c], order + cell_end[c],
                  [&](int a, int b) { return sig[a] != sig[b] ? sig[a] < sig[b] : a < b; });
        // split at signature boundaries
        int splits = 0;
        int split_at[kMaxN];
        for (int p = cell_begin[c] + 1; p < cell_end[c]; ++p)
          if (sig[order[p]] != sig[order[p - 1]]) split_at[splits++] = p;
        if (splits == 0) continue;
        // shift later cells and insert the new boundaries
        for (int d = ncells - 1; d > c; --d) {
          cell_begin[d + splits] = cell_begin[d];
          cell_end[d + splits] = cell_end[d];
        }
        int old_end = cell_end[c];
        for (int k = 0; k <= splits; ++k) {
          int b = k == 0 ? cell_begin[c] : split_at[k - 1];
          int e = k == splits ? old_end : split_at[k];
          cell_begin[c + k] = b;
          cell_end[c + k] = e;
        }
        ncells += splits;
        changed = true;
      }
    }
  }

  void dfs(int p, std::uint64_t cur) {
    if (p == n) {
      if (cur < best) best = cur;
      return;
    }
    const int c = pos_cell[p];
    const int prefix_len = tri_before[p] + p;
    for (int q = cell_begin[c]; q < cell_end[c]; ++q) {
      const int v = order[q];
      if ((used >> v) & 1) continue;
      std::uint64_t frag = 0;
      for (int i = 0; i < p; ++i) frag = (frag << 1) | ((g.row[v] >> perm[i]) & 1);
      std::uint64_t cand = p == 0 ? cur : cur | (frag << (64 - prefix_len));
      if (p > 0) {
        const std::uint64_t mask = ~std::uint64_t{0} << (64 - prefix_len);
        if (cand > (best & mask)) continue;
      }
      perm[p] = v;
      used |= std::uint16_t(1) << v;
      dfs(p + 1, cand);
      used &= ~(std::uint16_t(1) << v);
    }
  }

  std::uint64_t run() {
    if (n <= 1) return 0;
    best = ~std::uint64_t{0};
    dfs(0, 0);
    return best;
  }
};

std::uint64_t canonical_key_small(const SmallGraph& g) { return Canonizer(g).run(); }

SmallGraph small_from_graph(const Graph& g) {
  if (g.vertex_count() > kMaxN)
    throw std::invalid_argument("canonical form: n=" + std::to_string(g.vertex_count()) +
                                " above cap " + std::to_string(kMaxN));
  SmallGraph s;
  s.n = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    s.row[u] |= std::uint16_t(1) << v;
    s.row[v] |= std::uint16_t(1) << u;
  }
  return s;
}

}  // namespace

std::uint64_t key_from_graph(const Graph& g) {
  if (g.vertex_count() > kMaxN)
    throw std::invalid_argument("key_from_graph: n above cap");
  std::uint64_t key = 0;
  for (auto [u, v] : g.edges()) key |= pair_bit(u, v);
  return key;
}

Graph graph_from_key(int n, std::uint64_t key) {
  EdgeList edges;
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if ((key >> (63 - t)) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::uint64_t canonical_key(const Graph& g) { return canonical_key_small(small_from_graph(g)); }

std::string canonical_form(const Graph& g) {
  return encode_graph6(graph_from_key(g.vertex_count(), canonical_key(g)));
}

namespace {

// All keys reachable from one representative by adding one edge. Writes
// exactly (n(n-1)/2 - m) keys.
void expand_one(int n, std::uint64_t rep, std::uint64_t* out) {
  SmallGraph base = small_from_key(n, rep);
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t) {
      if ((rep >> (63 - t)) & 1) continue;
      SmallGraph ext = base;
      ext.row[i] |= std::uint16_t(1) << j;
      ext.row[j] |= std::uint16_t(1) << i;
      *out++ = canonical_key_small(ext);
    }
}

std::vector<std::uint64_t> finish_level(std::vector<std::uint64_t> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

int level_of(std::uint64_t key) { return std::popcount(key); }

}  // namespace

std::vector<std::uint64_t> expand_level_serial(int n, std::span<const std::uint64_t> reps) {
  if (reps.empty()) return {};
  const int slots = n * (n - 1) / 2 - level_of(reps[0]);
  std::vector<std::uint64_t> candidates(reps.size() * slots);
  for (std::size_t r = 0; r < reps.size(); ++r) expand_one(n, reps[r], candidates.data() + r * slots);
  return finish_level(std::move(candidates));
}

std::vector<std::uint64_t> expand_level_parallel(int n, std::span<const std::uint64_t> reps, int jobs) {
  if (reps.empty()) return {};
  const int slots = n * (n - 1) / 2 - level_of(reps[0]);
  std::vector<std::uint64_t> candidates(reps.size() * slots);
  const long count = static_cast<long>(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(std::max(1, jobs))
#endif
  for (long r = 0; r < count; ++r) expand_one(n, reps[r], candidates.data() + r * slots);
  return finish_level(std::move(candidates));
}

std::vector<std::uint64_t> enumerate_keys(int n, int max_edges, int jobs) {
  if (n < 0 || n > kEnumerationCap)
    throw std::invalid_argument("enumerate_keys: native generation capped at n <= " +
                                std::to_string(kEnumerationCap));
  max_edges = std::min(max_edges, n * (n - 1) / 2);
  std::vector<std::uint64_t> all{0};  // the edgeless graph
  std::vector<std::uint64_t> level{0};
  for (int m = 0; m < max_edges; ++m) {
    level = jobs > 1 ? expand_level_parallel(n, level, jobs) : expand_level_serial(n, level);
    all.insert(all.end(), level.begin(), level.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool meets_constraints(const Graph& g, const EnumerationConstraints& c) {
  if (c.n != 0 && g.vertex_count() != c.n) return false;
  if (c.max_edges && g.edge_count() > *c.max_edges) return false;
  if (c.min_edges && g.edge_count() < *c.min_edges) return false;
  if (c.min_degree && (g.vertex_count() == 0 || g.min_degree() < *c.min_degree)) return false;
  if (c.connected_only && !is_connected(g)) return false;
  if (c.min_connectivity && *c.min_connectivity > 0 &&
      (g.vertex_count() == 0 || !is_k_connected(g, *c.min_connectivity)))
    return false;
  if (c.require_neighborhood_cycles && !all_neighborhoods_cyclic(g)) return false;
  return true;
}

std::vector<Graph> enumerate_graphs(const EnumerationConstraints& c, int jobs) {
  if (c.n < 0 || c.n > kEnumerationCap)
    throw std::invalid_argument("enumerate_graphs: native generation capped at n <= " +
                                std::to_string(kEnumerationCap));
  const int pairs = c.n * (c.n - 1) / 2;
  if ((c.max_edges && (*c.max_edges < 0 || *c.max_edges > pairs)) ||
      (c.min_edges && (*c.min_edges < 0 || *c.min_edges > pairs)))
    throw std::invalid_argument("enumerate_graphs: edge bounds outside [0, n(n-1)/2]");
  std::vector<std::uint64_t> keys = enumerate_keys(c.n, c.max_edges.value_or(pairs), jobs);
  std::vector<Graph> out;
  for (std::uint64_t key : keys) {
    Graph g = graph_from_key(c.n, key);
    if (meets_constraints(g, c)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> ingest_graph6_stream(std::istream& in, const EnumerationConstraints& c) {
  std::vector<Graph> out;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = [&] {
      try {
        return parse_graph6(line);
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    if (meets_constraints(g, c)) out.push_back(std::move(g));
  }
  if (in.bad()) throw parse_error("graph6 stream: read error at line " + std::to_string(line_no));
  return out;
}

}  // namespace cyclecut
