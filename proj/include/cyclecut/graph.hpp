#ifndef CYCLECUT_GRAPH_HPP
#define CYCLECUT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclecut {

/// Thrown for malformed graph6 / edge-list input.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

using EdgeList = std::vector<std::pair<int, int>>;

class Graph;

/// A subset of the vertices {0..host_n-1} of some graph, stored as a bitset.
class VertexSet {
 public:
  explicit VertexSet(int host_n);
  VertexSet(int host_n, std::initializer_list<int> members);
  static VertexSet from_members(int host_n, std::span<const int> members);

  void add(int v);
  void remove(int v);
  bool contains(int v) const;

  int host_n() const { return host_n_; }
  int size() const;
  bool empty() const { return size() == 0; }
  std::vector<int> members() const;  // ascending
  VertexSet complement() const;

  std::span<const std::uint64_t> words() const { return words_; }

  bool operator==(const VertexSet& o) const = default;

 private:
  void check_vertex(int v) const;

  int host_n_;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as packed bit rows, one row per vertex, so
/// adjacency queries and whole-row operations are O(1) per word.
class Graph {
 public:
  /// Graph with no edges.
  explicit Graph(int n);
  /// Graph with exactly the given edges. Duplicate pairs collapse to one
  /// edge; loops and out-of-range endpoints are rejected.
  Graph(int n, const EdgeList& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;  // 0 when n == 0
  int max_degree() const;

  VertexSet neighborhood(int v) const;
  Graph induced_subgraph(const VertexSet& s) const;
  Graph remove_vertices(const VertexSet& s) const;

  EdgeList edges() const;  // ascending (u, v) with u < v

  int words_per_row() const { return words_; }
  std::span<const std::uint64_t> row(int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  void add_edge_unchecked(int u, int v);
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;  // n_ * words_, row-major
};

/// Free-function spellings of the core operations; thin wrappers over the class.
Graph build_graph(int n, const EdgeList& edges);
VertexSet neighborhood(const Graph& g, int v);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_vertices(const Graph& g, const VertexSet& s);

/// graph6 text form. parse accepts the one-byte size (n <= 62) and the
/// four-byte extended size form; nonzero padding bits and trailing bytes
/// are rejected so that parse(encode(g)) == g holds bit for bit.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

/// Edge-list text form: "n m" on the first line, then one "u v" per line.
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);

}  // namespace cyclecut

#endif
