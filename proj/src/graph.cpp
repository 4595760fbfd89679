#include "cyclecut/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cyclecut {

namespace {

constexpr int kMaxParseVertices = 8192;  // memory guard for hostile input

int words_for(int n) { return n == 0 ? 0 : (n + 63) / 64; }

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int host_n) : host_n_(host_n) {
  if (host_n < 0) throw std::invalid_argument("VertexSet: negative host_n");
  words_.assign(words_for(host_n), 0);
}

VertexSet::VertexSet(int host_n, std::initializer_list<int> members) : VertexSet(host_n) {
  for (int v : members) add(v);
}

VertexSet VertexSet::from_members(int host_n, std::span<const int> members) {
  VertexSet s(host_n);
  for (int v : members) s.add(v);
  return s;
}

void VertexSet::check_vertex(int v) const {
  if (v < 0 || v >= host_n_)
    throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                " out of range for host_n=" + std::to_string(host_n_));
}

void VertexSet::add(int v) {
  check_vertex(v);
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::remove(int v) {
  check_vertex(v);
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= host_n_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1;
}

int VertexSet::size() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v = 0; v < host_n_; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet s(host_n_);
  for (int v = 0; v < host_n_; ++v)
    if (!contains(v)) s.add(v);
  return s;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), words_(words_for(n)) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int n, const EdgeList& edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                " out of range for n=" + std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
  std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)];
  if ((wu >> (v & 63)) & 1) return;  // duplicate collapses
  wu |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++m_;
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

VertexSet Graph::neighborhood(int v) const {
  check_vertex(v);
  VertexSet s(n_);
  for (int u = 0; u < n_; ++u)
    if (adjacent(u, v)) s.add(u);
  return s;
}

Graph Graph::induced_subgraph(const VertexSet& s) const {
  if (s.host_n() != n_) throw std::invalid_argument("induced_subgraph: set belongs to another graph");
  std::vector<int> keep = s.members();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (adjacent(keep[a], keep[b])) out.add_edge_unchecked(static_cast<int>(a), static_cast<int>(b));
  return out;
}

Graph Graph::remove_vertices(const VertexSet& s) const {
  if (s.host_n() != n_) throw std::invalid_argument("remove_vertices: set belongs to another graph");
  return induced_subgraph(s.complement());
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, const EdgeList& edges) { return Graph(n, edges); }
VertexSet neighborhood(const Graph& g, int v) { return g.neighborhood(v); }
Graph induced_subgraph(const Graph& g, const VertexSet& s) { return g.induced_subgraph(s); }
Graph remove_vertices(const Graph& g, const VertexSet& s) { return g.remove_vertices(s); }

// ------------------------------------------------------------------- graph6

namespace {

int g6_data_byte(unsigned char c, std::size_t pos) {
  if (c < 63 || c > 126)
    throw parse_error("graph6: byte " + std::to_string(int(c)) + " at position " +
                      std::to_string(pos) + " outside 63..126");
  return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw parse_error("graph6: empty input");
  std::size_t pos = 0;
  long long n;
  int b0 = g6_data_byte(static_cast<unsigned char>(text[0]), 0);
  if (b0 < 63) {
    n = b0;
    pos = 1;
  } else {
    // extended size: '~' then three bytes, 18 bits big-endian
    if (text.size() < 4) throw parse_error("graph6: truncated extended size");
    if (static_cast<unsigned char>(text[1]) == 126)
      throw parse_error("graph6: 8-byte size form not supported");
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i)
      n = (n << 6) | g6_data_byte(static_cast<unsigned char>(text[i]), i);
    if (n < 63) throw parse_error("graph6: non-canonical extended size");
    pos = 4;
  }
  if (n > kMaxParseVertices)
    throw parse_error("graph6: n=" + std::to_string(n) + " exceeds supported maximum " +
                      std::to_string(kMaxParseVertices));

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() < pos + nbytes) throw parse_error("graph6: truncated bit stream");
  if (text.size() > pos + nbytes) throw parse_error("graph6: trailing data after bit stream");

  EdgeList edges;
  long long bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    int val = g6_data_byte(static_cast<unsigned char>(text[pos + k]), pos + k);
    for (int j = 5; j >= 0; --j, ++bit) {
      int b = (val >> j) & 1;
      if (bit >= nbits) {
        if (b != 0) throw parse_error("graph6: nonzero padding bits");
        continue;
      }
      if (b) {
        // invert pair index -> (i, j) in column order
        long long t = bit;
        long long col = 1;
        while (t >= col) t -= col, ++col;
        edges.emplace_back(static_cast<int>(t), static_cast<int>(col));
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("encode_graph6: n too large for supported size forms");
  }
  int acc = 0, nb = 0;
  for (int col = 1; col < n; ++col) {
    for (int r = 0; r < col; ++r) {
      acc = (acc << 1) | (g.adjacent(r, col) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nb = 0;
      }
    }
  }
  if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
  return out;
}

// ---------------------------------------------------------------- edge list

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!(in >> n >> m)) throw parse_error("edge list: missing \"n m\" header");
  if (n < 0 || m < 0 || n > kMaxParseVertices) throw parse_error("edge list: bad header values");
  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u, v;
    if (!(in >> u >> v)) throw parse_error("edge list: expected " + std::to_string(m) +
                                           " edges, got " + std::to_string(k));
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error("edge list: endpoint out of range in edge " + std::to_string(k));
    if (u == v) throw parse_error("edge list: loop in edge " + std::to_string(k));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw parse_error("edge list: trailing data");
  return Graph(static_cast<int>(n), edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cyclecut
