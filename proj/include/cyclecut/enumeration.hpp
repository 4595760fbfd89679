#ifndef CYCLECUT_ENUMERATION_HPP
#define CYCLECUT_ENUMERATION_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

#include "cyclecut/graph.hpp"

namespace cyclecut {

/// Filters for native generation and stream ingestion. n == 0 on ingestion
/// means "accept any vertex count".
struct EnumerationConstraints {
  int n = 0;
  bool connected_only = false;
  std::optional<int> min_degree;
  std::optional<int> min_connectivity;
  std::optional<int> max_edges;
  std::optional<int> min_edges;
  bool require_neighborhood_cycles = false;
};

bool meets_constraints(const Graph& g, const EnumerationConstraints& c);

/// Native generation is capped here; larger n must be ingested.
inline constexpr int kEnumerationCap = 9;
/// The packed-triangle canonical form needs n(n-1)/2 <= 64 bits.
inline constexpr int kCanonicalCap = 11;

/// Upper adjacency triangle packed into a uint64, pair (i,j), i<j, in
/// column order x(0,1), x(0,2), x(1,2), x(0,3), ... with the first pair in
/// the most significant bit. Integer order equals graph6 byte order for a
/// fixed n.
std::uint64_t key_from_graph(const Graph& g);
Graph graph_from_key(int n, std::uint64_t key);

/// Packed form of the canonical labeling: the minimum key over all vertex
/// permutations compatible with an iterated degree/neighborhood refinement.
std::uint64_t canonical_key(const Graph& g);

/// graph6 encoding of the canonical labeling; equal strings iff isomorphic
/// (for n within the cap).
std::string canonical_form(const Graph& g);

/// One augmentation level: all canonical keys reachable by adding a single
/// edge to any representative. Serial reference kept alongside the OpenMP
/// kernel; both return identical sorted, deduplicated output.
std::vector<std::uint64_t> expand_level_serial(int n, std::span<const std::uint64_t> reps);
std::vector<std::uint64_t> expand_level_parallel(int n, std::span<const std::uint64_t> reps, int jobs);

/// All canonical keys with at most max_edges edges, sorted ascending.
std::vector<std::uint64_t> enumerate_keys(int n, int max_edges, int jobs = 1);

/// One representative per isomorphism class meeting the constraints, in
/// ascending canonical-form order. Requires c.n <= kEnumerationCap.
std::vector<Graph> enumerate_graphs(const EnumerationConstraints& c, int jobs = 1);

/// Newline-separated graph6 records, filtered by the constraints. A
/// malformed line raises parse_error naming the 1-based line number.
std::vector<Graph> ingest_graph6_stream(std::istream& in, const EnumerationConstraints& c);

}  // namespace cyclecut

#endif
