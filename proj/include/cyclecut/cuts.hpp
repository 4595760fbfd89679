#ifndef CYCLECUT_CUTS_HPP
#define CYCLECUT_CUTS_HPP

#include <optional>

#include "cyclecut/graph.hpp"

namespace cyclecut {

enum class CutKind { independent, forest };

/// A verified cut: `cut` has the claimed kind and removing it leaves at
/// least two components (and at least two vertices).
struct CutCertificate {
  CutKind kind;
  VertexSet cut;
  int component_count_after_removal = 0;
};

/// True iff g minus s has at least two components. Rejects s = V.
bool is_separator(const Graph& g, const VertexSet& s);

/// Exhaustive search for a minimum independent cut, candidates enumerated
/// by increasing size and lexicographically within a size; extension-prunes
/// subsets that already contain an edge. Disconnected input yields the
/// empty cut. Requires n >= 2.
std::optional<CutCertificate> find_independent_cut(const Graph& g);

/// Same search with the forest condition (extension-prunes subsets whose
/// induced graph has a cycle).
std::optional<CutCertificate> find_forest_cut(const Graph& g);

/// Re-checks a certificate from scratch against g.
bool validate_certificate(const Graph& g, const CutCertificate& cert);

}  // namespace cyclecut

#endif
