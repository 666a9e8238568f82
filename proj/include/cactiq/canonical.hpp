#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cactiq/graph.hpp"

namespace cactiq {

/// Isomorphism-invariant byte string: equal iff the graphs are isomorphic.
///
/// Layout is the order byte followed by the upper-triangular adjacency bits
/// (column-major, same bit order as graph6) of the canonical relabeling,
/// packed MSB-first.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

  std::string hex() const;
};

/// Ordered vertex partition; cell[v] is the index of v's cell.
using Coloring = std::vector<int>;

/// Coarsest equitable refinement of an initial coloring. Cell indices of the
/// result depend only on the isomorphism class of (graph, coloring).
Coloring refine(const Graph& g, Coloring colors);

/// Canonical labeling via individualization-refinement. Returns perm with
/// perm[v] = canonical position of v.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalCode canonical_code(const Graph& g);

/// The canonical relabeling of g.
Graph canonical_form(const Graph& g);

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

}  // namespace cactiq
