#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cactiq {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Adjacency is stored as one 64-bit row mask per vertex. Instances are
/// immutable once built; every mutation-style operation returns a new graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;

  int order() const { return static_cast<int>(rows_.size()); }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1u; }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph from_edges(int order, std::span<const Edge> pairs);
  friend Graph from_rows(std::vector<std::uint64_t> rows);

  std::vector<std::uint64_t> rows_;
  int edge_count_ = 0;
};

/// Builds a graph from an edge list. Duplicates collapse; loops and
/// out-of-range indices throw std::invalid_argument.
Graph from_edges(int order, std::span<const Edge> pairs);

inline Graph from_edges(int order, std::initializer_list<Edge> pairs) {
  return from_edges(order, std::span<const Edge>(pairs.begin(), pairs.size()));
}

/// Builds a graph from symmetric adjacency rows. Throws if the rows are not
/// symmetric or contain a loop.
Graph from_rows(std::vector<std::uint64_t> rows);

/// Relabels vertices: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

/// Subgraph induced by the given vertices, renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

Graph without_edge(const Graph& g, int u, int v);
Graph with_edge(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

/// Edges whose removal disconnects their component.
std::vector<Edge> bridges(const Graph& g);

int pendant_count(const Graph& g);

struct BlockDecomposition {
  /// Biconnected components, each an edge list (u < v, sorted).
  std::vector<std::vector<Edge>> blocks;
  std::vector<int> cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

/// Connected, and every biconnected block is a single edge or a cycle.
bool is_cactus(const Graph& g);

/// All cycles share a common vertex. Cacti with fewer than two cycles count
/// as bundles. Throws std::invalid_argument for non-cactus input.
bool is_bundle(const Graph& g);

struct MatchingResult {
  int size = 0;
  std::vector<Edge> witness;
};

/// Maximum cardinality matching (Edmonds' blossom algorithm).
MatchingResult matching_number(const Graph& g);

}  // namespace cactiq
