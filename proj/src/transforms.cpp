#include "cactiq/transforms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cactiq {

namespace {

[[noreturn]] void reject(const std::string& msg) { throw std::invalid_argument(msg); }

void check_vertex(const Graph& g, int x, const char* role) {
  if (x < 0 || x >= g.order()) reject(std::string(role) + " vertex " + std::to_string(x) + " out of range");
}

}  // namespace

Graph shift_neighbors(const Graph& g, const ShiftPlan& plan) {
  const int v = plan.v, u = plan.u;
  check_vertex(g, v, "source");
  check_vertex(g, u, "target");
  if (u == v) reject("source and target are the same vertex " + std::to_string(v));
  if (plan.moved.empty()) reject("shift plan moves no neighbors");
  if (!is_connected(g)) reject("graph is disconnected");
  std::uint64_t seen = 0;
  for (int w : plan.moved) {
    check_vertex(g, w, "moved");
    if (w == u) reject("target vertex " + std::to_string(u) + " is in the moved set");
    if (!g.has_edge(v, w)) reject("vertex " + std::to_string(w) + " is not a neighbor of " + std::to_string(v));
    if (g.has_edge(u, w)) reject("vertex " + std::to_string(w) + " is already adjacent to " + std::to_string(u));
    if ((seen >> w) & 1u) reject("vertex " + std::to_string(w) + " appears twice in the moved set");
    seen |= std::uint64_t{1} << w;
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (a == v && ((seen >> b) & 1u)) a = u;
    else if (b == v && ((seen >> a) & 1u)) b = u;
    edges.emplace_back(a, b);
  }
  return from_edges(g.order(), edges);
}

Graph contract_pend(const Graph& g, int u, int v) {
  check_vertex(g, u, "first");
  check_vertex(g, v, "second");
  if (u == v || !g.has_edge(u, v)) reject("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  if (!is_connected(g)) reject("graph is disconnected");
  if (g.degree(u) == 1) reject("edge is pendant at vertex " + std::to_string(u));
  if (g.degree(v) == 1) reject("edge is pendant at vertex " + std::to_string(v));
  const std::uint64_t common = g.row(u) & g.row(v);
  if (common != 0) {
    reject("vertex " + std::to_string(std::countr_zero(common)) + " is a common neighbor of " + std::to_string(u) +
           " and " + std::to_string(v));
  }
  const int keep = std::min(u, v), freed = std::max(u, v);
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if ((a == u && b == v) || (a == v && b == u)) continue;
    if (a == freed) a = keep;
    if (b == freed) b = keep;
    edges.emplace_back(a, b);
  }
  edges.emplace_back(keep, freed);
  return from_edges(g.order(), edges);
}

}  // namespace cactiq
