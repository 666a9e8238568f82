#pragma once

#include <vector>

#include "cactiq/graph.hpp"

namespace cactiq {

/// Move the edges v-w (w in moved) over to u-w.
struct ShiftPlan {
  int v;
  int u;
  std::vector<int> moved;
};

/// g - {vw : w in S} + {uw : w in S}. Rejects (std::invalid_argument, naming
/// the vertex) an empty S, u == v, w in S that is not a neighbor of v, u in S,
/// w in S already adjacent to u, and a disconnected g.
Graph shift_neighbors(const Graph& g, const ShiftPlan& plan);

/// Deletes uv, identifies u with v and hangs a new pendant vertex on the
/// merged vertex. The merged vertex keeps index min(u, v); the pendant takes
/// max(u, v). Rejects a missing or pendant edge, a common neighbor of u and
/// v, and a disconnected g.
Graph contract_pend(const Graph& g, int u, int v);

}  // namespace cactiq
