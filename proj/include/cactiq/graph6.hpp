#pragma once

#include <string>
#include <string_view>

#include "cactiq/graph.hpp"

namespace cactiq {

/// graph6 text encoding (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Parses one graph6 string. Throws std::invalid_argument on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace cactiq
