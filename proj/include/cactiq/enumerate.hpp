#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cactiq/graph.hpp"

namespace cactiq {

struct CactusFilter {
  std::optional<int> matching;  // exact matching number
  std::optional<int> pendants;  // exact number of degree-1 vertices

  bool accepts(const Graph& g) const;
};

struct EnumerateOptions {
  int max_order = 10;  // guard against runaway enumeration
  int threads = 0;     // 0: see worker_count()
};

/// One representative (in canonical labeling) per isomorphism class of cacti
/// on n vertices passing the filter, sorted by canonical code. A filter no
/// cactus can meet yields an empty result. Throws std::invalid_argument for
/// n < 1 or n > options.max_order.
std::vector<Graph> enumerate_cacti(int n, const CactusFilter& filter = {}, const EnumerateOptions& options = {});

std::size_t count_cacti(int n, const CactusFilter& filter = {}, const EnumerateOptions& options = {});

}  // namespace cactiq
