#pragma once

#include <cstddef>
#include <functional>

namespace cactiq {

/// Worker count: `requested` if positive, else CACTIQ_THREADS if set to a
/// positive integer, else the hardware concurrency (at least 1).
int worker_count(int requested = 0);

/// Calls body(i) for i in [0, count) on up to `threads` workers. Indices are
/// handed out dynamically; the first exception thrown is rethrown.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace cactiq
