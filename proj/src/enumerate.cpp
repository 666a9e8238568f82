#include "cactiq/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "cactiq/canonical.hpp"
#include "cactiq/parallel.hpp"

namespace cactiq {

bool CactusFilter::accepts(const Graph& g) const {
  if (pendants && pendant_count(g) != *pendants) return false;
  if (matching && matching_number(g).size != *matching) return false;
  return true;
}

namespace {

using Keyed = std::pair<CanonicalCode, Graph>;

// Appends `extra` new vertices to g: either one pendant at `at` (extra == 1,
// cycle == false) or a cycle through `at` and the new vertices.
Graph attach(const Graph& g, int at, int extra, bool cycle) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  int prev = at;
  for (int i = 0; i < extra; ++i) {
    edges.emplace_back(prev, n + i);
    prev = n + i;
  }
  if (cycle) edges.emplace_back(prev, at);
  return from_edges(n + extra, edges);
}

void sort_unique(std::vector<Keyed>& items) {
  std::sort(items.begin(), items.end(), [](const Keyed& a, const Keyed& b) { return a.first < b.first; });
  items.erase(std::unique(items.begin(), items.end(),
                          [](const Keyed& a, const Keyed& b) { return a.first == b.first; }),
              items.end());
}

// levels[j] holds all cacti on j vertices. Level j is built from level j-1
// (pendant) and level j-c+1 (cycle of length c >= 3), since removing an
// endblock from a cactus leaves a smaller cactus.
std::vector<Keyed> build_level(const std::vector<std::vector<Keyed>>& levels, int j, int threads) {
  struct Task {
    const Graph* parent;
    int extra;
    bool cycle;
  };
  std::vector<Task> tasks;
  for (const auto& [code, g] : levels[j - 1]) tasks.push_back({&g, 1, false});
  for (int c = 3; j - c + 1 >= 1; ++c) {
    for (const auto& [code, g] : levels[j - c + 1]) tasks.push_back({&g, c - 1, true});
  }
  std::vector<std::vector<Keyed>> found(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t t) {
    const Task& task = tasks[t];
    for (int at = 0; at < task.parent->order(); ++at) {
      Graph child = canonical_form(attach(*task.parent, at, task.extra, task.cycle));
      found[t].emplace_back(canonical_code(child), std::move(child));
    }
    sort_unique(found[t]);
  });
  std::vector<Keyed> merged;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(merged));
  sort_unique(merged);
  return merged;
}

}  // namespace

std::vector<Graph> enumerate_cacti(int n, const CactusFilter& filter, const EnumerateOptions& options) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > options.max_order) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                                std::to_string(options.max_order));
  }
  if (filter.matching && (*filter.matching < 1 || 2 * *filter.matching > n)) return {};
  if (filter.pendants && (*filter.pendants < 0 || *filter.pendants >= n)) return {};

  const int threads = worker_count(options.threads);
  std::vector<std::vector<Keyed>> levels(n + 1);
  const Graph k1 = from_edges(1, {});
  levels[1].emplace_back(canonical_code(k1), k1);
  for (int j = 2; j <= n; ++j) levels[j] = build_level(levels, j, threads);

  std::vector<Graph> out;
  for (auto& [code, g] : levels[n]) {
    if (filter.accepts(g)) out.push_back(std::move(g));
  }
  return out;
}

std::size_t count_cacti(int n, const CactusFilter& filter, const EnumerateOptions& options) {
  return enumerate_cacti(n, filter, options).size();
}

}  // namespace cactiq
