#include "cactiq/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cactiq {

namespace {

void check_order(int order) {
  if (order < 1 || order > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(order) +
                                " outside 1.." +
                                std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

int Graph::degree(int v) const { return std::popcount(rows_[v]); }

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (std::uint64_t r = rows_[v]; r; r &= r - 1) {
    out.push_back(std::countr_zero(r));
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (std::uint64_t r = rows_[u] >> u >> 1; r; r &= r - 1) {
      out.emplace_back(u, u + 1 + std::countr_zero(r));
    }
  }
  return out;
}

Graph from_edges(int order, std::span<const Edge> pairs) {
  check_order(order);
  std::vector<std::uint64_t> rows(order, 0);
  for (const auto& [u, v] : pairs) {
    for (int x : {u, v}) {
      if (x < 0 || x >= order) {
        throw std::invalid_argument("vertex index " + std::to_string(x) +
                                    " out of range for order " +
                                    std::to_string(order));
      }
    }
    if (u == v) {
      throw std::invalid_argument("loop (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    }
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  }
  Graph g;
  g.rows_ = std::move(rows);
  int twice = 0;
  for (auto r : g.rows_) twice += std::popcount(r);
  g.edge_count_ = twice / 2;
  return g;
}

Graph from_rows(std::vector<std::uint64_t> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  for (int u = 0; u < n; ++u) {
    if ((rows[u] >> u) & 1u) {
      throw std::invalid_argument("loop (" + std::to_string(u) + "," +
                                  std::to_string(u) + ")");
    }
    if (n < 64 && (rows[u] >> n) != 0) {
      throw std::invalid_argument("adjacency row " + std::to_string(u) +
                                  " references a vertex >= order");
    }
    for (int v = 0; v < n; ++v) {
      if (((rows[u] >> v) & 1u) != ((rows[v] >> u) & 1u)) {
        throw std::invalid_argument("asymmetric adjacency at (" +
                                    std::to_string(u) + "," +
                                    std::to_string(v) + ")");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  int twice = 0;
  for (auto r : g.rows_) twice += std::popcount(r);
  g.edge_count_ = twice / 2;
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw std::invalid_argument("permutation size does not match order");
  }
  std::vector<std::uint64_t> rows(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) rows[perm[u]] |= std::uint64_t{1} << perm[v];
  }
  return from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<Edge> es;
  const int k = static_cast<int>(vertices.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (g.has_edge(vertices[i], vertices[j])) es.emplace_back(i, j);
    }
  }
  return from_edges(k, es);
}

Graph without_edge(const Graph& g, int u, int v) {
  std::vector<std::uint64_t> rows(g.order());
  for (int i = 0; i < g.order(); ++i) rows[i] = g.row(i);
  rows[u] &= ~(std::uint64_t{1} << v);
  rows[v] &= ~(std::uint64_t{1} << u);
  return from_rows(std::move(rows));
}

Graph with_edge(const Graph& g, int u, int v) {
  if (u == v) {
    throw std::invalid_argument("loop (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  std::vector<std::uint64_t> rows(g.order());
  for (int i = 0; i < g.order(); ++i) rows[i] = g.row(i);
  rows[u] |= std::uint64_t{1} << v;
  rows[v] |= std::uint64_t{1} << u;
  return from_rows(std::move(rows));
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) {
      next |= g.row(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

int pendant_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == 1;
  return count;
}

namespace {

// Hopcroft-Tarjan lowpoint search. Recursion depth is bounded by n <= 64.
struct BlockSearch {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  std::vector<bool> is_cut;
  std::vector<Edge> bridge_list;
  int clock = 0;

  explicit BlockSearch(const Graph& graph)
      : g(graph),
        disc(graph.order(), -1),
        low(graph.order(), 0),
        is_cut(graph.order(), false) {}

  void visit(int u, int parent) {
    disc[u] = low[u] = clock++;
    int children = 0;
    for (int w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        ++children;
        stack.emplace_back(std::min(u, w), std::max(u, w));
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] > disc[u]) bridge_list.emplace_back(std::min(u, w), std::max(u, w));
        if (low[w] >= disc[u]) {
          if (parent >= 0) is_cut[u] = true;
          std::vector<Edge> block;
          const Edge top{std::min(u, w), std::max(u, w)};
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == top) break;
          }
          std::sort(block.begin(), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(std::min(u, w), std::max(u, w));
        low[u] = std::min(low[u], disc[w]);
      }
    }
    if (parent < 0 && children > 1) is_cut[u] = true;
  }

  void run() {
    for (int v = 0; v < g.order(); ++v) {
      if (disc[v] < 0) visit(v, -1);
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  BlockSearch search(g);
  search.run();
  BlockDecomposition out;
  out.blocks = std::move(search.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());
  for (int v = 0; v < g.order(); ++v) {
    if (search.is_cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  BlockSearch search(g);
  search.run();
  std::sort(search.bridge_list.begin(), search.bridge_list.end());
  return search.bridge_list;
}

namespace {

std::uint64_t block_vertices(const std::vector<Edge>& block) {
  std::uint64_t mask = 0;
  for (const auto& [u, v] : block) {
    mask |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  }
  return mask;
}

}  // namespace

bool is_cactus(const Graph& g) {
  if (!is_connected(g)) return false;
  for (const auto& block : block_decomposition(g).blocks) {
    // A biconnected block with as many edges as vertices is a cycle.
    const auto size = static_cast<std::size_t>(std::popcount(block_vertices(block)));
    if (block.size() != 1 && block.size() != size) return false;
  }
  return true;
}

bool is_bundle(const Graph& g) {
  if (!is_cactus(g)) {
    throw std::invalid_argument("is_bundle requires a cactus");
  }
  std::uint64_t common = ~std::uint64_t{0};
  int cycles = 0;
  for (const auto& block : block_decomposition(g).blocks) {
    if (block.size() < 3) continue;
    ++cycles;
    common &= block_vertices(block);
  }
  return cycles < 2 || common != 0;
}

MatchingResult matching_number(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(n, -1), parent(n), base(n), queue;
  std::vector<char> used, blossom;

  auto lca = [&](int a, int b) {
    std::vector<char> mark(n, 0);
    while (true) {
      a = base[a];
      mark[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_path = [&](int root) {
    used.assign(n, 0);
    parent.assign(n, -1);
    std::iota(base.begin(), base.end(), 0);
    queue.clear();
    used[root] = 1;
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          const int cur = lca(v, to);
          blossom.assign(n, 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };

  // Greedy start keeps the number of augmentations small.
  for (int v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    for (int w : g.neighbors(v)) {
      if (match[w] < 0) {
        match[v] = w;
        match[w] = v;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    int end = find_path(v);
    while (end >= 0) {
      const int pv = parent[end];
      const int next = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = next;
    }
  }

  MatchingResult out;
  for (int v = 0; v < n; ++v) {
    if (match[v] > v) out.witness.emplace_back(v, match[v]);
  }
  out.size = static_cast<int>(out.witness.size());
  return out;
}

}  // namespace cactiq
