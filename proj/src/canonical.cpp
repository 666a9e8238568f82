#include "cactiq/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <optional>

namespace cactiq {

std::string CanonicalCode::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  char buf[3];
  for (auto b : bytes) {
    std::snprintf(buf, sizeof buf, "%02x", b);
    out += buf;
  }
  return out;
}

Coloring refine(const Graph& g, Coloring colors) {
  const int n = g.order();
  int cells = n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  while (true) {
    // Signature: own cell first, so existing cell order is preserved.
    std::vector<std::vector<int>> sig(n, std::vector<int>(cells + 1, 0));
    for (int v = 0; v < n; ++v) {
      sig[v][0] = colors[v];
      for (int w : g.neighbors(v)) ++sig[v][1 + colors[w]];
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (int v = 0; v < n; ++v) colors[v] = rank[sig[v]];
    if (next == cells) return colors;
    cells = next;
  }
}

namespace {

std::vector<std::uint8_t> code_for(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> out(1 + (bits + 7) / 8, 0);
  out[0] = static_cast<std::uint8_t>(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(inv[i], inv[j])) {
        out[1 + k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
      }
    }
  }
  return out;
}

bool are_twins(const Graph& g, int u, int v) {
  const std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
  return (g.row(u) & mask) == (g.row(v) & mask);
}

struct Search {
  const Graph& g;
  std::optional<std::vector<std::uint8_t>> best;
  std::vector<int> best_perm;

  void descend(const Coloring& colors) {
    const int n = g.order();
    const int cells = *std::max_element(colors.begin(), colors.end()) + 1;
    if (cells == n) {
      auto code = code_for(g, colors);
      if (!best || code < *best) {
        best = std::move(code);
        best_perm = colors;
      }
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      // Twins in one cell are swapped by an automorphism fixing every
      // individualized vertex, so their subtrees yield the same codes.
      if (std::any_of(tried.begin(), tried.end(),
                      [&](int t) { return are_twins(g, t, v); })) {
        continue;
      }
      tried.push_back(v);
      Coloring next(colors);
      for (int w = 0; w < n; ++w) {
        if (w != v && colors[w] >= target) ++next[w];
      }
      descend(refine(g, std::move(next)));
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  Search search{g, std::nullopt, {}};
  search.descend(refine(g, Coloring(g.order(), 0)));
  return search.best_perm;
}

CanonicalCode canonical_code(const Graph& g) {
  Search search{g, std::nullopt, {}};
  search.descend(refine(g, Coloring(g.order(), 0)));
  return CanonicalCode{std::move(*search.best)};
}

Graph canonical_form(const Graph& g) {
  auto perm = canonical_labeling(g);
  return relabel(g, perm);
}

}  // namespace cactiq
