#include "cactiq/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace cactiq {

namespace {

constexpr int kBias = 63;

void check_char(char c) {
  if (c < kBias || c > kBias + 63) {
    throw std::invalid_argument(std::string("graph6: invalid character '") + c + "'");
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) {
      out += static_cast<char>(((n >> shift) & 0x3f) + kBias);
    }
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + kBias);
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + kBias);
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("graph6: empty input");
  std::size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    if (text.size() < 4 || text[1] == '~') {
      throw std::invalid_argument("graph6: unsupported order prefix");
    }
    for (pos = 1; pos < 4; ++pos) {
      check_char(text[pos]);
      n = (n << 6) | (text[pos] - kBias);
    }
  } else {
    check_char(text[0]);
    n = text[0] - kBias;
    pos = 1;
  }
  if (n < 1 || n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " unsupported");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(expected) +
                                " data bytes, got " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const char c = text[pos + k / 6];
      check_char(c);
      if (((c - kBias) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = text.back() - kBias;
    if (last & ((1 << (6 - bits % 6)) - 1)) {
      throw std::invalid_argument("graph6: nonzero padding bits");
    }
  }
  return from_edges(n, edges);
}

}  // namespace cactiq
