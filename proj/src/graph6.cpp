#include "critcheck/graph6.hpp"

#include <vector>

namespace critcheck {

namespace {

constexpr int kBias = 63;

std::size_t body_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  out.reserve(1 + body_bytes(n));
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph decode_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line", 0);
  const int header = static_cast<unsigned char>(line[0]);
  if (header == 126) throw Graph6Error("long-form graph6 (n > 62) is not supported", 0);
  if (header < kBias || header > kBias + kMaxVertices) {
    throw Graph6Error("malformed graph6 header byte", 0);
  }
  const int n = header - kBias;
  const std::size_t need = body_bytes(n);
  for (std::size_t i = 1; i < line.size() && i <= need; ++i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < kBias || c > kBias + 63) throw Graph6Error("malformed graph6 body byte", i);
  }
  if (line.size() < 1 + need) throw Graph6Error("truncated graph6 body", line.size());
  if (line.size() > 1 + need) throw Graph6Error("trailing garbage after graph6 body", 1 + need);

  std::vector<Edge> edges;
  std::size_t index = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++index) {
      const int byte = static_cast<unsigned char>(line[1 + index / 6]) - kBias;
      if ((byte >> (5 - index % 6)) & 1) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace critcheck
