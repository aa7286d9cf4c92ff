#include "critcheck/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace critcheck {

namespace {

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
  degree_.assign(static_cast<std::size_t>(n), 0);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adj_[e.u] & bit(e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edge_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (EdgeId id = 0; id < m(); ++id) {
    const Edge& e = edges_[id];
    edge_index_[e.u * n + e.v] = id;
    edge_index_[e.v * n + e.u] = id;
  }
  for (Vertex v = 0; v < n; ++v) degree_[v] = std::popcount(adj_[v]);
  if (n > 0) {
    max_degree_ = *std::max_element(degree_.begin(), degree_.end());
    min_degree_ = *std::min_element(degree_.begin(), degree_.end());
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n_));
  }
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return degree_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(degree_[v]));
  for (std::uint64_t rest = adj_[v]; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return edge_index_[u * n_ + v];
}

Vertex Graph::other(EdgeId e, Vertex v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("vertex " + std::to_string(v) + " is not on edge " +
                              std::to_string(e));
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      next |= adj_[std::countr_zero(rest)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n_;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  const EdgeId id = edge_id(u, v);
  if (id < 0) throw std::invalid_argument("no edge to delete");
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  for (EdgeId e = 0; e < m(); ++e) {
    if (e != id) rest.push_back(edges_[e]);
  }
  return Graph(n_, rest);
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
  return induced(all & ~bit(v));
}

Graph Graph::induced(std::uint64_t mask) const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (Vertex v = 0; v < n_; ++v) {
    if (mask & bit(v)) label[v] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (label[e.u] >= 0 && label[e.v] >= 0) kept.push_back({label[e.u], label[e.v]});
  }
  return Graph(next, kept);
}

bool is_overfull(const Graph& g) {
  return g.m() > g.max_degree() * (g.n() / 2);
}

std::vector<Edge> full_deficiency_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) + g.degree(e.v) == g.max_degree() + 2) out.push_back(e);
  }
  return out;
}

Graph split_vertex(const Graph& g, Vertex v, const VertexPartition& partition) {
  if (v < 0 || v >= g.n()) throw std::invalid_argument("split vertex out of range");
  if (g.n() + 1 > kMaxVertices) throw std::invalid_argument("split exceeds vertex limit");
  if (partition.left.empty() || partition.right.empty()) {
    throw std::invalid_argument("split partition has an empty side");
  }
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  for (Vertex a : partition.left) {
    if (a < 0 || a >= g.n() || (left & bit(a))) {
      throw std::invalid_argument("invalid vertex in split partition");
    }
    left |= bit(a);
  }
  for (Vertex a : partition.right) {
    if (a < 0 || a >= g.n() || (right & bit(a))) {
      throw std::invalid_argument("invalid vertex in split partition");
    }
    right |= bit(a);
  }
  if (left & right) throw std::invalid_argument("split partition sides overlap");
  if ((left | right) != g.neighbor_mask(v)) {
    throw std::invalid_argument("split partition does not cover N(v) exactly");
  }
  const Vertex fresh = g.n();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.m()) + 1);
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) {
      edges.push_back(e);
      continue;
    }
    const Vertex a = e.u == v ? e.v : e.u;
    edges.push_back((left & bit(a)) ? Edge{v, a} : Edge{fresh, a});
  }
  edges.push_back({v, fresh});
  return Graph(g.n() + 1, edges);
}

std::vector<VertexPartition> neighborhood_bipartitions(const Graph& g, Vertex v,
                                                       std::size_t cap) {
  const std::vector<Vertex> nbrs = g.neighbors(v);
  std::vector<VertexPartition> out;
  const int d = static_cast<int>(nbrs.size());
  if (d < 2) return out;
  // The lowest neighbour is pinned to `left`; the rest choose a side freely.
  const std::uint64_t choices = std::uint64_t{1} << (d - 1);
  for (std::uint64_t bits = 0; bits < choices && out.size() < cap; ++bits) {
    VertexPartition p;
    p.left.push_back(nbrs[0]);
    for (int i = 1; i < d; ++i) {
      ((bits >> (i - 1)) & 1 ? p.right : p.left).push_back(nbrs[i]);
    }
    if (!p.right.empty()) out.push_back(std::move(p));
  }
  return out;
}

int distance_to_pair(const Graph& g, Vertex a, Vertex x, Vertex y) {
  std::uint64_t seen = bit(x) | bit(y);
  std::uint64_t frontier = seen;
  for (int dist = 0; frontier != 0; ++dist) {
    if (frontier & bit(a)) return dist;
    std::uint64_t next = 0;
    for (std::uint64_t rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbor_mask(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return -1;
}

namespace graphs {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, e);
}

Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, e);
}

Graph octahedron() {
  std::vector<Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.push_back({u, v});
  return Graph(6, e);
}

}  // namespace graphs

}  // namespace critcheck
