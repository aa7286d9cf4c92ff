#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace critcheck {

using Vertex = int;
using EdgeId = int;

// Bitset adjacency limits graphs to 62 vertices (the short graph6 form).
inline constexpr int kMaxVertices = 62;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored with u < v and sorted lexicographically; an edge's index in
/// that order is its EdgeId, which colorings use as their assignment index.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }

  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  std::uint64_t neighbor_mask(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  /// -1 when u and v are not adjacent.
  EdgeId edge_id(Vertex u, Vertex v) const;
  /// Endpoint of e other than v.
  Vertex other(EdgeId e, Vertex v) const;

  bool is_connected() const;
  bool is_regular() const { return max_degree_ == min_degree_; }

  Graph without_edge(Vertex u, Vertex v) const;
  Graph without_vertex(Vertex v) const;
  /// Subgraph induced by the vertices in mask, relabelled in increasing order.
  Graph induced(std::uint64_t mask) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> edge_index_;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

/// Two disjoint nonempty sides covering N(v) for a vertex split.
struct VertexPartition {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

/// m > Δ·⌊n/2⌋.
bool is_overfull(const Graph& g);

/// Adjacent pairs (u, v), u < v, with d(u) + d(v) = Δ + 2.
std::vector<Edge> full_deficiency_pairs(const Graph& g);

/// Replaces v by two adjacent vertices: v keeps partition.left, the appended
/// vertex n gets partition.right. Throws std::invalid_argument when partition
/// is not a split of N(v) into two nonempty sides.
Graph split_vertex(const Graph& g, Vertex v, const VertexPartition& partition);

/// Unordered bipartitions of N(v) into two nonempty sides; the side holding
/// the lowest neighbour is always `left`. At most `cap` are returned.
std::vector<VertexPartition> neighborhood_bipartitions(const Graph& g, Vertex v,
                                                       std::size_t cap = 4096);

/// Number of edges on a shortest path from a to the nearer of x, y; -1 when
/// unreachable.
int distance_to_pair(const Graph& g, Vertex a, Vertex x, Vertex y);

namespace graphs {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph octahedron();
}  // namespace graphs

}  // namespace critcheck
