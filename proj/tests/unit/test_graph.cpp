#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "critcheck/graph.hpp"

using namespace critcheck;

TEST_CASE("basic graph queries") {
  const Graph c5 = graphs::cycle(5);
  CHECK(c5.n() == 5);
  CHECK(c5.m() == 5);
  CHECK(c5.max_degree() == 2);
  CHECK(c5.min_degree() == 2);
  CHECK(c5.is_regular());
  CHECK(c5.is_connected());
  CHECK(c5.adjacent(0, 4));
  CHECK_FALSE(c5.adjacent(0, 2));
  CHECK(c5.edge_id(0, 2) == -1);
  CHECK(c5.edge(c5.edge_id(4, 0)) == Edge{0, 4});
}

TEST_CASE("construction rejects bad edges") {
  const Edge loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  const Edge dup[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, dup), std::invalid_argument);
  const Edge out[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), std::invalid_argument);
}

TEST_CASE("named graphs") {
  CHECK(graphs::complete(5).m() == 10);
  CHECK(graphs::complete_bipartite(3, 3).m() == 9);
  CHECK(graphs::petersen().m() == 15);
  CHECK(graphs::petersen().max_degree() == 3);
  CHECK(graphs::octahedron().n() == 6);
  CHECK(graphs::octahedron().max_degree() == 4);
  CHECK(graphs::octahedron().m() == 12);
  CHECK_FALSE(Graph(2).is_connected());
}

TEST_CASE("overfull") {
  CHECK(is_overfull(graphs::complete(5)));
  CHECK(is_overfull(graphs::cycle(5)));
  CHECK_FALSE(is_overfull(graphs::complete(4)));
  CHECK_FALSE(is_overfull(graphs::petersen()));
}

TEST_CASE("split of K4") {
  const Graph h = split_vertex(graphs::complete(4), 0, {{1}, {2, 3}});
  CHECK(h.n() == 5);
  CHECK(h.m() == 7);
  std::vector<int> deg;
  for (Vertex v = 0; v < h.n(); ++v) deg.push_back(h.degree(v));
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int>{2, 3, 3, 3, 3});
  CHECK(h.adjacent(0, 4));
  CHECK(is_overfull(h));
}

TEST_CASE("split validation") {
  const Graph k4 = graphs::complete(4);
  CHECK_THROWS_AS(split_vertex(k4, 0, {{}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(split_vertex(k4, 0, {{1}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(split_vertex(k4, 0, {{1}, {2}}), std::invalid_argument);
}

TEST_CASE("neighbourhood bipartitions") {
  // 2^(d-1) - 1 unordered splits
  CHECK(neighborhood_bipartitions(graphs::complete(4), 0).size() == 3);
  CHECK(neighborhood_bipartitions(graphs::octahedron(), 0).size() == 7);
  for (const auto& p : neighborhood_bipartitions(graphs::octahedron(), 2)) {
    CHECK(!p.left.empty());
    CHECK(!p.right.empty());
  }
}

TEST_CASE("full deficiency pairs and distances") {
  // Split K4: the degree-2 endpoint pairs with a degree-3 vertex, 2 + 3 = Δ + 2.
  const Graph h = split_vertex(graphs::complete(4), 0, {{1}, {2, 3}});
  const auto pairs = full_deficiency_pairs(h);
  CHECK(pairs.size() == 2);
  CHECK(full_deficiency_pairs(graphs::complete(5)).empty());
  const Graph p = graphs::path(5);
  CHECK(distance_to_pair(p, 4, 0, 1) == 3);
  CHECK(distance_to_pair(p, 0, 0, 1) == 0);
  CHECK(distance_to_pair(Graph(3), 2, 0, 1) == -1);
}

TEST_CASE("subgraphs") {
  const Graph k4 = graphs::complete(4);
  CHECK(k4.without_edge(0, 1).m() == 5);
  CHECK(k4.without_vertex(0) == graphs::complete(3));
  CHECK(k4.induced(0b0111) == graphs::complete(3));
}
