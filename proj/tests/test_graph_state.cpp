#include <doctest.h>

#include <sstream>

#include "clustnet/graph_state.hpp"
#include "support.hpp"

using namespace clustnet;
using testing::make_graph;

TEST_CASE("empty graph construction") {
  const GraphState g(3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 0);
  for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 0);

  const GraphState single(1);
  CHECK(single.vertex_count() == 1);
  CHECK(largest_component_size(single) == 1);

  const GraphState big(1000);
  CHECK(big.vertex_count() == 1000);
  CHECK(big.edge_count() == 0);

  CHECK_THROWS_AS(GraphState(0), std::invalid_argument);
}

TEST_CASE("toggle_edge") {
  GraphState g(3);
  CHECK(g.toggle_edge(0, 1));
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
  CHECK(g.edge_count() == 1);

  CHECK_FALSE(g.toggle_edge(1, 0));
  CHECK(g == GraphState(3));

  GraphState k3 = testing::complete_graph(3);
  k3.toggle_edge(0, 1);
  CHECK(k3.degree(0) == 1);
  CHECK(k3.degree(1) == 1);
  CHECK(k3.degree(2) == 2);
  CHECK(k3.edge_count() == 2);

  CHECK_THROWS_AS(g.toggle_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.toggle_edge(0, 3), std::out_of_range);
}

TEST_CASE("common_neighbors") {
  CHECK(GraphState(4).common_neighbors(0, 1).empty());
  CHECK(testing::complete_graph(3).common_neighbors(0, 1) == std::vector<Vertex>{2});
  const GraphState path = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(path.common_neighbors(0, 2) == std::vector<Vertex>{1});
  CHECK(path.common_neighbor_count(0, 2) == 1);
}

TEST_CASE("triangle and two-path counts") {
  const GraphState k3 = testing::complete_graph(3);
  CHECK(triangle_count(k3) == 1);
  CHECK(two_path_count(k3) == 3);

  const GraphState path = make_graph(3, {{0, 1}, {1, 2}});
  CHECK(triangle_count(path) == 0);
  CHECK(two_path_count(path) == 1);

  const GraphState paw = make_graph(4, {{1, 2}, {2, 3}, {1, 3}, {0, 1}});
  CHECK(triangle_count(paw) == 1);
  CHECK(two_path_count(paw) == 5);
  CHECK(paw.triangles_at(1) == 1);
  CHECK(paw.triangles_at(0) == 0);
}

TEST_CASE("complete graph counts match closed forms") {
  for (std::size_t n = 1; n <= 20; ++n) {
    const GraphState k = testing::complete_graph(n);
    const std::uint64_t c3 = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
    const std::uint64_t paths = n < 3 ? 0 : n * ((n - 1) * (n - 2) / 2);
    CHECK(triangle_count(k) == c3);
    CHECK(two_path_count(k) == paths);
  }
}

TEST_CASE("largest component") {
  CHECK(largest_component_size(GraphState(5)) == 1);
  GraphState g(6);
  for (Vertex j = 1; j < 4; ++j)
    for (Vertex i = 0; i < j; ++i) g.toggle_edge(i, j);
  CHECK(largest_component_size(g) == 4);
  CHECK(largest_component_size(make_graph(4, {{0, 1}, {2, 3}})) == 2);
}

TEST_CASE("pair slot layout round-trips") {
  const std::size_t n = 300;
  std::size_t expected = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      REQUIRE(pair_index(i, j) == expected);
      REQUIRE(pair_index(j, i) == expected);
      REQUIRE(pair_from_index(expected) == VertexPair(i, j));
      ++expected;
    }
  }
  CHECK(expected == pair_count(n));
}

TEST_CASE("random toggle sequences keep the state consistent") {
  Rng rng(7);
  for (std::size_t n : {2, 5, 17, 70, 130}) {
    GraphState g(n);
    const GraphState start = g;
    std::vector<VertexPair> history;
    for (int step = 0; step < 3000; ++step) {
      const auto i = static_cast<Vertex>(rng() % n);
      auto j = static_cast<Vertex>(rng() % n);
      if (i == j) continue;
      const bool was = g.has_edge(i, j);
      CHECK(g.toggle_edge(i, j) == !was);
      history.emplace_back(i, j);
    }
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      REQUIRE(g.degree(v) == testing::brute_degree(g, v));
      const auto nb = g.neighbors(v);
      REQUIRE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) REQUIRE(g.has_edge(w, v));
      degree_sum += g.degree(v);
    }
    CHECK(g.edge_count() * 2 == degree_sum);
    CHECK(triangle_count(g) == testing::brute_triangles(g));
    CHECK(two_path_count(g) == testing::brute_two_paths(g));
    CHECK(largest_component_size(g) == testing::brute_largest_component(g));
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        const auto expected = testing::brute_common(g, i, j);
        REQUIRE(g.common_neighbors(i, j) == expected);
        REQUIRE(g.common_neighbor_count(i, j) == expected.size());
        for (Vertex v : expected) REQUIRE(g.degree(v) >= 2);
      }
    }
    GraphState copy = g;
    for (auto it = history.rbegin(); it != history.rend(); ++it) copy.toggle_edge(it->first, it->second);
    CHECK(copy == start);
  }
}

TEST_CASE("from_edges and edge list export") {
  const std::vector<VertexPair> edges{{2, 0}, {1, 3}, {0, 2}, {0, 1}};
  const GraphState g = GraphState::from_edges(4, edges);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<VertexPair>{{0, 1}, {0, 2}, {1, 3}});
  std::ostringstream os;
  write_edge_list(os, g);
  CHECK(os.str() == "0 1\n0 2\n1 3\n");
}
