#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "mapf/graph.hpp"

using namespace mapf;
using namespace testing_helpers;

TEST_CASE("graph keeps sorted adjacency and edge list") {
  Graph g = make_graph(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 3});
  CHECK(g.edges()[2] == Edge{1, 2});
  auto nb = g.neighbors(0);
  CHECK(std::vector<VertexId>(nb.begin(), nb.end()) == std::vector<VertexId>{1, 3});
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.edge_index(3, 0) == 1);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.max_degree() == 2);
  int degree_sum = 0;
  for (int v = 0; v < 4; ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("graph rejects malformed edges") {
  CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("builder collapses repeated edges") {
  GraphBuilder b(3);
  b.add_edge(0, 1);
  b.add_edge(1, 0);
  const VertexId v = b.add_vertex();
  CHECK(v == 3);
  b.add_edge(2, 3);
  CHECK(b.has_edge(3, 2));
  b.remove_edge(2, 3);
  CHECK_FALSE(b.has_edge(2, 3));
  CHECK_THROWS(b.add_edge(1, 1));
  Graph g = b.build();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("bfs, shortest paths and components") {
  Graph g = make_graph(6, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {4, 5}});
  auto d = bfs_distances(g, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 1, kUnreachable, kUnreachable});
  CHECK(shortest_path(g, 0, 2) == std::vector<VertexId>{0, 1, 2});
  CHECK(shortest_path(g, 0, 5).empty());
  CHECK(shortest_path(g, 4, 4) == std::vector<VertexId>{4});
  std::vector<VertexId> sources{0, 5};
  CHECK(bfs_distances(g, sources) == std::vector<int>{0, 1, 2, 1, 1, 0});
  CHECK(connected_components(g) == std::vector<int>{0, 0, 0, 0, 1, 1});
  CHECK_FALSE(is_tree(g));
  CHECK(is_tree(path_graph(5)));
  CHECK(is_tree(path_graph(1)));
  CHECK_FALSE(is_tree(make_graph(3, {{0, 1}})));
}
