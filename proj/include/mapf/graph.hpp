#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace mapf {

using VertexId = std::int32_t;
using AgentId = std::int32_t;

/// Distance value for vertices that cannot be reached.
inline constexpr int kUnreachable = -1;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted; the edge list is sorted with u < v, which fixes
/// the edge numbering used by the swap-free time expansion.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges or ids out of range.
  Graph(int vertex_count, std::span<const Edge> edges);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool adjacent(VertexId u, VertexId v) const;

  const std::vector<Edge>& edges() const { return edges_; }

  /// Index of {u,v} in edges(), or -1.
  int edge_index(VertexId u, VertexId v) const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

/// Incremental construction for generated graphs. Repeated edges collapse.
class GraphBuilder {
 public:
  explicit GraphBuilder(int vertex_count = 0) : vertex_count_(vertex_count) {}

  VertexId add_vertex() { return vertex_count_++; }
  /// Adds `count` fresh vertices and returns the first id.
  VertexId add_vertices(int count);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;
  int vertex_count() const { return vertex_count_; }

  Graph build() const;

 private:
  int vertex_count_;
  std::set<Edge> edges_;
};

/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

/// Multi-source BFS distances.
std::vector<int> bfs_distances(const Graph& g, std::span<const VertexId> sources);

/// A shortest path from `from` to `to` inclusive of both ends; empty when unreachable.
/// Ties resolve towards smaller vertex ids.
std::vector<VertexId> shortest_path(const Graph& g, VertexId from, VertexId to);

/// Component id per vertex, numbered in order of their smallest vertex.
std::vector<int> connected_components(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace mapf
