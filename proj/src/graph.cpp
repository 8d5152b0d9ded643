#include "mapf/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace mapf {

namespace {

Edge normalized(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.resize(vertex_count);
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(normalized(e.u, e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::edge_index(VertexId u, VertexId v) const {
  const Edge key = normalized(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

VertexId GraphBuilder::add_vertices(int count) {
  const VertexId first = vertex_count_;
  vertex_count_ += count;
  return first;
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  edges_.insert(normalized(u, v));
}

void GraphBuilder::remove_edge(VertexId u, VertexId v) { edges_.erase(normalized(u, v)); }

bool GraphBuilder::has_edge(VertexId u, VertexId v) const { return edges_.contains(normalized(u, v)); }

Graph GraphBuilder::build() const {
  std::vector<Edge> list(edges_.begin(), edges_.end());
  return Graph(vertex_count_, list);
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  const VertexId sources[] = {source};
  return bfs_distances(g, sources);
}

std::vector<int> bfs_distances(const Graph& g, std::span<const VertexId> sources) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId from, VertexId to) {
  // Walk forward from `from` along distances to `to`, picking the smallest neighbor each step.
  const std::vector<int> to_target = bfs_distances(g, to);
  if (to_target[from] == kUnreachable) return {};
  std::vector<VertexId> path{from};
  VertexId cur = from;
  while (cur != to) {
    for (VertexId w : g.neighbors(cur)) {
      if (to_target[w] == to_target[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] != -1) continue;
    std::vector<VertexId> stack{v};
    comp[v] = next;
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_tree(const Graph& g) {
  if (g.vertex_count() == 0) return false;
  if (g.edge_count() != g.vertex_count() - 1) return false;
  const auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

}  // namespace mapf
