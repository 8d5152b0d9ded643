#include "mapf/hub_route.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <string>

namespace mapf {

int graph_diameter(const Graph& g) {
  int best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

namespace {

/// Subgraph under construction: vertex set plus the edges of the paths added to it.
struct Skeleton {
  std::vector<char> has;
  std::vector<std::vector<VertexId>> adj;

  explicit Skeleton(int n) : has(n, 0), adj(n) {}

  void add_path(const std::vector<VertexId>& path) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      has[path[i]] = 1;
      if (i == 0) continue;
      auto& list = adj[path[i - 1]];
      if (std::find(list.begin(), list.end(), path[i]) == list.end()) {
        list.push_back(path[i]);
        adj[path[i]].push_back(path[i - 1]);
      }
    }
  }

  /// Component id per contained vertex (-1 elsewhere), numbered by smallest vertex.
  std::vector<int> components(int& count) const {
    std::vector<int> comp(has.size(), -1);
    count = 0;
    for (VertexId s = 0; s < static_cast<VertexId>(has.size()); ++s) {
      if (!has[s] || comp[s] != -1) continue;
      std::vector<VertexId> stack{s};
      comp[s] = count;
      while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (VertexId w : adj[u]) {
          if (comp[w] == -1) {
            comp[w] = count;
            stack.push_back(w);
          }
        }
      }
      ++count;
    }
    return comp;
  }
};

/// Shortest path in g from any vertex with from[v] set to any vertex with to[v] set.
/// Among closest targets the smallest id wins; BFS parents follow discovery order.
std::vector<VertexId> shortest_between(const Graph& g, const std::vector<char>& from, const std::vector<char>& to) {
  const int n = g.vertex_count();
  std::vector<VertexId> parent(n, -1);
  std::vector<int> dist(n, kUnreachable);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    if (from[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  VertexId end = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (to[v] && dist[v] != kUnreachable && (end == -1 || dist[v] < dist[end])) end = v;
  }
  std::vector<VertexId> path;
  for (VertexId v = end; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Positions over time when agents walk their routes in the given order, the j-th
/// (1-based) making its first move at turn j. Entry 0 is the initial placement.
std::vector<PositionMap> staggered(const std::vector<std::vector<VertexId>>& routes, const std::vector<AgentId>& order) {
  const int k = static_cast<int>(routes.size());
  std::vector<int> depart(k);
  int length = 0;
  for (int j = 0; j < k; ++j) {
    depart[order[j]] = j + 1;
    length = std::max(length, j + static_cast<int>(routes[order[j]].size()) - 1);
  }
  std::vector<PositionMap> frames(length + 1, PositionMap(k));
  for (int t = 0; t <= length; ++t) {
    for (AgentId a = 0; a < k; ++a) {
      const int moved = std::max(0, t - depart[a] + 1);
      frames[t][a] = routes[a][std::min<int>(moved, static_cast<int>(routes[a].size()) - 1)];
    }
  }
  return frames;
}

}  // namespace

HubRoute hub_route(const Instance& inst) {
  const auto t0 = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;
  const int n = g.vertex_count();
  const int k = inst.agent_count();
  HubRoute out;
  out.diameter = graph_diameter(g);

  VertexId hub = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (hub == -1 || g.degree(v) > g.degree(hub)) hub = v;
  }
  const long long threshold = 5LL * out.diameter * k;
  if (hub == -1 || g.degree(hub) < threshold) {
    throw NoHubError("no hub of degree >= 5dk = " + std::to_string(threshold));
  }
  out.hub = hub;

  const auto hub_dist = bfs_distances(g, hub);
  Skeleton h(n);
  for (AgentId a = 0; a < k; ++a) {
    auto path = shortest_path(g, inst.start[a], inst.target[a]);
    if (path.empty()) throw std::invalid_argument("agent " + std::to_string(a) + " cannot reach its target");
    if (hub_dist[inst.start[a]] == kUnreachable) {
      throw NoHubError("agent " + std::to_string(a) + " is outside the hub's component");
    }
    h.add_path(path);
  }

  // Join later components to the first one, in component order.
  for (;;) {
    int count = 0;
    const auto comp = h.components(count);
    if (count <= 1) break;
    std::vector<char> grown(n, 0), next(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      grown[v] = comp[v] == 0;
      next[v] = comp[v] == 1;
    }
    h.add_path(shortest_between(g, grown, next));
  }
  if (!h.has[hub] && k > 0) {
    std::vector<char> target(n, 0);
    target[hub] = 1;
    h.add_path(shortest_between(g, h.has, target));
  }
  h.has[hub] = 1;

  for (VertexId w : g.neighbors(hub)) {
    if (static_cast<int>(out.parking.size()) == k) break;
    if (!h.has[w]) out.parking.push_back(w);
  }
  if (static_cast<int>(out.parking.size()) < k) throw NoHubError("hub has fewer than k free neighbors");
  for (AgentId a = 0; a < k; ++a) h.add_path({hub, out.parking[a]});

  // BFS spanning tree of the skeleton rooted at the hub.
  out.tree_parent.assign(n, -1);
  std::vector<int> depth(n, kUnreachable);
  std::deque<VertexId> queue{hub};
  depth[hub] = 0;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    ++out.tree_size;
    std::vector<VertexId> next = h.adj[u];
    std::sort(next.begin(), next.end());
    for (VertexId w : next) {
      if (depth[w] == kUnreachable) {
        depth[w] = depth[u] + 1;
        out.tree_parent[w] = u;
        queue.push_back(w);
      }
    }
  }

  auto half = [&](const PositionMap& ends) {
    std::vector<std::vector<VertexId>> routes(k);
    for (AgentId a = 0; a < k; ++a) {
      for (VertexId v = ends[a]; v != -1; v = out.tree_parent[v]) routes[a].push_back(v);
      routes[a].push_back(out.parking[a]);
    }
    std::vector<AgentId> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](AgentId x, AgentId y) { return depth[ends[x]] < depth[ends[y]]; });
    return staggered(routes, order);
  };
  const auto first = half(inst.start);
  auto second = half(inst.target);
  std::reverse(second.begin(), second.end());
  out.phase_one = static_cast<int>(first.size()) - 1;
  out.phase_two = static_cast<int>(second.size()) - 1;

  Schedule sched;
  sched.steps.assign(first.begin() + 1, first.end());
  sched.steps.insert(sched.steps.end(), second.begin() + 1, second.end());
  out.result.outcome = Outcome::Feasible;
  out.result.schedule = std::move(sched);
  out.result.stats.nodes = out.tree_size;
  out.result.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace mapf
