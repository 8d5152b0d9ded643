#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "mapf/reductions.hpp"

namespace mapf {

namespace {

/// Kahn's algorithm, smallest ready vertex first. Throws on cycles.
std::vector<int> topological_order(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (auto [u, v] : arcs) {
    out[u].push_back(v);
    ++indegree[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int w : out[u]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("input digraph has a cycle");
  return order;
}

}  // namespace

GeneratedInstance from_disjoint_shortest_paths(const DagPaths& input) {
  const int n = input.vertex_count;
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : input.arcs) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop in digraph");
    arcs.emplace_back(u, v);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  const std::vector<int> order = topological_order(n, arcs);
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[order[i]] = i;

  const int k = static_cast<int>(input.pairs.size());
  std::vector<int> s_count(n, 0), t_count(n, 0);
  for (auto [s, t] : input.pairs) {
    if (s < 0 || t < 0 || s >= n || t >= n) throw std::invalid_argument("pair endpoint out of range");
    if (++s_count[s] > 1 || ++t_count[t] > 1) throw std::invalid_argument("pairs must have distinct sources and sinks");
  }

  // Degrees in the underlying graph with terminal edges attached.
  std::vector<int> dag_degree(n, 0);
  for (auto [u, v] : arcs) {
    ++dag_degree[u];
    ++dag_degree[v];
  }
  const int max_degree = n ? *std::max_element(dag_degree.begin(), dag_degree.end()) : 0;
  int height = 1;  // ceil(log2(max_degree + 1)) + 1
  while ((1 << (height - 1)) < max_degree + 1) ++height;
  ++height;
  const int tree_size = (1 << height) - 1;
  const int first_leaf = 1 << (height - 1);  // heap index
  std::vector<char> has_tree(n, 0);
  for (int v = 0; v < n; ++v) has_tree[v] = dag_degree[v] + s_count[v] + t_count[v] >= 4;

  // Global position order: l_0, then per vertex in topological order the incoming
  // tree (deepest first), the vertex, the outgoing tree; finally l_{n+1}.
  std::vector<int> pos_vertex(n), pos_in(n, -1), pos_out(n, -1);
  int positions = 1;
  for (int v : order) {
    if (has_tree[v]) {
      pos_in[v] = positions;
      positions += height;
    }
    pos_vertex[v] = positions++;
    if (has_tree[v]) {
      pos_out[v] = positions;
      positions += height;
    }
  }
  const int last_position = positions++;

  GraphBuilder b(n);
  std::vector<int> position(n);
  for (int v = 0; v < n; ++v) position[v] = pos_vertex[v];
  auto fresh = [&](int pos) {
    position.push_back(pos);
    return b.add_vertex();
  };

  GeneratedInstance gen;
  gen.gadget_map.push_back({"original", 0, n});
  struct Tree {
    VertexId base = -1;
    int next_leaf = 0;
  };
  std::vector<Tree> in_tree(n), out_tree(n);
  std::vector<std::pair<VertexId, VertexId>> links;  // edges still to be subdivided
  for (int v : order) {
    if (!has_tree[v]) continue;
    const VertexId first = b.vertex_count();
    for (int side = 0; side < 2; ++side) {
      Tree& tree = side == 0 ? in_tree[v] : out_tree[v];
      tree.base = b.vertex_count();
      for (int idx = 1; idx <= tree_size; ++idx) {
        int depth = 0;
        while ((2 << depth) <= idx) ++depth;
        fresh(side == 0 ? pos_in[v] + height - 1 - depth : pos_out[v] + depth);
      }
      for (int idx = 2; idx <= tree_size; ++idx) links.emplace_back(tree.base + idx / 2 - 1, tree.base + idx - 1);
      links.emplace_back(v, tree.base);
    }
    gen.gadget_map.push_back({"trees" + std::to_string(v), first, b.vertex_count()});
  }
  auto leaf = [&](Tree& tree) {
    return tree.base + first_leaf - 1 + tree.next_leaf++;
  };
  auto entry = [&](int v) { return has_tree[v] ? leaf(in_tree[v]) : v; };
  auto exit = [&](int v) { return has_tree[v] ? leaf(out_tree[v]) : v; };

  const VertexId terminals_first = b.vertex_count();
  std::vector<VertexId> starts, targets;
  for (int i = 0; i < k; ++i) {
    starts.push_back(fresh(0));
    targets.push_back(fresh(last_position));
  }
  gen.gadget_map.push_back({"terminals", terminals_first, b.vertex_count()});
  for (int i = 0; i < k; ++i) links.emplace_back(starts[i], entry(input.pairs[i].first));
  std::vector<std::pair<int, int>> by_rank = arcs;
  std::sort(by_rank.begin(), by_rank.end(), [&](auto x, auto y) {
    return std::pair(rank[x.first], rank[x.second]) < std::pair(rank[y.first], rank[y.second]);
  });
  for (auto [u, v] : by_rank) links.emplace_back(exit(u), entry(v));
  for (int i = 0; i < k; ++i) links.emplace_back(exit(input.pairs[i].second), targets[i]);

  // Subdivide every link so that consecutive vertices sit in consecutive positions.
  const VertexId subdivision_first = b.vertex_count();
  for (auto [x, y] : links) {
    if (position[x] > position[y]) std::swap(x, y);
    VertexId prev = x;
    for (int p = position[x] + 1; p < position[y]; ++p) {
      const VertexId mid = fresh(p);
      b.add_edge(prev, mid);
      prev = mid;
    }
    b.add_edge(prev, y);
  }
  gen.gadget_map.push_back({"subdivisions", subdivision_first, b.vertex_count()});

  Instance& inst = gen.instance;
  inst.graph = b.build();
  inst.start = starts;
  inst.target = targets;
  inst.makespan = last_position;
  inst.swap_policy = SwapPolicy::SwapsAllowed;

  std::string src = "dag n=" + std::to_string(n) + " arcs=";
  for (std::size_t i = 0; i < input.arcs.size(); ++i) {
    src += (i ? ";" : "") + std::to_string(input.arcs[i].first) + ">" + std::to_string(input.arcs[i].second);
  }
  src += " pairs=";
  for (int i = 0; i < k; ++i) {
    src += (i ? ";" : "") + std::to_string(input.pairs[i].first) + ">" + std::to_string(input.pairs[i].second);
  }
  gen.source = src;
  gen.extra.emplace_back("tree_height", std::to_string(height));
  if (n <= 12) {
    // Every s-t walk in the layered graph takes the same number of turns, so the
    // instance encodes disjoint directed paths; disjoint shortest paths is a
    // stricter property and is reported separately.
    gen.expected = dag_disjoint_paths(input, false) ? Expected::Yes : Expected::No;
    gen.extra.emplace_back("disjoint_shortest_paths", dag_disjoint_paths(input, true) ? "yes" : "no");
  }
  return gen;
}

}  // namespace mapf
