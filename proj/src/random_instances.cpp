#include "mapf/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace mapf {

Graph random_graph(Rng& rng, int n, int edge_percent) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.chance(edge_percent, 100)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph random_tree(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({rng.between(0, v - 1), v});
  return Graph(n, edges);
}

Instance random_instance(Rng& rng, const Graph& g, int k, int makespan, SwapPolicy policy) {
  std::vector<VertexId> pool(g.vertex_count());
  std::iota(pool.begin(), pool.end(), 0);
  Instance inst;
  inst.graph = g;
  rng.shuffle(pool);
  inst.start.assign(pool.begin(), pool.begin() + k);
  rng.shuffle(pool);
  inst.target.assign(pool.begin(), pool.begin() + k);
  inst.makespan = makespan;
  inst.swap_policy = policy;
  return inst;
}

Instance random_small_instance(Rng& rng) {
  const int n = rng.between(1, 8);
  const Graph g = random_graph(rng, n, rng.between(20, 70));
  const int k = rng.between(1, std::min(3, n));
  const int makespan = rng.between(0, 6);
  const auto policy = rng.chance(1, 2) ? SwapPolicy::SwapsAllowed : SwapPolicy::SwapsForbidden;
  return random_instance(rng, g, k, makespan, policy);
}

}  // namespace mapf
