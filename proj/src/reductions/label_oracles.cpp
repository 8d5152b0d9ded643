// Brute-force deciders for the source problems of the generators. They share no
// code with the MAPF solvers.
#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>

#include "mapf/reductions.hpp"

namespace mapf {

std::optional<bool> sat_brute_force(const CnfFormula& phi, int max_vars) {
  check_formula(phi);
  if (phi.num_vars > max_vars) return std::nullopt;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << phi.num_vars); ++mask) {
    bool all = true;
    for (const auto& clause : phi.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        if (value == (lit > 0)) any = true;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool dag_disjoint_paths(const DagPaths& input, bool shortest) {
  const int n = input.vertex_count;
  std::vector<std::vector<int>> out(n);
  for (auto [u, v] : input.arcs) out[u].push_back(v);
  for (auto& list : out) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  auto distance = [&](int from, int to) {
    std::vector<int> dist(n, -1);
    std::deque<int> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : out[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return dist[to];
  };
  const int k = static_cast<int>(input.pairs.size());
  std::vector<int> want(k);
  for (int i = 0; i < k; ++i) {
    want[i] = distance(input.pairs[i].first, input.pairs[i].second);
    if (want[i] == -1) return false;
  }
  std::vector<char> used(n, 0);
  // Route pair i by DFS over unused vertices, then recurse on pair i+1.
  std::function<bool(int)> route_pair;
  std::function<bool(int, int, int)> walk = [&](int i, int v, int length) -> bool {
    if (v == input.pairs[i].second) return (!shortest || length == want[i]) && route_pair(i + 1);
    if (shortest && length >= want[i]) return false;
    for (int w : out[v]) {
      if (used[w]) continue;
      used[w] = 1;
      if (walk(i, w, length + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  route_pair = [&](int i) -> bool {
    if (i == k) return true;
    const int s = input.pairs[i].first;
    if (used[s]) return false;
    used[s] = 1;
    if (walk(i, s, 0)) return true;
    used[s] = 0;
    return false;
  };
  return route_pair(0);
}

bool beup_brute_force(const Graph& g, VertexId s, VertexId t, int k, int d) {
  if (g.edge_count() > 62) throw std::invalid_argument("graph too large for brute force");
  // Edge sets of all simple s-t paths with at most d edges.
  std::vector<std::uint64_t> paths;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<void(VertexId, int, std::uint64_t)> walk = [&](VertexId v, int length, std::uint64_t edges) {
    if (v == t) {
      paths.push_back(edges);
      return;
    }
    if (length == d) return;
    for (VertexId w : g.neighbors(v)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      walk(w, length + 1, edges | (std::uint64_t{1} << g.edge_index(v, w)));
      on_path[w] = 0;
    }
  };
  on_path[s] = 1;
  walk(s, 0, 0);
  std::function<bool(std::size_t, int, std::uint64_t)> pick = [&](std::size_t from, int left, std::uint64_t taken) {
    if (left == 0) return true;
    for (std::size_t i = from; i < paths.size(); ++i) {
      if ((paths[i] & taken) == 0 && pick(i + 1, left - 1, taken | paths[i])) return true;
    }
    return false;
  };
  return pick(0, k, 0);
}

std::optional<int> token_swapping_rounds(const Graph& tree, const std::vector<VertexId>& perm, int limit) {
  const int n = tree.vertex_count();
  std::vector<VertexId> goal(n);
  for (VertexId v = 0; v < n; ++v) goal[perm[v]] = v;  // token v must end on perm[v]
  std::vector<VertexId> start(n);
  for (VertexId v = 0; v < n; ++v) start[v] = v;
  const auto& edges = tree.edges();
  // Every nonempty matching of the tree is one round.
  std::vector<std::vector<int>> matchings;
  for (std::uint32_t mask = 1; mask < (1u << edges.size()); ++mask) {
    std::uint64_t touched = 0;
    bool ok = true;
    std::vector<int> chosen;
    for (std::size_t j = 0; j < edges.size() && ok; ++j) {
      if (!((mask >> j) & 1)) continue;
      const std::uint64_t ends = (std::uint64_t{1} << edges[j].u) | (std::uint64_t{1} << edges[j].v);
      ok = (touched & ends) == 0;
      touched |= ends;
      chosen.push_back(static_cast<int>(j));
    }
    if (ok) matchings.push_back(chosen);
  }
  std::map<std::vector<VertexId>, int> dist{{start, 0}};
  std::deque<std::vector<VertexId>> queue{start};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const int dcur = dist[cur];
    if (cur == goal) return dcur;
    if (dcur == limit) continue;
    for (const auto& matching : matchings) {
      auto next = cur;
      for (int j : matching) std::swap(next[edges[j].u], next[edges[j].v]);
      if (dist.emplace(next, dcur + 1).second) queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

}  // namespace mapf
