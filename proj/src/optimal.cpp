#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mapf/matching.hpp"
#include "mapf/solvers.hpp"

namespace mapf {

SolveResult solve_makespan2_swaps(const Instance& inst) {
  if (inst.makespan != 2 || inst.swap_policy != SwapPolicy::SwapsAllowed) {
    throw std::invalid_argument("wrong makespan/policy: matching solver needs makespan 2 with swaps allowed");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Graph& g = inst.graph;
  const int k = inst.agent_count();
  std::vector<std::vector<int>> adj(k);
  for (AgentId a = 0; a < k; ++a) {
    // Middles: closed neighborhood of the start intersected with that of the target.
    const VertexId s = inst.start[a], t = inst.target[a];
    auto closed_has = [&](VertexId center, VertexId v) { return center == v || g.adjacent(center, v); };
    if (closed_has(t, s)) adj[a].push_back(s);
    for (VertexId w : g.neighbors(s)) {
      if (closed_has(t, w)) adj[a].push_back(w);
    }
    std::sort(adj[a].begin(), adj[a].end());
  }
  const auto match = max_bipartite_matching(k, g.vertex_count(), adj);
  SolveResult result;
  result.stats.nodes = k;
  result.outcome = Outcome::Feasible;
  for (int m : match) {
    if (m == -1) result.outcome = Outcome::Infeasible;
  }
  if (result.outcome == Outcome::Feasible) {
    result.schedule = Schedule{{PositionMap(match.begin(), match.end()), inst.target}};
  }
  result.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

OptimalResult optimal_makespan(const Instance& inst, int max_makespan, std::int64_t budget) {
  if (max_makespan < 0) throw std::invalid_argument("negative makespan bound");
  OptimalResult out;
  const auto lower = makespan_lower_bound(inst);
  if (!lower) return out;
  Instance probe = inst;
  for (int l = *lower; l <= max_makespan; ++l) {
    probe.makespan = l;
    const SolveResult r = (l == 2 && inst.swap_policy == SwapPolicy::SwapsAllowed) ? solve_makespan2_swaps(probe)
                                                                                   : solve_time_expanded(probe, budget);
    out.stats.nodes += r.stats.nodes;
    out.stats.millis += r.stats.millis;
    if (r.outcome == Outcome::Aborted) {
      out.outcome = Outcome::Aborted;
      return out;
    }
    if (r.outcome == Outcome::Feasible) {
      out.outcome = Outcome::Feasible;
      out.makespan = l;
      out.schedule = r.schedule;
      return out;
    }
  }
  return out;
}

}  // namespace mapf
