#include "mapf/kernel.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mapf {

CoverBudgetExceeded::CoverBudgetExceeded(int budget)
    : std::runtime_error("vertex cover exceeds budget " + std::to_string(budget)) {}

namespace {

/// Bounded search tree: branch on a maximum-degree vertex v, taking v or all of N(v).
bool cover_within(const Graph& g, std::vector<char>& removed, int budget, std::vector<VertexId>& chosen) {
  VertexId best = -1;
  int best_deg = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (removed[v]) continue;
    int deg = 0;
    for (VertexId w : g.neighbors(v)) deg += !removed[w];
    if (deg > best_deg) {
      best = v;
      best_deg = deg;
    }
  }
  if (best == -1) return true;
  if (budget == 0) return false;

  removed[best] = 1;
  chosen.push_back(best);
  if (cover_within(g, removed, budget - 1, chosen)) return true;
  chosen.pop_back();
  removed[best] = 0;

  if (best_deg > budget) return false;
  std::vector<VertexId> taken;
  for (VertexId w : g.neighbors(best)) {
    if (!removed[w]) taken.push_back(w);
  }
  for (VertexId w : taken) {
    removed[w] = 1;
    chosen.push_back(w);
  }
  if (cover_within(g, removed, budget - best_deg, chosen)) return true;
  for (VertexId w : taken) {
    removed[w] = 0;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> compute_vertex_cover(const Graph& g, int budget) {
  for (int size = 0; size <= budget; ++size) {
    std::vector<char> removed(g.vertex_count(), 0);
    std::vector<VertexId> chosen;
    if (cover_within(g, removed, size, chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  }
  return std::nullopt;
}

std::int64_t KernelOutput::size_bound() const {
  const auto u = static_cast<std::int64_t>(cover.size());
  return u + (std::int64_t{1} << u) * 3 * original.agent_count();
}

KernelOutput kernelize(const Instance& inst, int cover_budget) {
  const Graph& g = inst.graph;
  auto cover = compute_vertex_cover(g, cover_budget);
  if (!cover) throw CoverBudgetExceeded(cover_budget);
  const int k = inst.agent_count();

  KernelOutput out;
  out.original = inst;
  out.cover = *cover;
  std::vector<char> in_cover(g.vertex_count(), 0), terminal(g.vertex_count(), 0);
  for (VertexId u : out.cover) in_cover[u] = 1;
  for (AgentId a = 0; a < k; ++a) terminal[inst.start[a]] = terminal[inst.target[a]] = 1;

  // Outside the cover, N(v) lies inside it, so the neighborhood is the class key.
  std::map<std::vector<VertexId>, std::vector<VertexId>> by_neighborhood;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in_cover[v]) continue;
    const auto nb = g.neighbors(v);
    by_neighborhood[std::vector<VertexId>(nb.begin(), nb.end())].push_back(v);
  }
  std::vector<VertexId> kept = out.cover;
  for (auto& [neighborhood, members] : by_neighborhood) {
    TwinClass cls{neighborhood, members, {}};
    if (static_cast<int>(members.size()) <= 3 * k) {
      cls.kept = members;
    } else {
      int fillers = 0;
      for (VertexId v : members) {
        if (terminal[v]) {
          cls.kept.push_back(v);
        } else if (fillers < k) {
          cls.kept.push_back(v);
          ++fillers;
        }
      }
    }
    kept.insert(kept.end(), cls.kept.begin(), cls.kept.end());
    out.classes.push_back(std::move(cls));
  }
  std::sort(kept.begin(), kept.end());
  out.vertex_map = kept;

  std::vector<VertexId> to_kernel(g.vertex_count(), -1);
  for (std::size_t i = 0; i < kept.size(); ++i) to_kernel[kept[i]] = static_cast<VertexId>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (to_kernel[e.u] != -1 && to_kernel[e.v] != -1) edges.push_back({to_kernel[e.u], to_kernel[e.v]});
  }
  out.kernel.graph = Graph(static_cast<int>(kept.size()), edges);
  for (AgentId a = 0; a < k; ++a) {
    out.kernel.start.push_back(to_kernel[inst.start[a]]);
    out.kernel.target.push_back(to_kernel[inst.target[a]]);
  }
  out.kernel.makespan = inst.makespan;
  out.kernel.swap_policy = inst.swap_policy;
  return out;
}

Schedule lift_kernel_schedule(const KernelOutput& kout, const Schedule& sched) {
  if (auto why = first_schedule_violation(kout.kernel, sched)) {
    throw std::invalid_argument("kernel schedule does not verify: " + *why);
  }
  Schedule lifted = sched;
  for (auto& step : lifted.steps) {
    for (VertexId& v : step) v = kout.vertex_map[v];
  }
  return lifted;
}

}  // namespace mapf
