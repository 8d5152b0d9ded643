#include <algorithm>
#include <chrono>
#include <cstring>
#include <unordered_set>

#include "mapf/solvers.hpp"

namespace mapf {

const char* outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Feasible: return "FEASIBLE";
    case Outcome::Infeasible: return "INFEASIBLE";
    case Outcome::Aborted: return "ABORTED";
  }
  return "?";
}

namespace {

/// Configurations stored back to back; ids index into the pool.
class ConfigPool {
 public:
  explicit ConfigPool(int k) : k_(k), set_(64, Hash{this}, Eq{this}) {}

  const VertexId* get(std::int64_t id) const { return data_.data() + id * k_; }
  std::int64_t size() const { return static_cast<std::int64_t>(parent_.size()); }
  std::int64_t parent(std::int64_t id) const { return parent_[id]; }

  /// Returns false when the configuration was seen before.
  bool insert(const VertexId* config, std::int64_t parent) {
    data_.insert(data_.end(), config, config + k_);
    parent_.push_back(parent);
    if (set_.insert(size() - 1).second) return true;
    data_.resize(data_.size() - k_);
    parent_.pop_back();
    return false;
  }

 private:
  struct Hash {
    const ConfigPool* pool;
    std::size_t operator()(std::int64_t id) const {
      const VertexId* c = pool->get(id);
      std::uint64_t h = 0x9e3779b97f4a7c15ull;
      for (int i = 0; i < pool->k_; ++i) {
        h ^= static_cast<std::uint32_t>(c[i]);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 32;
      }
      return h;
    }
  };
  struct Eq {
    const ConfigPool* pool;
    bool operator()(std::int64_t a, std::int64_t b) const {
      return std::memcmp(pool->get(a), pool->get(b), sizeof(VertexId) * pool->k_) == 0;
    }
  };

  int k_;
  std::vector<VertexId> data_;
  std::vector<std::int64_t> parent_;
  std::unordered_set<std::int64_t, Hash, Eq> set_;
};

}  // namespace

SolveResult solve_joint_bfs(const Instance& inst, std::int64_t budget) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult result;
  auto finish = [&](Outcome outcome) {
    result.outcome = outcome;
    result.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
  };
  const Graph& g = inst.graph;
  const int k = inst.agent_count();
  const int n = g.vertex_count();
  const int horizon = inst.makespan;
  const bool no_swaps = inst.swap_policy == SwapPolicy::SwapsForbidden;

  std::vector<std::vector<int>> to_target(k);
  for (AgentId a = 0; a < k; ++a) {
    to_target[a] = bfs_distances(g, inst.target[a]);
    const int d = to_target[a][inst.start[a]];
    if (d == kUnreachable || d > horizon) return finish(Outcome::Infeasible);
  }

  ConfigPool pool(k);
  pool.insert(inst.start.data(), -1);
  result.stats.nodes = 1;
  std::int64_t goal = -1;
  if (inst.start == inst.target) goal = 0;

  // Per-vertex owner stamps for the configuration being expanded and the one being built.
  std::vector<AgentId> prev_owner(n, -1), next_owner(n, -1);
  std::vector<VertexId> next(k);
  std::int64_t layer_begin = 0;
  bool aborted = false;

  for (int depth = 0; depth < horizon && goal == -1 && !aborted; ++depth) {
    const std::int64_t layer_end = pool.size();
    if (layer_begin == layer_end) break;
    const int remaining = horizon - depth - 1;
    for (std::int64_t id = layer_begin; id < layer_end && goal == -1 && !aborted; ++id) {
      const std::vector<VertexId> cur(pool.get(id), pool.get(id) + k);
      for (AgentId a = 0; a < k; ++a) prev_owner[cur[a]] = a;

      // Depth-first enumeration of successor configurations, agent by agent.
      auto assign = [&](auto&& self, AgentId a) -> void {
        if (goal != -1 || aborted) return;
        if (a == k) {
          if (!pool.insert(next.data(), id)) return;
          if (++result.stats.nodes > budget) {
            aborted = true;
            return;
          }
          if (next == inst.target) goal = pool.size() - 1;
          return;
        }
        const VertexId from = cur[a];
        auto try_vertex = [&](VertexId to) {
          if (next_owner[to] != -1 || to_target[a][to] > remaining) return;
          if (no_swaps && to != from) {
            const AgentId other = prev_owner[to];
            if (other != -1 && other < a && next[other] == from) return;
          }
          next[a] = to;
          next_owner[to] = a;
          self(self, a + 1);
          next_owner[to] = -1;
        };
        // Closed neighborhood in increasing vertex order.
        bool stayed = false;
        for (VertexId w : g.neighbors(from)) {
          if (!stayed && from < w) {
            try_vertex(from);
            stayed = true;
          }
          try_vertex(w);
        }
        if (!stayed) try_vertex(from);
      };
      assign(assign, 0);
      for (AgentId a = 0; a < k; ++a) prev_owner[cur[a]] = -1;
    }
    layer_begin = layer_end;
  }

  if (aborted) return finish(Outcome::Aborted);
  if (goal == -1) return finish(Outcome::Infeasible);
  Schedule sched;
  for (std::int64_t id = goal; pool.parent(id) != -1; id = pool.parent(id)) {
    sched.steps.emplace_back(pool.get(id), pool.get(id) + k);
  }
  std::reverse(sched.steps.begin(), sched.steps.end());
  result.schedule = pad_schedule(inst, std::move(sched), horizon);
  return finish(Outcome::Feasible);
}

}  // namespace mapf
