#include "mapf/instance.hpp"

#include <algorithm>

namespace mapf {

namespace {

std::string agent_str(AgentId a) { return "agent " + std::to_string(a); }

void check_map(const Instance& inst, const PositionMap& map, const char* name, Violation::Kind dup_kind,
               std::vector<Violation>& out) {
  const int n = inst.graph.vertex_count();
  std::vector<AgentId> owner(n, -1);
  for (AgentId a = 0; a < static_cast<AgentId>(map.size()); ++a) {
    const VertexId v = map[a];
    if (v < 0 || v >= n) {
      out.push_back({Violation::Kind::VertexOutOfRange, a, v,
                     agent_str(a) + ": " + name + " vertex " + std::to_string(v) + " out of range"});
      continue;
    }
    if (owner[v] != -1) {
      out.push_back({dup_kind, a, v,
                     agent_str(a) + ": " + name + " vertex " + std::to_string(v) + " already used by " +
                         agent_str(owner[v])});
    } else {
      owner[v] = a;
    }
  }
}

}  // namespace

ScheduleLengthError::ScheduleLengthError(int got, int expected)
    : std::invalid_argument("schedule length " + std::to_string(got) + " != makespan " + std::to_string(expected)) {}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  if (inst.start.size() != inst.target.size()) {
    out.push_back({Violation::Kind::SizeMismatch, -1, -1, "start and target cover different agent counts"});
  }
  if (inst.makespan < 0) out.push_back({Violation::Kind::NegativeMakespan, -1, -1, "negative makespan"});
  check_map(inst, inst.start, "start", Violation::Kind::StartNotInjective, out);
  check_map(inst, inst.target, "target", Violation::Kind::TargetNotInjective, out);
  return out;
}

std::optional<std::string> step_violation(const Graph& g, const PositionMap& prev, const PositionMap& next,
                                          SwapPolicy policy) {
  if (prev.size() != next.size()) return "position maps cover different agent counts";
  const int n = g.vertex_count();
  const int k = static_cast<int>(next.size());
  std::vector<AgentId> at_next(n, -1);
  for (AgentId a = 0; a < k; ++a) {
    const VertexId v = next[a];
    if (v < 0 || v >= n) return agent_str(a) + " at vertex " + std::to_string(v) + " out of range";
    if (at_next[v] != -1) {
      return agent_str(at_next[v]) + " and " + agent_str(a) + " both at vertex " + std::to_string(v);
    }
    at_next[v] = a;
    if (v != prev[a] && !g.adjacent(prev[a], v)) {
      return agent_str(a) + " jumps " + std::to_string(prev[a]) + " -> " + std::to_string(v);
    }
  }
  if (policy == SwapPolicy::SwapsForbidden) {
    for (AgentId a = 0; a < k; ++a) {
      if (next[a] == prev[a]) continue;
      const AgentId b = at_next[prev[a]];
      if (b != -1 && b != a && next[a] == prev[b]) {
        return agent_str(std::min(a, b)) + " and " + agent_str(std::max(a, b)) + " swap on edge " +
               std::to_string(prev[a]) + "-" + std::to_string(prev[b]);
      }
    }
  }
  return std::nullopt;
}

bool step_is_feasible(const Graph& g, const PositionMap& prev, const PositionMap& next, SwapPolicy policy) {
  return !step_violation(g, prev, next, policy).has_value();
}

std::optional<std::string> first_schedule_violation(const Instance& inst, const Schedule& sched) {
  if (sched.makespan() != inst.makespan) throw ScheduleLengthError(sched.makespan(), inst.makespan);
  const PositionMap* prev = &inst.start;
  for (int i = 0; i < sched.makespan(); ++i) {
    if (auto why = step_violation(inst.graph, *prev, sched.steps[i], inst.swap_policy)) {
      return "turn " + std::to_string(i + 1) + ": " + *why;
    }
    prev = &sched.steps[i];
  }
  if (*prev != inst.target) {
    for (AgentId a = 0; a < inst.agent_count(); ++a) {
      if ((*prev)[a] != inst.target[a]) {
        return agent_str(a) + " ends at " + std::to_string((*prev)[a]) + " instead of " +
               std::to_string(inst.target[a]);
      }
    }
    return std::string("final positions differ from targets");
  }
  return std::nullopt;
}

bool verify_schedule(const Instance& inst, const Schedule& sched) {
  return !first_schedule_violation(inst, sched).has_value();
}

std::optional<int> makespan_lower_bound(const Instance& inst) {
  int best = 0;
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    if (inst.start[a] == inst.target[a]) continue;
    const int d = bfs_distances(inst.graph, inst.start[a])[inst.target[a]];
    if (d == kUnreachable) return std::nullopt;
    best = std::max(best, d);
  }
  return best;
}

Schedule pad_schedule(const Instance& inst, Schedule sched, int length) {
  const PositionMap last = sched.steps.empty() ? inst.start : sched.steps.back();
  while (sched.makespan() < length) sched.steps.push_back(last);
  return sched;
}

}  // namespace mapf
