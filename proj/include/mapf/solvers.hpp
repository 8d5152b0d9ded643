#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mapf/instance.hpp"

namespace mapf {

enum class Outcome { Feasible, Infeasible, Aborted };

const char* outcome_name(Outcome outcome);

struct SolveStats {
  std::int64_t nodes = 0;
  double millis = 0;
};

struct SolveResult {
  Outcome outcome = Outcome::Infeasible;
  /// Set iff outcome is Feasible; has exactly inst.makespan steps.
  std::optional<Schedule> schedule;
  SolveStats stats;
};

inline constexpr std::int64_t kDefaultBudget = 20'000'000;

/// Breadth-first search over joint configurations. The budget caps stored configurations.
SolveResult solve_joint_bfs(const Instance& inst, std::int64_t budget = kDefaultBudget);

/// Disjoint-paths search in the time expansion. The budget caps tried agent paths.
SolveResult solve_time_expanded(const Instance& inst, std::int64_t budget = kDefaultBudget);

/// Requires makespan 2 with swaps allowed; throws std::invalid_argument otherwise.
SolveResult solve_makespan2_swaps(const Instance& inst);

struct OptimalResult {
  Outcome outcome = Outcome::Infeasible;
  /// Smallest feasible makespan when outcome is Feasible.
  int makespan = -1;
  std::optional<Schedule> schedule;
  SolveStats stats;
};

/// Smallest makespan in [lower bound, max_makespan]; inst.makespan is ignored.
/// Infeasible means no schedule up to max_makespan.
OptimalResult optimal_makespan(const Instance& inst, int max_makespan, std::int64_t budget = kDefaultBudget);

}  // namespace mapf
