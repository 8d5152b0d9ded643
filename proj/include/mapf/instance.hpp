#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapf/graph.hpp"

namespace mapf {

enum class SwapPolicy { SwapsAllowed, SwapsForbidden };

/// Agent-indexed vertex positions for one turn.
using PositionMap = std::vector<VertexId>;

struct Instance {
  Graph graph;
  PositionMap start;
  PositionMap target;
  int makespan = 0;
  SwapPolicy swap_policy = SwapPolicy::SwapsAllowed;

  int agent_count() const { return static_cast<int>(start.size()); }
};

/// Positions s_1..s_l. s_0 is the instance start and is not stored.
struct Schedule {
  std::vector<PositionMap> steps;

  int makespan() const { return static_cast<int>(steps.size()); }
  bool operator==(const Schedule&) const = default;
};

struct Violation {
  enum class Kind { StartNotInjective, TargetNotInjective, VertexOutOfRange, SizeMismatch, NegativeMakespan };
  Kind kind;
  AgentId agent = -1;
  VertexId vertex = -1;
  std::string message;
};

std::vector<Violation> validate_instance(const Instance& inst);

/// Thrown by verify_schedule when the schedule length differs from the makespan.
class ScheduleLengthError : public std::invalid_argument {
 public:
  ScheduleLengthError(int got, int expected);
};

bool step_is_feasible(const Graph& g, const PositionMap& prev, const PositionMap& next, SwapPolicy policy);

/// Description of why a step fails, or nullopt when it is feasible.
std::optional<std::string> step_violation(const Graph& g, const PositionMap& prev, const PositionMap& next,
                                          SwapPolicy policy);

bool verify_schedule(const Instance& inst, const Schedule& sched);

/// First problem found in the schedule ("turn 3: ..."), or nullopt if it verifies.
/// Throws ScheduleLengthError like verify_schedule.
std::optional<std::string> first_schedule_violation(const Instance& inst, const Schedule& sched);

/// max_a dist(start(a), target(a)); nullopt when some target is unreachable.
std::optional<int> makespan_lower_bound(const Instance& inst);

/// Extends a schedule by waiting at its last positions until it has `length` steps.
Schedule pad_schedule(const Instance& inst, Schedule sched, int length);

}  // namespace mapf
