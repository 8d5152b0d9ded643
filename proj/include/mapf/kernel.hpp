#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mapf/instance.hpp"

namespace mapf {

/// Minimum vertex cover (sorted) if one of size <= budget exists.
std::optional<std::vector<VertexId>> compute_vertex_cover(const Graph& g, int budget);

class CoverBudgetExceeded : public std::runtime_error {
 public:
  explicit CoverBudgetExceeded(int budget);
};

struct TwinClass {
  std::vector<VertexId> neighborhood;  // S: the common neighbors inside the cover
  std::vector<VertexId> members;       // V_S
  std::vector<VertexId> kept;          // U_S
};

struct KernelOutput {
  Instance kernel;
  /// kernel vertex id -> original vertex id (increasing).
  std::vector<VertexId> vertex_map;
  std::vector<VertexId> cover;
  std::vector<TwinClass> classes;
  Instance original;

  /// |U| + 2^|U| * 3k.
  std::int64_t size_bound() const;
};

inline constexpr int kDefaultCoverBudget = 16;

/// Throws CoverBudgetExceeded when no vertex cover of size <= cover_budget exists.
KernelOutput kernelize(const Instance& inst, int cover_budget = kDefaultCoverBudget);

/// Maps a kernel schedule back to original vertex ids. Throws std::invalid_argument
/// when the schedule does not verify on the kernel.
Schedule lift_kernel_schedule(const KernelOutput& kout, const Schedule& sched);

}  // namespace mapf
