#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapf/graph.hpp"
#include "mapf/time_expansion.hpp"

namespace mapf {

/// Rooted tree of bags; parent[root] == -1. Bags hold sorted, distinct element ids.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;

  int width() const;
  int node_count() const { return static_cast<int>(bags.size()); }
};

class DecompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the tree shape, edge coverage, vertex coverage and the connected-subtree
/// property. Returns a description of the first problem, or nullopt.
std::optional<std::string> decomposition_error(const TreeDecomposition& td, int vertex_count,
                                               std::span<const std::pair<int, int>> edges);
std::optional<std::string> decomposition_error(const TreeDecomposition& td, const Graph& g);
std::optional<std::string> decomposition_error(const TreeDecomposition& td, const TimeExpandedGraph& teg);

/// Min-fill elimination (ties: smaller current degree, then smaller id).
TreeDecomposition greedy_decomposition(const Graph& g);

struct LiftedDecomposition {
  TreeDecomposition decomposition;
  /// Node of the input decomposition each output node was derived from.
  std::vector<int> source_node;
};

/// Decomposition of build_expansion(g, turns, mode) derived from `td`.
/// Throws DecompositionError when td is not a decomposition of g.
LiftedDecomposition lift_decomposition(const TreeDecomposition& td, const Graph& g, int turns, ExpansionMode mode);

}  // namespace mapf
