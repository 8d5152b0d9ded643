#pragma once

#include <stdexcept>
#include <vector>

#include "mapf/instance.hpp"
#include "mapf/solvers.hpp"

namespace mapf {

class NoHubError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest finite BFS eccentricity over all vertices.
int graph_diameter(const Graph& g);

struct HubRoute {
  /// Feasible, swap-free schedule of its own length phase_one + phase_two
  /// (inst.makespan is not consulted).
  SolveResult result;
  VertexId hub = -1;
  int diameter = 0;
  /// Parking leaf per agent.
  std::vector<VertexId> parking;
  /// Spanning-tree parent per graph vertex; -1 outside the tree and at the hub.
  std::vector<VertexId> tree_parent;
  int tree_size = 0;
  /// Turns until every agent is parked.
  int phase_one = 0;
  int phase_two = 0;
};

/// Routes every agent to a parking neighbor of a high-degree hub and back out.
/// Throws NoHubError when no vertex has degree >= 5*d*k (d the diameter), and
/// std::invalid_argument when some target is unreachable.
HubRoute hub_route(const Instance& inst);

}  // namespace mapf
