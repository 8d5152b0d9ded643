#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapf/graph.hpp"
#include "mapf/instance.hpp"

namespace mapf {

enum class ExpansionMode { Swap, SwapFree };

ExpansionMode mode_for(SwapPolicy policy);

using NodeId = std::int32_t;

struct NodeInfo {
  bool is_edge = false;
  /// Vertex id for vertex copies, edge index (into Graph::edges()) for edge copies.
  int element = 0;
  int layer = 0;
};

/// Layered DAG. Vertex copy (v, i) has id i*n + v; edge copies of odd layer 2i-1
/// follow all vertex copies, ordered by layer and then by edge index.
class TimeExpandedGraph {
 public:
  ExpansionMode mode() const { return mode_; }
  int turns() const { return turns_; }
  int layers() const { return mode_ == ExpansionMode::Swap ? turns_ + 1 : 2 * turns_ + 1; }
  int base_vertices() const { return n_; }
  int base_edges() const { return m_; }
  int node_count() const { return static_cast<int>(succ_.size()); }
  int arc_count() const { return arc_count_; }

  NodeId vertex_copy(VertexId v, int layer) const { return layer * n_ + v; }
  /// Edge copy at odd layer 2i-1 (SwapFree only).
  NodeId edge_copy(int edge_index, int layer) const;
  NodeInfo info(NodeId node) const;
  int layer_of(NodeId node) const { return info(node).layer; }

  const std::vector<NodeId>& successors(NodeId node) const { return succ_[node]; }
  const std::vector<NodeId>& predecessors(NodeId node) const { return pred_[node]; }
  std::vector<std::pair<NodeId, NodeId>> arcs() const;

 private:
  friend TimeExpandedGraph build_expansion(const Graph& g, int turns, ExpansionMode mode);

  void add_arc(NodeId a, NodeId b);

  ExpansionMode mode_ = ExpansionMode::Swap;
  int turns_ = 0;
  int n_ = 0;
  int m_ = 0;
  int arc_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> succ_;
  std::vector<std::vector<NodeId>> pred_;
};

TimeExpandedGraph build_expansion(const Graph& g, int turns, ExpansionMode mode);

/// (source, sink) per agent in the expansion matching the instance's swap policy.
std::vector<std::pair<NodeId, NodeId>> terminal_pairs(const Instance& inst, const TimeExpandedGraph& teg);
std::vector<std::pair<NodeId, NodeId>> terminal_pairs(const Instance& inst);

/// Raised when paths are not disjoint source-to-sink walks of the expansion.
class PathError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using NodePath = std::vector<NodeId>;

/// Reads positions off even layers (SwapFree) or all layers (Swap).
/// Throws PathError naming the first clash.
Schedule paths_to_schedule(const TimeExpandedGraph& teg, const std::vector<NodePath>& paths);

/// Throws std::invalid_argument when the schedule does not verify.
std::vector<NodePath> schedule_to_paths(const Instance& inst, const Schedule& sched);
std::vector<NodePath> schedule_to_paths(const Instance& inst, const Schedule& sched, const TimeExpandedGraph& teg);

void write_expansion(std::ostream& out, const TimeExpandedGraph& teg);

}  // namespace mapf
