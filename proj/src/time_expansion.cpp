#include "mapf/time_expansion.hpp"

#include <algorithm>
#include <ostream>

namespace mapf {

ExpansionMode mode_for(SwapPolicy policy) {
  return policy == SwapPolicy::SwapsAllowed ? ExpansionMode::Swap : ExpansionMode::SwapFree;
}

NodeId TimeExpandedGraph::edge_copy(int edge_index, int layer) const {
  const int step = (layer + 1) / 2;  // layer 2i-1 -> i
  return layers() * n_ + (step - 1) * m_ + edge_index;
}

NodeInfo TimeExpandedGraph::info(NodeId node) const {
  const int vertex_nodes = layers() * n_;
  if (node < vertex_nodes) return {false, node % n_, node / n_};
  const int offset = node - vertex_nodes;
  return {true, offset % m_, 2 * (offset / m_) + 1};
}

void TimeExpandedGraph::add_arc(NodeId a, NodeId b) {
  succ_[a].push_back(b);
  pred_[b].push_back(a);
  ++arc_count_;
}

std::vector<std::pair<NodeId, NodeId>> TimeExpandedGraph::arcs() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(arc_count_);
  for (NodeId a = 0; a < node_count(); ++a) {
    for (NodeId b : succ_[a]) out.emplace_back(a, b);
  }
  return out;
}

TimeExpandedGraph build_expansion(const Graph& g, int turns, ExpansionMode mode) {
  if (turns < 0) throw std::invalid_argument("negative turn count");
  TimeExpandedGraph teg;
  teg.mode_ = mode;
  teg.turns_ = turns;
  teg.n_ = g.vertex_count();
  teg.m_ = g.edge_count();
  teg.edges_ = g.edges();
  const int n = teg.n_;
  const int m = teg.m_;
  const int nodes = mode == ExpansionMode::Swap ? (turns + 1) * n : (2 * turns + 1) * n + turns * m;
  teg.succ_.resize(nodes);
  teg.pred_.resize(nodes);

  if (mode == ExpansionMode::Swap) {
    for (int i = 1; i <= turns; ++i) {
      for (VertexId v = 0; v < n; ++v) {
        teg.add_arc(teg.vertex_copy(v, i - 1), teg.vertex_copy(v, i));
        for (VertexId u : g.neighbors(v)) teg.add_arc(teg.vertex_copy(v, i - 1), teg.vertex_copy(u, i));
      }
    }
  } else {
    for (int layer = 1; layer <= 2 * turns; ++layer) {
      for (VertexId v = 0; v < n; ++v) teg.add_arc(teg.vertex_copy(v, layer - 1), teg.vertex_copy(v, layer));
    }
    for (int i = 1; i <= turns; ++i) {
      for (int j = 0; j < m; ++j) {
        const Edge& e = teg.edges_[j];
        const NodeId mid = teg.edge_copy(j, 2 * i - 1);
        teg.add_arc(teg.vertex_copy(e.u, 2 * i - 2), mid);
        teg.add_arc(teg.vertex_copy(e.v, 2 * i - 2), mid);
        teg.add_arc(mid, teg.vertex_copy(e.u, 2 * i));
        teg.add_arc(mid, teg.vertex_copy(e.v, 2 * i));
      }
    }
  }
  return teg;
}

std::vector<std::pair<NodeId, NodeId>> terminal_pairs(const Instance& inst, const TimeExpandedGraph& teg) {
  std::vector<std::pair<NodeId, NodeId>> out;
  const int last = teg.layers() - 1;
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    out.emplace_back(teg.vertex_copy(inst.start[a], 0), teg.vertex_copy(inst.target[a], last));
  }
  return out;
}

std::vector<std::pair<NodeId, NodeId>> terminal_pairs(const Instance& inst) {
  // Ids depend only on n and the layer count, so no expansion needs to be built.
  const int n = inst.graph.vertex_count();
  const int last = inst.swap_policy == SwapPolicy::SwapsAllowed ? inst.makespan : 2 * inst.makespan;
  std::vector<std::pair<NodeId, NodeId>> out;
  for (AgentId a = 0; a < inst.agent_count(); ++a) out.emplace_back(inst.start[a], last * n + inst.target[a]);
  return out;
}

Schedule paths_to_schedule(const TimeExpandedGraph& teg, const std::vector<NodePath>& paths) {
  const int layers = teg.layers();
  std::vector<int> owner(teg.node_count(), -1);
  for (std::size_t a = 0; a < paths.size(); ++a) {
    const NodePath& p = paths[a];
    const std::string who = "path " + std::to_string(a);
    if (static_cast<int>(p.size()) != layers) {
      throw PathError(who + " has " + std::to_string(p.size()) + " nodes, expected " + std::to_string(layers));
    }
    for (int i = 0; i < layers; ++i) {
      if (p[i] < 0 || p[i] >= teg.node_count()) throw PathError(who + " uses unknown node " + std::to_string(p[i]));
      if (teg.layer_of(p[i]) != i) throw PathError(who + " node " + std::to_string(p[i]) + " is not in layer " + std::to_string(i));
      if (i == 0 || i == layers - 1) {
        if (teg.info(p[i]).is_edge) throw PathError(who + " endpoint is an edge node");
      }
      if (i > 0) {
        const auto& succ = teg.successors(p[i - 1]);
        if (std::find(succ.begin(), succ.end(), p[i]) == succ.end()) {
          throw PathError(who + " has no arc " + std::to_string(p[i - 1]) + " -> " + std::to_string(p[i]));
        }
      }
      if (owner[p[i]] != -1) {
        throw PathError("paths " + std::to_string(owner[p[i]]) + " and " + std::to_string(a) + " share node " +
                        std::to_string(p[i]));
      }
      owner[p[i]] = static_cast<int>(a);
    }
  }
  Schedule sched;
  const int stride = teg.mode() == ExpansionMode::Swap ? 1 : 2;
  for (int t = 1; t <= teg.turns(); ++t) {
    PositionMap step(paths.size());
    for (std::size_t a = 0; a < paths.size(); ++a) step[a] = teg.info(paths[a][t * stride]).element;
    sched.steps.push_back(std::move(step));
  }
  return sched;
}

std::vector<NodePath> schedule_to_paths(const Instance& inst, const Schedule& sched) {
  return schedule_to_paths(inst, sched, build_expansion(inst.graph, inst.makespan, mode_for(inst.swap_policy)));
}

std::vector<NodePath> schedule_to_paths(const Instance& inst, const Schedule& sched, const TimeExpandedGraph& teg) {
  if (auto why = first_schedule_violation(inst, sched)) throw std::invalid_argument("schedule infeasible: " + *why);
  std::vector<NodePath> paths(inst.agent_count());
  for (AgentId a = 0; a < inst.agent_count(); ++a) {
    NodePath& p = paths[a];
    VertexId cur = inst.start[a];
    p.push_back(teg.vertex_copy(cur, 0));
    for (int t = 1; t <= sched.makespan(); ++t) {
      const VertexId next = sched.steps[t - 1][a];
      if (teg.mode() == ExpansionMode::Swap) {
        p.push_back(teg.vertex_copy(next, t));
      } else {
        p.push_back(next == cur ? teg.vertex_copy(cur, 2 * t - 1)
                                : teg.edge_copy(inst.graph.edge_index(cur, next), 2 * t - 1));
        p.push_back(teg.vertex_copy(next, 2 * t));
      }
      cur = next;
    }
  }
  return paths;
}

void write_expansion(std::ostream& out, const TimeExpandedGraph& teg) {
  out << "teg " << (teg.mode() == ExpansionMode::Swap ? "swap" : "swapfree") << " " << teg.layers() << "\n";
  for (auto [a, b] : teg.arcs()) out << "arc " << a << " " << b << "\n";
}

}  // namespace mapf
