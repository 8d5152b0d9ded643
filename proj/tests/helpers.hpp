#pragma once

#include <utility>
#include <vector>

#include "mapf/instance.hpp"

namespace testing_helpers {

inline mapf::Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<mapf::Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return mapf::Graph(n, list);
}

inline mapf::Graph path_graph(int n) {
  std::vector<mapf::Edge> list;
  for (int v = 0; v + 1 < n; ++v) list.push_back({v, v + 1});
  return mapf::Graph(n, list);
}

inline mapf::Graph star_graph(int leaves) {
  std::vector<mapf::Edge> list;
  for (int v = 1; v <= leaves; ++v) list.push_back({0, v});
  return mapf::Graph(leaves + 1, list);
}

inline mapf::Instance make_instance(mapf::Graph g, std::vector<int> start, std::vector<int> target, int makespan,
                                    mapf::SwapPolicy policy) {
  mapf::Instance inst;
  inst.graph = std::move(g);
  inst.start = std::move(start);
  inst.target = std::move(target);
  inst.makespan = makespan;
  inst.swap_policy = policy;
  return inst;
}

inline std::vector<std::pair<int, int>> edge_pairs(const mapf::Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

inline constexpr auto kSwaps = mapf::SwapPolicy::SwapsAllowed;
inline constexpr auto kNoSwaps = mapf::SwapPolicy::SwapsForbidden;

}  // namespace testing_helpers
