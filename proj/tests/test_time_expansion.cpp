#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "mapf/random_instances.hpp"
#include "mapf/time_expansion.hpp"
#include "oracles.hpp"

using namespace mapf;
using namespace testing_helpers;

namespace {

Graph claw() { return make_graph(4, {{0, 1}, {1, 2}, {1, 3}}); }

oracle::Node as_tuple(const TimeExpandedGraph& teg, NodeId id) {
  NodeInfo i = teg.info(id);
  return {i.is_edge ? 1 : 0, i.element, i.layer};
}

void check_against_definition(const Graph& g, int l, ExpansionMode mode) {
  const TimeExpandedGraph teg = build_expansion(g, l, mode);
  const auto ref = oracle::expansion(g.vertex_count(), edge_pairs(g), l, mode == ExpansionMode::SwapFree);
  REQUIRE(teg.node_count() == static_cast<int>(ref.nodes.size()));
  REQUIRE(teg.arc_count() == static_cast<int>(ref.arcs.size()));
  std::set<oracle::Node> nodes;
  for (NodeId v = 0; v < teg.node_count(); ++v) nodes.insert(as_tuple(teg, v));
  CHECK(nodes == ref.nodes);
  std::set<std::pair<oracle::Node, oracle::Node>> arcs;
  for (auto [a, b] : teg.arcs()) {
    CHECK(teg.layer_of(b) == teg.layer_of(a) + 1);
    arcs.insert({as_tuple(teg, a), as_tuple(teg, b)});
  }
  CHECK(arcs == ref.arcs);
}

}  // namespace

TEST_CASE("claw expansion sizes") {
  auto swap = build_expansion(claw(), 3, ExpansionMode::Swap);
  CHECK(swap.node_count() == 16);
  CHECK(swap.arc_count() == 30);
  auto free = build_expansion(claw(), 3, ExpansionMode::SwapFree);
  CHECK(free.node_count() == 37);
  CHECK(free.arc_count() == 60);
  check_against_definition(claw(), 3, ExpansionMode::Swap);
  check_against_definition(claw(), 3, ExpansionMode::SwapFree);
}

TEST_CASE("zero turns is a single layer") {
  auto teg = build_expansion(path_graph(5), 0, ExpansionMode::Swap);
  CHECK(teg.node_count() == 5);
  CHECK(teg.arc_count() == 0);
  auto free = build_expansion(path_graph(5), 0, ExpansionMode::SwapFree);
  CHECK(free.node_count() == 5);
  CHECK(free.arc_count() == 0);
}

TEST_CASE("node ids") {
  Graph g = claw();
  auto teg = build_expansion(g, 2, ExpansionMode::SwapFree);
  CHECK(teg.vertex_copy(2, 3) == 3 * 4 + 2);
  CHECK(teg.edge_copy(0, 1) == 5 * 4);
  CHECK(teg.edge_copy(2, 3) == 5 * 4 + 3 + 2);
  auto info = teg.info(teg.edge_copy(1, 3));
  CHECK(info.is_edge);
  CHECK(info.element == 1);
  CHECK(info.layer == 3);
}

TEST_CASE("expansion matches the definition on random graphs") {
  Rng rng(3);
  for (int round = 0; round < 40; ++round) {
    Graph g = random_graph(rng, rng.between(1, 9), rng.between(10, 70));
    const int l = rng.between(0, 4);
    check_against_definition(g, l, ExpansionMode::Swap);
    check_against_definition(g, l, ExpansionMode::SwapFree);
  }
}

TEST_CASE("terminal pairs") {
  auto inst = make_instance(path_graph(3), {0}, {2}, 2, kSwaps);
  auto pairs = terminal_pairs(inst);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<NodeId, NodeId>{0, 2 * 3 + 2});
  auto two = make_instance(path_graph(3), {0, 1}, {1, 2}, 3, kNoSwaps);
  auto teg = build_expansion(two.graph, 3, ExpansionMode::SwapFree);
  for (auto [s, t] : terminal_pairs(two, teg)) {
    CHECK(teg.layer_of(s) == 0);
    CHECK(teg.layer_of(t) == 6);
  }
  auto none = make_instance(path_graph(3), {}, {}, 3, kNoSwaps);
  CHECK(terminal_pairs(none).empty());
}

TEST_CASE("paths to schedule") {
  auto teg = build_expansion(claw(), 2, ExpansionMode::Swap);
  Schedule s = paths_to_schedule(teg, {{teg.vertex_copy(0, 0), teg.vertex_copy(1, 1), teg.vertex_copy(2, 2)}});
  CHECK(s.steps == std::vector<PositionMap>{{1}, {2}});

  auto k2 = build_expansion(path_graph(2), 1, ExpansionMode::Swap);
  Schedule x = paths_to_schedule(k2, {{0, 3}, {1, 2}});
  auto exchange = make_instance(path_graph(2), {0, 1}, {1, 0}, 1, kSwaps);
  CHECK(verify_schedule(exchange, x));

  // Both agents would need the single edge node of the first step.
  auto k2f = build_expansion(path_graph(2), 1, ExpansionMode::SwapFree);
  const NodeId e = k2f.edge_copy(0, 1);
  CHECK_THROWS_AS(paths_to_schedule(k2f, {{0, e, 5}, {1, e, 4}}), PathError);
  // Not an arc.
  CHECK_THROWS_AS(paths_to_schedule(teg, {{teg.vertex_copy(0, 0), teg.vertex_copy(2, 1), teg.vertex_copy(2, 2)}}),
                  PathError);
}

TEST_CASE("schedule to paths in swap-free mode") {
  auto rot = make_instance(path_graph(3), {0, 1}, {1, 2}, 1, kNoSwaps);
  auto teg = build_expansion(rot.graph, 1, ExpansionMode::SwapFree);
  auto paths = schedule_to_paths(rot, Schedule{{{1, 2}}}, teg);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0][1] == teg.edge_copy(0, 1));
  CHECK(paths[1][1] == teg.edge_copy(1, 1));

  auto wait = make_instance(path_graph(3), {1}, {1}, 1, kNoSwaps);
  auto wp = schedule_to_paths(wait, Schedule{{{1}}}, teg);
  CHECK(wp[0] == NodePath{teg.vertex_copy(1, 0), teg.vertex_copy(1, 1), teg.vertex_copy(1, 2)});

  auto bad = make_instance(path_graph(3), {0}, {2}, 1, kNoSwaps);
  CHECK_THROWS_AS(schedule_to_paths(bad, Schedule{{{2}}}), std::invalid_argument);
}

TEST_CASE("round trip on oracle schedules") {
  Rng rng(17);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    Instance inst = random_small_instance(rng);
    auto sol = oracle::solve(inst).schedule;
    if (!sol) continue;
    Schedule s{*sol};
    auto paths = schedule_to_paths(inst, s);
    const int want = inst.swap_policy == kSwaps ? inst.makespan : 2 * inst.makespan;
    std::set<NodeId> used;
    for (const auto& p : paths) {
      CHECK(static_cast<int>(p.size()) == want + 1);
      for (NodeId x : p) CHECK(used.insert(x).second);
    }
    auto teg = build_expansion(inst.graph, inst.makespan, mode_for(inst.swap_policy));
    CHECK(paths_to_schedule(teg, paths) == s);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("expansion dump") {
  std::ostringstream out;
  write_expansion(out, build_expansion(path_graph(2), 1, ExpansionMode::Swap));
  CHECK(out.str().rfind("teg swap 2\n", 0) == 0);
  int arcs = 0;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) arcs += line.rfind("arc ", 0) == 0;
  CHECK(arcs == 4);
}
