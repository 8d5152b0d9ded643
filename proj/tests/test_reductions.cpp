#include <doctest.h>

#include <set>
#include <sstream>

#include "helpers.hpp"
#include "mapf/io.hpp"
#include "mapf/reductions.hpp"
#include "mapf/solvers.hpp"
#include "oracles.hpp"

using namespace mapf;
using namespace testing_helpers;

namespace {

CnfFormula formula(int vars, std::vector<std::array<int, 3>> clauses) { return CnfFormula{vars, std::move(clauses)}; }

Outcome solve(const Instance& inst) {
  auto r = solve_time_expanded(inst);
  if (r.schedule) CHECK(verify_schedule(inst, *r.schedule));
  return r.outcome;
}

void check_gadget_map(const GeneratedInstance& gen) {
  CHECK(validate_instance(gen.instance).empty());
  std::vector<std::pair<int, int>> ranges;
  for (const auto& g : gen.gadget_map) {
    CHECK(g.first <= g.end);
    CHECK(g.end <= gen.instance.graph.vertex_count());
    ranges.push_back({g.first, g.end});
  }
  std::sort(ranges.begin(), ranges.end());
  for (std::size_t i = 1; i < ranges.size(); ++i) CHECK(ranges[i - 1].second <= ranges[i].first);
}

std::set<int> mentioned_vars(const CnfFormula& phi) {
  std::set<int> vars;
  for (const auto& c : phi.clauses)
    for (int lit : c) vars.insert(std::abs(lit));
  return vars;
}

int clause_occurrences(const CnfFormula& phi) {
  int total = 0;
  for (int x : mentioned_vars(phi)) {
    for (const auto& c : phi.clauses) total += std::any_of(c.begin(), c.end(), [&](int l) { return std::abs(l) == x; });
  }
  return total;
}

}  // namespace

TEST_CASE("dimacs round trip and errors") {
  std::istringstream in("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 2 0\n");
  CnfFormula phi = parse_dimacs(in);
  CHECK(phi.num_vars == 3);
  REQUIRE(phi.clauses.size() == 2);
  CHECK(phi.clauses[1] == std::array<int, 3>{-1, 2, 2});
  std::istringstream again(write_dimacs(phi));
  CnfFormula back = parse_dimacs(again);
  CHECK(back.clauses == phi.clauses);
  std::istringstream two_lits("p cnf 2 1\n1 2 0\n");
  CHECK_THROWS_AS(parse_dimacs(two_lits), ParseError);
  std::istringstream range("p cnf 2 1\n1 2 3 0\n");
  CHECK_THROWS_AS(parse_dimacs(range), ParseError);
  std::istringstream count("p cnf 2 2\n1 2 2 0\n");
  CHECK_THROWS_AS(parse_dimacs(count), ParseError);
}

TEST_CASE("random formulas mention every variable") {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    CnfFormula phi = random_formula(rng, 5, 4);
    CHECK(mentioned_vars(phi).size() == 5);
    CHECK_NOTHROW(check_formula(phi));
  }
}

TEST_CASE("sat oracle agrees with brute force") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    CnfFormula phi = random_formula(rng, rng.between(1, 6), rng.between(2, 12));
    CHECK(sat_brute_force(phi) == oracle::satisfiable(phi.num_vars, phi.clauses));
  }
  CHECK_FALSE(sat_brute_force(formula(21, {{1, 2, 3}})).has_value());
}

TEST_CASE("3sat with swaps") {
  auto sat = from_3sat_swaps(formula(3, {{1, 2, 3}}));
  CHECK(sat.expected == Expected::Yes);
  CHECK(sat.instance.makespan == 3);
  CHECK(sat.instance.swap_policy == kSwaps);
  CHECK(sat.instance.agent_count() == 4 + 3);
  check_gadget_map(sat);
  CHECK(solve(sat.instance) == Outcome::Feasible);
  CHECK(solve_joint_bfs(sat.instance).outcome == Outcome::Feasible);

  auto phi = formula(1, {{1, 1, 1}, {-1, -1, -1}});
  auto unsat = from_3sat_swaps(phi);
  CHECK(unsat.expected == Expected::No);
  CHECK(unsat.instance.agent_count() == 4 * 2 + clause_occurrences(phi));
  CHECK(solve(unsat.instance) == Outcome::Infeasible);
  CHECK(solve_joint_bfs(unsat.instance).outcome == Outcome::Infeasible);
}

TEST_CASE("3sat without swaps") {
  auto sat = from_3sat_noswaps(formula(3, {{1, 2, 3}}));
  CHECK(sat.expected == Expected::Yes);
  CHECK(sat.instance.makespan == 2);
  CHECK(sat.instance.swap_policy == kNoSwaps);
  CHECK(sat.instance.agent_count() == 4 + 4 * 3);
  check_gadget_map(sat);
  CHECK(solve(sat.instance) == Outcome::Feasible);

  auto phi = formula(1, {{1, 1, 1}, {-1, -1, -1}});
  auto unsat = from_3sat_noswaps(phi);
  CHECK(unsat.expected == Expected::No);
  CHECK(unsat.instance.agent_count() == 4 * 2 + 4 * clause_occurrences(phi));
  CHECK(solve(unsat.instance) == Outcome::Infeasible);
}

TEST_CASE("3sat generators reject malformed formulas") {
  CHECK_THROWS_AS(from_3sat_swaps(formula(2, {{1, 1, 1}})), std::invalid_argument);  // x2 unused
  CHECK_THROWS_AS(from_3sat_noswaps(formula(1, {{1, 2, 1}})), std::invalid_argument);
}

TEST_CASE("3sat generators are sound on small formulas") {
  Rng rng(3);
  for (int i = 0; i < 25; ++i) {
    CnfFormula phi = random_formula(rng, rng.between(1, 3), rng.between(1, 4));
    const bool sat = oracle::satisfiable(phi.num_vars, phi.clauses);
    auto a = from_3sat_swaps(phi);
    auto b = from_3sat_noswaps(phi);
    CHECK(a.expected == (sat ? Expected::Yes : Expected::No));
    CHECK((solve(a.instance) == Outcome::Feasible) == sat);
    CHECK((solve(b.instance) == Outcome::Feasible) == sat);
  }
}

TEST_CASE("generators are deterministic") {
  auto phi = formula(3, {{1, -2, 3}, {-1, 2, -3}});
  CHECK(instance_to_string(from_3sat_swaps(phi).instance) == instance_to_string(from_3sat_swaps(phi).instance));
  CHECK(metadata_text(from_3sat_noswaps(phi)) == metadata_text(from_3sat_noswaps(phi)));
}

TEST_CASE("disjoint paths layering on the figure DAG") {
  DagPaths dag{7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 4}, {3, 6}}, {{0, 4}, {1, 6}}};
  CHECK(oracle::dag_paths(7, dag.arcs, dag.pairs, true));
  CHECK(dag_disjoint_paths(dag, true));
  auto gen = from_disjoint_shortest_paths(dag);
  CHECK(gen.expected == Expected::Yes);
  CHECK(gen.instance.swap_policy == kSwaps);
  CHECK(gen.instance.graph.max_degree() <= 3);
  check_gadget_map(gen);
  CHECK(solve(gen.instance) == Outcome::Feasible);
}

TEST_CASE("disjoint paths layering on a shared vertex") {
  DagPaths dag{4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {1, 3}}};
  CHECK_FALSE(oracle::dag_paths(4, dag.arcs, dag.pairs, false));
  auto gen = from_disjoint_shortest_paths(dag);
  CHECK(gen.expected == Expected::No);
  CHECK(solve(gen.instance) == Outcome::Infeasible);
}

TEST_CASE("disjoint paths layering encodes paths of any length") {
  // 0->3 has the shortest route 0->1->3; only the longer 0->2->4->3 avoids 1.
  DagPaths dag{6, {{0, 1}, {1, 3}, {0, 2}, {2, 4}, {4, 3}, {5, 1}}, {{0, 3}, {5, 1}}};
  CHECK_FALSE(oracle::dag_paths(6, dag.arcs, dag.pairs, true));
  CHECK(oracle::dag_paths(6, dag.arcs, dag.pairs, false));
  auto gen = from_disjoint_shortest_paths(dag);
  CHECK(gen.expected == Expected::Yes);
  CHECK(solve(gen.instance) == Outcome::Feasible);
  bool labelled = false;
  for (const auto& [key, value] : gen.extra) labelled = labelled || (key == "disjoint_shortest_paths" && value == "no");
  CHECK(labelled);
}

TEST_CASE("disjoint paths layering rejects bad input") {
  CHECK_THROWS_AS(from_disjoint_shortest_paths(DagPaths{3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(from_disjoint_shortest_paths(DagPaths{3, {{0, 1}}, {{0, 1}, {0, 2}}}), std::invalid_argument);
  CHECK_THROWS_AS(from_disjoint_shortest_paths(DagPaths{3, {{0, 3}}, {{0, 1}}}), std::invalid_argument);
}

TEST_CASE("disjoint paths layering keeps degree three on random DAGs") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    const int n = rng.between(2, 9);
    DagPaths dag{n, {}, {}};
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(35, 100)) dag.arcs.push_back({u, v});
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    rng.shuffle(verts);
    const int k = rng.between(1, n / 2);
    for (int p = 0; p < k; ++p) dag.pairs.push_back({std::min(verts[2 * p], verts[2 * p + 1]), std::max(verts[2 * p], verts[2 * p + 1])});
    auto gen = from_disjoint_shortest_paths(dag);
    CHECK(gen.instance.graph.max_degree() <= 3);
    check_gadget_map(gen);
    CHECK(gen.expected == (oracle::dag_paths(n, dag.arcs, dag.pairs, false) ? Expected::Yes : Expected::No));
  }
}

TEST_CASE("token swapping on P2") {
  Graph p2 = path_graph(2);
  CHECK(oracle::token_swap_within(2, edge_pairs(p2), {1, 0}, 1));
  auto gen = from_token_swapping_tree(p2, {1, 0}, 1);
  CHECK(gen.expected == Expected::Yes);
  CHECK(gen.instance.swap_policy == kNoSwaps);
  CHECK(gen.instance.graph.max_degree() <= 5);
  check_gadget_map(gen);
  CHECK(solve(gen.instance) == Outcome::Feasible);
}

TEST_CASE("token swapping segment one short of the default is too short") {
  auto gen = from_token_swapping_tree(path_graph(2), {1, 0}, 1, 6);
  CHECK(gen.instance.makespan == 6);
  CHECK(solve(gen.instance) == Outcome::Infeasible);
  CHECK(from_token_swapping_tree(path_graph(2), {1, 0}, 1).instance.makespan == 7);
}

TEST_CASE("token swapping siblings cannot trade in one round") {
  // 2 and 3 are both children of 1; trading them needs three rounds
  Graph star = make_graph(4, {{0, 1}, {1, 2}, {1, 3}});
  CHECK_FALSE(oracle::token_swap_within(4, edge_pairs(star), {1, 0, 3, 2}, 1));
  auto gen = from_token_swapping_tree(star, {1, 0, 3, 2}, 1);
  CHECK(gen.expected == Expected::No);
  CHECK(gen.instance.graph.max_degree() <= 5);
  CHECK(solve(gen.instance) == Outcome::Infeasible);
}

TEST_CASE("token swapping identity on P3") {
  auto gen = from_token_swapping_tree(path_graph(3), {0, 1, 2}, 1);
  CHECK(gen.expected == Expected::Yes);
  CHECK(solve(gen.instance) == Outcome::Feasible);
}

TEST_CASE("token swapping no-instance") {
  // reversing P3 needs three rounds
  CHECK_FALSE(oracle::token_swap_within(3, edge_pairs(path_graph(3)), {2, 1, 0}, 2));
  auto gen = from_token_swapping_tree(path_graph(3), {2, 1, 0}, 2);
  CHECK(gen.expected == Expected::No);
  CHECK(solve(gen.instance) == Outcome::Infeasible);
}

TEST_CASE("token swapping degree bound and input checks") {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(1, 12);
    Graph tree = random_tree(rng, n);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    auto gen = from_token_swapping_tree(tree, perm, rng.between(1, 2));
    CHECK(gen.instance.graph.max_degree() <= 5);
    CHECK(is_tree(gen.instance.graph));
  }
  CHECK_THROWS_AS(from_token_swapping_tree(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}), {0, 1, 2}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_token_swapping_tree(path_graph(3), {0, 0, 2}, 1), std::invalid_argument);
}

TEST_CASE("token swapping oracle agrees with brute force") {
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    const int n = rng.between(1, 6);
    Graph tree = random_tree(rng, n);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    auto rounds = token_swapping_rounds(tree, perm, 6);
    for (int r = 0; r <= 6; ++r)
      CHECK((rounds && *rounds <= r) == oracle::token_swap_within(n, edge_pairs(tree), perm, r));
  }
}

TEST_CASE("beup figure instance") {
  // s=0 x=1 y=2 z=3 t=4
  Graph g = make_graph(5, {{0, 2}, {0, 1}, {1, 2}, {2, 4}, {2, 3}, {3, 4}});
  CHECK(oracle::bounded_edge_disjoint(5, edge_pairs(g), 0, 4, 2, 3));
  auto gen = from_beup(g, 0, 4, 2, 3);
  CHECK(gen.expected == Expected::Yes);
  CHECK(gen.instance.makespan == 6);
  CHECK(gen.instance.graph.vertex_count() == 2 * 5 + (4 * 3 - 3) * 6);
  CHECK(gen.instance.agent_count() == 2 + 6 * (2 * 3 - 2));
  check_gadget_map(gen);
  CHECK(solve(gen.instance) == Outcome::Feasible);
}

TEST_CASE("beup single edge") {
  Graph g = path_graph(2);
  CHECK_FALSE(oracle::bounded_edge_disjoint(2, edge_pairs(g), 0, 1, 2, 3));
  auto gen = from_beup(g, 0, 1, 2, 3);
  CHECK(gen.expected == Expected::No);
  CHECK(solve(gen.instance) == Outcome::Infeasible);
  CHECK_THROWS_AS(from_beup(g, 0, 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(from_beup(g, 0, 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(from_beup(g, 0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("beup oracle agrees with brute force") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(2, 6);
    Graph g = random_graph(rng, n, 50);
    if (g.edge_count() > 8) continue;
    const int k = rng.between(1, 3), d = rng.between(2, 4);
    CHECK(beup_brute_force(g, 0, n - 1, k, d) == oracle::bounded_edge_disjoint(n, edge_pairs(g), 0, n - 1, k, d));
  }
}

TEST_CASE("dag oracle agrees with brute force") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.between(2, 8);
    DagPaths dag{n, {}, {{0, n - 1}}};
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.chance(40, 100)) dag.arcs.push_back({u, v});
    if (n >= 4) dag.pairs.push_back({1, n - 2});
    for (bool shortest : {false, true})
      CHECK(dag_disjoint_paths(dag, shortest) == oracle::dag_paths(n, dag.arcs, dag.pairs, shortest));
  }
}

TEST_CASE("metadata and source files") {
  auto gen = from_beup(path_graph(2), 0, 1, 1, 2);
  const std::string meta = metadata_text(gen);
  CHECK(meta.rfind("source=", 0) == 0);
  CHECK(meta.find("expected=yes\n") != std::string::npos);
  CHECK(meta.find("gadget twins=0..2\n") != std::string::npos);

  std::istringstream dag("dag 3\narcs 2\n0 1\n1 2\npairs 1\n0 2\n");
  DagPaths d = parse_dag_source(dag);
  CHECK(d.arcs.size() == 2);
  CHECK(d.pairs == std::vector<std::pair<int, int>>{{0, 2}});

  std::istringstream tok("tree 3\nedges 2\n0 1\n1 2\nperm 2 1 0\nmakespan 3\n");
  TokenSwapSource t = parse_tokenswap_source(tok);
  CHECK(t.perm == std::vector<VertexId>{2, 1, 0});
  CHECK(t.rounds == 3);

  std::istringstream beup("graph 2\nedges 1\n0 1\ns 0\nt 1\nk 1\nd 2\n");
  BeupSource b = parse_beup_source(beup);
  CHECK(b.graph.edge_count() == 1);
  CHECK(b.d == 2);

  std::istringstream broken("tree 3\nedges 2\n0 1\n1 2\nperm 2 1\nmakespan 3\n");
  CHECK_THROWS_AS(parse_tokenswap_source(broken), ParseError);
}
