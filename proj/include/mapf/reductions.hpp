#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapf/instance.hpp"
#include "mapf/random_instances.hpp"

namespace mapf {

/// Literals are +v / -v for variable v in 1..num_vars.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// DIMACS "p cnf" input restricted to three literals per clause.
CnfFormula parse_dimacs(std::istream& in);
std::string write_dimacs(const CnfFormula& phi);
/// Throws std::invalid_argument unless every clause has literals within range.
void check_formula(const CnfFormula& phi);
/// Random 3CNF in which every variable occurs (needs 3*clauses >= vars).
CnfFormula random_formula(Rng& rng, int num_vars, int num_clauses);

enum class Expected { Yes, No, Unknown };
const char* expected_name(Expected e);

/// Half-open vertex id range [first, end) owned by one gadget.
struct GadgetRange {
  std::string name;
  VertexId first = 0;
  VertexId end = 0;
};

struct GeneratedInstance {
  Instance instance;
  std::string source;
  std::vector<GadgetRange> gadget_map;
  Expected expected = Expected::Unknown;
  /// Further key=value facts (construction parameters, secondary labels).
  std::vector<std::pair<std::string, std::string>> extra;
};

/// key=value sidecar text.
std::string metadata_text(const GeneratedInstance& gen);

/// Makespan 3, swaps allowed. Throws std::invalid_argument on malformed input.
GeneratedInstance from_3sat_swaps(const CnfFormula& phi);
/// Makespan 2, swaps forbidden.
GeneratedInstance from_3sat_noswaps(const CnfFormula& phi);

struct DagPaths {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::pair<int, int>> pairs;
};

/// Layered degree-3 graph whose agents all need the same number of turns.
GeneratedInstance from_disjoint_shortest_paths(const DagPaths& input);

/// Degree-5 tree instance without swaps from a token-swapping instance on a tree.
/// `segment` overrides the per-round turn count (default 2h + 3).
GeneratedInstance from_token_swapping_tree(const Graph& tree, const std::vector<VertexId>& perm, int rounds,
                                           std::optional<int> segment = std::nullopt);

GeneratedInstance from_beup(const Graph& g, VertexId s, VertexId t, int k, int d);

// Independent label oracles.

/// nullopt when num_vars > max_vars.
std::optional<bool> sat_brute_force(const CnfFormula& phi, int max_vars = 20);
/// Vertex-disjoint directed paths for all pairs; `shortest` restricts each to a shortest path.
bool dag_disjoint_paths(const DagPaths& input, bool shortest);
/// k edge-disjoint s-t paths with at most d edges each.
bool beup_brute_force(const Graph& g, VertexId s, VertexId t, int k, int d);
/// Parallel token swapping: fewest rounds of disjoint edge swaps sorting perm, if <= limit.
std::optional<int> token_swapping_rounds(const Graph& tree, const std::vector<VertexId>& perm, int limit);

// Source description files used by the command-line generator.

/// "dag <n>", "arcs <m>" + m lines, "pairs <k>" + k lines.
DagPaths parse_dag_source(std::istream& in);
/// "tree <n>", "edges <m>" + lines, "perm p0 .. pn-1", "makespan <l'>".
struct TokenSwapSource {
  Graph tree;
  std::vector<VertexId> perm;
  int rounds = 1;
};
TokenSwapSource parse_tokenswap_source(std::istream& in);
/// "graph <n>", "edges <m>" + lines, "s <v>", "t <v>", "k <n>", "d <n>".
struct BeupSource {
  Graph graph;
  VertexId s = 0, t = 0;
  int k = 1, d = 2;
};
BeupSource parse_beup_source(std::istream& in);

}  // namespace mapf
