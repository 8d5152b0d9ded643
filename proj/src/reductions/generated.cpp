#include <sstream>
#include <stdexcept>

#include "../line_reader.hpp"
#include "mapf/io.hpp"
#include "mapf/reductions.hpp"

namespace mapf {

using detail::LineReader;

std::string metadata_text(const GeneratedInstance& gen) {
  std::ostringstream out;
  out << "source=" << gen.source << "\n";
  out << "expected=" << expected_name(gen.expected) << "\n";
  for (const auto& g : gen.gadget_map) out << "gadget " << g.name << "=" << g.first << ".." << g.end << "\n";
  for (const auto& [key, value] : gen.extra) out << key << "=" << value << "\n";
  return out.str();
}

namespace {

Graph read_graph(LineReader& reader, const char* head) {
  const int n = reader.keyed(head);
  const int m = reader.keyed("edges");
  const int line = reader.line();
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    auto [u, v] = reader.pair("edge");
    edges.push_back({u, v});
  }
  try {
    return Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

void expect_end(LineReader& reader) {
  if (!reader.at_end()) throw ParseError(reader.line(), "trailing content");
}

}  // namespace

DagPaths parse_dag_source(std::istream& in) {
  LineReader reader(in);
  DagPaths dag;
  dag.vertex_count = reader.keyed("dag");
  const int m = reader.keyed("arcs");
  for (int i = 0; i < m; ++i) dag.arcs.push_back(reader.pair("arc"));
  const int k = reader.keyed("pairs");
  for (int i = 0; i < k; ++i) dag.pairs.push_back(reader.pair("pair"));
  for (auto [u, v] : dag.arcs) {
    if (u < 0 || v < 0 || u >= dag.vertex_count || v >= dag.vertex_count) {
      throw ParseError(reader.line(), "arc endpoint out of range");
    }
  }
  expect_end(reader);
  return dag;
}

TokenSwapSource parse_tokenswap_source(std::istream& in) {
  LineReader reader(in);
  TokenSwapSource src;
  src.tree = read_graph(reader, "tree");
  auto perm = reader.next("perm");
  if (perm.empty() || perm[0] != "perm" || static_cast<int>(perm.size()) != src.tree.vertex_count() + 1) {
    throw ParseError(reader.line(), "expected 'perm' followed by one entry per vertex");
  }
  for (std::size_t i = 1; i < perm.size(); ++i) src.perm.push_back(static_cast<VertexId>(reader.number(perm[i])));
  src.rounds = reader.keyed("makespan");
  expect_end(reader);
  return src;
}

BeupSource parse_beup_source(std::istream& in) {
  LineReader reader(in);
  BeupSource src;
  src.graph = read_graph(reader, "graph");
  src.s = reader.keyed("s");
  src.t = reader.keyed("t");
  src.k = reader.keyed("k");
  src.d = reader.keyed("d");
  expect_end(reader);
  return src;
}

}  // namespace mapf
