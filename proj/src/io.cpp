#include "mapf/io.hpp"
#include "line_reader.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace mapf {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

using detail::LineReader;

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  auto header = reader.next("header");
  if (header.size() != 2 || header[0] != "mapf" || header[1] != "1") {
    throw ParseError(reader.line(), "expected 'mapf 1' header");
  }
  const int n = reader.keyed("vertices");
  const int m = reader.keyed("edges");
  const int edges_line = reader.line();
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    auto [u, v] = reader.pair("edge");
    edges.push_back({u, v});
  }
  Instance inst;
  try {
    inst.graph = Graph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(edges_line, e.what());
  }
  const int k = reader.keyed("agents");
  const int agents_line = reader.line();
  for (int a = 0; a < k; ++a) {
    auto [s, t] = reader.pair("agent");
    inst.start.push_back(s);
    inst.target.push_back(t);
  }
  inst.makespan = reader.keyed("makespan");
  auto swaps = reader.next("swaps");
  if (swaps.size() != 2 || swaps[0] != "swaps" || (swaps[1] != "allowed" && swaps[1] != "forbidden")) {
    throw ParseError(reader.line(), "expected 'swaps allowed' or 'swaps forbidden'");
  }
  inst.swap_policy = swaps[1] == "allowed" ? SwapPolicy::SwapsAllowed : SwapPolicy::SwapsForbidden;
  if (!reader.at_end()) throw ParseError(reader.line(), "trailing content");
  if (auto problems = validate_instance(inst); !problems.empty()) {
    throw ParseError(agents_line, problems.front().message);
  }
  return inst;
}

Instance parse_instance_string(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "mapf 1\n";
  out << "vertices " << inst.graph.vertex_count() << "\n";
  out << "edges " << inst.graph.edge_count() << "\n";
  for (const Edge& e : inst.graph.edges()) out << e.u << " " << e.v << "\n";
  out << "agents " << inst.agent_count() << "\n";
  for (AgentId a = 0; a < inst.agent_count(); ++a) out << inst.start[a] << " " << inst.target[a] << "\n";
  out << "makespan " << inst.makespan << "\n";
  out << "swaps " << (inst.swap_policy == SwapPolicy::SwapsAllowed ? "allowed" : "forbidden") << "\n";
}

std::string instance_to_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Schedule parse_schedule(std::istream& in, int agent_count) {
  // Lines for a zero-agent schedule are blank, so read raw lines rather than tokens.
  std::string line;
  int line_no = 0;
  auto next_line = [&](bool skip_blank) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      if (!skip_blank || line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line(true)) throw ParseError(line_no + 1, "expected 'schedule <l>'");
  std::istringstream header(line);
  std::string key, rest;
  long long length = -1;
  if (!(header >> key >> length) || key != "schedule" || length < 0 || (header >> rest)) {
    throw ParseError(line_no, "expected 'schedule <l>'");
  }
  Schedule sched;
  for (long long i = 0; i < length; ++i) {
    if (!next_line(agent_count > 0)) throw ParseError(line_no + 1, "schedule truncated");
    std::istringstream ss(line);
    PositionMap step;
    for (std::string tok; ss >> tok;) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line_no, "bad integer '" + tok + "'");
      step.push_back(value);
    }
    if (static_cast<int>(step.size()) != agent_count) {
      throw ParseError(line_no, "expected " + std::to_string(agent_count) + " positions, got " +
                                    std::to_string(step.size()));
    }
    sched.steps.push_back(std::move(step));
  }
  while (next_line(true)) throw ParseError(line_no, "trailing content");
  return sched;
}

void write_schedule(std::ostream& out, const Schedule& sched) {
  out << "schedule " << sched.makespan() << "\n";
  for (const auto& step : sched.steps) {
    for (std::size_t a = 0; a < step.size(); ++a) out << (a ? " " : "") << step[a];
    out << "\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << contents;
}

}  // namespace mapf
