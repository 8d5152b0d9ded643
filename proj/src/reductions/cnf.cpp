#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "mapf/io.hpp"
#include "mapf/reductions.hpp"

namespace mapf {

const char* expected_name(Expected e) {
  switch (e) {
    case Expected::Yes: return "yes";
    case Expected::No: return "no";
    case Expected::Unknown: return "unknown";
  }
  return "unknown";
}

void check_formula(const CnfFormula& phi) {
  if (phi.num_vars < 0) throw std::invalid_argument("negative variable count");
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (int lit : phi.clauses[c]) {
      if (lit == 0 || std::abs(lit) > phi.num_vars) {
        throw std::invalid_argument("clause " + std::to_string(c) + " has literal " + std::to_string(lit) +
                                    " outside 1.." + std::to_string(phi.num_vars));
      }
    }
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula phi;
  std::string line;
  int line_no = 0;
  bool header = false;
  int declared = 0;
  std::vector<int> pending;
  int pending_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (header || !(ss >> kind >> phi.num_vars >> declared) || kind != "cnf" || phi.num_vars < 0 || declared < 0) {
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before 'p cnf' header");
    std::istringstream tokens(line);
    for (std::string tok; tokens >> tok;) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw ParseError(line_no, "bad literal '" + tok + "'");
      if (pending.empty()) pending_line = line_no;
      if (lit == 0) {
        if (pending.size() != 3) throw ParseError(pending_line, "clause must have exactly 3 literals");
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::labs(lit) > phi.num_vars) throw ParseError(line_no, "literal " + tok + " out of range");
      pending.push_back(static_cast<int>(lit));
    }
  }
  if (!header) throw ParseError(line_no + 1, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(pending_line, "unterminated clause");
  if (static_cast<int>(phi.clauses.size()) != declared) {
    throw ParseError(line_no, "header declares " + std::to_string(declared) + " clauses, found " +
                                  std::to_string(phi.clauses.size()));
  }
  return phi;
}

std::string write_dimacs(const CnfFormula& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.num_vars << " " << phi.clauses.size() << "\n";
  for (const auto& clause : phi.clauses) out << clause[0] << " " << clause[1] << " " << clause[2] << " 0\n";
  return out.str();
}

CnfFormula random_formula(Rng& rng, int num_vars, int num_clauses) {
  if (3 * num_clauses < num_vars) throw std::invalid_argument("too few clauses for every variable to occur");
  CnfFormula phi;
  phi.num_vars = num_vars;
  // Seed the literal slots with every variable once, then fill at random.
  std::vector<int> slots;
  for (int v = 1; v <= num_vars; ++v) slots.push_back(v);
  while (static_cast<int>(slots.size()) < 3 * num_clauses) slots.push_back(rng.between(1, num_vars));
  rng.shuffle(slots);
  for (int c = 0; c < num_clauses; ++c) {
    std::array<int, 3> clause{};
    for (int j = 0; j < 3; ++j) clause[j] = rng.chance(1, 2) ? slots[3 * c + j] : -slots[3 * c + j];
    phi.clauses.push_back(clause);
  }
  return phi;
}

}  // namespace mapf
