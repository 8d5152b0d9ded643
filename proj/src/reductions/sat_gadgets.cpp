#include <cstdlib>
#include <map>
#include <stdexcept>

#include "mapf/reductions.hpp"

namespace mapf {

namespace {

/// Occurrence index (0-based) of each literal slot in its variable's gadget, and
/// the number of clauses containing each variable. Repeated literals of one
/// variable inside a clause share that clause's occurrence.
struct Occurrences {
  std::vector<int> count;                      // per variable (1-based)
  std::vector<std::array<int, 3>> slot_index;  // per clause, per literal slot
};

Occurrences number_occurrences(const CnfFormula& phi) {
  check_formula(phi);
  Occurrences occ;
  occ.count.assign(phi.num_vars + 1, 0);
  for (const auto& clause : phi.clauses) {
    std::array<int, 3> idx{};
    std::map<int, int> seen;
    for (int j = 0; j < 3; ++j) {
      const int x = std::abs(clause[j]);
      auto it = seen.find(x);
      if (it == seen.end()) it = seen.emplace(x, occ.count[x]++).first;
      idx[j] = it->second;
    }
    occ.slot_index.push_back(idx);
  }
  for (int x = 1; x <= phi.num_vars; ++x) {
    if (occ.count[x] == 0) throw std::invalid_argument("variable " + std::to_string(x) + " occurs in no clause");
  }
  return occ;
}

std::string formula_source(const CnfFormula& phi) {
  std::string s = "cnf vars=" + std::to_string(phi.num_vars) + " clauses=";
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    s += c ? ";" : "";
    s += std::to_string(phi.clauses[c][0]) + "," + std::to_string(phi.clauses[c][1]) + "," +
         std::to_string(phi.clauses[c][2]);
  }
  return s;
}

Expected label(const CnfFormula& phi) {
  const auto sat = sat_brute_force(phi);
  if (!sat) return Expected::Unknown;
  return *sat ? Expected::Yes : Expected::No;
}

void add_agent(Instance& inst, VertexId s, VertexId t) {
  inst.start.push_back(s);
  inst.target.push_back(t);
}

}  // namespace

GeneratedInstance from_3sat_swaps(const CnfFormula& phi) {
  const Occurrences occ = number_occurrences(phi);
  GraphBuilder b;
  GeneratedInstance gen;

  // Variable gadgets: m linked 6-cycles, v_{i,6} identified with v_{i-1,4} (cyclically).
  // var_v[x][i][p] = id of v^x_{i+1,p} for p in 1..6.
  std::vector<std::vector<std::array<VertexId, 7>>> var_v(phi.num_vars + 1);
  for (int x = 1; x <= phi.num_vars; ++x) {
    const int m = occ.count[x];
    const VertexId first = b.vertex_count();
    var_v[x].resize(m);
    for (int i = 0; i < m; ++i) {
      for (int p = 1; p <= 5; ++p) var_v[x][i][p] = b.add_vertex();
    }
    for (int i = 0; i < m; ++i) var_v[x][i][6] = var_v[x][(i + m - 1) % m][4];
    for (int i = 0; i < m; ++i) {
      const auto& v = var_v[x][i];
      for (int p = 1; p <= 6; ++p) {
        const VertexId a = v[p], c = v[p % 6 + 1];
        if (a != c) b.add_edge(a, c);
      }
    }
    gen.gadget_map.push_back({"var" + std::to_string(x), first, b.vertex_count()});
  }

  // Clause gadgets: three 5-vertex arms v_{j,1..5} around hub vertices v_{j,2} plus v_t.
  std::vector<std::array<std::array<VertexId, 6>, 3>> cl_v(phi.clauses.size());
  std::vector<VertexId> cl_t(phi.clauses.size());
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const VertexId first = b.vertex_count();
    auto& v = cl_v[c];
    for (int j = 0; j < 3; ++j) {
      for (int p = 1; p <= 5; ++p) v[j][p] = b.add_vertex();
    }
    cl_t[c] = b.add_vertex();
    for (int j = 0; j < 3; ++j) {
      for (int p = 1; p < 5; ++p) b.add_edge(v[j][p], v[j][p + 1]);
    }
    b.add_edge(v[0][2], v[1][2]);
    b.add_edge(v[0][2], v[2][2]);
    b.add_edge(v[1][2], cl_t[c]);
    b.add_edge(v[2][2], cl_t[c]);
    gen.gadget_map.push_back({"clause" + std::to_string(c + 1), first, b.vertex_count()});
  }

  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (int j = 0; j < 3; ++j) {
      const int lit = phi.clauses[c][j];
      const auto& v = var_v[std::abs(lit)][occ.slot_index[c][j]];
      const VertexId hook = lit > 0 ? v[1] : v[3];
      b.add_edge(hook, cl_v[c][j][1]);
      b.add_edge(hook, cl_v[c][j][5]);
    }
  }

  Instance& inst = gen.instance;
  inst.graph = b.build();
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (int j = 0; j < 3; ++j) add_agent(inst, cl_v[c][j][1], cl_v[c][j][4]);
    add_agent(inst, cl_v[c][0][2], cl_t[c]);
  }
  for (int x = 1; x <= phi.num_vars; ++x) {
    for (const auto& v : var_v[x]) add_agent(inst, v[2], v[5]);
  }
  inst.makespan = 3;
  inst.swap_policy = SwapPolicy::SwapsAllowed;
  gen.source = formula_source(phi);
  gen.expected = label(phi);
  return gen;
}

GeneratedInstance from_3sat_noswaps(const CnfFormula& phi) {
  const Occurrences occ = number_occurrences(phi);
  GraphBuilder b;
  GeneratedInstance gen;

  // Per occurrence i: pentagons v_{i,1..5} and u_{i,1..5} joined through w_i,
  // with v_{i,5} identified with u_{k,5} for k = 1 + (i mod m).
  struct Twin {
    std::array<VertexId, 6> v{}, u{};
    VertexId w = -1;
  };
  std::vector<std::vector<Twin>> var_g(phi.num_vars + 1);
  for (int x = 1; x <= phi.num_vars; ++x) {
    const int m = occ.count[x];
    const VertexId first = b.vertex_count();
    auto& gadget = var_g[x];
    gadget.resize(m);
    for (auto& tw : gadget) {
      for (int p = 1; p <= 5; ++p) tw.v[p] = b.add_vertex();
      for (int p = 1; p <= 4; ++p) tw.u[p] = b.add_vertex();
      tw.w = b.add_vertex();
    }
    for (int i = 0; i < m; ++i) gadget[(i + 1) % m].u[5] = gadget[i].v[5];
    for (const auto& tw : gadget) {
      for (const auto* ring : {&tw.v, &tw.u}) {
        const auto& r = *ring;
        b.add_edge(r[1], r[2]);
        b.add_edge(r[2], r[3]);
        b.add_edge(r[3], r[4]);
        b.add_edge(r[4], r[5]);
        b.add_edge(r[5], r[2]);
        b.add_edge(tw.w, r[1]);
        b.add_edge(tw.w, r[3]);
      }
    }
    gen.gadget_map.push_back({"var" + std::to_string(x), first, b.vertex_count()});
  }

  // Clause gadgets: three 3-vertex arms v_{j,1..3} whose middles form a triangle.
  std::vector<std::array<std::array<VertexId, 4>, 3>> cl_v(phi.clauses.size());
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const VertexId first = b.vertex_count();
    auto& v = cl_v[c];
    for (int j = 0; j < 3; ++j) {
      for (int p = 1; p <= 3; ++p) v[j][p] = b.add_vertex();
      b.add_edge(v[j][1], v[j][2]);
      b.add_edge(v[j][2], v[j][3]);
    }
    b.add_edge(v[0][2], v[1][2]);
    b.add_edge(v[1][2], v[2][2]);
    b.add_edge(v[0][2], v[2][2]);
    gen.gadget_map.push_back({"clause" + std::to_string(c + 1), first, b.vertex_count()});
  }

  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (int j = 0; j < 3; ++j) {
      const int lit = phi.clauses[c][j];
      const Twin& tw = var_g[std::abs(lit)][occ.slot_index[c][j]];
      const VertexId hook = lit > 0 ? tw.u[2] : tw.v[2];
      b.add_edge(hook, cl_v[c][j][1]);
      b.add_edge(hook, cl_v[c][j][3]);
    }
  }

  Instance& inst = gen.instance;
  inst.graph = b.build();
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    for (int j = 0; j < 3; ++j) add_agent(inst, cl_v[c][j][1], cl_v[c][j][3]);
    add_agent(inst, cl_v[c][0][2], cl_v[c][1][2]);
  }
  for (int x = 1; x <= phi.num_vars; ++x) {
    for (const Twin& tw : var_g[x]) {
      add_agent(inst, tw.v[1], tw.v[3]);
      add_agent(inst, tw.u[1], tw.u[3]);
      add_agent(inst, tw.v[4], tw.v[2]);
      add_agent(inst, tw.u[4], tw.u[2]);
    }
  }
  inst.makespan = 2;
  inst.swap_policy = SwapPolicy::SwapsForbidden;
  gen.source = formula_source(phi);
  gen.expected = label(phi);
  return gen;
}

}  // namespace mapf
