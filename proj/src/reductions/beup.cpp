#include <stdexcept>
#include <string>

#include "mapf/reductions.hpp"

namespace mapf {

GeneratedInstance from_beup(const Graph& g, VertexId s, VertexId t, int k, int d) {
  const int n = g.vertex_count();
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::invalid_argument("s or t out of range");
  if (s == t) throw std::invalid_argument("s and t must differ");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (d < 2) throw std::invalid_argument("d must be at least 2");

  GraphBuilder b(k * n);  // twin i of v is v*k + i
  GeneratedInstance gen;
  gen.gadget_map.push_back({"twins", 0, k * n});
  const int path_len = 4 * d - 3;
  std::vector<VertexId> path_base;  // v_e^j = base + j - 1
  for (const Edge& e : g.edges()) {
    const VertexId base = b.add_vertices(path_len);
    path_base.push_back(base);
    for (int j = 0; j + 1 < path_len; ++j) b.add_edge(base + j, base + j + 1);
    const VertexId middle = base + 2 * d - 2;
    for (int i = 0; i < k; ++i) {
      b.add_edge(e.u * k + i, middle);
      b.add_edge(e.v * k + i, middle);
    }
    gen.gadget_map.push_back({"edge" + std::to_string(e.u) + "-" + std::to_string(e.v), base, b.vertex_count()});
  }

  Instance& inst = gen.instance;
  inst.graph = b.build();
  for (int i = 0; i < k; ++i) {
    inst.start.push_back(s * k + i);
    inst.target.push_back(t * k + i);
  }
  for (VertexId base : path_base) {
    for (int i = 1; i <= 2 * d - 2; ++i) {
      inst.start.push_back(base + i - 1);
      inst.target.push_back(base + 2 * d + i - 2);
    }
  }
  inst.makespan = 2 * d;
  inst.swap_policy = SwapPolicy::SwapsAllowed;

  std::string src = "graph n=" + std::to_string(n) + " edges=";
  for (int j = 0; j < g.edge_count(); ++j) {
    src += (j ? ";" : "") + std::to_string(g.edges()[j].u) + "-" + std::to_string(g.edges()[j].v);
  }
  src += " s=" + std::to_string(s) + " t=" + std::to_string(t) + " k=" + std::to_string(k) + " d=" + std::to_string(d);
  gen.source = src;
  if (g.edge_count() <= 8) gen.expected = beup_brute_force(g, s, t, k, d) ? Expected::Yes : Expected::No;
  return gen;
}

}  // namespace mapf
