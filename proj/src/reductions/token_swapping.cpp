#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "mapf/reductions.hpp"

namespace mapf {

GeneratedInstance from_token_swapping_tree(const Graph& tree, const std::vector<VertexId>& perm, int rounds,
                                           std::optional<int> segment) {
  const int n = tree.vertex_count();
  if (!is_tree(tree)) throw std::invalid_argument("input graph is not a tree");
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation size differs from vertex count");
  std::vector<char> hit(n, 0);
  for (VertexId v : perm) {
    if (v < 0 || v >= n || hit[v]) throw std::invalid_argument("perm is not a permutation");
    hit[v] = 1;
  }
  if (rounds < 1) throw std::invalid_argument("makespan of the swap instance must be at least 1");

  // h = ceil(log2 D) + 1, bumped to the next even value.
  const int max_degree = tree.max_degree();
  int log_ceil = 0;
  while ((1 << log_ceil) < max_degree) ++log_ceil;
  int h = log_ceil + 1;
  if (h % 2) ++h;
  // Each child hangs below its leaf through a chain of h hubs: parent to child takes
  // 2h+1 turns, while going between two siblings takes at least 2h+4.
  const int chain = h;
  const int m = segment.value_or(2 * h + 3);
  if (m < 1) throw std::invalid_argument("segment length must be positive");

  // Children lists with the tree rooted at vertex 0.
  std::vector<std::vector<VertexId>> children(n);
  std::vector<VertexId> parent(n, -1);
  std::vector<char> seen(n, 0);
  std::deque<VertexId> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : tree.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = u;
      children[u].push_back(w);
      queue.push_back(w);
    }
  }

  GraphBuilder b(n);
  GeneratedInstance gen;
  gen.gadget_map.push_back({"original", 0, n});
  const int tree_size = (1 << h) - 1;
  const int first_leaf = 1 << (h - 1);
  std::vector<VertexId> hubs;  // the set U
  const VertexId hubs_first = b.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (children[v].empty()) continue;
    const VertexId base = b.add_vertices(tree_size);
    for (int idx = 1; idx <= tree_size; ++idx) hubs.push_back(base + idx - 1);
    for (int idx = 2; idx <= tree_size; ++idx) b.add_edge(base + idx / 2 - 1, base + idx - 1);
    b.add_edge(v, base);
    for (std::size_t i = 0; i < children[v].size(); ++i) {
      VertexId prev = base + first_leaf - 1 + static_cast<int>(i);
      for (int c = 0; c < chain; ++c) {
        const VertexId y = b.add_vertex();
        hubs.push_back(y);
        b.add_edge(prev, y);
        prev = y;
      }
      b.add_edge(children[v][i], prev);
    }
  }
  gen.gadget_map.push_back({"binary_trees", hubs_first, b.vertex_count()});

  Instance& inst = gen.instance;
  for (VertexId v = 0; v < n; ++v) {
    inst.start.push_back(v);
    inst.target.push_back(perm[v]);
  }
  const int s_len = rounds * m;
  const int t_len = (rounds - 1) * m;
  for (VertexId u : hubs) {
    const VertexId s_base = b.add_vertices(s_len);  // u_{s,q} = s_base + q
    for (int q = 0; q + 1 < s_len; ++q) b.add_edge(s_base + q, s_base + q + 1);
    b.add_edge(s_base + s_len - 1, u);
    const VertexId t_base = b.add_vertices(t_len) - 1;  // u_{t,q} = t_base + q
    if (t_len > 0) b.add_edge(u, t_base + 1);
    for (int q = 1; q < t_len; ++q) b.add_edge(t_base + q, t_base + q + 1);
    for (int i = 1; i <= rounds; ++i) {
      inst.start.push_back(s_base + (i - 1) * m);
      inst.target.push_back(i == 1 ? u : t_base + (i - 1) * m);
    }
    gen.gadget_map.push_back({"paths" + std::to_string(u), s_base, b.vertex_count()});
  }
  inst.graph = b.build();
  inst.makespan = rounds * m;
  inst.swap_policy = SwapPolicy::SwapsForbidden;

  std::string src = "tree n=" + std::to_string(n) + " edges=";
  for (int j = 0; j < tree.edge_count(); ++j) {
    src += (j ? ";" : "") + std::to_string(tree.edges()[j].u) + "-" + std::to_string(tree.edges()[j].v);
  }
  src += " perm=";
  for (VertexId v = 0; v < n; ++v) src += (v ? "," : "") + std::to_string(perm[v]);
  src += " makespan=" + std::to_string(rounds);
  gen.source = src;
  gen.extra.emplace_back("tree_height", std::to_string(h));
  gen.extra.emplace_back("segment", std::to_string(m));
  if (n <= 6) {
    const auto needed = token_swapping_rounds(tree, perm, rounds);
    gen.expected = needed ? Expected::Yes : Expected::No;
  }
  return gen;
}

}  // namespace mapf
