#include "mapf/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace mapf {

int TreeDecomposition::width() const {
  int best = 0;
  for (const auto& bag : bags) best = std::max(best, static_cast<int>(bag.size()));
  return best - 1;
}

std::optional<std::string> decomposition_error(const TreeDecomposition& td, int vertex_count,
                                               std::span<const std::pair<int, int>> edges) {
  const int nodes = td.node_count();
  if (nodes == 0) return vertex_count == 0 ? std::nullopt : std::optional<std::string>("no bags");
  if (static_cast<int>(td.parent.size()) != nodes) return "parent array size differs from bag count";

  // Tree shape: exactly one root, every node reaches it without cycles.
  int roots = 0;
  std::vector<std::vector<int>> children(nodes);
  for (int x = 0; x < nodes; ++x) {
    const int p = td.parent[x];
    if (p == -1) {
      ++roots;
    } else if (p < 0 || p >= nodes || p == x) {
      return "node " + std::to_string(x) + " has invalid parent " + std::to_string(p);
    } else {
      children[p].push_back(x);
    }
  }
  if (roots != 1) return "expected one root, found " + std::to_string(roots);
  std::vector<int> order;
  for (int x = 0; x < nodes; ++x) {
    if (td.parent[x] == -1) order.push_back(x);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : children[order[i]]) order.push_back(c);
  }
  if (static_cast<int>(order.size()) != nodes) return "parent pointers contain a cycle";

  std::vector<std::vector<int>> where(vertex_count);
  for (int x = 0; x < nodes; ++x) {
    const auto& bag = td.bags[x];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= vertex_count) return "bag " + std::to_string(x) + " holds unknown vertex";
      if (i > 0 && bag[i] <= bag[i - 1]) return "bag " + std::to_string(x) + " is not sorted and distinct";
      where[bag[i]].push_back(x);
    }
  }
  std::vector<int> mark(nodes, -1);
  for (int v = 0; v < vertex_count; ++v) {
    if (where[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    // Occurrences are connected iff exactly one of them has its parent outside the set.
    for (int x : where[v]) mark[x] = v;
    int tops = 0;
    for (int x : where[v]) {
      const int p = td.parent[x];
      if (p == -1 || mark[p] != v) ++tops;
    }
    if (tops != 1) return "bags holding vertex " + std::to_string(v) + " are not connected";
  }
  for (auto [u, v] : edges) {
    bool covered = false;
    for (int x : where[u]) {
      if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is not covered";
  }
  return std::nullopt;
}

std::optional<std::string> decomposition_error(const TreeDecomposition& td, const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return decomposition_error(td, g.vertex_count(), edges);
}

std::optional<std::string> decomposition_error(const TreeDecomposition& td, const TimeExpandedGraph& teg) {
  return decomposition_error(td, teg.node_count(), teg.arcs());
}

TreeDecomposition greedy_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    td.parent.push_back(-1);
    return td;
  }
  std::vector<std::set<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<bool> gone(n, false);
  std::vector<int> position(n, -1);
  std::vector<int> order;
  auto fill_in = [&](int v) {
    int missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a) {
      for (auto b = std::next(a); b != adj[v].end(); ++b) {
        if (!adj[*a].contains(*b)) ++missing;
      }
    }
    return missing;
  };
  for (int step = 0; step < n; ++step) {
    int best = -1, best_fill = std::numeric_limits<int>::max(), best_deg = 0;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      const int f = fill_in(v);
      const int d = static_cast<int>(adj[v].size());
      if (f < best_fill || (f == best_fill && d < best_deg)) {
        best = v;
        best_fill = f;
        best_deg = d;
      }
    }
    const int v = best;
    std::vector<int> bag(adj[v].begin(), adj[v].end());
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags.push_back(bag);
    for (int a : adj[v]) {
      for (int b : adj[v]) {
        if (a != b) adj[a].insert(b);
      }
      adj[a].erase(v);
    }
    gone[v] = true;
    position[v] = step;
    order.push_back(v);
    adj[v].clear();
  }
  // Parent of v's bag: bag of the first-eliminated later neighbor. Component roots chain to the last bag.
  td.parent.assign(n, -1);
  for (int step = 0; step < n; ++step) {
    int parent = -1;
    for (int u : td.bags[step]) {
      if (position[u] > step && (parent == -1 || position[u] < parent)) parent = position[u];
    }
    td.parent[step] = parent;
  }
  for (int step = 0; step + 1 < n; ++step) {
    if (td.parent[step] == -1) td.parent[step] = n - 1;
  }
  return td;
}

LiftedDecomposition lift_decomposition(const TreeDecomposition& td, const Graph& g, int turns, ExpansionMode mode) {
  if (auto why = decomposition_error(td, g)) throw DecompositionError("input decomposition invalid: " + *why);
  if (turns < 0) throw std::invalid_argument("negative turn count");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  LiftedDecomposition out;
  auto& lifted = out.decomposition;
  const int copies = mode == ExpansionMode::Swap ? turns + 1 : 2 * turns + 1;
  auto expand = [&](const std::vector<int>& bag) {
    std::vector<int> result;
    for (int layer = 0; layer < copies; ++layer) {
      for (int v : bag) result.push_back(layer * n + v);
    }
    std::sort(result.begin(), result.end());
    return result;
  };
  for (int x = 0; x < td.node_count(); ++x) {
    lifted.bags.push_back(expand(td.bags[x]));
    lifted.parent.push_back(td.parent[x]);
    out.source_node.push_back(x);
  }
  if (mode == ExpansionMode::SwapFree) {
    const int vertex_nodes = copies * n;
    for (int j = 0; j < m; ++j) {
      const Edge& e = g.edges()[j];
      int home = -1;
      for (int x = 0; x < td.node_count() && home == -1; ++x) {
        const auto& bag = td.bags[x];
        if (std::binary_search(bag.begin(), bag.end(), e.u) && std::binary_search(bag.begin(), bag.end(), e.v)) home = x;
      }
      std::vector<int> bag = expand(td.bags[home]);
      for (int i = 1; i <= turns; ++i) bag.push_back(vertex_nodes + (i - 1) * m + j);
      lifted.bags.push_back(std::move(bag));
      lifted.parent.push_back(home);
      out.source_node.push_back(home);
    }
  }
  return out;
}

}  // namespace mapf
