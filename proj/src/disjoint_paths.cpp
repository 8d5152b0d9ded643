// Agent-at-a-time search for node-disjoint paths in the time expansion.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <unordered_map>

#include "mapf/solvers.hpp"
#include "mapf/time_expansion.hpp"

namespace mapf {

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int size) : words_((size + 63) / 64, 0) {}
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

 private:
  std::vector<std::uint64_t> words_;
};

// For each depth in the conflict, the last layer of that depth's path involved.
class Conflict {
 public:
  explicit Conflict(int size) : last_(size, -1) {}
  void note(int depth, int layer) { last_[depth] = std::max(last_[depth], layer); }
  int layer(int depth) const { return last_[depth]; }
  void reset(int depth) { last_[depth] = -1; }
  void merge(const Conflict& other) {
    for (std::size_t d = 0; d < last_.size(); ++d) last_[d] = std::max(last_[d], other.last_[d]);
  }
  void clear() { std::fill(last_.begin(), last_.end(), -1); }

 private:
  std::vector<int> last_;
};

struct KeyHash {
  std::size_t operator()(const std::vector<std::int32_t>& key) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::int32_t x : key) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 0x100000001b3ull;
    }
    return h ^ (h >> 29);
  }
};

enum class Status { Success, Fail, Abort };

// Agents are placed one whole path at a time. The next agent is the one with the
// fewest live paths left (forced agents first), conflicts are tracked per depth
// for backjumping, and failed subproblems are remembered by the set of placed
// agents plus the occupied nodes the remaining agents could still use.
class Search {
 public:
  Search(const Instance& inst, const TimeExpandedGraph& teg, std::int64_t budget)
      : inst_(inst), teg_(teg), budget_(budget), k_(inst.agent_count()), nodes_(teg.node_count()) {}

  /// False when some agent cannot reach its sink even on an empty graph.
  bool prepare();
  Status run() {
    Conflict conflict(k_ + 1);
    return solve(0, conflict);
  }
  std::vector<NodePath> paths_by_agent() const {
    std::vector<NodePath> out(k_);
    for (int d = 0; d < k_; ++d) out[agent_at_[d]] = path_[d];
    return out;
  }
  std::int64_t tried() const { return tried_; }

 private:
  static constexpr std::int64_t kMany = std::int64_t{1} << 40;

  Status solve(int depth, Conflict& conflict);
  Status extend(int depth, NodeId node, Conflict& conflict);
  Status try_path(int depth, Conflict& conflict);
  /// Recomputes the live nodes of agent a, pushes them on live_nodes_[a] and
  /// returns the number of live source-sink paths, saturating at kMany.
  std::int64_t count_live(AgentId a);
  void blockers(AgentId a, Conflict& out) const;
  std::vector<std::int32_t> cache_key() const;

  const Instance& inst_;
  const TimeExpandedGraph& teg_;
  std::int64_t budget_;
  std::int64_t tried_ = 0;
  int k_;
  int nodes_;

  std::vector<std::pair<NodeId, NodeId>> ends_;  // per agent
  std::vector<std::vector<NodeId>> tube_;       // per agent, in layer order
  // Live nodes per agent, one entry per depth that recomputed them; live sets only
  // shrink further down, so each recount scans the latest entry.
  std::vector<std::vector<std::vector<NodeId>>> live_nodes_;
  std::vector<std::vector<AgentId>> node_agents_;
  std::vector<std::vector<NodeId>> succ_;       // successors, least congested first

  std::vector<int> owner_;  // node -> depth or -1
  std::vector<int> depth_of_;
  std::vector<AgentId> agent_at_;
  std::vector<NodePath> path_;
  std::vector<std::vector<std::int64_t>> counts_;  // per depth, per agent
  std::vector<std::uint32_t> fwd_, bwd_, dom_, stamp_;
  std::vector<std::int64_t> ways_;
  std::uint32_t epoch_ = 0;
  std::uint32_t stamp_epoch_ = 0;

  std::vector<Bits> live_;     // per depth while its paths are enumerated
  std::vector<NodePath> cur_;  // partial path per depth
  bool backjump_ = false;
  int cut_ = -1;  // unwind path enumeration down to this layer
  std::vector<int> layer_;

  std::unordered_map<std::vector<std::int32_t>, bool, KeyHash> failed_;
  std::size_t cache_words_ = 0;
  static constexpr std::size_t kCacheWords = 40'000'000;
};

bool Search::prepare() {
  const Graph& g = inst_.graph;
  const int turns = inst_.makespan;
  const bool swap_mode = teg_.mode() == ExpansionMode::Swap;
  const int last = teg_.layers() - 1;

  // Tubes from base-graph distances: a copy is usable iff it is reachable from the
  // source and can still reach the sink in the remaining layers.
  tube_.assign(k_, {});
  for (AgentId a = 0; a < k_; ++a) {
    const auto ds = bfs_distances(g, inst_.start[a]);
    const auto dt = bfs_distances(g, inst_.target[a]);
    if (dt[inst_.start[a]] == kUnreachable || dt[inst_.start[a]] > turns) return false;
    auto& tube = tube_[a];
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (ds[v] == kUnreachable || dt[v] == kUnreachable) continue;
      if (swap_mode) {
        for (int i = ds[v]; i <= turns - dt[v]; ++i) tube.push_back(teg_.vertex_copy(v, i));
      } else {
        for (int i = ds[v]; i <= turns - dt[v]; ++i) {
          tube.push_back(teg_.vertex_copy(v, 2 * i));
          if (i > ds[v]) tube.push_back(teg_.vertex_copy(v, 2 * i - 1));
        }
      }
    }
    if (!swap_mode) {
      for (int j = 0; j < g.edge_count(); ++j) {
        const Edge& e = g.edges()[j];
        if (ds[e.u] == kUnreachable || dt[e.u] == kUnreachable) continue;
        const int from = std::min(ds[e.u], ds[e.v]) + 1;
        const int to = turns - std::min(dt[e.u], dt[e.v]);
        for (int i = from; i <= to; ++i) tube.push_back(teg_.edge_copy(j, 2 * i - 1));
      }
    }
    std::sort(tube.begin(), tube.end(), [&](NodeId x, NodeId y) {
      const int lx = teg_.layer_of(x), ly = teg_.layer_of(y);
      return lx != ly ? lx < ly : x < y;
    });
  }

  std::vector<int> congestion(nodes_, 0);
  node_agents_.assign(nodes_, {});
  ends_.resize(k_);
  for (AgentId a = 0; a < k_; ++a) {
    ends_[a] = {teg_.vertex_copy(inst_.start[a], 0), teg_.vertex_copy(inst_.target[a], last)};
    for (NodeId x : tube_[a]) {
      ++congestion[x];
      node_agents_[x].push_back(a);
    }
  }
  succ_.assign(nodes_, {});
  for (NodeId x = 0; x < nodes_; ++x) {
    if (congestion[x] == 0) continue;
    auto& list = succ_[x];
    for (NodeId y : teg_.successors(x)) {
      if (congestion[y] > 0) list.push_back(y);
    }
    std::sort(list.begin(), list.end(), [&](NodeId p, NodeId q) {
      return congestion[p] != congestion[q] ? congestion[p] < congestion[q] : p < q;
    });
  }
  owner_.assign(nodes_, -1);
  layer_.resize(nodes_);
  for (NodeId x = 0; x < nodes_; ++x) layer_[x] = teg_.layer_of(x);
  depth_of_.assign(k_, -1);
  agent_at_.assign(k_, -1);
  path_.assign(k_, {});
  counts_.assign(k_ + 1, std::vector<std::int64_t>(k_, 0));
  fwd_.assign(nodes_, 0);
  bwd_.assign(nodes_, 0);
  dom_.assign(nodes_, 0);
  live_nodes_.assign(k_, {});
  ways_.assign(nodes_, 0);
  stamp_.assign(k_, 0);
  live_.assign(k_, Bits(nodes_));
  cur_.assign(k_, {});
  return true;
}

std::int64_t Search::count_live(AgentId a) {
  ++epoch_;
  const auto& domain = live_nodes_[a].empty() ? tube_[a] : live_nodes_[a].back();
  std::vector<NodeId> live;
  const auto [source, sink] = ends_[a];
  if (owner_[source] != -1 || owner_[sink] != -1) {
    live_nodes_[a].push_back(std::move(live));
    return 0;
  }
  for (NodeId x : domain) dom_[x] = epoch_;
  fwd_[source] = epoch_;
  for (NodeId x : domain) {
    if (fwd_[x] != epoch_) continue;
    for (NodeId y : succ_[x]) {
      if (owner_[y] == -1 && dom_[y] == epoch_) fwd_[y] = epoch_;
    }
  }
  std::int64_t total = 0;
  if (fwd_[sink] == epoch_) {
    bwd_[sink] = epoch_;
    ways_[sink] = 1;
    for (auto it = domain.rbegin(); it != domain.rend(); ++it) {
      const NodeId x = *it;
      if (fwd_[x] != epoch_ || x == sink) continue;
      std::int64_t w = 0;
      for (NodeId y : succ_[x]) {
        if (bwd_[y] == epoch_ && fwd_[y] == epoch_) w = std::min(kMany, w + ways_[y]);
      }
      if (w > 0) {
        bwd_[x] = epoch_;
        ways_[x] = w;
      }
    }
    if (bwd_[source] == epoch_) {
      total = ways_[source];
      for (NodeId x : domain) {
        if (fwd_[x] == epoch_ && bwd_[x] == epoch_) live.push_back(x);
      }
    }
  }
  live_nodes_[a].push_back(std::move(live));
  return total;
}

void Search::blockers(AgentId a, Conflict& out) const {
  for (NodeId x : tube_[a]) {
    if (owner_[x] != -1) out.note(owner_[x], layer_[x]);
  }
}

std::vector<std::int32_t> Search::cache_key() const {
  std::vector<std::int32_t> key((k_ + 31) / 32, 0);
  std::vector<NodeId> used;
  for (AgentId a = 0; a < k_; ++a) {
    if (depth_of_[a] >= 0) key[a >> 5] |= static_cast<std::int32_t>(1u << (a & 31));
  }
  for (AgentId a = 0; a < k_; ++a) {
    if (depth_of_[a] < 0) continue;
    for (NodeId x : path_[depth_of_[a]]) {
      for (AgentId b : node_agents_[x]) {
        if (depth_of_[b] < 0) {
          used.push_back(x);
          break;
        }
      }
    }
  }
  std::sort(used.begin(), used.end());
  key.insert(key.end(), used.begin(), used.end());
  return key;
}

Status Search::solve(int depth, Conflict& conflict) {
  if (depth == k_) return Status::Success;
  conflict.clear();

  // Refresh live-path counts for agents touched by the previous placement.
  std::vector<AgentId> pushed;
  auto& counts = counts_[depth];
  if (depth == 0) {
    for (AgentId a = 0; a < k_; ++a) {
      counts[a] = count_live(a);
      pushed.push_back(a);
    }
  } else {
    counts = counts_[depth - 1];
    ++stamp_epoch_;
    for (NodeId x : path_[depth - 1]) {
      for (AgentId b : node_agents_[x]) {
        if (depth_of_[b] >= 0 || stamp_[b] == stamp_epoch_) continue;
        stamp_[b] = stamp_epoch_;
        counts[b] = count_live(b);
        pushed.push_back(b);
      }
    }
  }
  auto fail = [&] {
    for (AgentId a : pushed) live_nodes_[a].pop_back();
    return Status::Fail;
  };
  AgentId pick = -1;
  for (AgentId a = 0; a < k_; ++a) {
    if (depth_of_[a] >= 0) continue;
    if (counts[a] == 0) {
      blockers(a, conflict);
      return fail();
    }
    if (pick < 0 || counts[a] < counts[pick]) pick = a;
  }

  std::vector<std::int32_t> key;
  if (depth > 0) {
    key = cache_key();
    if (failed_.count(key)) {
      for (std::size_t i = (k_ + 31) / 32; i < key.size(); ++i) conflict.note(owner_[key[i]], layer_[key[i]]);
      return fail();
    }
  }

  Bits& live = live_[depth];
  live.clear();
  for (NodeId x : live_nodes_[pick].back()) live.set(x);
  agent_at_[depth] = pick;
  depth_of_[pick] = depth;
  cur_[depth].assign(1, ends_[pick].first);
  const Status status = extend(depth, ends_[pick].first, conflict);
  if (status == Status::Success || status == Status::Abort) return status;
  depth_of_[pick] = -1;
  agent_at_[depth] = -1;
  if (backjump_) {
    backjump_ = false;
    return fail();
  }
  blockers(pick, conflict);
  conflict.reset(depth);
  if (depth > 0 && cache_words_ + key.size() <= kCacheWords) {
    cache_words_ += key.size();
    failed_.emplace(std::move(key), true);
  }
  return fail();
}

Status Search::extend(int depth, NodeId node, Conflict& conflict) {
  const AgentId a = agent_at_[depth];
  if (node == ends_[a].second) return try_path(depth, conflict);
  for (NodeId y : succ_[node]) {
    if (!live_[depth].test(y)) continue;
    cur_[depth].push_back(y);
    const Status status = extend(depth, y, conflict);
    cur_[depth].pop_back();
    if (status != Status::Fail || backjump_) return status;
    if (cut_ >= 0) {
      if (layer_[node] >= cut_) return status;
      cut_ = -1;
    }
  }
  return Status::Fail;
}

Status Search::try_path(int depth, Conflict& conflict) {
  if (++tried_ > budget_) return Status::Abort;
  const NodePath& path = cur_[depth];
  for (NodeId x : path) owner_[x] = depth;
  path_[depth] = path;
  Conflict sub(k_ + 1);
  const Status status = solve(depth + 1, sub);
  cut_ = -1;
  if (status == Status::Success) return status;
  for (NodeId x : path) owner_[x] = -1;
  path_[depth].clear();
  if (status == Status::Abort) return status;
  if (sub.layer(depth) >= 0) {
    // every path sharing this prefix fails the same way
    cut_ = sub.layer(depth);
    sub.reset(depth);
    conflict.merge(sub);
  } else {
    conflict = sub;
    backjump_ = true;
  }
  return Status::Fail;
}

}  // namespace

SolveResult solve_time_expanded(const Instance& inst, std::int64_t budget) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveResult result;
  auto finish = [&](Outcome outcome) {
    result.outcome = outcome;
    result.stats.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return result;
  };
  const TimeExpandedGraph teg = build_expansion(inst.graph, inst.makespan, mode_for(inst.swap_policy));
  Search search(inst, teg, budget);
  if (!search.prepare()) return finish(Outcome::Infeasible);
  const Status status = search.run();
  result.stats.nodes = search.tried();
  if (status == Status::Abort) return finish(Outcome::Aborted);
  if (status == Status::Fail) return finish(Outcome::Infeasible);
  result.schedule = paths_to_schedule(teg, search.paths_by_agent());
  return finish(Outcome::Feasible);
}

}  // namespace mapf
