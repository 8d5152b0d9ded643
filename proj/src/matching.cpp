#include "mapf/matching.hpp"

#include <deque>
#include <limits>

namespace mapf {

std::vector<int> max_bipartite_matching(int left_count, int right_count, const std::vector<std::vector<int>>& adj) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(left_count, -1), match_right(right_count, -1), dist(left_count);

  auto bfs = [&] {
    std::deque<int> queue;
    bool found = false;
    for (int l = 0; l < left_count; ++l) {
      dist[l] = match_left[l] == -1 ? 0 : kInf;
      if (dist[l] == 0) queue.push_back(l);
    }
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop_front();
      for (int r : adj[l]) {
        const int next = match_right[r];
        if (next == -1) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  };

  auto dfs = [&](auto&& self, int l) -> bool {
    for (int r : adj[l]) {
      const int next = match_right[r];
      if (next == -1 || (dist[next] == dist[l] + 1 && self(self, next))) {
        match_left[l] = r;
        match_right[r] = l;
        return true;
      }
    }
    dist[l] = kInf;
    return false;
  };

  while (bfs()) {
    for (int l = 0; l < left_count; ++l) {
      if (match_left[l] == -1) dfs(dfs, l);
    }
  }
  return match_left;
}

}  // namespace mapf
