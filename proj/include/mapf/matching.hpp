#pragma once

#include <vector>

namespace mapf {

/// Maximum bipartite matching (Hopcroft-Karp). adj[l] lists right vertices of left vertex l.
/// Returns the partner of each left vertex, or -1.
std::vector<int> max_bipartite_matching(int left_count, int right_count, const std::vector<std::vector<int>>& adj);

}  // namespace mapf
