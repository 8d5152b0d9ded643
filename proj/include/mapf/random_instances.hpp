#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mapf/instance.hpp"

namespace mapf {

/// Seeded generator with its own bounded-integer mapping, so sequences do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  int between(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  /// True with probability num/den.
  bool chance(int num, int den) { return between(1, den) <= num; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (int i = static_cast<int>(items.size()) - 1; i > 0; --i) std::swap(items[i], items[between(0, i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// G(n, p) with p = percent/100.
Graph random_graph(Rng& rng, int n, int edge_percent);

/// Random tree on n vertices (random attachment to an earlier vertex).
Graph random_tree(Rng& rng, int n);

/// Distinct random starts and targets for k agents (k <= n).
Instance random_instance(Rng& rng, const Graph& g, int k, int makespan, SwapPolicy policy);

/// Small instance: n in [1,8], k in [1,min(3,n)], makespan in [0,6], random policy.
Instance random_small_instance(Rng& rng);

}  // namespace mapf
