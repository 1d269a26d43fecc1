#pragma once

// Test-only oracle: a depth-capped brute-force decision of k-locatability
// that enumerates ORDERED probe tuples (the production solver enumerates
// unordered sets) and recurses over response classes without any fixed-point
// machinery. Deliberately independent of the solver implementation path.

#include <map>
#include <vector>

#include "rloc/game.hpp"
#include "rloc/graph.hpp"

namespace rloc_test {

inline bool naive_winning(const rloc::Graph& g, const rloc::DistanceMatrix& dm,
                          const rloc::VertexSet& belief,
                          const rloc::GameRules& rules, int turns_left,
                          std::map<std::pair<std::vector<int>, int>, bool>& memo) {
  if (turns_left == 0) return false;
  auto key = std::make_pair(belief.members(), turns_left);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int n = g.vertex_count();
  std::vector<int> tuple(static_cast<std::size_t>(rules.k), 0);
  bool winning = false;
  while (!winning) {
    // every class must be a singleton or lead to a winning expansion
    bool ok = true;
    for (const auto& [dv, cls] : rloc::partition_by_probe(dm, belief, tuple)) {
      if (cls.count() == 1) continue;
      if (!naive_winning(g, dm, rloc::expand(g, cls, rules, tuple), rules,
                         turns_left - 1, memo)) {
        ok = false;
        break;
      }
    }
    if (ok) winning = true;
    // next ordered tuple over V^k
    int i = rules.k - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - 1) {
      tuple[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
  }
  memo[key] = winning;
  return winning;
}

inline bool naive_is_k_locatable(const rloc::Graph& g, const rloc::GameRules& rules,
                                 int turn_cap) {
  auto dm = rloc::DistanceMatrix::build_serial(g);
  std::map<std::pair<std::vector<int>, int>, bool> memo;
  return naive_winning(g, dm, rloc::VertexSet::full(g.vertex_count()), rules,
                       turn_cap, memo);
}

}  // namespace rloc_test
