#pragma once

#include <string>
#include <vector>

#include "rloc/game.hpp"
#include "rloc/graph.hpp"

namespace rloc {

/// Extracted winning cop strategy: each node carries the probe set for one
/// turn; each outgoing edge is keyed by a realizable distance vector and
/// leads either to a located vertex or to the node for the next turn.
class StrategyTree {
 public:
  struct Edge {
    DistanceVector key;
    int win_vertex = -1;  // >= 0 when this response locates the robber
    int child = -1;       // node index otherwise
  };
  struct Node {
    std::vector<int> probes;  // ascending vertex indices, size <= k
    std::vector<Edge> edges;  // sorted by key
  };

  int k = 1;
  std::vector<Node> nodes;  // nodes[0] is the root

  /// Number of turns the strategy needs in the worst case.
  int depth() const;

  /// Checks leaf/edge well-formedness against a graph (indices in range,
  /// probe lists sized and sorted, keys sized and unique).
  void validate(const Graph& g) const;

  // Text format, bit-exact round-trip through serialize/parse:
  //   strategy k <k> nodes <count>
  //   node <i> probes <label...>
  //   edge <i> <d...> win <label> | edge <i> <d...> node <j>
  std::string serialize(const Graph& g) const;
  static StrategyTree parse(const std::string& text, const Graph& g);
};

}  // namespace rloc
