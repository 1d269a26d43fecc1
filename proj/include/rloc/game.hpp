#pragma once

#include <vector>

#include "rloc/distance_matrix.hpp"
#include "rloc/graph.hpp"
#include "rloc/vertex_set.hpp"

namespace rloc {

/// FreeMove lets the robber stay or step to any neighbour;
/// NoMoveToLastProbes additionally forbids stepping onto a vertex probed on
/// the cop's previous turn (staying put is always legal, even on a probed
/// vertex).
enum class MoveRule { FreeMove, NoMoveToLastProbes };

struct GameRules {
  int k = 1;
  MoveRule variant = MoveRule::FreeMove;
};

/// Distances reported for one probe list, in probe order.
using DistanceVector = std::vector<int>;

/// Candidates grouped by their distance vector to the probes, ordered
/// lexicographically by vector. Groups are disjoint and cover the belief.
std::vector<std::pair<DistanceVector, VertexSet>> partition_by_probe(
    const DistanceMatrix& dm, const VertexSet& belief,
    const std::vector<int>& probes);

/// All positions the robber can occupy after one move from somewhere in b.
VertexSet expand(const Graph& g, const VertexSet& b, const GameRules& rules,
                 const std::vector<int>& last_probes);

/// Distance vector of a single vertex to the probes.
DistanceVector distance_vector(const DistanceMatrix& dm, int vertex,
                               const std::vector<int>& probes);

}  // namespace rloc
