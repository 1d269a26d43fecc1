#include "rloc/game.hpp"

#include <map>
#include <stdexcept>

namespace rloc {

std::vector<std::pair<DistanceVector, VertexSet>> partition_by_probe(
    const DistanceMatrix& dm, const VertexSet& belief,
    const std::vector<int>& probes) {
  if (probes.empty())
    throw std::invalid_argument("partition_by_probe: empty probe set");
  std::map<DistanceVector, VertexSet> classes;
  for (int v = belief.first(); v != -1; v = belief.next(v)) {
    DistanceVector key;
    key.reserve(probes.size());
    for (int p : probes) key.push_back(dm.at(p, v));
    auto [it, inserted] = classes.try_emplace(std::move(key),
                                              VertexSet(belief.universe()));
    it->second.set(v);
  }
  return {classes.begin(), classes.end()};
}

VertexSet expand(const Graph& g, const VertexSet& b, const GameRules& rules,
                 const std::vector<int>& last_probes) {
  VertexSet grow(b.universe());
  for (int v = b.first(); v != -1; v = b.next(v))
    for (int u : g.neighbors(v)) grow.set(u);
  if (rules.variant == MoveRule::NoMoveToLastProbes)
    for (int p : last_probes) grow.reset(p);
  grow |= b;  // staying is always allowed
  return grow;
}

DistanceVector distance_vector(const DistanceMatrix& dm, int vertex,
                               const std::vector<int>& probes) {
  DistanceVector out;
  out.reserve(probes.size());
  for (int p : probes) out.push_back(dm.at(p, vertex));
  return out;
}

}  // namespace rloc
