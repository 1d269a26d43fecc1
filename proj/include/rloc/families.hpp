#pragma once

#include <cstdint>

#include "rloc/graph.hpp"

namespace rloc::families {

Graph complete(int n);
Graph cycle(int n);  // n >= 3
Graph path(int n);
Graph complete_bipartite(int a, int b);

/// Clique on the k-subsets of [n] (vertices "w{...}"), plus "v1".."vn" with
/// v_i adjacent to w_A exactly when i is not in A. Requires 1 <= k < n.
Graph gnk(int n, int k);

/// Four classes of size 2^n. B holds "b"+every binary word of length n, A
/// holds "a"+every word of length <= n that is empty or ends in 1; ax~by iff
/// x is a prefix of y. D/C mirror A/B, and B-C is complete bipartite.
Graph gn(int n);

/// Finite truncation of the delta-regular tree: every non-leaf (root
/// included) has degree delta, leaves sit at the given depth.
Graph tree_truncated(int delta, int depth);

/// Connected graph with maximum degree <= delta, deterministic per seed:
/// a random spanning tree grown under the degree cap (each vertex attaches
/// to a uniformly chosen earlier vertex with spare degree), then n extra
/// uniformly chosen vertex pairs are added when the cap and simplicity allow.
Graph random_connected_max_degree(int n, int delta, std::uint64_t seed);

}  // namespace rloc::families
