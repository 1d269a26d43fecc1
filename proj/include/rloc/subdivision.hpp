#pragma once

#include <vector>

#include "rloc/graph.hpp"

namespace rloc {

/// Where a probe answer sits modulo the thread length.
enum class ProbeResidue { AtBranch, AtMidpoint, AtNearMidpoint, Interior };

struct ResidueClass {
  ProbeResidue kind;
  /// Distance from the target to its nearest branch vertex (mod-m residue
  /// folded to the closer end; equals m/2 at a midpoint, 0 at a branch).
  int dist_to_nearest_branch;
};

/// Classifies the result d of probing a branch vertex of an m-subdivision.
/// Requires m >= 2.
ResidueClass classify_probe_residue(int d, int m);

/// Base-graph distance between the probed branch vertex and the target's
/// nearest branch vertex: the nearest multiple of m to d, divided by m.
/// Refuses midpoint residues, where the rounding is ambiguous.
int nearest_branch_base_distance(int d, int m);

/// The graph obtained by replacing every base edge with a path of length m,
/// with bookkeeping from subdivided vertices back to base vertices and
/// edges. m = 1 is the identity subdivision.
class SubdividedGraph {
 public:
  struct Kind {
    bool is_branch;
    int base_vertex;      // branch vertices: the base vertex
    int base_u, base_v;   // thread vertices: base edge with base_u < base_v
    int position;         // 1..m-1, measured from base_u
  };

  static SubdividedGraph subdivide(const Graph& base, int m);

  const Graph& graph() const { return graph_; }
  const Graph& base() const { return base_; }
  int m() const { return m_; }

  const Kind& kind(int v) const { return kinds_[static_cast<std::size_t>(v)]; }
  bool is_branch(int v) const { return kind(v).is_branch; }
  /// Subdivided-graph vertex carrying base vertex b.
  int branch_vertex(int b) const {
    return branch_of_base_[static_cast<std::size_t>(b)];
  }

  /// The m+1 vertices of the thread replacing base edge (u, v), in path
  /// order from u to v, endpoints included. (u, v) must be a base edge.
  std::vector<int> thread_between(int base_u, int base_v) const;

 private:
  Graph graph_;
  Graph base_;
  int m_ = 1;
  std::vector<Kind> kinds_;
  std::vector<int> branch_of_base_;
};

}  // namespace rloc
