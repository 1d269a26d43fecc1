#pragma once

#include <vector>

#include "rloc/graph.hpp"

namespace rloc {

/// All-pairs BFS distances, row-major. The per-source sweeps are independent,
/// so the parallel builder farms rows out with OpenMP; the serial builder is
/// the reference the tests compare against.
class DistanceMatrix {
 public:
  static DistanceMatrix build_serial(const Graph& g);
  static DistanceMatrix build_parallel(const Graph& g, int threads);
  /// threads <= 1 selects the serial path.
  static DistanceMatrix build(const Graph& g, int threads = 1);

  int size() const { return n_; }
  int at(int u, int v) const {
    return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(v)];
  }
  const int* row(int u) const {
    return d_.data() + static_cast<std::size_t>(u) * static_cast<std::size_t>(n_);
  }

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> d_;
};

}  // namespace rloc
