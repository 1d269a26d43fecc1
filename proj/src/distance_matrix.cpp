#include "rloc/distance_matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rloc {

namespace {

// BFS into a preallocated row; scratch avoids a queue allocation per source.
void bfs_row(const Graph& g, int src, int* row, std::vector<int>& scratch) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) row[v] = Graph::kUnreachable;
  scratch.clear();
  scratch.push_back(src);
  row[src] = 0;
  for (std::size_t head = 0; head < scratch.size(); ++head) {
    int x = scratch[head];
    for (int y : g.neighbors(x)) {
      if (row[y] == Graph::kUnreachable) {
        row[y] = row[x] + 1;
        scratch.push_back(y);
      }
    }
  }
}

}  // namespace

DistanceMatrix DistanceMatrix::build_serial(const Graph& g) {
  DistanceMatrix m;
  m.n_ = g.vertex_count();
  m.d_.resize(static_cast<std::size_t>(m.n_) * static_cast<std::size_t>(m.n_));
  std::vector<int> scratch;
  scratch.reserve(static_cast<std::size_t>(m.n_));
  for (int u = 0; u < m.n_; ++u)
    bfs_row(g, u, m.d_.data() + static_cast<std::size_t>(u) * m.n_, scratch);
  return m;
}

DistanceMatrix DistanceMatrix::build_parallel(const Graph& g, int threads) {
  DistanceMatrix m;
  m.n_ = g.vertex_count();
  m.d_.resize(static_cast<std::size_t>(m.n_) * static_cast<std::size_t>(m.n_));
#ifdef _OPENMP
#pragma omp parallel num_threads(threads > 0 ? threads : omp_get_max_threads())
  {
    std::vector<int> scratch;
    scratch.reserve(static_cast<std::size_t>(m.n_));
#pragma omp for schedule(dynamic, 16)
    for (int u = 0; u < m.n_; ++u)
      bfs_row(g, u, m.d_.data() + static_cast<std::size_t>(u) * m.n_, scratch);
  }
#else
  (void)threads;
  std::vector<int> scratch;
  for (int u = 0; u < m.n_; ++u)
    bfs_row(g, u, m.d_.data() + static_cast<std::size_t>(u) * m.n_, scratch);
#endif
  return m;
}

DistanceMatrix DistanceMatrix::build(const Graph& g, int threads) {
  return threads <= 1 ? build_serial(g) : build_parallel(g, threads);
}

}  // namespace rloc
