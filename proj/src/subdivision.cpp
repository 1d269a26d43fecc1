#include "rloc/subdivision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rloc {

ResidueClass classify_probe_residue(int d, int m) {
  if (m < 2) throw std::invalid_argument("classify_probe_residue: m must be >= 2");
  if (d < 0) throw std::invalid_argument("classify_probe_residue: d must be >= 0");
  int r = d % m;
  int folded = std::min(r, m - r);
  if (r == 0) return {ProbeResidue::AtBranch, 0};
  if (m % 2 == 0 && r == m / 2) return {ProbeResidue::AtMidpoint, folded};
  if (m % 2 == 1 && (r == (m - 1) / 2 || r == (m + 1) / 2))
    return {ProbeResidue::AtNearMidpoint, folded};
  return {ProbeResidue::Interior, folded};
}

int nearest_branch_base_distance(int d, int m) {
  auto rc = classify_probe_residue(d, m);
  if (rc.kind == ProbeResidue::AtMidpoint)
    throw std::invalid_argument(
        "nearest_branch_base_distance: ambiguous at a midpoint");
  return (d + m / 2) / m;  // nearest multiple of m, away from midpoints
}

SubdividedGraph SubdividedGraph::subdivide(const Graph& base, int m) {
  if (m < 1) throw std::invalid_argument("subdivide: m must be >= 1");
  SubdividedGraph sg;
  sg.base_ = base;
  sg.m_ = m;

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  sg.branch_of_base_.resize(static_cast<std::size_t>(base.vertex_count()));
  for (int v = 0; v < base.vertex_count(); ++v) {
    sg.branch_of_base_[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(base.label(v));
    sg.kinds_.push_back({true, v, -1, -1, 0});
  }
  for (auto [u, v] : base.edges()) {
    std::string edge_name = base.label(u) + "~" + base.label(v);
    std::string prev = base.label(u);
    for (int i = 1; i < m; ++i) {
      std::string cur = edge_name + ":" + std::to_string(i);
      labels.push_back(cur);
      sg.kinds_.push_back({false, -1, u, v, i});
      edges.emplace_back(prev, cur);
      prev = cur;
    }
    edges.emplace_back(prev, base.label(v));
  }
  sg.graph_ = Graph::from_edges(labels, edges);
  return sg;
}

std::vector<int> SubdividedGraph::thread_between(int base_u, int base_v) const {
  if (!base_.has_edge(base_u, base_v))
    throw std::invalid_argument("thread_between: (" + base_.label(base_u) + ", " +
                                base_.label(base_v) + ") is not a base edge");
  int lo = std::min(base_u, base_v), hi = std::max(base_u, base_v);
  std::vector<int> out;
  out.push_back(branch_vertex(lo));
  std::string edge_name = base_.label(lo) + "~" + base_.label(hi);
  for (int i = 1; i < m_; ++i)
    out.push_back(graph_.vertex(edge_name + ":" + std::to_string(i)));
  out.push_back(branch_vertex(hi));
  if (base_u != lo) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace rloc
