#pragma once

#include <string>
#include <vector>

#include "rloc/strategies.hpp"

namespace rloc {

/// The infinite delta-regular tree, addressed lazily by strings: the root is
/// "", its delta children are "0".."<delta-1>", and every other vertex has
/// delta-1 children made by appending '0'..'<delta-2>'. Distances come from
/// the longest common prefix, so nothing is ever materialized.
class InfiniteTree {
 public:
  explicit InfiniteTree(int delta);

  int delta() const { return delta_; }
  bool valid(const std::string& addr) const;
  int distance(const std::string& a, const std::string& b) const;
  /// Parent first (absent for the root), then children in label order.
  std::vector<std::string> neighbors(const std::string& addr) const;

 private:
  int delta_;
};

/// Evader on the infinite delta-regular tree against a cop probing at most
/// cop_budget = floor(delta^2/4) - 1 vertices per turn. It keeps an anchor
/// vertex v with at least ceil((delta-1)/2) never-probed components of
/// T - v, a virtual robber at distance r from v inside them, and re-anchors
/// one step deeper whenever probes crowd the current anchor. Every report is
/// d(probe, v) + r, consistent with every surviving candidate.
class TreeEvader {
 public:
  TreeEvader(int delta, int cop_budget, int r);

  /// Reports for one turn of probes (size <= cop_budget); maintains the
  /// invariant afterwards and throws AdversaryError if it ever breaks,
  /// which the probe-budget precondition rules out.
  std::vector<int> react(const std::vector<std::string>& probes);

  bool certifies_escape() const { return true; }
  const std::string& anchor() const { return anchor_; }
  /// Never-probed components of T - anchor; the maintained invariant keeps
  /// this at least ceil((delta-1)/2).
  int unprobed_components() const;
  int required_components() const { return (tree_.delta() - 1 + 1) / 2; }

 private:
  bool probed_in_component(const std::string& center,
                           const std::string& comp_neighbor) const;
  int unprobed_components_of(const std::string& center,
                             const std::string* skip_neighbor) const;

  InfiniteTree tree_;
  int budget_;
  int r_;
  std::string anchor_;
  bool first_ = true;
  std::vector<std::string> probed_;
};

}  // namespace rloc
