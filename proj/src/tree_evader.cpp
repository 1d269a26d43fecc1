#include "rloc/tree_evader.hpp"

#include <algorithm>
#include <stdexcept>

namespace rloc {

InfiniteTree::InfiniteTree(int delta) : delta_(delta) {
  if (delta < 3 || delta > 10)
    throw std::invalid_argument("infinite tree: delta must be in [3, 10]");
}

bool InfiniteTree::valid(const std::string& addr) const {
  for (std::size_t i = 0; i < addr.size(); ++i) {
    int limit = (i == 0) ? delta_ : delta_ - 1;
    if (addr[i] < '0' || addr[i] >= '0' + limit) return false;
  }
  return true;
}

int InfiniteTree::distance(const std::string& a, const std::string& b) const {
  std::size_t lcp = 0;
  while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
  return static_cast<int>(a.size() + b.size() - 2 * lcp);
}

std::vector<std::string> InfiniteTree::neighbors(const std::string& addr) const {
  std::vector<std::string> out;
  if (!addr.empty()) out.push_back(addr.substr(0, addr.size() - 1));
  int children = addr.empty() ? delta_ : delta_ - 1;
  for (int c = 0; c < children; ++c)
    out.push_back(addr + static_cast<char>('0' + c));
  return out;
}

TreeEvader::TreeEvader(int delta, int cop_budget, int r)
    : tree_(delta), budget_(cop_budget), r_(r) {
  int limit = (delta * delta) / 4 - 1;
  if (cop_budget < 0 || cop_budget > limit)
    throw std::invalid_argument(
        "tree evader: the guarantee needs cop_budget <= floor(delta^2/4)-1");
  if (r < 1) throw std::invalid_argument("tree evader: r must be >= 1");
}

bool TreeEvader::probed_in_component(const std::string& center,
                                     const std::string& comp_neighbor) const {
  const bool parent_side = comp_neighbor.size() < center.size();
  for (const auto& p : probed_) {
    if (p == center) continue;  // the centre itself is in no component
    bool in_subtree = p.size() >= center.size() &&
                      p.compare(0, center.size(), center) == 0;
    if (parent_side) {
      if (!in_subtree) return true;
    } else {
      if (p.size() >= comp_neighbor.size() &&
          p.compare(0, comp_neighbor.size(), comp_neighbor) == 0)
        return true;
    }
  }
  return false;
}

int TreeEvader::unprobed_components_of(const std::string& center,
                                       const std::string* skip_neighbor) const {
  int count = 0;
  for (const auto& nb : tree_.neighbors(center)) {
    if (skip_neighbor != nullptr && nb == *skip_neighbor) continue;
    if (!probed_in_component(center, nb)) ++count;
  }
  return count;
}

int TreeEvader::unprobed_components() const {
  return unprobed_components_of(anchor_, nullptr);
}

std::vector<int> TreeEvader::react(const std::vector<std::string>& probes) {
  if (static_cast<int>(probes.size()) > budget_)
    throw std::invalid_argument("tree evader: probe list exceeds the budget");
  for (const auto& p : probes)
    if (!tree_.valid(p))
      throw std::invalid_argument("tree evader: invalid tree address '" + p + "'");

  if (first_) {
    first_ = false;
    // A leaf-ward vertex below every probe: all probes land in its parent
    // component, leaving delta-1 fresh child components.
    std::size_t deepest = 0;
    for (const auto& p : probes) deepest = std::max(deepest, p.size());
    anchor_.assign(deepest + 1, '0');
    probed_.insert(probed_.end(), probes.begin(), probes.end());
  } else {
    // Gateways lead into components untouched before this turn; the probe
    // budget cannot crowd them all, so one stays a valid new anchor.
    std::vector<std::string> gateways;
    for (const auto& nb : tree_.neighbors(anchor_))
      if (!probed_in_component(anchor_, nb)) gateways.push_back(nb);
    probed_.insert(probed_.end(), probes.begin(), probes.end());
    const int need = required_components();
    if (unprobed_components() < need) {
      std::string next;
      for (const auto& w : gateways) {
        if (unprobed_components_of(w, &anchor_) >= need) {
          next = w;
          break;
        }
      }
      if (next.empty())
        throw AdversaryError(
            "tree evader: invariant broken, no fresh component to re-anchor in");
      anchor_ = next;
    }
  }
  if (unprobed_components() < required_components())
    throw AdversaryError("tree evader: unprobed-component invariant broken");

  // Every candidate at distance r from the (possibly re-anchored) anchor in
  // its fresh components sits at d(probe, anchor) + r from every probe ever
  // made, so one report serves them all.
  std::vector<int> reports;
  reports.reserve(probes.size());
  for (const auto& p : probes)
    reports.push_back(tree_.distance(p, anchor_) + r_);
  return reports;
}

}  // namespace rloc
