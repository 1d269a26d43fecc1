#include <algorithm>

#include "rloc/strategies.hpp"

namespace rloc {

namespace {

class GreedyAdversary : public RobberAdversary {
 public:
  GreedyAdversary(const Graph& g, const GameRules& rules)
      : g_(g),
        rules_(rules),
        dm_(DistanceMatrix::build_serial(g)),
        candidates_(VertexSet::full(g.vertex_count())) {}

  DistanceVector react(const std::vector<int>& probes) override {
    if (!first_) candidates_ = expand(g_, candidates_, rules_, last_probes_);
    first_ = false;
    auto classes = partition_by_probe(dm_, candidates_, probes);
    const auto* best = &classes.front();
    for (const auto& cls : classes)
      if (cls.second.count() > best->second.count()) best = &cls;
    candidates_ = best->second;
    last_probes_ = probes;
    return best->first;
  }

  std::string name() const override { return "greedy"; }

 private:
  const Graph& g_;
  GameRules rules_;
  DistanceMatrix dm_;
  VertexSet candidates_;
  std::vector<int> last_probes_;
  bool first_ = true;
};

// Plays the response class proven by depth-limited search to evade a
// deterministic cop the longest. The cop is resimulated per branch from its
// factory: the search feeds it hypothetical reports and asks for the probes
// it would make.
class ExhaustiveAdversary : public RobberAdversary {
 public:
  ExhaustiveAdversary(const Graph& g, const GameRules& rules, int horizon,
                      CopFactory factory)
      : g_(g),
        rules_(rules),
        horizon_(horizon),
        factory_(std::move(factory)),
        dm_(DistanceMatrix::build_serial(g)),
        candidates_(VertexSet::full(g.vertex_count())) {
    if (horizon < 1)
      throw std::invalid_argument("exhaustive adversary: horizon must be >= 1");
  }

  DistanceVector react(const std::vector<int>& probes) override {
    if (!first_) candidates_ = expand(g_, candidates_, rules_, last_probes_);
    first_ = false;
    int remaining = horizon_ - turns_done_;  // probes left including this one
    auto classes = partition_by_probe(dm_, candidates_, probes);

    const auto* best = &classes.front();
    int best_value = -1;
    for (const auto& cls : classes) {
      int value;
      if (cls.second.count() == 1) {
        value = 0;  // located at this probe
      } else if (remaining <= 1) {
        value = kEscape;  // alive through the whole horizon
      } else {
        history_.push_back(cls.first);
        value = 1 + survive(expand(g_, cls.second, rules_, probes),
                            remaining - 1);
        history_.pop_back();
        if (value >= remaining) value = kEscape;
      }
      if (value > best_value) {
        best_value = value;
        best = &cls;
      }
      if (best_value == kEscape) break;  // classes come in lex order
    }

    escape_certified_ = best_value >= std::min(remaining, kEscape);
    candidates_ = best->second;
    history_.push_back(best->first);
    last_probes_ = probes;
    ++turns_done_;
    return best->first;
  }

  bool certifies_escape() const override { return escape_certified_; }
  std::string name() const override { return "exhaustive"; }

 private:
  static constexpr int kEscape = 1 << 20;

  // Longest evasion from a pre-probe belief with `remaining` probes left,
  // capped at remaining (reaching the cap certifies survival).
  int survive(const VertexSet& belief, int remaining) {
    auto cop = factory_();
    for (const auto& dv : history_) {
      cop->next_probes();
      cop->observe(dv);
    }
    std::vector<int> probes = cop->next_probes();
    int best = 0;
    for (const auto& [dv, cls] : partition_by_probe(dm_, belief, probes)) {
      int value;
      if (cls.count() == 1) {
        value = 0;
      } else if (remaining <= 1) {
        value = remaining;
      } else {
        history_.push_back(dv);
        value = 1 + survive(expand(g_, cls, rules_, probes), remaining - 1);
        history_.pop_back();
      }
      best = std::max(best, value);
      if (best >= remaining) return remaining;  // cannot do better
    }
    return best;
  }

  const Graph& g_;
  GameRules rules_;
  int horizon_;
  CopFactory factory_;
  DistanceMatrix dm_;
  VertexSet candidates_;
  std::vector<int> last_probes_;
  std::vector<DistanceVector> history_;  // reports fed to the live cop so far
  bool first_ = true;
  bool escape_certified_ = false;
  int turns_done_ = 0;
};

}  // namespace

std::unique_ptr<RobberAdversary> make_greedy_adversary(const Graph& g,
                                                       const GameRules& rules) {
  return std::make_unique<GreedyAdversary>(g, rules);
}

std::unique_ptr<RobberAdversary> make_exhaustive_adversary(
    const Graph& g, const GameRules& rules, int horizon,
    const CopFactory& cop_factory) {
  return std::make_unique<ExhaustiveAdversary>(g, rules, horizon, cop_factory);
}

}  // namespace rloc
