#include <algorithm>
#include <set>
#include <sstream>

#include "rloc/strategies.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rloc {

namespace {

void check_probe_list(const Graph& g, const GameRules& rules,
                      const std::vector<int>& probes) {
  if (probes.empty() || static_cast<int>(probes.size()) > rules.k)
    throw std::logic_error("cop probe list size " +
                           std::to_string(probes.size()) +
                           " violates the k = " + std::to_string(rules.k) +
                           " budget");
  for (int p : probes)
    if (p < 0 || p >= g.vertex_count())
      throw std::logic_error("cop probed an invalid vertex index");
}

}  // namespace

std::string Transcript::serialize(const Graph& g, const GameRules& rules) const {
  std::ostringstream out;
  out << "rules k " << rules.k << " variant "
      << (rules.variant == MoveRule::FreeMove ? "free" : "seager") << "\n";
  for (const auto& rec : turns) {
    out << "turn " << rec.turn << " probes";
    for (int p : rec.probes) out << " " << g.label(p);
    out << " distances";
    for (int d : rec.distances) out << " " << d;
    out << " belief " << rec.belief_size << "\n";
  }
  out << "outcome ";
  switch (outcome) {
    case Outcome::Win:
      out << "WIN " << g.label(win_vertex) << " " << end_turn;
      break;
    case Outcome::Escape:
      out << "ESCAPE " << end_turn;
      break;
    case Outcome::Timeout:
      out << "TIMEOUT " << end_turn;
      break;
  }
  out << "\n";
  return out.str();
}

Transcript simulate(const Graph& g, CopStrategy& cop, RobberAdversary& robber,
                    const GameRules& rules, int max_turns) {
  if (cop.probe_budget() > rules.k)
    throw std::invalid_argument("simulate: cop budget exceeds rules.k");
  DistanceMatrix dm = DistanceMatrix::build_serial(g);
  Transcript t;
  VertexSet belief = VertexSet::full(g.vertex_count());
  for (int turn = 1; turn <= max_turns; ++turn) {
    std::vector<int> probes = cop.next_probes();
    check_probe_list(g, rules, probes);
    DistanceVector reported = robber.react(probes);
    if (reported.size() != probes.size())
      throw AdversaryError("adversary reported wrong vector length");
    VertexSet consistent(g.vertex_count());
    for (int v = belief.first(); v != -1; v = belief.next(v))
      if (distance_vector(dm, v, probes) == reported) consistent.set(v);
    if (consistent.empty())
      throw AdversaryError("adversary report inconsistent with every candidate");
    cop.observe(reported);
    t.turns.push_back({turn, probes, reported, consistent.count()});
    if (consistent.count() == 1) {
      t.outcome = Transcript::Outcome::Win;
      t.win_vertex = consistent.first();
      t.end_turn = turn;
      return t;
    }
    belief = expand(g, consistent, rules, probes);
  }
  t.end_turn = max_turns;
  t.outcome = robber.certifies_escape() ? Transcript::Outcome::Escape
                                        : Transcript::Outcome::Timeout;
  return t;
}

namespace {

struct BranchStep {
  std::vector<int> probes;
  DistanceVector reported;
  int belief_size;
};

// Rebuilds a cop at the state reached by an observation history. Cops are
// deterministic, so the regenerated probes match the recorded ones.
std::unique_ptr<CopStrategy> replay_cop(const CopFactory& factory,
                                        const std::vector<BranchStep>& history) {
  auto cop = factory();
  for (const auto& step : history) {
    cop->next_probes();
    cop->observe(step.reported);
  }
  return cop;
}

Transcript transcript_of(const std::vector<BranchStep>& history,
                         Transcript::Outcome outcome) {
  Transcript t;
  for (std::size_t i = 0; i < history.size(); ++i)
    t.turns.push_back({static_cast<int>(i) + 1, history[i].probes,
                       history[i].reported, history[i].belief_size});
  t.outcome = outcome;
  t.end_turn = static_cast<int>(history.size());
  return t;
}

struct VerifyWork {
  const Graph& g;
  const DistanceMatrix& dm;
  const CopFactory& factory;
  GameRules rules;
  int max_turns;
  bool track_cycles;

  struct Sub {
    bool horizon = false;
    int max_depth = 0;
    std::optional<Transcript> counterexample;
    std::uint64_t branches = 0;
  };

  std::string state_sig(const CopStrategy& cop, const VertexSet& belief) const {
    std::ostringstream sig;
    sig << cop.state_key() << "|" << belief.hash() << ":" << belief.count();
    return sig.str();
  }

  // belief: candidates after the robber's move, before this turn's probe.
  void explore(const VertexSet& belief, std::vector<BranchStep>& history,
               std::set<std::string>& seen_keys, Sub& out) const {
    ++out.branches;
    std::unique_ptr<CopStrategy> cop;
    std::vector<int> probes;
    try {
      cop = replay_cop(factory, history);
      probes = cop->next_probes();
    } catch (const StrategyReplayError&) {
      out.counterexample = transcript_of(history, Transcript::Outcome::Escape);
      return;
    }
    check_probe_list(g, rules, probes);
    // A cop whose state_key pins down all future behaviour loops forever
    // once a (key, belief) pair repeats along a branch.
    if (track_cycles && !seen_keys.insert(state_sig(*cop, belief)).second) {
      out.counterexample = transcript_of(history, Transcript::Outcome::Escape);
      return;
    }
    for (const auto& [dv, cls] : partition_by_probe(dm, belief, probes)) {
      history.push_back({probes, dv, cls.count()});
      if (cls.count() == 1) {
        out.max_depth = std::max(out.max_depth, static_cast<int>(history.size()));
      } else if (static_cast<int>(history.size()) >= max_turns) {
        out.horizon = true;
      } else {
        std::set<std::string> keys_branch = seen_keys;
        explore(expand(g, cls, rules, probes), history, keys_branch, out);
        if (out.counterexample) return;  // history holds the failing prefix
      }
      history.pop_back();
    }
  }
};

}  // namespace

VerifyResult verify_strategy(const Graph& g, const CopFactory& factory,
                             const GameRules& rules, int max_turns,
                             int threads) {
  auto root_cop = factory();
  if (root_cop->probe_budget() > rules.k)
    throw std::invalid_argument("verify_strategy: cop budget exceeds rules.k");
  if (max_turns < 1)
    throw std::invalid_argument("verify_strategy: max_turns must be >= 1");
  DistanceMatrix dm = DistanceMatrix::build(g, threads);
  VerifyWork work{g, dm, factory, rules, max_turns,
                  !root_cop->state_key().empty()};

  VertexSet full = VertexSet::full(g.vertex_count());
  std::vector<int> probes;
  std::vector<std::pair<DistanceVector, VertexSet>> classes;
  VerifyResult result;
  try {
    probes = root_cop->next_probes();
    check_probe_list(g, rules, probes);
    classes = partition_by_probe(dm, full, probes);
  } catch (const StrategyReplayError&) {
    result.status = VerifyStatus::Counterexample;
    result.counterexample = transcript_of({}, Transcript::Outcome::Escape);
    return result;
  }
  std::string root_sig = work.state_sig(*root_cop, full);

  const int csize = static_cast<int>(classes.size());
  std::vector<VerifyWork::Sub> subs(static_cast<std::size_t>(csize));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (threads > 1) \
    num_threads(threads > 1 ? threads : 1)
#endif
  for (int ci = 0; ci < csize; ++ci) {
    const auto& [dv, cls] = classes[static_cast<std::size_t>(ci)];
    auto& sub = subs[static_cast<std::size_t>(ci)];
    std::vector<BranchStep> history{{probes, dv, cls.count()}};
    ++sub.branches;
    if (cls.count() == 1) {
      sub.max_depth = 1;
    } else if (max_turns <= 1) {
      sub.horizon = true;
    } else {
      std::set<std::string> seen{root_sig};
      work.explore(expand(g, cls, rules, probes), history, seen, sub);
    }
  }

  bool horizon = false;
  for (const auto& sub : subs) {
    result.branches += sub.branches;
    if (sub.counterexample && !result.counterexample)
      result.counterexample = sub.counterexample;  // first in class order
    horizon = horizon || sub.horizon;
    result.max_depth = std::max(result.max_depth, sub.max_depth);
  }
  if (result.counterexample)
    result.status = VerifyStatus::Counterexample;
  else if (horizon)
    result.status = VerifyStatus::HorizonExceeded;
  else
    result.status = VerifyStatus::VerifiedWin;
  return result;
}

}  // namespace rloc
