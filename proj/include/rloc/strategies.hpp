#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rloc/game.hpp"
#include "rloc/graph.hpp"
#include "rloc/strategy_tree.hpp"
#include "rloc/subdivision.hpp"

namespace rloc {

/// Raised when an extracted strategy is fed a distance vector with no
/// matching edge: a solver/replay inconsistency, never silently ignored.
class StrategyReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an adversary's reports stop being realizable by any robber
/// trajectory; always a bug in the adversary or the harness.
class AdversaryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A deterministic stateful cop: asked for probes, then shown the reported
/// distances, turn by turn. Behaviour is a function of the observation
/// history alone, which is what lets verifiers resimulate cops per branch.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual int probe_budget() const = 0;
  /// Probe list for this turn, size in [1, probe_budget()].
  virtual std::vector<int> next_probes() = 0;
  virtual void observe(const DistanceVector& distances) = 0;
  virtual std::string name() const = 0;
  /// Nonempty for cops whose future depends only on the current candidate
  /// set (or on nothing): lets the verifier prove evasion cycles. The value
  /// must determine all future behaviour.
  virtual std::string state_key() const { return {}; }
};

using CopFactory = std::function<std::unique_ptr<CopStrategy>()>;

/// A robber adversary reports one distance vector per probe list; every
/// report must stay realizable by some trajectory consistent with the whole
/// history. Moves between turns are bookkept internally.
class RobberAdversary {
 public:
  virtual ~RobberAdversary() = default;
  virtual DistanceVector react(const std::vector<int>& probes) = 0;
  /// True when the adversary guarantees evasion through its whole horizon.
  virtual bool certifies_escape() const { return false; }
  virtual std::string name() const = 0;
};

struct TurnRecord {
  int turn = 0;
  std::vector<int> probes;
  DistanceVector distances;
  int belief_size = 0;
};

struct Transcript {
  enum class Outcome { Win, Escape, Timeout };
  std::vector<TurnRecord> turns;
  Outcome outcome = Outcome::Timeout;
  int win_vertex = -1;
  int end_turn = 0;

  /// Line-per-turn text: stable field order for diff-based regression.
  std::string serialize(const Graph& g, const GameRules& rules) const;
};

/// Runs one game. The cop probes first; the engine tracks the belief implied
/// by the reports, checks every report is consistent (throws AdversaryError
/// otherwise) and declares Win the moment the belief is a singleton.
Transcript simulate(const Graph& g, CopStrategy& cop, RobberAdversary& robber,
                    const GameRules& rules, int max_turns);

enum class VerifyStatus { VerifiedWin, Counterexample, HorizonExceeded };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::HorizonExceeded;
  int max_depth = 0;  // worst-case winning turn over all branches
  std::optional<Transcript> counterexample;
  std::uint64_t branches = 0;
};

/// Universal verification: branches over every response class at every turn,
/// resimulating the cop per branch. VerifiedWin iff every branch reaches a
/// singleton belief within max_turns. A provable evasion cycle (possible for
/// cops exposing state_key) or a stuck replay yields Counterexample; an
/// undecided branch at the horizon yields HorizonExceeded. threads > 1
/// explores top-level branches concurrently with identical results.
VerifyResult verify_strategy(const Graph& g, const CopFactory& factory,
                             const GameRules& rules, int max_turns,
                             int threads = 1);

// --- cops ---

/// Probes a fixed minimum resolving set every turn; wins on turn 1.
std::unique_ptr<CopStrategy> make_resolving_set_cop(const Graph& g);

/// Distance-descent strategy for bounded degree: probes an anchor, its
/// candidate gateway neighbours and their outward extensions, maintaining a
/// lexicographically decreasing (distance, gateway-count) measure. Budget
/// floor((max_degree+1)^2/4)+1.
std::unique_ptr<CopStrategy> make_quadratic_cop(const Graph& g);

/// Three-probe strategy for connected graphs of maximum degree <= 3, with
/// the K_{3,3} opener, the descent phase and the distance-1 endgame case
/// analysis.
std::unique_ptr<CopStrategy> make_maxdeg3_cop(const Graph& g);

/// Replays a solver-extracted strategy tree.
std::unique_ptr<CopStrategy> make_extracted_cop(const Graph& g,
                                                const StrategyTree& tree);

/// Single-probe strategy on an m-subdivision that lifts a winning k-probe
/// base strategy, probing only branch vertices. Requires m >= 2k+2.
std::unique_ptr<CopStrategy> make_lifted_subdivision_cop(
    const SubdividedGraph& sg, const StrategyTree& base_strategy);

/// Probes the same list every turn (test and demo plumbing).
std::unique_ptr<CopStrategy> make_fixed_probe_cop(const Graph& g,
                                                  std::vector<int> probes);

/// Heuristic belief-tracking cop: probes the k-set minimizing the largest
/// response class (candidate strategy for non-locatable instances).
std::unique_ptr<CopStrategy> make_greedy_split_cop(const Graph& g,
                                                   const GameRules& rules);

// --- adversaries ---

/// Keeps the largest response class every turn.
std::unique_ptr<RobberAdversary> make_greedy_adversary(const Graph& g,
                                                       const GameRules& rules);

/// Plays the response class that depth-limited search against the
/// resimulable cop proves survives longest; certifies escape whenever some
/// line survives the full horizon.
std::unique_ptr<RobberAdversary> make_exhaustive_adversary(
    const Graph& g, const GameRules& rules, int horizon,
    const CopFactory& cop_factory);

}  // namespace rloc
