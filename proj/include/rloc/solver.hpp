#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rloc/game.hpp"
#include "rloc/graph.hpp"
#include "rloc/strategy_tree.hpp"

namespace rloc {

enum class SolveStatus { Locatable, NonLocatable, Unknown };

struct SolveBudget {
  std::uint64_t max_beliefs = 10'000'000;
  double max_ms = 600'000;
};

struct SolveStats {
  std::uint64_t beliefs = 0;     // distinct belief states interned
  std::uint64_t dedup_hits = 0;  // memo-table hits while exploring
  int rounds = 0;                // fixed-point iterations
  double wall_ms = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  int turn_bound = -1;  // worst-case probing turns when locatable
  std::optional<StrategyTree> strategy;
  SolveStats stats;
};

/// Exact decision of k-locatability on a connected graph.
///
/// A belief is winning iff some unordered probe set of size k splits it so
/// that every non-singleton response class expands to a winning belief;
/// the winning set is computed as a least fixed point over the beliefs
/// reachable from "robber anywhere", so beliefs never proven winning are
/// losing. Budget exhaustion yields Unknown, never a guess. With
/// threads > 1 the per-round evaluations run in parallel; answers and
/// extracted trees are identical to the serial mode.
///
/// extract_strategy = false skips tree extraction (for scans); the status
/// and turn bound are unaffected.
SolveResult is_k_locatable(const Graph& g, const GameRules& rules,
                           const SolveBudget& budget = {}, int threads = 1,
                           bool extract_strategy = true);

struct RlpResult {
  enum class Status { Found, ExceedsKmax, Unknown } status = Status::Unknown;
  int value = -1;                  // minimum k, when Found
  std::vector<SolveStatus> per_k;  // statuses for k = 1, 2, ...
};

/// Least k <= k_max for which g is k-locatable. Found requires every
/// smaller k to be exactly NonLocatable; any Unknown along the way makes
/// the overall answer Unknown.
RlpResult rlp(const Graph& g, int k_max, const GameRules& rules = {},
              const SolveBudget& budget = {}, int threads = 1);

/// True iff the distance vectors to the probes are pairwise distinct on w.
bool is_resolving(const DistanceMatrix& dm, const std::vector<int>& probes,
                  const VertexSet& w);

struct MetricDimensionResult {
  int value = 0;
  std::vector<int> witness;  // lexicographically least resolving set
};

/// Smallest resolving set for V(g), by brute force over subsets of
/// increasing size. The single-vertex graph has dimension 0.
MetricDimensionResult metric_dimension(const Graph& g);

enum class MStatus { Locatable, NonLocatable, Unknown };

struct ScanRow {
  int m;
  MStatus status;
  std::uint64_t beliefs;
  double wall_ms;
};

/// Per-m single-probe locatability of the m-subdivisions of base, for
/// m_from <= m <= m_to. Reports statuses only; a finite scan cannot
/// certify the subdivision threshold itself. rules.k must be 1.
std::vector<ScanRow> rls_scan(const Graph& base, int m_from, int m_to,
                              const GameRules& rules = {},
                              const SolveBudget& budget = {}, int threads = 1);

}  // namespace rloc
