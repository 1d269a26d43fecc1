#include "rloc/solver.hpp"

#include "rloc/subdivision.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rloc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

// Shared read-only solving context. Distances are packed one byte per probe
// into a 64-bit key, most significant byte first, so sorting keys sorts
// distance vectors lexicographically. Desk scale keeps n < 256 and k <= 8.
struct Context {
  const Graph& g;
  GameRules rules;
  DistanceMatrix dm;
  std::vector<VertexSet> closed_nbr;
  std::vector<std::vector<int>> probe_sets;
  int n;
  int k_eff;

  Context(const Graph& graph, const GameRules& r, int threads)
      : g(graph), rules(r), dm(DistanceMatrix::build(graph, threads)) {
    n = g.vertex_count();
    if (n >= 256)
      throw std::invalid_argument("solver: graph exceeds desk scale (n >= 256)");
    if (rules.k < 1) throw std::invalid_argument("solver: k must be >= 1");
    k_eff = std::min(rules.k, n);
    if (k_eff > 8)
      throw std::invalid_argument("solver: k > 8 exceeds desk scale");
    closed_nbr.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      VertexSet s(n);
      s.set(v);
      for (int u : g.neighbors(v)) s.set(u);
      closed_nbr.push_back(std::move(s));
    }
    probe_sets = combinations(n, k_eff);
  }

  VertexSet expand_class(const VertexSet& c, const std::vector<int>& probes) const {
    VertexSet out(n);
    for (int v = c.first(); v != -1; v = c.next(v)) out |= closed_nbr[static_cast<std::size_t>(v)];
    if (rules.variant == MoveRule::NoMoveToLastProbes) {
      for (int p : probes) out.reset(p);
      out |= c;  // staying put is always legal
    }
    return out;
  }
};

struct Scratch {
  std::vector<std::pair<std::uint64_t, int>> kv;
};

// Calls fn(members_begin, members_end) for every response class of belief
// under probes, in lexicographic distance-vector order. Returns false if fn
// ever returns false (early exit).
template <typename Fn>
bool for_each_class(const Context& ctx, const VertexSet& belief,
                    const std::vector<int>& probes, Scratch& s, Fn&& fn) {
  s.kv.clear();
  for (int v = belief.first(); v != -1; v = belief.next(v)) {
    std::uint64_t key = 0;
    for (int p : probes)
      key = (key << 8) | static_cast<std::uint64_t>(ctx.dm.at(p, v));
    s.kv.emplace_back(key, v);
  }
  std::sort(s.kv.begin(), s.kv.end());
  std::size_t i = 0;
  while (i < s.kv.size()) {
    std::size_t j = i;
    while (j < s.kv.size() && s.kv[j].first == s.kv[i].first) ++j;
    if (!fn(s.kv.begin() + static_cast<std::ptrdiff_t>(i),
            s.kv.begin() + static_cast<std::ptrdiff_t>(j)))
      return false;
    i = j;
  }
  return true;
}

struct BeliefTable {
  std::unordered_map<VertexSet, int, VertexSetHash> ids;
  std::vector<VertexSet> beliefs;
  std::uint64_t dedup_hits = 0;

  int intern(VertexSet s) {
    auto [it, inserted] = ids.try_emplace(std::move(s), static_cast<int>(beliefs.size()));
    if (inserted)
      beliefs.push_back(it->first);
    else
      ++dedup_hits;
    return it->second;
  }
  int lookup(const VertexSet& s) const {
    auto it = ids.find(s);
    return it == ids.end() ? -1 : it->second;
  }
};

constexpr int kUnset = std::numeric_limits<int>::max();

// One belief evaluated against the depths assigned in earlier rounds:
// does some probe set make every class either a singleton or an
// already-winning expansion?
bool winning_with_current(const Context& ctx, const BeliefTable& table,
                          const std::vector<int>& depth, const VertexSet& belief,
                          Scratch& s) {
  for (const auto& probes : ctx.probe_sets) {
    bool ok = for_each_class(ctx, belief, probes, s, [&](auto begin, auto end) {
      if (end - begin <= 1) return true;
      VertexSet cls(ctx.n);
      for (auto it = begin; it != end; ++it) cls.set(it->second);
      int id = table.lookup(ctx.expand_class(cls, probes));
      return id >= 0 && depth[static_cast<std::size_t>(id)] != kUnset;
    });
    if (ok) return true;
  }
  return false;
}

StrategyTree extract_tree(const Context& ctx, const BeliefTable& table,
                          const std::vector<int>& depth, int root_id) {
  StrategyTree tree;
  tree.k = ctx.rules.k;
  // Probe-set value at a belief: max over classes of 1 (singleton, won this
  // turn) or 1 + depth of the expanded class. The canonical choice is the
  // lexicographically least probe set achieving the belief's exact depth.
  std::function<int(int)> build = [&](int id) -> int {
    const VertexSet& belief = table.beliefs[static_cast<std::size_t>(id)];
    int want = depth[static_cast<std::size_t>(id)];
    Scratch s;
    for (const auto& probes : ctx.probe_sets) {
      int value = 1;
      bool ok = for_each_class(ctx, belief, probes, s, [&](auto begin, auto end) {
        if (end - begin <= 1) return true;
        VertexSet cls(ctx.n);
        for (auto it = begin; it != end; ++it) cls.set(it->second);
        int cid = table.lookup(ctx.expand_class(cls, probes));
        if (cid < 0 || depth[static_cast<std::size_t>(cid)] == kUnset) return false;
        value = std::max(value, 1 + depth[static_cast<std::size_t>(cid)]);
        return value <= want;
      });
      if (!ok || value != want) continue;
      int node_id = static_cast<int>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes[static_cast<std::size_t>(node_id)].probes = probes;
      // Recursion reallocates tree.nodes, so collect edges locally first.
      std::vector<StrategyTree::Edge> edges;
      for (const auto& [key, cls] : partition_by_probe(ctx.dm, belief, probes)) {
        StrategyTree::Edge e;
        e.key = key;
        if (cls.count() == 1)
          e.win_vertex = cls.first();
        else
          e.child = build(table.lookup(ctx.expand_class(cls, probes)));
        edges.push_back(std::move(e));
      }
      tree.nodes[static_cast<std::size_t>(node_id)].edges = std::move(edges);
      return node_id;
    }
    throw std::logic_error("strategy extraction: no probe set achieves the depth");
  };
  // Root is node 0 by construction (first emplace happens at the root call).
  build(root_id);
  tree.validate(ctx.g);
  return tree;
}

}  // namespace

SolveResult is_k_locatable(const Graph& g, const GameRules& rules,
                           const SolveBudget& budget, int threads,
                           bool extract_strategy) {
  if (!g.is_connected())
    throw std::invalid_argument("solver: graph must be connected");
  auto start = Clock::now();
  Context ctx(g, rules, threads);
  SolveResult result;

  BeliefTable table;
  int root_id = table.intern(VertexSet::full(ctx.n));

  auto out_of_budget = [&]() {
    return table.beliefs.size() > budget.max_beliefs ||
           ms_since(start) > budget.max_ms;
  };

  // Phase 1: forward closure of the reachable belief graph, in waves.
  std::vector<int> frontier{root_id};
  while (!frontier.empty()) {
    if (out_of_budget()) {
      result.status = SolveStatus::Unknown;
      result.stats = {table.beliefs.size(), table.dedup_hits, 0, ms_since(start)};
      return result;
    }
    const int fsize = static_cast<int>(frontier.size());
    std::vector<std::vector<VertexSet>> children(static_cast<std::size_t>(fsize));
#ifdef _OPENMP
#pragma omp parallel if (threads > 1) num_threads(threads > 1 ? threads : 1)
#endif
    {
      Scratch s;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 8)
#endif
      for (int fi = 0; fi < fsize; ++fi) {
        const VertexSet belief = table.beliefs[static_cast<std::size_t>(frontier[static_cast<std::size_t>(fi)])];
        auto& mine = children[static_cast<std::size_t>(fi)];
        for (const auto& probes : ctx.probe_sets) {
          for_each_class(ctx, belief, probes, s, [&](auto begin, auto end) {
            if (end - begin > 1) {
              VertexSet cls(ctx.n);
              for (auto it = begin; it != end; ++it) cls.set(it->second);
              mine.push_back(ctx.expand_class(cls, probes));
            }
            return true;
          });
        }
        std::sort(mine.begin(), mine.end());
        mine.erase(std::unique(mine.begin(), mine.end()), mine.end());
      }
    }
    std::vector<int> next;
    for (auto& mine : children)
      for (auto& child : mine) {
        auto before = table.beliefs.size();
        int id = table.intern(std::move(child));
        if (table.beliefs.size() != before) next.push_back(id);
      }
    frontier = std::move(next);
  }

  // Phase 2: least fixed point, one depth layer per round. Evaluations in a
  // round only read the previous rounds' assignments, so the parallel and
  // serial schedules assign identical depths.
  const int belief_count = static_cast<int>(table.beliefs.size());
  std::vector<int> depth(static_cast<std::size_t>(belief_count), kUnset);
  std::vector<int> unsolved(static_cast<std::size_t>(belief_count));
  for (int i = 0; i < belief_count; ++i) unsolved[static_cast<std::size_t>(i)] = i;
  int round = 0;
  while (!unsolved.empty()) {
    if (ms_since(start) > budget.max_ms) {
      result.status = SolveStatus::Unknown;
      result.stats = {table.beliefs.size(), table.dedup_hits, round, ms_since(start)};
      return result;
    }
    ++round;
    const int usize = static_cast<int>(unsolved.size());
    std::vector<char> newly(static_cast<std::size_t>(usize), 0);
#ifdef _OPENMP
#pragma omp parallel if (threads > 1) num_threads(threads > 1 ? threads : 1)
#endif
    {
      Scratch s;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 32)
#endif
      for (int ui = 0; ui < usize; ++ui) {
        const VertexSet& belief =
            table.beliefs[static_cast<std::size_t>(unsolved[static_cast<std::size_t>(ui)])];
        if (winning_with_current(ctx, table, depth, belief, s))
          newly[static_cast<std::size_t>(ui)] = 1;
      }
    }
    std::vector<int> still;
    still.reserve(static_cast<std::size_t>(usize));
    int changed = 0;
    for (int ui = 0; ui < usize; ++ui) {
      int id = unsolved[static_cast<std::size_t>(ui)];
      if (newly[static_cast<std::size_t>(ui)]) {
        depth[static_cast<std::size_t>(id)] = round;
        ++changed;
      } else {
        still.push_back(id);
      }
    }
    unsolved = std::move(still);
    if (depth[static_cast<std::size_t>(root_id)] != kUnset) break;
    if (changed == 0) break;  // stabilized: everything left is losing
  }

  result.stats = {table.beliefs.size(), table.dedup_hits, round, 0};
  if (depth[static_cast<std::size_t>(root_id)] != kUnset) {
    result.status = SolveStatus::Locatable;
    result.turn_bound = depth[static_cast<std::size_t>(root_id)];
    if (extract_strategy)
      result.strategy = extract_tree(ctx, table, depth, root_id);
  } else {
    result.status = SolveStatus::NonLocatable;
  }
  result.stats.wall_ms = ms_since(start);
  return result;
}

RlpResult rlp(const Graph& g, int k_max, const GameRules& rules,
              const SolveBudget& budget, int threads) {
  RlpResult out;
  bool unknown_seen = false;
  for (int k = 1; k <= k_max; ++k) {
    GameRules r = rules;
    r.k = k;
    auto res = is_k_locatable(g, r, budget, threads, /*extract_strategy=*/false);
    out.per_k.push_back(res.status);
    if (res.status == SolveStatus::Locatable) {
      if (unknown_seen) {
        out.status = RlpResult::Status::Unknown;  // a smaller k is unresolved
      } else {
        out.status = RlpResult::Status::Found;
        out.value = k;
      }
      return out;
    }
    if (res.status == SolveStatus::Unknown) unknown_seen = true;
  }
  out.status = unknown_seen ? RlpResult::Status::Unknown
                            : RlpResult::Status::ExceedsKmax;
  return out;
}

bool is_resolving(const DistanceMatrix& dm, const std::vector<int>& probes,
                  const VertexSet& w) {
  if (probes.empty())
    throw std::invalid_argument("is_resolving: empty probe set");
  if (w.count() <= 1) return true;
  std::vector<DistanceVector> vectors;
  for (int v = w.first(); v != -1; v = w.next(v))
    vectors.push_back(distance_vector(dm, v, probes));
  std::sort(vectors.begin(), vectors.end());
  return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

MetricDimensionResult metric_dimension(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("metric_dimension: graph must be connected");
  const int n = g.vertex_count();
  if (n == 1) return {0, {}};
  DistanceMatrix dm = DistanceMatrix::build_serial(g);
  VertexSet all = VertexSet::full(n);
  for (int r = 1; r <= n; ++r) {
    for (const auto& probes : combinations(n, r))
      if (is_resolving(dm, probes, all)) return {r, probes};
  }
  throw std::logic_error("metric_dimension: no resolving set found");
}

std::vector<ScanRow> rls_scan(const Graph& base, int m_from, int m_to,
                              const GameRules& rules, const SolveBudget& budget,
                              int threads) {
  if (rules.k != 1)
    throw std::invalid_argument("rls_scan: probe budget must be 1");
  if (m_from < 1) throw std::invalid_argument("rls_scan: m_from must be >= 1");
  std::vector<ScanRow> rows;
  for (int m = m_from; m <= m_to; ++m) {
    auto sg = SubdividedGraph::subdivide(base, m);
    auto res = is_k_locatable(sg.graph(), rules, budget, threads,
                              /*extract_strategy=*/false);
    MStatus st = res.status == SolveStatus::Locatable  ? MStatus::Locatable
                 : res.status == SolveStatus::NonLocatable
                     ? MStatus::NonLocatable
                     : MStatus::Unknown;
    rows.push_back({m, st, res.stats.beliefs, res.stats.wall_ms});
  }
  return rows;
}

}  // namespace rloc
