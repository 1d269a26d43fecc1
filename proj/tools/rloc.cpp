// Command-line front end: generate graphs, solve and scan, simulate and
// verify strategies, and play the robber interactively.
//
// Exit codes: 0 success or cop win, 1 negative result or escape, 2 usage or
// parse error, 3 disconnected input, 4 inconclusive (budget or horizon).

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "rloc/families.hpp"
#include "rloc/solver.hpp"
#include "rloc/strategies.hpp"
#include "rloc/subdivision.hpp"
#include "rloc/tree_evader.hpp"

using namespace rloc;
namespace families = rloc::families;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitInconclusive = 4;

struct CommonOpts {
  std::string variant = "free";
  std::uint64_t budget_nodes = 10'000'000;
  double budget_ms = 600'000;
  int threads = 1;
  std::uint64_t seed = 0;
};

GameRules rules_for(const CommonOpts& c, int k) {
  GameRules r;
  r.k = k;
  r.variant = c.variant == "seager" ? MoveRule::NoMoveToLastProbes
                                    : MoveRule::FreeMove;
  return r;
}

SolveBudget budget_for(const CommonOpts& c) {
  return SolveBudget{c.budget_nodes, c.budget_ms};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int check_connected(const Graph& g) {
  if (g.is_connected()) return kExitOk;
  // component report, per vertex 0's side first
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int comps = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (comp[static_cast<std::size_t>(v)] != -1) continue;
    auto dist = g.distances_from(v);
    for (int u = 0; u < g.vertex_count(); ++u)
      if (dist[static_cast<std::size_t>(u)] != Graph::kUnreachable)
        comp[static_cast<std::size_t>(u)] = comps;
    ++comps;
  }
  std::cerr << "graph is disconnected: " << comps
            << " components (probe components one by one)\n";
  for (int c = 0; c < comps; ++c) {
    std::cerr << "component " << c << ":";
    for (int v = 0; v < g.vertex_count(); ++v)
      if (comp[static_cast<std::size_t>(v)] == c) std::cerr << " " << g.label(v);
    std::cerr << "\n";
  }
  return kExitDisconnected;
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Locatable:
      return "LOCATABLE";
    case SolveStatus::NonLocatable:
      return "NON_LOCATABLE";
    default:
      return "UNKNOWN";
  }
}

const char* mstatus_name(MStatus s) {
  switch (s) {
    case MStatus::Locatable:
      return "LOCATABLE";
    case MStatus::NonLocatable:
      return "NON_LOCATABLE";
    default:
      return "UNKNOWN";
  }
}

// --- gen ---------------------------------------------------------------

int cmd_gen(const std::string& family, const std::vector<long long>& params,
            std::uint64_t seed, const std::string& out) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw std::invalid_argument("family '" + family + "' expects " +
                                  std::to_string(n) + " parameter(s)");
  };
  Graph g = [&] {
    if (family == "complete") {
      need(1);
      return families::complete(static_cast<int>(params[0]));
    }
    if (family == "cycle") {
      need(1);
      return families::cycle(static_cast<int>(params[0]));
    }
    if (family == "path") {
      need(1);
      return families::path(static_cast<int>(params[0]));
    }
    if (family == "kbipartite") {
      need(2);
      return families::complete_bipartite(static_cast<int>(params[0]),
                                          static_cast<int>(params[1]));
    }
    if (family == "gnk") {
      need(2);
      return families::gnk(static_cast<int>(params[0]),
                           static_cast<int>(params[1]));
    }
    if (family == "gn") {
      need(1);
      return families::gn(static_cast<int>(params[0]));
    }
    if (family == "tree") {
      need(2);
      return families::tree_truncated(static_cast<int>(params[0]),
                                      static_cast<int>(params[1]));
    }
    if (family == "random") {
      need(2);
      return families::random_connected_max_degree(
          static_cast<int>(params[0]), static_cast<int>(params[1]), seed);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
  }();
  write_output(out, g.to_edge_list());
  return kExitOk;
}

// --- solve ---------------------------------------------------------------

int cmd_solve(const std::string& path, int k, bool find_rlp, int kmax,
              const CommonOpts& opts, const std::string& strategy_out) {
  Graph g = Graph::load_edge_list_file(path);
  if (int rc = check_connected(g); rc != kExitOk) return rc;
  if (find_rlp) {
    auto r = rlp(g, kmax, rules_for(opts, 1), budget_for(opts), opts.threads);
    for (std::size_t i = 0; i < r.per_k.size(); ++i)
      std::cout << "k=" << (i + 1) << " " << status_name(r.per_k[i]) << "\n";
    switch (r.status) {
      case RlpResult::Status::Found:
        std::cout << "rlp " << r.value << "\n";
        return kExitOk;
      case RlpResult::Status::ExceedsKmax:
        std::cout << "rlp > " << kmax << "\n";
        return kExitNegative;
      default:
        std::cout << "rlp UNKNOWN (budget exhausted)\n";
        return kExitInconclusive;
    }
  }
  auto res = is_k_locatable(g, rules_for(opts, k), budget_for(opts),
                            opts.threads, !strategy_out.empty());
  std::cout << status_name(res.status);
  if (res.status == SolveStatus::Locatable)
    std::cout << " turns=" << res.turn_bound;
  std::cout << " beliefs=" << res.stats.beliefs << " rounds=" << res.stats.rounds
            << " ms=" << static_cast<long long>(res.stats.wall_ms) << "\n";
  if (!strategy_out.empty() && res.strategy)
    write_output(strategy_out, res.strategy->serialize(g));
  switch (res.status) {
    case SolveStatus::Locatable:
      return kExitOk;
    case SolveStatus::NonLocatable:
      return kExitNegative;
    default:
      return kExitInconclusive;
  }
}

// --- scan-m ---------------------------------------------------------------

int cmd_scan_m(const std::string& path, int m_from, int m_to, bool csv,
               const CommonOpts& opts) {
  Graph g = Graph::load_edge_list_file(path);
  if (int rc = check_connected(g); rc != kExitOk) return rc;
  auto rows = rls_scan(g, m_from, m_to, rules_for(opts, 1), budget_for(opts),
                       opts.threads);
  if (csv) std::cout << "m,status,beliefs,ms\n";
  for (const auto& row : rows) {
    if (csv)
      std::cout << row.m << "," << mstatus_name(row.status) << ","
                << row.beliefs << "," << static_cast<long long>(row.wall_ms)
                << "\n";
    else
      std::cout << "m=" << row.m << " status=" << mstatus_name(row.status)
                << " beliefs=" << row.beliefs
                << " ms=" << static_cast<long long>(row.wall_ms) << "\n";
  }
  return kExitOk;
}

// --- metric-dim -------------------------------------------------------------

int cmd_metric_dim(const std::string& path) {
  Graph g = Graph::load_edge_list_file(path);
  if (int rc = check_connected(g); rc != kExitOk) return rc;
  auto md = metric_dimension(g);
  std::cout << "metric-dimension " << md.value << " witness";
  for (int v : md.witness) std::cout << " " << g.label(v);
  std::cout << "\n";
  return kExitOk;
}

// --- subdivide ---------------------------------------------------------------

int cmd_subdivide(const std::string& path, int m, const std::string& out) {
  Graph base = Graph::load_edge_list_file(path);
  auto sg = SubdividedGraph::subdivide(base, m);
  std::ostringstream text;
  text << sg.graph().to_edge_list();
  for (int v = 0; v < sg.graph().vertex_count(); ++v) {
    const auto& kind = sg.kind(v);
    if (kind.is_branch)
      text << "# kind " << v << " branch " << base.label(kind.base_vertex) << "\n";
    else
      text << "# kind " << v << " thread " << base.label(kind.base_u) << "~"
           << base.label(kind.base_v) << " " << kind.position << "\n";
  }
  write_output(out, text.str());
  return kExitOk;
}

// --- cop/robber construction --------------------------------------------------

struct CopSpec {
  std::string name;
  std::string strategy_file;
  std::vector<std::string> fixed_probes;
  int base_k = 1;  // for lifted auto-solving
};

struct BuiltArena {
  Graph graph;
  CopFactory factory;
  int cop_budget = 1;
  // storage keeping captured references alive
  std::shared_ptr<SubdividedGraph> sg;
  std::shared_ptr<StrategyTree> tree;
};

BuiltArena build_cop(const Graph& input, const CopSpec& spec,
                     const CommonOpts& opts) {
  BuiltArena arena{input, nullptr, 1, nullptr, nullptr};
  auto g = std::make_shared<Graph>(input);
  if (spec.name == "resolving") {
    auto probe_count = std::max(1, metric_dimension(*g).value);
    arena.cop_budget = probe_count;
    arena.factory = [g] { return make_resolving_set_cop(*g); };
  } else if (spec.name == "quadratic") {
    arena.cop_budget = make_quadratic_cop(*g)->probe_budget();
    arena.factory = [g] { return make_quadratic_cop(*g); };
  } else if (spec.name == "maxdeg3") {
    arena.cop_budget = 3;
    arena.factory = [g] { return make_maxdeg3_cop(*g); };
  } else if (spec.name == "extracted") {
    if (spec.strategy_file.empty())
      throw std::invalid_argument("extracted cop needs --strategy-file");
    std::ifstream in(spec.strategy_file);
    if (!in) throw std::runtime_error("cannot read " + spec.strategy_file);
    std::stringstream buf;
    buf << in.rdbuf();
    arena.tree = std::make_shared<StrategyTree>(StrategyTree::parse(buf.str(), *g));
    arena.cop_budget = arena.tree->k;
    auto tree = arena.tree;
    arena.factory = [g, tree] { return make_extracted_cop(*g, *tree); };
  } else if (spec.name == "lifted") {
    // input is the BASE graph; the arena is its m-subdivision
    throw std::logic_error("lifted cop is built by build_lifted");
  } else if (spec.name == "fixed") {
    if (spec.fixed_probes.empty())
      throw std::invalid_argument("fixed cop needs at least one --probe");
    std::vector<int> probes;
    for (const auto& label : spec.fixed_probes) probes.push_back(g->vertex(label));
    arena.cop_budget = static_cast<int>(probes.size());
    arena.factory = [g, probes] { return make_fixed_probe_cop(*g, probes); };
  } else if (spec.name == "greedy-split") {
    GameRules r = rules_for(opts, std::max(1, spec.base_k));
    arena.cop_budget = r.k;
    arena.factory = [g, r] { return make_greedy_split_cop(*g, r); };
  } else {
    throw std::invalid_argument("unknown cop '" + spec.name + "'");
  }
  return arena;
}

BuiltArena build_lifted(const Graph& base, int m, const CopSpec& spec,
                        const CommonOpts& opts) {
  auto sg = std::make_shared<SubdividedGraph>(SubdividedGraph::subdivide(base, m));
  std::shared_ptr<StrategyTree> tree;
  if (!spec.strategy_file.empty()) {
    std::ifstream in(spec.strategy_file);
    if (!in) throw std::runtime_error("cannot read " + spec.strategy_file);
    std::stringstream buf;
    buf << in.rdbuf();
    tree = std::make_shared<StrategyTree>(StrategyTree::parse(buf.str(), base));
  } else {
    auto res = is_k_locatable(base, rules_for(opts, spec.base_k),
                              budget_for(opts), opts.threads);
    if (res.status != SolveStatus::Locatable)
      throw std::invalid_argument(
          "base graph is not locatable with k=" + std::to_string(spec.base_k) +
          "; cannot lift");
    tree = std::make_shared<StrategyTree>(std::move(*res.strategy));
  }
  BuiltArena arena{sg->graph(), nullptr, 1, sg, tree};
  arena.factory = [sg, tree] { return make_lifted_subdivision_cop(*sg, *tree); };
  return arena;
}

// --- simulate ---------------------------------------------------------------

int tree_evader_demo(const std::string& cop_stream, int delta, int cop_budget,
                     int r, int max_turns, std::uint64_t seed) {
  InfiniteTree tree(delta);
  TreeEvader evader(delta, cop_budget, r);
  std::mt19937_64 rng(seed);
  std::vector<std::string> bfs{""};
  std::size_t bfs_pos = 0;
  auto next_probe = [&]() -> std::string {
    if (cop_stream == "bfs") {
      while (bfs_pos >= bfs.size()) {
        for (std::size_t i = 0; bfs.size() <= bfs_pos + 1; ++i)
          for (const auto& nb : tree.neighbors(bfs[i]))
            if (nb.size() > bfs[i].size()) bfs.push_back(nb);
      }
      return bfs[bfs_pos++];
    }
    int depth = static_cast<int>(rng() % 9);
    std::string addr;
    for (int i = 0; i < depth; ++i) {
      int limit = (i == 0) ? delta : delta - 1;
      addr += static_cast<char>('0' + static_cast<int>(rng() % static_cast<std::uint64_t>(limit)));
    }
    return addr;
  };
  for (int turn = 1; turn <= max_turns; ++turn) {
    std::vector<std::string> probes;
    for (int j = 0; j < cop_budget; ++j) probes.push_back(next_probe());
    auto reports = evader.react(probes);
    std::cout << "turn " << turn << " probes";
    for (const auto& p : probes) std::cout << " '" << p << "'";
    std::cout << " distances";
    for (int d : reports) std::cout << " " << d;
    std::cout << " unprobed-components " << evader.unprobed_components() << "\n";
  }
  std::cout << "outcome ESCAPE " << max_turns << "\n";
  return kExitNegative;
}

int cmd_simulate(const std::string& path, const CopSpec& cop_spec,
                 const std::string& robber_name, int k, int m, int max_turns,
                 int horizon, int delta, int evader_r, const CommonOpts& opts,
                 const std::string& transcript_out) {
  if (robber_name == "tree-evader") {
    std::string stream = cop_spec.name.empty() ? "random" : cop_spec.name;
    if (stream != "random" && stream != "bfs")
      throw std::invalid_argument(
          "tree-evader games take --cop random or --cop bfs");
    return tree_evader_demo(stream, delta, k, evader_r, max_turns, opts.seed);
  }
  Graph g = Graph::load_edge_list_file(path);
  if (int rc = check_connected(g); rc != kExitOk) return rc;
  BuiltArena arena = cop_spec.name == "lifted"
                         ? build_lifted(g, m, cop_spec, opts)
                         : build_cop(g, cop_spec, opts);
  int game_k = k > 0 ? k : arena.cop_budget;
  GameRules rules = rules_for(opts, game_k);
  std::unique_ptr<RobberAdversary> robber;
  if (robber_name == "greedy")
    robber = make_greedy_adversary(arena.graph, rules);
  else if (robber_name == "exhaustive")
    robber = make_exhaustive_adversary(arena.graph, rules,
                                       horizon > 0 ? horizon : max_turns,
                                       arena.factory);
  else
    throw std::invalid_argument("unknown robber '" + robber_name + "'");
  auto cop = arena.factory();
  auto t = simulate(arena.graph, *cop, *robber, rules, max_turns);
  std::string text = t.serialize(arena.graph, rules);
  std::cout << text;
  if (!transcript_out.empty()) write_output(transcript_out, text);
  switch (t.outcome) {
    case Transcript::Outcome::Win:
      return kExitOk;
    case Transcript::Outcome::Escape:
      return kExitNegative;
    default:
      return kExitInconclusive;
  }
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const std::string& path, const CopSpec& cop_spec, int k, int m,
               int max_turns, const CommonOpts& opts) {
  Graph g = Graph::load_edge_list_file(path);
  if (int rc = check_connected(g); rc != kExitOk) return rc;
  BuiltArena arena = cop_spec.name == "lifted"
                         ? build_lifted(g, m, cop_spec, opts)
                         : build_cop(g, cop_spec, opts);
  int game_k = k > 0 ? k : arena.cop_budget;
  GameRules rules = rules_for(opts, game_k);
  auto res = verify_strategy(arena.graph, arena.factory, rules, max_turns,
                             opts.threads);
  switch (res.status) {
    case VerifyStatus::VerifiedWin:
      std::cout << "VERIFIED_WIN depth=" << res.max_depth
                << " branches=" << res.branches << "\n";
      return kExitOk;
    case VerifyStatus::Counterexample:
      std::cout << "COUNTEREXAMPLE\n"
                << res.counterexample->serialize(arena.graph, rules);
      return kExitNegative;
    default:
      std::cout << "HORIZON_EXCEEDED branches=" << res.branches << "\n";
      return kExitInconclusive;
  }
}

// --- play ---------------------------------------------------------------

int cmd_play(const std::string& path, std::string cop_name, int k,
             const CopSpec& cop_spec, const CommonOpts& opts) {
  Graph g = Graph::load_edge_list_file(path);
  if (int rc = check_connected(g); rc != kExitOk) return rc;
  GameRules rules = rules_for(opts, std::max(1, k));
  std::shared_ptr<StrategyTree> tree;
  CopSpec spec = cop_spec;
  if (cop_name == "auto") {
    auto res = is_k_locatable(g, rules, budget_for(opts), opts.threads);
    if (res.status != SolveStatus::Locatable) {
      std::cout << "graph is " << status_name(res.status) << " at k=" << rules.k
                << "; you can evade forever\n";
    }
    if (res.strategy) {
      tree = std::make_shared<StrategyTree>(std::move(*res.strategy));
      spec.name = "extracted";
    } else {
      spec.name = "greedy-split";
      spec.base_k = rules.k;
    }
  } else {
    spec.name = cop_name;
  }

  auto gptr = std::make_shared<Graph>(g);
  CopFactory factory;
  if (spec.name == "extracted" && tree) {
    factory = [gptr, tree] { return make_extracted_cop(*gptr, *tree); };
  } else {
    BuiltArena arena = build_cop(g, spec, opts);
    factory = arena.factory;
    tree = arena.tree;
    rules.k = std::max(rules.k, arena.cop_budget);
  }
  auto cop = factory();

  DistanceMatrix dm = DistanceMatrix::build_serial(g);
  std::cout << "you are the robber on " << path << " (" << g.vertex_count()
            << " vertices); the cop probes " << rules.k << " per turn\n";
  std::cout << "pick a start vertex: ";
  std::string line;
  int here = -1;
  while (here < 0 && std::getline(std::cin, line)) {
    auto v = g.find_vertex(line);
    if (v)
      here = *v;
    else
      std::cout << "no vertex '" << line << "'; try again: ";
  }
  if (here < 0) return kExitOk;  // EOF: conceded before starting

  VertexSet belief = VertexSet::full(g.vertex_count());
  for (int turn = 1;; ++turn) {
    auto probes = cop->next_probes();
    DistanceVector dv = distance_vector(dm, here, probes);
    std::cout << "turn " << turn << ": cop probes";
    for (int p : probes) std::cout << " " << g.label(p);
    std::cout << " -> distances";
    for (int d : dv) std::cout << " " << d;
    std::cout << "\n";
    VertexSet filtered(g.vertex_count());
    for (int v = belief.first(); v != -1; v = belief.next(v))
      if (distance_vector(dm, v, probes) == dv) filtered.set(v);
    cop->observe(dv);
    if (filtered.count() == 1) {
      std::cout << "cop wins: you are at " << g.label(filtered.first())
                << " (turn " << turn << ")\n";
      return kExitOk;
    }
    belief = expand(g, filtered, rules, probes);
    // prompt a legal move
    while (true) {
      std::cout << "your move from " << g.label(here)
                << " (stay with '.', neighbour label, or 'quit'): ";
      if (!std::getline(std::cin, line) || line == "quit") {
        std::cout << "conceded after " << turn << " turns\n";
        return kExitOk;
      }
      if (line == "." || line == g.label(here)) break;
      auto v = g.find_vertex(line);
      if (!v || !g.has_edge(here, *v)) {
        std::cout << "illegal move\n";
        continue;
      }
      if (rules.variant == MoveRule::NoMoveToLastProbes &&
          std::find(probes.begin(), probes.end(), *v) != probes.end()) {
        std::cout << "illegal move: that vertex was just probed\n";
        continue;
      }
      here = *v;
      break;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robber-locating: distance-probe pursuit games on graphs"};
  app.require_subcommand(1);
  CommonOpts common;
  int exit_code = kExitOk;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--variant", common.variant, "move rule: free or seager")
        ->check(CLI::IsMember({"free", "seager"}));
    sub->add_option("--budget-nodes", common.budget_nodes, "belief node budget");
    sub->add_option("--budget-ms", common.budget_ms, "wall-clock budget (ms)");
    sub->add_option("--threads", common.threads, "worker threads (1 = serial)");
    sub->add_option("--seed", common.seed, "random seed");
  };

  // gen
  std::string gen_family, gen_out;
  std::vector<long long> gen_params;
  auto* gen = app.add_subcommand("gen", "generate a named graph family");
  gen->add_option("family", gen_family, "complete|cycle|path|kbipartite|gnk|gn|tree|random")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");
  add_common(gen);
  gen->callback([&] {
    exit_code = cmd_gen(gen_family, gen_params, common.seed, gen_out);
  });

  // solve
  std::string solve_path, solve_strategy_out;
  int solve_k = 1, solve_kmax = 6;
  bool solve_find_rlp = false;
  auto* solve = app.add_subcommand("solve", "decide k-locatability exactly");
  solve->add_option("graph", solve_path, "edge-list file")->required();
  solve->add_option("-k", solve_k, "probes per turn");
  solve->add_flag("--find-rlp", solve_find_rlp, "search the least locating k");
  solve->add_option("--kmax", solve_kmax, "largest k to try with --find-rlp");
  solve->add_option("--strategy-out", solve_strategy_out,
                    "write the winning strategy tree here");
  add_common(solve);
  solve->callback([&] {
    exit_code = cmd_solve(solve_path, solve_k, solve_find_rlp, solve_kmax,
                          common, solve_strategy_out);
  });

  // scan-m
  std::string scan_path;
  int scan_from = 1, scan_to = 1;
  bool scan_csv = false;
  auto* scan = app.add_subcommand("scan-m", "single-probe status per subdivision length");
  scan->add_option("graph", scan_path, "edge-list file of the base graph")->required();
  scan->add_option("--from", scan_from, "first m")->required();
  scan->add_option("--to", scan_to, "last m")->required();
  scan->add_flag("--csv", scan_csv, "machine-readable output");
  add_common(scan);
  scan->callback([&] {
    exit_code = cmd_scan_m(scan_path, scan_from, scan_to, scan_csv, common);
  });

  // metric-dim
  std::string md_path;
  auto* md = app.add_subcommand("metric-dim", "metric dimension with a witness");
  md->add_option("graph", md_path, "edge-list file")->required();
  md->callback([&] { exit_code = cmd_metric_dim(md_path); });

  // subdivide
  std::string sub_path, sub_out;
  int sub_m = 2;
  auto* sub = app.add_subcommand("subdivide", "replace each edge by a length-m path");
  sub->add_option("graph", sub_path, "edge-list file")->required();
  sub->add_option("-m", sub_m, "thread length")->required();
  sub->add_option("-o,--out", sub_out, "output file (default stdout)");
  sub->callback([&] { exit_code = cmd_subdivide(sub_path, sub_m, sub_out); });

  // simulate
  std::string sim_path, sim_robber = "greedy", sim_transcript;
  CopSpec sim_cop;
  int sim_k = 0, sim_m = 0, sim_turns = 50, sim_horizon = 0, sim_delta = 4,
      sim_r = 5;
  auto* sim = app.add_subcommand("simulate", "run one cop-vs-robber game");
  sim->add_option("graph", sim_path, "edge-list file ('-' for tree-evader games)")
      ->required();
  sim->add_option("--cop", sim_cop.name,
                  "resolving|quadratic|maxdeg3|extracted|lifted|fixed|greedy-split"
                  " (tree-evader games: random|bfs)")
      ->required();
  sim->add_option("--robber", sim_robber, "greedy|exhaustive|tree-evader");
  sim->add_option("-k", sim_k, "probes per turn (default: the cop's budget)");
  sim->add_option("--m", sim_m, "subdivision length for the lifted cop");
  sim->add_option("--base-k", sim_cop.base_k, "base-strategy k for the lifted cop");
  sim->add_option("--strategy-file", sim_cop.strategy_file,
                  "strategy tree for extracted/lifted cops");
  sim->add_option("--probe", sim_cop.fixed_probes, "fixed cop probe label (repeatable)");
  sim->add_option("--max-turns", sim_turns, "turn cap");
  sim->add_option("--horizon", sim_horizon, "exhaustive adversary horizon");
  sim->add_option("--delta", sim_delta, "tree-evader degree");
  sim->add_option("--r", sim_r, "tree-evader safety distance");
  add_common(sim);
  sim->callback([&] {
    exit_code = cmd_simulate(sim_path, sim_cop, sim_robber, sim_k, sim_m,
                             sim_turns, sim_horizon, sim_delta, sim_r, common,
                             sim_transcript);
  });
  sim->add_option("--transcript", sim_transcript, "write the transcript here");

  // verify
  std::string ver_path;
  CopSpec ver_cop;
  int ver_k = 0, ver_m = 0, ver_turns = 50;
  auto* ver = app.add_subcommand("verify", "check a cop against every robber line");
  ver->add_option("graph", ver_path, "edge-list file")->required();
  ver->add_option("--cop", ver_cop.name,
                  "resolving|quadratic|maxdeg3|extracted|lifted|fixed|greedy-split")
      ->required();
  ver->add_option("-k", ver_k, "probes per turn (default: the cop's budget)");
  ver->add_option("--m", ver_m, "subdivision length for the lifted cop");
  ver->add_option("--base-k", ver_cop.base_k, "base-strategy k for the lifted cop");
  ver->add_option("--strategy-file", ver_cop.strategy_file,
                  "strategy tree for extracted/lifted cops");
  ver->add_option("--probe", ver_cop.fixed_probes, "fixed cop probe label (repeatable)");
  ver->add_option("--max-turns", ver_turns, "verification horizon");
  add_common(ver);
  ver->callback([&] {
    exit_code = cmd_verify(ver_path, ver_cop, ver_k, ver_m, ver_turns, common);
  });

  // play
  std::string play_path, play_cop = "auto";
  CopSpec play_spec;
  int play_k = 1;
  auto* play = app.add_subcommand("play", "play the robber against a cop");
  play->add_option("graph", play_path, "edge-list file")->required();
  play->add_option("--cop", play_cop,
                   "auto|resolving|quadratic|maxdeg3|extracted|greedy-split");
  play->add_option("-k", play_k, "probes per turn");
  play->add_option("--strategy-file", play_spec.strategy_file,
                   "strategy tree for the extracted cop");
  add_common(play);
  play->callback([&] {
    exit_code = cmd_play(play_path, play_cop, play_k, play_spec, common);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
