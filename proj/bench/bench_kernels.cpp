// Benchmark comparing the serial reference kernels with their OpenMP
// counterparts: all-pairs BFS, the solver's fixed-point rounds, and
// exhaustive strategy verification. Run with --quick for a fast sanity pass.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "rloc/families.hpp"
#include "rloc/solver.hpp"
#include "rloc/strategies.hpp"
#include "rloc/subdivision.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rloc;
namespace families = rloc::families;
using Clock = std::chrono::steady_clock;

namespace {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <typename Fn>
double time_ms(Fn&& fn) {
  auto start = Clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   results %s\n",
              kernel, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              equal ? "equal" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int threads = hardware_threads();
  std::printf("threads available: %d\n", threads);

  {
    Graph g = families::random_connected_max_degree(quick ? 600 : 3000, 4, 42);
    DistanceMatrix serial_out, parallel_out;
    double s = time_ms([&] { serial_out = DistanceMatrix::build_serial(g); });
    double p = time_ms([&] { parallel_out = DistanceMatrix::build_parallel(g, threads); });
    report("all-pairs BFS", s, p, serial_out == parallel_out);
  }

  {
    Graph g = quick ? families::gnk(4, 2)
                    : SubdividedGraph::subdivide(families::complete(4), 3).graph();
    GameRules rules{quick ? 3 : 1, MoveRule::FreeMove};
    SolveResult a, b;
    double s = time_ms([&] { a = is_k_locatable(g, rules, SolveBudget{}, 1); });
    double p = time_ms([&] { b = is_k_locatable(g, rules, SolveBudget{}, threads); });
    bool equal = a.status == b.status && a.turn_bound == b.turn_bound;
    report("belief fixed point", s, p, equal);
  }

  {
    Graph base = families::complete(4);
    auto res = is_k_locatable(base, GameRules{3, MoveRule::FreeMove});
    auto sg = SubdividedGraph::subdivide(base, 8);
    GameRules rules{1, MoveRule::FreeMove};
    int horizon = quick ? 60 : 200;
    CopFactory factory = [&] {
      return make_lifted_subdivision_cop(sg, *res.strategy);
    };
    VerifyResult a, b;
    double s = time_ms([&] { a = verify_strategy(sg.graph(), factory, rules, horizon, 1); });
    double p = time_ms([&] { b = verify_strategy(sg.graph(), factory, rules, horizon, threads); });
    bool equal = a.status == b.status && a.max_depth == b.max_depth &&
                 a.branches == b.branches;
    report("strategy verification", s, p, equal);
  }

  return 0;
}
