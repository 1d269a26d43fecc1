#include "doctest.h"
#include "rloc/families.hpp"
#include "rloc/solver.hpp"
#include "rloc/strategies.hpp"

using namespace rloc;
namespace families = rloc::families;

TEST_CASE("greedy adversary caught instantly by a resolving set") {
  Graph p4 = families::path(4);
  auto cop = make_resolving_set_cop(p4);
  auto robber = make_greedy_adversary(p4, GameRules{1});
  auto t = simulate(p4, *cop, *robber, GameRules{1, MoveRule::FreeMove}, 10);
  CHECK(t.outcome == Transcript::Outcome::Win);
  CHECK(t.end_turn == 1);
}

TEST_CASE("greedy adversary outlasts a fixed probe on C_4") {
  Graph c4 = families::cycle(4);
  auto cop = make_fixed_probe_cop(c4, {0});
  auto robber = make_greedy_adversary(c4, GameRules{1});
  auto t = simulate(c4, *cop, *robber, GameRules{1, MoveRule::FreeMove}, 10);
  CHECK(t.outcome == Transcript::Outcome::Timeout);  // survives, cannot certify
  CHECK(t.turns.size() == 10);
}

TEST_CASE("greedy adversary vs maxdeg3 on K_4 is caught") {
  Graph k4 = families::complete(4);
  auto cop = make_maxdeg3_cop(k4);
  auto robber = make_greedy_adversary(k4, GameRules{3});
  auto t = simulate(k4, *cop, *robber, GameRules{3, MoveRule::FreeMove}, 50);
  CHECK(t.outcome == Transcript::Outcome::Win);
}

TEST_CASE("exhaustive adversary escapes every single-probe cop on C_3") {
  Graph c3 = families::cycle(3);
  for (CopFactory factory : std::vector<CopFactory>{
           [&] { return make_fixed_probe_cop(c3, {1}); },
           [&] { return make_greedy_split_cop(c3, GameRules{1}); }}) {
    auto cop = factory();
    auto robber = make_exhaustive_adversary(c3, GameRules{1}, 10, factory);
    auto t = simulate(c3, *cop, *robber, GameRules{1, MoveRule::FreeMove}, 10);
    CHECK(t.outcome == Transcript::Outcome::Escape);
  }
}

TEST_CASE("exhaustive adversary escapes on gn(1) with one probe short") {
  Graph g1 = families::gn(1);
  CopFactory factory = [&] { return make_greedy_split_cop(g1, GameRules{1}); };
  auto cop = factory();
  auto robber = make_exhaustive_adversary(g1, GameRules{1}, 6, factory);
  auto t = simulate(g1, *cop, *robber, GameRules{1, MoveRule::FreeMove}, 6);
  CHECK(t.outcome == Transcript::Outcome::Escape);
}

TEST_CASE("exhaustive adversary is caught by a winning extracted strategy") {
  Graph c3 = families::cycle(3);
  auto res = is_k_locatable(c3, GameRules{2, MoveRule::FreeMove});
  REQUIRE(res.strategy.has_value());
  CopFactory factory = [&] { return make_extracted_cop(c3, *res.strategy); };
  auto cop = factory();
  auto robber = make_exhaustive_adversary(c3, GameRules{2}, 10, factory);
  auto t = simulate(c3, *cop, *robber, GameRules{2, MoveRule::FreeMove}, 10);
  CHECK(t.outcome == Transcript::Outcome::Win);
  CHECK(t.end_turn <= res.turn_bound);
}

TEST_CASE("simulate enforces the probe budget") {
  Graph k4 = families::complete(4);
  auto cop = make_resolving_set_cop(k4);  // budget 3
  auto robber = make_greedy_adversary(k4, GameRules{1});
  CHECK_THROWS_AS(simulate(k4, *cop, *robber, GameRules{1, MoveRule::FreeMove}, 5),
                  std::invalid_argument);
}

TEST_CASE("transcript serialization is stable") {
  Graph p4 = families::path(4);
  auto cop = make_resolving_set_cop(p4);
  auto robber = make_greedy_adversary(p4, GameRules{1});
  GameRules rules{1, MoveRule::FreeMove};
  auto t = simulate(p4, *cop, *robber, rules, 10);
  // all response classes are singletons; the greedy tie-break keeps the
  // lexicographically least vector (0), i.e. the robber at the probe
  CHECK(t.serialize(p4, rules) ==
        "rules k 1 variant free\n"
        "turn 1 probes v0 distances 0 belief 1\n"
        "outcome WIN v0 1\n");
}

TEST_CASE("simulate under the seager variant") {
  Graph c3 = families::cycle(3);
  GameRules rules{1, MoveRule::NoMoveToLastProbes};
  auto cop = make_fixed_probe_cop(c3, {0});
  auto robber = make_greedy_adversary(c3, rules);
  auto t = simulate(c3, *cop, *robber, rules, 8);
  // the adversary must stay consistent under the movement restriction
  CHECK(t.turns.size() <= 8);
}
