#include <random>

#include "doctest.h"
#include "rloc/tree_evader.hpp"

using namespace rloc;

namespace {

std::string random_address(const InfiniteTree& tree, std::mt19937_64& rng,
                           int max_depth) {
  int depth = static_cast<int>(rng() % static_cast<std::uint64_t>(max_depth + 1));
  std::string addr;
  for (int i = 0; i < depth; ++i) {
    int limit = (i == 0) ? tree.delta() : tree.delta() - 1;
    addr += static_cast<char>('0' + static_cast<int>(rng() % static_cast<std::uint64_t>(limit)));
  }
  return addr;
}

// Breadth-first stream of all tree addresses.
std::vector<std::string> bfs_addresses(const InfiniteTree& tree, std::size_t count) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; out.size() < count; ++i)
    for (const auto& nb : tree.neighbors(out[i]))
      if (nb.size() > out[i].size()) out.push_back(nb);
  out.resize(count);
  return out;
}

}  // namespace

TEST_CASE("infinite tree addressing") {
  InfiniteTree t(4);
  CHECK(t.neighbors("").size() == 4);
  CHECK(t.neighbors("0").size() == 4);  // parent + 3 children
  CHECK(t.valid("012"));
  CHECK_FALSE(t.valid("03"));  // non-root children use delta-1 labels
  CHECK(t.distance("", "012") == 3);
  CHECK(t.distance("00", "01") == 2);
  CHECK(t.distance("012", "012") == 0);
  CHECK(t.distance("010", "02") == 3);
}

TEST_CASE("evader survives random probe streams") {
  // 20 seeded streams, delta 4, budget 3 = floor(16/4)-1, r = 5, 50 turns
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    InfiniteTree tree(4);
    TreeEvader evader(4, 3, 5);
    std::mt19937_64 rng(seed);
    for (int turn = 0; turn < 50; ++turn) {
      std::vector<std::string> probes;
      for (int j = 0; j < 3; ++j) probes.push_back(random_address(tree, rng, 8));
      auto reports = evader.react(probes);
      REQUIRE(reports.size() == probes.size());
      for (std::size_t j = 0; j < probes.size(); ++j)
        CHECK(reports[j] ==
              tree.distance(probes[j], evader.anchor()) + 5);
      // the maintained invariant, asserted every turn
      CHECK(evader.unprobed_components() >= evader.required_components());
    }
    CHECK(evader.certifies_escape());
  }
}

TEST_CASE("evader survives a systematic breadth-first cop") {
  InfiniteTree tree(4);
  TreeEvader evader(4, 3, 5);
  auto stream = bfs_addresses(tree, 150);
  std::size_t pos = 0;
  for (int turn = 0; turn < 50; ++turn) {
    std::vector<std::string> probes(stream.begin() + static_cast<std::ptrdiff_t>(pos),
                                    stream.begin() + static_cast<std::ptrdiff_t>(pos + 3));
    pos += 3;
    evader.react(probes);
    CHECK(evader.unprobed_components() >= evader.required_components());
  }
}

TEST_CASE("evader with delta 3") {
  // budget 1 = floor(9/4)-1
  InfiniteTree tree(3);
  TreeEvader evader(3, 1, 3);
  std::mt19937_64 rng(7);
  for (int turn = 0; turn < 50; ++turn) {
    evader.react({random_address(tree, rng, 6)});
    CHECK(evader.unprobed_components() >= evader.required_components());
  }
  // budget 0 survives trivially
  TreeEvader lazy(3, 0, 2);
  for (int turn = 0; turn < 5; ++turn) {
    CHECK(lazy.react({}).empty());
    CHECK(lazy.unprobed_components() >= lazy.required_components());
  }
}

TEST_CASE("evader preconditions") {
  CHECK_THROWS_AS(TreeEvader(4, 4, 5), std::invalid_argument);  // budget too big
  CHECK_THROWS_AS(TreeEvader(4, 3, 0), std::invalid_argument);
  TreeEvader e(4, 2, 3);
  CHECK_THROWS_AS(e.react({"0", "1", "2"}), std::invalid_argument);  // over budget
  CHECK_THROWS_AS(e.react({"03"}), std::invalid_argument);  // non-root labels stop at 2
}
