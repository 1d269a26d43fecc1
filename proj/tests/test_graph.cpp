#include "doctest.h"
#include "rloc/distance_matrix.hpp"
#include "rloc/families.hpp"
#include "rloc/graph.hpp"

using rloc::DistanceMatrix;
using rloc::Graph;
using rloc::VertexSet;
namespace families = rloc::families;

namespace {

Graph triangle() {
  return Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

}  // namespace

TEST_CASE("build_graph basics") {
  Graph g = triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.vertex("c") == 2);

  Graph single = Graph::from_edges({"x"}, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
  CHECK(single.is_connected());

  Graph dup = Graph::from_edges({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("build_graph contract errors") {
  CHECK_THROWS_AS(Graph::from_edges({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({"a"}, {{"a", "zz"}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges({"a"}, {{"a", "a"}}), std::invalid_argument);
}

TEST_CASE("distances") {
  Graph g = triangle();
  CHECK(g.distance(0, 1) == 1);
  CHECK(g.distance(0, 0) == 0);

  Graph p = Graph::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.distance(0, 2) == 2);
  CHECK(p.distances_from(1) == std::vector<int>{1, 0, 1});

  Graph two = Graph::from_edges({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  CHECK(two.distance(0, 3) == Graph::kUnreachable);
  CHECK_FALSE(two.is_connected());

  CHECK(triangle().distances_from(0) == std::vector<int>{0, 1, 1});
  CHECK(families::complete(4).distances_from(2) == std::vector<int>{1, 1, 0, 1});
}

TEST_CASE("connectivity and degree") {
  CHECK(triangle().is_connected());
  CHECK(Graph::from_edges({"x"}, {}).is_connected());
  CHECK(families::complete(4).max_degree() == 3);
  CHECK(families::cycle(5).max_degree() == 2);
  Graph star = Graph::from_edges({"c", "l1", "l2", "l3", "l4"},
                                 {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}});
  CHECK(star.max_degree() == 4);
}

TEST_CASE("closed neighborhood") {
  Graph g = triangle();
  VertexSet s(3);
  s.set(0);
  CHECK(g.closed_neighborhood(s).count() == 3);
  VertexSet e(3);
  CHECK(g.closed_neighborhood(e).empty());
  Graph k4 = families::complete(4);
  VertexSet one(4);
  one.set(2);
  CHECK(k4.closed_neighborhood(one).count() == 4);
}

TEST_CASE("closed neighborhood is extensive and monotone") {
  Graph g = families::random_connected_max_degree(9, 3, 11);
  VertexSet s(g.vertex_count()), t(g.vertex_count());
  s.set(1);
  s.set(4);
  t = s;
  t.set(7);
  auto ns = g.closed_neighborhood(s);
  auto nt = g.closed_neighborhood(t);
  CHECK(s.is_subset_of(ns));
  CHECK(ns.is_subset_of(nt));
}

TEST_CASE("distance symmetry and triangle inequality, exhaustive on small graphs") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    Graph g = families::random_connected_max_degree(8, 4, seed);
    const int n = g.vertex_count();
    DistanceMatrix dm = DistanceMatrix::build_serial(g);
    for (int u = 0; u < n; ++u) {
      CHECK(dm.at(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(dm.at(u, v) == dm.at(v, u));
        for (int w = 0; w < n; ++w)
          CHECK(dm.at(u, w) <= dm.at(u, v) + dm.at(v, w));
      }
    }
    // one sweep agrees with pairwise queries
    for (int u = 0; u < n; ++u) {
      auto row = g.distances_from(u);
      for (int v = 0; v < n; ++v) CHECK(row[static_cast<std::size_t>(v)] == g.distance(u, v));
    }
  }
}

TEST_CASE("distance matrix parallel equals serial") {
  Graph g = families::random_connected_max_degree(40, 5, 99);
  CHECK(DistanceMatrix::build_parallel(g, 2) == DistanceMatrix::build_serial(g));
}

TEST_CASE("edge list round trip is bit exact") {
  Graph g = families::gnk(4, 2);
  std::string text = g.to_edge_list();
  Graph h = Graph::parse_edge_list(text);
  CHECK(h.to_edge_list() == text);
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_count() == g.edge_count());
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(h.label(v) == g.label(v));
}

TEST_CASE("edge list parser accepts comments and rejects junk") {
  Graph g = Graph::parse_edge_list(
      "# a comment\ngraph 2\nv 0 a\nv 1 b\n# another\ne a b\n");
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(Graph::parse_edge_list("graph 2\nv 0 a\ne a b\n"), rloc::ParseError);
  CHECK_THROWS_AS(Graph::parse_edge_list("v 0 a\n"), rloc::ParseError);
  CHECK_THROWS_AS(Graph::parse_edge_list("graph 1\nv 0 a\nq zz\n"), rloc::ParseError);
}
