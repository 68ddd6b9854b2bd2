#include <cmath>
#include <cstdlib>

#include "btwc/betweenness.hpp"
#include "btwc/errors.hpp"
#include "btwc/generators.hpp"
#include "btwc/random_graphs.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace btwc;

namespace {

void check_equal(const ScoreVector& got, const std::vector<Rat>& want) {
  REQUIRE(got.scores.size() == want.size());
  for (size_t i = 0; i < want.size(); ++i) {
    CAPTURE(i);
    CHECK(got.scores[i] == want[i]);
  }
}

void check_same(const ScoreVector& a, const ScoreVector& b) {
  REQUIRE(a.scores.size() == b.scores.size());
  for (size_t i = 0; i < a.scores.size(); ++i) {
    CAPTURE(i);
    CHECK(a.scores[i] == b.scores[i]);
  }
}

}  // namespace

TEST_CASE("exact engine on known graphs") {
  SUBCASE("star hub takes every pair") {
    check_equal(betweenness_exact(generate({Family::Star, 5})),
                {make_rat(6, 1), {}, {}, {}, {}});
  }
  SUBCASE("complete graph has no interior vertices") {
    ScoreVector s = betweenness_exact(generate({Family::Complete, 4}));
    for (const Rat& x : s.scores) CHECK(x == 0);
  }
  SUBCASE("four cycle splits each opposite pair") {
    ScoreVector s = betweenness_exact(generate({Family::Cycle, 4}));
    for (const Rat& x : s.scores) CHECK(x == make_rat(1, 2));
  }
  SUBCASE("ladder of three rungs") {
    check_equal(betweenness_exact(generate({Family::Ladder, 3})),
                {make_rat(5, 6), make_rat(10, 3), make_rat(5, 6),
                 make_rat(5, 6), make_rat(10, 3), make_rat(5, 6)});
  }
  SUBCASE("small wheel") {
    check_equal(betweenness_exact(generate({Family::Wheel, 5})),
                {make_rat(2, 3), make_rat(1, 3), make_rat(1, 3),
                 make_rat(1, 3), make_rat(1, 3)});
  }
  SUBCASE("cube is transitive") {
    ScoreVector s = betweenness_exact(generate({Family::Hypercube, 3}));
    for (const Rat& x : s.scores) CHECK(x == make_rat(5, 2));
  }
  SUBCASE("path interior") {
    check_equal(betweenness_exact(generate({Family::Path, 5})),
                {{}, make_rat(3, 1), make_rat(4, 1), make_rat(3, 1), {}});
  }
}

TEST_CASE("three independent engines agree") {
  std::vector<Graph> graphs;
  graphs.push_back(generate({Family::Wheel, 6}));
  graphs.push_back(generate({Family::CompleteBipartite, 2, 3}));
  graphs.push_back(generate({Family::Crown, 4}));
  graphs.push_back(generate({Family::Ladder, 4}));
  graphs.push_back(generate({Family::CompleteMinusEdge, 5}));
  Rng rng(77);
  for (int round = 0; round < 12; ++round)
    graphs.push_back(random_connected_gnp(4 + static_cast<Vertex>(rng.below(7)),
                                          0.3 + 0.5 * rng.uniform(), rng));
  for (const Graph& g : graphs) {
    ScoreVector exact = betweenness_exact(g);
    check_same(exact, betweenness_bruteforce(g));
    check_equal(exact, oracle::betweenness(g));
  }
}

TEST_CASE("disconnected graphs count reachable pairs only") {
  // Two triangles sharing nothing, plus a path component.
  Graph g = Graph::build(
      9, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {6, 7}, {7, 8}});
  ScoreVector exact = betweenness_exact(g);
  check_same(exact, betweenness_bruteforce(g));
  check_equal(exact, oracle::betweenness(g));
  CHECK(exact.scores[7] == 1);
  CHECK(exact.scores[0] == 0);
}

TEST_CASE("thread count does not change exact results") {
  Rng rng(123);
  Graph g = random_connected_gnp(24, 0.25, rng);
  ScoreVector serial = betweenness_exact(g, 1);
  check_same(serial, betweenness_exact(g, 2));
  check_same(serial, betweenness_exact(g, 5));
  check_same(serial, betweenness_exact(g, 0));
}

TEST_CASE("score sum equals total interior credit") {
  std::vector<Graph> graphs;
  graphs.push_back(generate({Family::Wheel, 9}));
  graphs.push_back(generate({Family::Hypercube, 4}));
  graphs.push_back(generate({Family::Path, 7}));
  Rng rng(31);
  for (int round = 0; round < 8; ++round)
    graphs.push_back(random_connected_gnp(10, 0.4, rng));
  for (const Graph& g : graphs) {
    Rat total;
    for (const Rat& x : betweenness_exact(g).scores) total += x;
    CHECK(total == Rat(total_interior_credit(g)));
  }
}

TEST_CASE("tree leaves lie on no geodesic interior") {
  Rng rng(9);
  for (int round = 0; round < 10; ++round) {
    Graph t = random_tree(2 + static_cast<Vertex>(rng.below(20)), rng);
    ScoreVector s = betweenness_exact(t);
    for (Vertex v = 0; v < t.num_vertices(); ++v)
      if (t.degree(v) == 1) CHECK(s.scores[v] == 0);
  }
}

TEST_CASE("pair contribution is a probability") {
  Graph g = generate({Family::Wheel, 7});
  for (Vertex s = 0; s < g.num_vertices(); ++s)
    for (Vertex t = static_cast<Vertex>(s + 1); t < g.num_vertices(); ++t) {
      Int all = num_geodesics(g, s, t);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (v == s || v == t) continue;
        Int through = geodesics_through(g, s, t, v);
        CHECK(through >= 0);
        CHECK(through <= all);
      }
    }
}

TEST_CASE("bruteforce refuses large graphs") {
  Graph g = generate({Family::Cycle, 15});
  CHECK_THROWS_AS(betweenness_bruteforce(g), SizeError);
  CHECK_NOTHROW(betweenness_bruteforce(g, 15));
}

TEST_CASE("float engine") {
  SUBCASE("matches exact values closely") {
    Graph g = generate({Family::Star, 5});
    std::vector<double> f = betweenness_float(g);
    CHECK(f[0] == doctest::Approx(6.0).epsilon(1e-12));
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] == 0.0);

    Graph c7 = generate({Family::Cycle, 7});
    for (double x : betweenness_float(c7))
      CHECK(std::abs(x - 3.0) <= 1e-12);
  }
  SUBCASE("tracks the exact engine on random graphs") {
    Rng rng(2026);
    for (int round = 0; round < 6; ++round) {
      Graph g = random_connected_gnp(12, 0.45, rng);
      ScoreVector exact = betweenness_exact(g);
      std::vector<double> f = betweenness_float(g);
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        CHECK(std::abs(f[v] - exact.scores[v].get_d()) <= 1e-9);
    }
  }
  SUBCASE("bitwise identical across thread counts") {
    Rng rng(404);
    Graph g = random_connected_gnp(30, 0.2, rng);
    std::vector<double> one = betweenness_float(g, 1);
    CHECK(one == betweenness_float(g, 2));
    CHECK(one == betweenness_float(g, 5));
    CHECK(one == betweenness_float(g, 0));
  }
}
