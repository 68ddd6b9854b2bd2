#include <algorithm>

#include "btwc/betweenness.hpp"
#include "btwc/centralization.hpp"
#include "btwc/closed_forms.hpp"
#include "btwc/errors.hpp"
#include "btwc/generators.hpp"
#include "doctest.h"

using namespace btwc;

namespace {

void check_uniform(const FormulaResult& r, const Rat& score) {
  for (const Rat& x : r.per_vertex.scores) CHECK(x == score);
  REQUIRE(r.centralization.has_value());
  CHECK(*r.centralization == 0);
}

}  // namespace

TEST_CASE("wheel formula") {
  FormulaResult w5 = wheel_centrality(5);
  CHECK(w5.per_vertex.scores[0] == make_rat(2, 3));
  for (int v = 1; v < 5; ++v) CHECK(w5.per_vertex.scores[v] == make_rat(1, 3));
  CHECK(*w5.centralization == make_rat(1, 18));

  FormulaResult w4 = wheel_centrality(4);
  for (const Rat& x : w4.per_vertex.scores) CHECK(x == 0);
  CHECK(*w4.centralization == 0);

  FormulaResult w7 = wheel_centrality(7);
  CHECK(w7.per_vertex.scores[0] == make_rat(6, 1));
  CHECK(w7.per_vertex.scores[3] == make_rat(1, 2));
  CHECK((*w7.relative)[0] == make_rat(2, 5));
  CHECK((*w7.relative)[1] == make_rat(1, 30));
  CHECK(*w7.centralization == make_rat(11, 30));

  CHECK_THROWS_AS(wheel_centrality(3), ParamError);
}

TEST_CASE("complete minus an edge") {
  FormulaResult r = complete_minus_edge_centrality(5);
  CHECK(r.per_vertex.scores[0] == 0);
  CHECK(r.per_vertex.scores[1] == 0);
  for (int v = 2; v < 5; ++v) CHECK(r.per_vertex.scores[v] == make_rat(1, 3));
  CHECK(*r.centralization == make_rat(1, 36));

  CHECK(*complete_minus_edge_centrality(3).centralization == 1);
  CHECK(*complete_minus_edge_centrality(4).centralization == make_rat(1, 9));
  CHECK_THROWS_AS(complete_minus_edge_centrality(2), ParamError);
}

TEST_CASE("complete bipartite formula") {
  FormulaResult r = complete_bipartite_centrality(2, 3);
  CHECK(r.per_vertex.scores[0] == make_rat(3, 2));
  CHECK(r.per_vertex.scores[1] == make_rat(3, 2));
  for (int v = 2; v < 5; ++v) CHECK(r.per_vertex.scores[v] == make_rat(1, 3));
  CHECK(*r.centralization == make_rat(7, 48));

  CHECK(*complete_bipartite_centrality(2, 2).centralization == 0);
  CHECK(*complete_bipartite_centrality(1, 4).centralization == 1);
  CHECK(*complete_bipartite_centrality(4, 1).centralization == 1);

  SUBCASE("star as a bipartite special case") {
    FormulaResult k15 = complete_bipartite_centrality(1, 5);
    FormulaResult s6 = star_centrality(6);
    CHECK(k15.per_vertex.scores == s6.per_vertex.scores);
    CHECK(*k15.centralization == 1);
  }
}

TEST_CASE("cocktail party formula") {
  for (long n : {2L, 3L, 5L, 9L}) {
    FormulaResult r = cocktail_party_centrality(n);
    check_uniform(r, make_rat(1, 2));
    CHECK((*r.relative)[0] == make_rat(1, (2 * n - 1) * (2 * n - 2)));
  }
  CHECK((*cocktail_party_centrality(5).relative)[3] == make_rat(1, 72));
}

TEST_CASE("crown formula") {
  for (long n : {3L, 4L, 7L}) {
    FormulaResult r = crown_centrality(n);
    check_uniform(r, make_rat(n + 1, 2));
  }
  CHECK((*crown_centrality(5).relative)[0] == make_rat(1, 12));
}

TEST_CASE("path formula") {
  FormulaResult p5 = path_centrality(5);
  CHECK(p5.per_vertex.scores == std::vector<Rat>{Rat(), make_rat(3, 1),
                                                 make_rat(4, 1), make_rat(3, 1),
                                                 Rat()});
  CHECK(*p5.centralization == make_rat(5, 12));
  CHECK(*path_centrality(4).centralization == make_rat(4, 9));
  CHECK(*path_centrality(3).centralization == 1);

  SUBCASE("degenerate orders have scores only") {
    FormulaResult p1 = path_centrality(1);
    CHECK(p1.per_vertex.scores.size() == 1);
    CHECK_FALSE(p1.relative.has_value());
    CHECK_FALSE(p1.centralization.has_value());
    FormulaResult p2 = path_centrality(2);
    CHECK_FALSE(p2.centralization.has_value());
  }
}

TEST_CASE("ladder formula") {
  FormulaResult l3 = ladder_centrality(3);
  CHECK(l3.per_vertex.scores ==
        std::vector<Rat>{make_rat(5, 6), make_rat(10, 3), make_rat(5, 6),
                         make_rat(5, 6), make_rat(10, 3), make_rat(5, 6)});

  SUBCASE("row and mirror symmetry") {
    for (long n : {2L, 5L, 8L}) {
      FormulaResult r = ladder_centrality(n);
      const auto& s = r.per_vertex.scores;
      for (long k = 0; k < n; ++k) {
        CHECK(s[k] == s[k + n]);          // rows
        CHECK(s[k] == s[n - 1 - k]);      // left-right
      }
    }
  }
  SUBCASE("two rungs make a four cycle") {
    FormulaResult l2 = ladder_centrality(2);
    for (const Rat& x : l2.per_vertex.scores) CHECK(x == make_rat(1, 2));
  }
  CHECK_THROWS_AS(ladder_centrality(1), ParamError);
}

TEST_CASE("cycle formula") {
  CHECK(cycle_centrality(4).per_vertex.scores[0] == make_rat(1, 2));
  CHECK(cycle_centrality(5).per_vertex.scores[0] == 1);
  CHECK(cycle_centrality(6).per_vertex.scores[0] == make_rat(2, 1));
  CHECK(cycle_centrality(7).per_vertex.scores[0] == make_rat(3, 1));
  CHECK((*cycle_centrality(6).relative)[0] == make_rat(1, 5));
  CHECK((*cycle_centrality(7).relative)[0] == make_rat(1, 5));
  check_uniform(cycle_centrality(12), make_rat(25, 2));
}

TEST_CASE("circular ladder formula") {
  CHECK(circular_ladder_centrality(3).per_vertex.scores[0] == 1);
  CHECK(circular_ladder_centrality(4).per_vertex.scores[0] == make_rat(5, 2));
  CHECK(circular_ladder_centrality(5).per_vertex.scores[0] == make_rat(4, 1));
  check_uniform(circular_ladder_centrality(6), make_rat(13, 2));
}

TEST_CASE("hypercube formula") {
  CHECK(hypercube_centrality(2).per_vertex.scores[0] == make_rat(1, 2));
  CHECK(hypercube_centrality(3).per_vertex.scores[0] == make_rat(5, 2));
  FormulaResult q4 = hypercube_centrality(4);
  CHECK(q4.per_vertex.scores[0] == make_rat(17, 2));
  CHECK((*q4.relative)[0] == make_rat(17, 210));
  CHECK(*q4.centralization == 0);

  FormulaResult q1 = hypercube_centrality(1);
  CHECK(q1.per_vertex.scores == std::vector<Rat>{Rat(), Rat()});
  CHECK_FALSE(q1.centralization.has_value());
}

TEST_CASE("star and complete formulas") {
  for (long n : {3L, 4L, 10L, 25L}) {
    FormulaResult s = star_centrality(n);
    CHECK(s.per_vertex.scores[0] == Rat(choose2(n - 1)));
    for (long v = 1; v < n; ++v) CHECK(s.per_vertex.scores[v] == 0);
    CHECK(*s.centralization == 1);

    FormulaResult k = complete_centrality(n);
    check_uniform(k, Rat());
  }
  CHECK_FALSE(star_centrality(2).centralization.has_value());
  CHECK_FALSE(complete_centrality(2).centralization.has_value());
}

TEST_CASE("cross family identities") {
  CHECK(crown_centrality(3).per_vertex.scores ==
        cycle_centrality(6).per_vertex.scores);
  CHECK(cocktail_party_centrality(2).per_vertex.scores ==
        cycle_centrality(4).per_vertex.scores);
  CHECK(ladder_centrality(2).per_vertex.scores ==
        cycle_centrality(4).per_vertex.scores);
  CHECK(circular_ladder_centrality(4).per_vertex.scores ==
        hypercube_centrality(3).per_vertex.scores);
}

TEST_CASE("formula results are internally consistent") {
  std::vector<FormulaResult> results;
  results.push_back(wheel_centrality(9));
  results.push_back(complete_bipartite_centrality(3, 5));
  results.push_back(crown_centrality(6));
  results.push_back(path_centrality(8));
  results.push_back(ladder_centrality(6));
  results.push_back(hypercube_centrality(5));
  for (const FormulaResult& r : results) {
    REQUIRE(r.relative.has_value());
    CHECK(*r.relative == relative_centrality(r.per_vertex));
    CentralizationSummary c = graph_centralization(r.per_vertex);
    CHECK(*r.centralization == c.centralization);
  }
}

TEST_CASE("dispatcher matches the family functions") {
  CHECK(closed_form(parse_family_spec("wheel:7")).per_vertex.scores ==
        wheel_centrality(7).per_vertex.scores);
  CHECK(closed_form(parse_family_spec("kmn:2,3")).per_vertex.scores ==
        complete_bipartite_centrality(2, 3).per_vertex.scores);
  CHECK(closed_form(parse_family_spec("hypercube:4")).per_vertex.scores ==
        hypercube_centrality(4).per_vertex.scores);

  FamilySpec tree;
  tree.family = Family::Tree;
  tree.tree_edges = {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {4, 6}};
  FormulaResult r = closed_form(tree);
  CHECK(r.per_vertex.scores ==
        tree_scores(generate(tree)).scores);
  REQUIRE(r.centralization.has_value());
}

TEST_CASE("tree branch decomposition") {
  Graph t = Graph::build(
      7, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {4, 6}});

  SUBCASE("per vertex scores") {
    ScoreVector s = tree_scores(t);
    std::vector<long> want = {0, 11, 5, 0, 9, 0, 0};
    for (Vertex v = 0; v < 7; ++v) {
      CAPTURE(v);
      CHECK(s.scores[v] == want[v]);
    }
    ScoreVector engine = betweenness_exact(t);
    CHECK(s.scores == engine.scores);
  }
  SUBCASE("branch sizes come out descending") {
    CHECK(tree_branch_decomposition(t, 1).branch_sizes ==
          std::vector<long>{3, 2, 1});
    CHECK(tree_branch_decomposition(t, 4).branch_sizes ==
          std::vector<long>{4, 1, 1});
    CHECK(tree_branch_decomposition(t, 0).branch_sizes ==
          std::vector<long>{6});
  }
  SUBCASE("star hub splits into singletons") {
    Graph s9 = generate({Family::Star, 9});
    CHECK(tree_branch_decomposition(s9, 0).branch_sizes ==
          std::vector<long>(8, 1));
  }
  SUBCASE("non tree input is rejected") {
    Graph c4 = generate({Family::Cycle, 4});
    CHECK_THROWS_AS(tree_scores(c4), StructureError);
    CHECK_THROWS_AS(tree_branch_decomposition(c4, 0), StructureError);
  }
}

TEST_CASE("tree centrality value") {
  CHECK(tree_centrality_value({1, 3, 2}) == 11);
  CHECK(tree_centrality_value({3, 2, 1}) == 11);
  CHECK(tree_centrality_value({2, 1, 3}) == 11);
  CHECK(tree_centrality_value({8}) == 0);
  CHECK(tree_centrality_value({2, 2, 2, 2}) == 24);
  CHECK(tree_centrality_value({1, 1, 1, 1, 1, 1, 1, 1}) == 28);
  CHECK_THROWS_AS(tree_centrality_value({}), ParamError);
  CHECK_THROWS_AS(tree_centrality_value({2, 0}), ParamError);
}

TEST_CASE("attainable tree values at order nine") {
  using Row = std::pair<std::vector<long>, Int>;
  std::vector<Row> got = enumerate_tree_values(9);
  std::vector<Row> want = {
      {{1, 1, 1, 1, 1, 1, 1, 1}, 28}, {{2, 1, 1, 1, 1, 1, 1}, 27},
      {{2, 2, 1, 1, 1, 1}, 26},       {{3, 1, 1, 1, 1, 1}, 25},
      {{2, 2, 2, 1, 1}, 25},          {{3, 2, 1, 1, 1}, 24},
      {{4, 1, 1, 1, 1}, 22},          {{2, 2, 2, 2}, 24},
      {{3, 2, 2, 1}, 23},             {{3, 3, 1, 1}, 22},
      {{5, 1, 1, 1}, 18},             {{4, 2, 1, 1}, 21},
      {{3, 3, 2}, 21},                {{4, 2, 2}, 20},
      {{4, 3, 1}, 19},                {{5, 2, 1}, 17},
      {{6, 1, 1}, 13},                {{4, 4}, 16},
      {{5, 3}, 15},                   {{6, 2}, 12},
      {{7, 1}, 7},                    {{8}, 0}};
  REQUIRE(got.size() == want.size());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  std::vector<Row> tiny = enumerate_tree_values(2);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny[0].first == std::vector<long>{1});
  CHECK(tiny[0].second == 0);
}
