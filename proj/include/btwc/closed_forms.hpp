#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "btwc/betweenness.hpp"
#include "btwc/generators.hpp"
#include "btwc/rational.hpp"

namespace btwc {

// relative and centralization are absent when the order is below 3 (the
// normalizing denominators vanish).
struct FormulaResult {
  ScoreVector per_vertex;
  std::optional<std::vector<Rat>> relative;
  std::optional<Rat> centralization;
};

struct BranchDecomposition {
  Vertex vertex = 0;
  std::vector<long> branch_sizes;  // descending
};

FormulaResult wheel_centrality(long n);                          // n >= 4
FormulaResult complete_minus_edge_centrality(long n);            // n >= 3
FormulaResult complete_bipartite_centrality(long m, long n);     // m, n >= 1
FormulaResult cocktail_party_centrality(long n);                 // n >= 2
FormulaResult crown_centrality(long n);                          // n >= 3
FormulaResult path_centrality(long n);                           // n >= 1
FormulaResult ladder_centrality(long n);                         // n >= 2
FormulaResult cycle_centrality(long n);                          // n >= 3
FormulaResult circular_ladder_centrality(long n);                // n >= 3
FormulaResult hypercube_centrality(long d);                      // d >= 1
FormulaResult star_centrality(long n);                           // n >= 2
FormulaResult complete_centrality(long n);                       // n >= 2

// Component sizes of tree - v, descending.
BranchDecomposition tree_branch_decomposition(const Graph& tree, Vertex v);

// Sum of pairwise products of the branch sizes; order-invariant.
Int tree_centrality_value(const std::vector<long>& branch_sizes);

// Every attainable (branch profile, value) pair for trees of a given order:
// integer partitions of order-1 with their centrality values.
std::vector<std::pair<std::vector<long>, Int>> enumerate_tree_values(long order);

// Per-vertex scores of a tree via branch decomposition at every vertex.
ScoreVector tree_scores(const Graph& tree);

// Dispatch on a FamilySpec; Family::Tree runs tree_scores on its edge list.
FormulaResult closed_form(const FamilySpec& spec);

}  // namespace btwc
