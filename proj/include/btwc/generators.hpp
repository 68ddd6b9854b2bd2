#pragma once

#include <string>
#include <vector>

#include "btwc/graph.hpp"

namespace btwc {

enum class Family {
  Star,
  Complete,
  Wheel,
  CompleteMinusEdge,
  CompleteBipartite,
  CocktailParty,
  Crown,
  Path,
  Ladder,
  Cycle,
  CircularLadder,
  Hypercube,
  Tree,
};

struct FamilySpec {
  Family family = Family::Path;
  long p1 = 0;                   // n, m, or dimension; inferred order for Tree
  long p2 = 0;                   // second side of CompleteBipartite
  std::vector<Edge> tree_edges;  // Tree only
  std::string tree_path;         // unresolved "@file" reference from a spec string
};

// Token used in spec strings and reports: star, kminus, kmn, circladder, ...
std::string family_token(Family f);

// Canonical labelings:
//   Wheel: 0 = hub, 1..n-1 the rim cycle in order.
//   CompleteMinusEdge: the deleted edge is (0, 1).
//   CompleteBipartite(m, n): 0..m-1 side U, m..m+n-1 side W.
//   CocktailParty(n): 2n vertices, deleted matching (i, n+i).
//   Crown(n): sides 0..n-1 and n..2n-1, missing edges (i, n+i).
//   Path/Cycle: vertices in path/cycle order.
//   Ladder(n): top row 0..n-1, bottom row n..2n-1, rungs (i, n+i).
//   CircularLadder(n): ladder rows closed into cycles.
//   Hypercube(d): vertex id is the bit label; edges differ in one bit.
Graph generate(const FamilySpec& spec);

// Structural recognition: order, size, and degree sequence, then isomorphism
// against the canonical instance. False on any mismatch.
bool verify_family(const Graph& g, const FamilySpec& spec);

// Grammar: <family>:<p1>[,<p2>] or tree:@<path>. Throws ParseError.
// Tree edges are not loaded here; callers resolve tree_path first.
FamilySpec parse_family_spec(const std::string& text);

}  // namespace btwc
