#pragma once

#include <vector>

#include "btwc/betweenness.hpp"
#include "btwc/rational.hpp"

namespace btwc {

struct CentralizationSummary {
  Vertex max_vertex = 0;  // smallest id among maximizers
  Rat max_value;
  std::vector<Rat> relative;
  Rat centralization;
  // Engine-produced score vectors always land in [0,1]; foreign inputs may
  // not, and are returned unclamped with this flag cleared.
  bool in_unit_range = true;
};

// C'_B(v) = 2 C_B(v) / ((n-1)(n-2)). Requires n >= 3.
std::vector<Rat> relative_centrality(const ScoreVector& scores);

// Freeman index, evaluated by both equivalent routes (raw-gap and
// relative-gap forms), which must agree exactly. Requires n >= 3.
CentralizationSummary graph_centralization(const ScoreVector& scores);

}  // namespace btwc
