#pragma once

#include <vector>

#include "btwc/graph.hpp"
#include "btwc/rational.hpp"

namespace btwc {

struct ScoreVector {
  std::vector<Rat> scores;
  Vertex n() const { return static_cast<Vertex>(scores.size()); }
};

// Exact betweenness over unordered pairs, dependency accumulation per source.
// threads: 1 runs inline (debug mode), <= 0 uses hardware concurrency.
ScoreVector betweenness_exact(const Graph& g, int threads = 0);

// Independent oracle: enumerates every geodesic of every pair explicitly and
// counts interior incidences. Guarded by a vertex cap.
ScoreVector betweenness_bruteforce(const Graph& g, Vertex cap = 14);

// Double-precision engine. Sources are accumulated in ascending order, so the
// result is bit-identical for any thread count.
std::vector<double> betweenness_float(const Graph& g, int threads = 0);

// Sum over unordered connected pairs of (d(s,t) - 1); equals the sum of all
// betweenness scores.
Int total_interior_credit(const Graph& g);

}  // namespace btwc
