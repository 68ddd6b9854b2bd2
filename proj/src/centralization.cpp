#include "btwc/centralization.hpp"

#include "btwc/errors.hpp"

namespace btwc {

std::vector<Rat> relative_centrality(const ScoreVector& scores) {
  const Vertex n = scores.n();
  if (n < 3) throw ParamError("relative centrality requires n >= 3");
  const Rat denom(choose2(n - 1));  // (n-1)(n-2)/2, the star-hub maximum
  std::vector<Rat> rel;
  rel.reserve(scores.scores.size());
  for (const Rat& s : scores.scores) rel.push_back(s / denom);
  return rel;
}

CentralizationSummary graph_centralization(const ScoreVector& scores) {
  const Vertex n = scores.n();
  if (n < 3) throw ParamError("graph centralization requires n >= 3");

  CentralizationSummary out;
  out.max_vertex = 0;
  out.max_value = scores.scores[0];
  for (Vertex v = 1; v < n; ++v)
    if (scores.scores[v] > out.max_value) {
      out.max_value = scores.scores[v];
      out.max_vertex = v;
    }

  Rat gap_sum(0);
  for (const Rat& s : scores.scores) gap_sum += out.max_value - s;
  Rat raw_route = 2 * gap_sum / Rat(Int(n - 1) * (n - 1) * (n - 2));

  out.relative = relative_centrality(scores);
  const Rat rel_max = out.relative[out.max_vertex];
  Rat rel_gap_sum(0);
  for (const Rat& r : out.relative) rel_gap_sum += rel_max - r;
  Rat rel_route = rel_gap_sum / (n - 1);

  if (raw_route != rel_route)
    throw Error("centralization evaluation routes disagree");

  out.centralization = raw_route;
  out.in_unit_range = raw_route >= 0 && raw_route <= 1;
  return out;
}

}  // namespace btwc
