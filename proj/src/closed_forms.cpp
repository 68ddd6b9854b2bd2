#include "btwc/closed_forms.hpp"

#include <algorithm>
#include <functional>

#include "btwc/centralization.hpp"
#include "btwc/errors.hpp"

namespace btwc {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParamError(msg);
}

// Fill relative/centralization from the scores via the generic definitions.
FormulaResult finish(std::vector<Rat> scores) {
  FormulaResult r{ScoreVector{std::move(scores)}, std::nullopt, std::nullopt};
  if (r.per_vertex.n() >= 3) {
    auto summary = graph_centralization(r.per_vertex);
    r.relative = std::move(summary.relative);
    r.centralization = std::move(summary.centralization);
  }
  return r;
}

// Same, but the centralization value comes from a family-specific closed
// expression; it must coincide with the generic recomputation.
FormulaResult finish_display(std::vector<Rat> scores, const Rat& display) {
  FormulaResult r = finish(std::move(scores));
  if (!r.centralization || *r.centralization != display)
    throw Error("closed-form centralization disagrees with its definition");
  r.centralization = display;
  return r;
}

Rat ladder_vertex(long n, long k) {
  Rat v(Int(k - 1) * (n - k));
  for (long j = 0; j <= k - 1; ++j)
    for (long i = 1; i <= n - k; ++i) v += make_rat(k - j, k - j + i);
  for (long j = 0; j <= k - 2; ++j)
    for (long i = 0; i <= n - k; ++i) v += make_rat(i + 1, k - j + i);
  return v;
}

}  // namespace

FormulaResult wheel_centrality(long n) {
  require(n >= 4, "wheel centrality requires n >= 4");
  std::vector<Rat> scores(static_cast<size_t>(n));
  if (n == 4) {
    // W_4 = K_4: every pair is adjacent.
    std::fill(scores.begin(), scores.end(), Rat(0));
    return finish(std::move(scores));
  }
  if (n == 5) {
    scores[0] = make_rat(2, 3);
    std::fill(scores.begin() + 1, scores.end(), make_rat(1, 3));
    return finish(std::move(scores));
  }
  scores[0] = make_rat(Int(n - 1) * (n - 5), 2);
  std::fill(scores.begin() + 1, scores.end(), make_rat(1, 2));
  Rat display = make_rat(Int(n) * n - 6 * n + 4, Int(n - 1) * (n - 2));
  return finish_display(std::move(scores), display);
}

FormulaResult complete_minus_edge_centrality(long n) {
  require(n >= 3, "complete-minus-edge centrality requires n >= 3");
  std::vector<Rat> scores(static_cast<size_t>(n), make_rat(1, n - 2));
  scores[0] = Rat(0);
  scores[1] = Rat(0);
  Rat display = make_rat(4, Int(n - 1) * (n - 1) * (n - 2) * (n - 2));
  return finish_display(std::move(scores), display);
}

FormulaResult complete_bipartite_centrality(long m, long n) {
  require(m >= 1 && n >= 1, "complete bipartite centrality requires m, n >= 1");
  const long order = m + n;
  std::vector<Rat> scores(static_cast<size_t>(order));
  const Rat u_score = make_rat(Int(n) * (n - 1), 2 * m);
  const Rat w_score = make_rat(Int(m) * (m - 1), 2 * n);
  for (long u = 0; u < m; ++u) scores[static_cast<size_t>(u)] = u_score;
  for (long w = 0; w < n; ++w) scores[static_cast<size_t>(m + w)] = w_score;
  if (order < 3) return finish(std::move(scores));

  Rat display;
  const Int nd = Int(order - 1) * (order - 1) * (order - 2);
  if (m > n)
    display = make_rat(Int(m) * m * m - Int(n) * n * n - (Int(m) * m - Int(n) * n),
                       Int(n) * nd);
  else if (n > m)
    display = make_rat(Int(n) * n * (n - 1) - Int(m) * m * (m - 1), Int(m) * nd);
  else
    display = Rat(0);
  return finish_display(std::move(scores), display);
}

FormulaResult cocktail_party_centrality(long n) {
  require(n >= 2, "cocktail party centrality requires n >= 2");
  std::vector<Rat> scores(static_cast<size_t>(2 * n), make_rat(1, 2));
  return finish_display(std::move(scores), Rat(0));
}

FormulaResult crown_centrality(long n) {
  require(n >= 3, "crown centrality requires n >= 3");
  std::vector<Rat> scores(static_cast<size_t>(2 * n), make_rat(n + 1, 2));
  return finish_display(std::move(scores), Rat(0));
}

FormulaResult path_centrality(long n) {
  require(n >= 1, "path centrality requires n >= 1");
  std::vector<Rat> scores(static_cast<size_t>(n));
  for (long k = 1; k <= n; ++k)
    scores[static_cast<size_t>(k - 1)] = Rat(Int(k - 1) * (n - k));
  if (n < 3) return finish(std::move(scores));
  Rat display = (n % 2 == 1)
                    ? make_rat(Int(n) * (n + 1), Int(6) * (n - 1) * (n - 2))
                    : make_rat(Int(n) * (n + 2), Int(6) * (n - 1) * (n - 1));
  return finish_display(std::move(scores), display);
}

FormulaResult ladder_centrality(long n) {
  require(n >= 2, "ladder centrality requires n >= 2");
  std::vector<Rat> scores(static_cast<size_t>(2 * n));
  for (long k = 1; k <= n; ++k) {
    Rat v = ladder_vertex(n, k);
    scores[static_cast<size_t>(k - 1)] = v;
    scores[static_cast<size_t>(n + k - 1)] = std::move(v);
  }
  return finish(std::move(scores));
}

FormulaResult cycle_centrality(long n) {
  require(n >= 3, "cycle centrality requires n >= 3");
  Rat each = (n % 2 == 0) ? make_rat(Int(n - 2) * (n - 2), 8)
                          : make_rat(Int(n - 1) * (n - 3), 8);
  std::vector<Rat> scores(static_cast<size_t>(n), each);
  return finish_display(std::move(scores), Rat(0));
}

FormulaResult circular_ladder_centrality(long n) {
  require(n >= 3, "circular ladder centrality requires n >= 3");
  Rat each = (n % 2 == 0) ? make_rat(Int(n - 1) * (n - 1) + 1, 4)
                          : make_rat(Int(n - 1) * (n - 1), 4);
  std::vector<Rat> scores(static_cast<size_t>(2 * n), each);
  return finish_display(std::move(scores), Rat(0));
}

FormulaResult hypercube_centrality(long d) {
  require(d >= 1, "hypercube centrality requires d >= 1");
  if (d > 26) throw SizeError("hypercube dimension above 26 is not supported");
  const long order = 1L << d;
  if (d == 1) return finish({Rat(0), Rat(0)});
  // 2^{d-2}(d-2) + 1/2, written over the common denominator 2.
  Rat each = make_rat((Int(1) << static_cast<unsigned>(d - 1)) * (d - 2) + 1, 2);
  std::vector<Rat> scores(static_cast<size_t>(order), each);
  return finish_display(std::move(scores), Rat(0));
}

FormulaResult star_centrality(long n) {
  require(n >= 2, "star centrality requires n >= 2");
  std::vector<Rat> scores(static_cast<size_t>(n), Rat(0));
  scores[0] = Rat(choose2(n - 1));
  if (n < 3) return finish(std::move(scores));
  return finish_display(std::move(scores), Rat(1));
}

FormulaResult complete_centrality(long n) {
  require(n >= 2, "complete centrality requires n >= 2");
  std::vector<Rat> scores(static_cast<size_t>(n), Rat(0));
  if (n < 3) return finish(std::move(scores));
  return finish_display(std::move(scores), Rat(0));
}

BranchDecomposition tree_branch_decomposition(const Graph& tree, Vertex v) {
  const Vertex n = tree.num_vertices();
  if (v < 0 || v >= n) throw ParamError("vertex out of range");
  if (tree.num_edges() != n - 1 || !tree.is_connected())
    throw StructureError("branch decomposition requires a tree");

  BranchDecomposition out;
  out.vertex = v;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  seen[v] = 1;
  for (Vertex root : tree.neighbors(v)) {
    if (seen[root]) continue;
    long size = 0;
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : tree.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    out.branch_sizes.push_back(size);
  }
  std::sort(out.branch_sizes.rbegin(), out.branch_sizes.rend());
  return out;
}

Int tree_centrality_value(const std::vector<long>& branch_sizes) {
  if (branch_sizes.empty())
    throw ParamError("tree centrality value requires at least one branch");
  Int total = 0, squares = 0;
  for (long b : branch_sizes) {
    require(b >= 1, "branch sizes must be positive");
    total += b;
    squares += Int(b) * b;
  }
  return (total * total - squares) / 2;
}

std::vector<std::pair<std::vector<long>, Int>> enumerate_tree_values(long order) {
  require(order >= 2, "tree value enumeration requires order >= 2");
  std::vector<std::pair<std::vector<long>, Int>> out;
  std::vector<long> parts;
  // Partitions of order-1, largest part first, descending lexicographic.
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      out.emplace_back(parts, tree_centrality_value(parts));
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(order - 1, order - 1);
  return out;
}

ScoreVector tree_scores(const Graph& tree) {
  const Vertex n = tree.num_vertices();
  if (n != 0 && (tree.num_edges() != n - 1 || !tree.is_connected()))
    throw StructureError("tree scores require a tree");
  std::vector<Rat> scores(static_cast<size_t>(n));
  if (n <= 2) {
    std::fill(scores.begin(), scores.end(), Rat(0));
    return {std::move(scores)};
  }

  // Root at 0; iterative post-order subtree sizes, then the branches at v are
  // its child subtrees plus the remainder on the parent side.
  std::vector<Vertex> parent(static_cast<size_t>(n), kUnreachable);
  std::vector<Vertex> order_stack{0}, order;
  order.reserve(static_cast<size_t>(n));
  parent[0] = 0;
  while (!order_stack.empty()) {
    Vertex u = order_stack.back();
    order_stack.pop_back();
    order.push_back(u);
    for (Vertex w : tree.neighbors(u))
      if (parent[w] == kUnreachable) {
        parent[w] = u;
        order_stack.push_back(w);
      }
  }
  std::vector<long> subtree(static_cast<size_t>(n), 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (*it != 0) subtree[parent[*it]] += subtree[*it];

  for (Vertex v = 0; v < n; ++v) {
    std::vector<long> branches;
    long below = 0;
    for (Vertex w : tree.neighbors(v))
      if (parent[w] == v) {
        branches.push_back(subtree[w]);
        below += subtree[w];
      }
    if (v != 0) branches.push_back(n - 1 - below);
    scores[static_cast<size_t>(v)] = Rat(tree_centrality_value(branches));
  }
  return {std::move(scores)};
}

FormulaResult closed_form(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Star: return star_centrality(spec.p1);
    case Family::Complete: return complete_centrality(spec.p1);
    case Family::Wheel: return wheel_centrality(spec.p1);
    case Family::CompleteMinusEdge: return complete_minus_edge_centrality(spec.p1);
    case Family::CompleteBipartite:
      return complete_bipartite_centrality(spec.p1, spec.p2);
    case Family::CocktailParty: return cocktail_party_centrality(spec.p1);
    case Family::Crown: return crown_centrality(spec.p1);
    case Family::Path: return path_centrality(spec.p1);
    case Family::Ladder: return ladder_centrality(spec.p1);
    case Family::Cycle: return cycle_centrality(spec.p1);
    case Family::CircularLadder: return circular_ladder_centrality(spec.p1);
    case Family::Hypercube: return hypercube_centrality(spec.p1);
    case Family::Tree: return finish(tree_scores(generate(spec)).scores);
  }
  throw ParamError("unknown family");
}

}  // namespace btwc
