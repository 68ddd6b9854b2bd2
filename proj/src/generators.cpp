#include "btwc/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <tuple>

#include "btwc/errors.hpp"

namespace btwc {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParamError(msg);
}

std::vector<Edge> complete_edges(Vertex n) {
  std::vector<Edge> e;
  e.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return e;
}

Graph make_star(long n) {
  require(n >= 2, "star requires n >= 2");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::build(static_cast<Vertex>(n), e);
}

Graph make_complete(long n) {
  require(n >= 1, "complete graph requires n >= 1");
  return Graph::build(static_cast<Vertex>(n), complete_edges(static_cast<Vertex>(n)));
}

Graph make_wheel(long n) {
  require(n >= 4, "wheel requires n >= 4");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(v, v + 1 < n ? v + 1 : 1);
  }
  return Graph::build(static_cast<Vertex>(n), e);
}

Graph make_complete_minus_edge(long n) {
  require(n >= 2, "complete-minus-edge requires n >= 2");
  auto e = complete_edges(static_cast<Vertex>(n));
  e.erase(std::remove(e.begin(), e.end(), Edge{0, 1}), e.end());
  return Graph::build(static_cast<Vertex>(n), e);
}

Graph make_complete_bipartite(long m, long n) {
  require(m >= 1 && n >= 1, "complete bipartite requires m, n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex w = 0; w < n; ++w) e.emplace_back(u, static_cast<Vertex>(m + w));
  return Graph::build(static_cast<Vertex>(m + n), e);
}

Graph make_cocktail_party(long n) {
  require(n >= 2, "cocktail party requires n >= 2");
  const Vertex order = static_cast<Vertex>(2 * n);
  std::vector<Edge> e;
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (!(v == u + n && u < n)) e.emplace_back(u, v);
  return Graph::build(order, e);
}

Graph make_crown(long n) {
  require(n >= 3, "crown requires n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, static_cast<Vertex>(n + j));
  return Graph::build(static_cast<Vertex>(2 * n), e);
}

Graph make_path(long n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::build(static_cast<Vertex>(n), e);
}

Graph make_ladder(long n) {
  require(n >= 1, "ladder requires n >= 1");
  std::vector<Edge> e;
  const Vertex k = static_cast<Vertex>(n);
  for (Vertex i = 0; i < k; ++i) {
    if (i + 1 < k) {
      e.emplace_back(i, i + 1);
      e.emplace_back(static_cast<Vertex>(k + i), static_cast<Vertex>(k + i + 1));
    }
    e.emplace_back(i, static_cast<Vertex>(k + i));
  }
  return Graph::build(static_cast<Vertex>(2 * n), e);
}

Graph make_cycle(long n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::build(static_cast<Vertex>(n), e);
}

Graph make_circular_ladder(long n) {
  require(n >= 3, "circular ladder requires n >= 3");
  std::vector<Edge> e;
  const Vertex k = static_cast<Vertex>(n);
  for (Vertex i = 0; i < k; ++i) {
    Vertex j = static_cast<Vertex>((i + 1) % k);
    e.emplace_back(i, j);
    e.emplace_back(static_cast<Vertex>(k + i), static_cast<Vertex>(k + j));
    e.emplace_back(i, static_cast<Vertex>(k + i));
  }
  return Graph::build(static_cast<Vertex>(2 * n), e);
}

Graph make_hypercube(long d) {
  require(d >= 1, "hypercube requires d >= 1");
  if (d > 26) throw SizeError("hypercube dimension above 26 is not supported");
  const std::int64_t order = std::int64_t{1} << d;
  std::vector<Edge> e;
  e.reserve(static_cast<size_t>(d) << (d - 1));
  for (std::int64_t u = 0; u < order; ++u)
    for (long b = 0; b < d; ++b) {
      std::int64_t v = u ^ (std::int64_t{1} << b);
      if (u < v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  return Graph::build(static_cast<Vertex>(order), e);
}

Graph make_tree(const FamilySpec& spec) {
  if (spec.tree_edges.empty())
    throw ParamError("tree spec requires a nonempty edge list");
  Vertex n = static_cast<Vertex>(spec.p1);
  for (auto [u, v] : spec.tree_edges) n = std::max({n, Vertex(u + 1), Vertex(v + 1)});
  Graph g = Graph::build(n, spec.tree_edges);
  if (g.num_edges() != n - 1 || !g.is_connected())
    throw StructureError("edge list is not a tree");
  return g;
}

// Backtracking isomorphism with degree-signature pruning. The budget bounds
// the number of search nodes; exhausting it counts as a mismatch.
class IsoMatcher {
 public:
  IsoMatcher(const Graph& a, const Graph& b, long budget)
      : a_(a), b_(b), budget_(budget) {}

  bool run() {
    const Vertex n = a_.num_vertices();
    if (b_.num_vertices() != n || a_.num_edges() != b_.num_edges()) return false;
    sig_a_ = signatures(a_);
    sig_b_ = signatures(b_);
    auto sorted_a = sig_a_;
    auto sorted_b = sig_b_;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return false;

    order_.resize(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) order_[v] = v;
    // Most-constrained first: rare signatures, then high degree.
    std::sort(order_.begin(), order_.end(), [&](Vertex x, Vertex y) {
      long cx = count_sig(sorted_b, sig_a_[x]);
      long cy = count_sig(sorted_b, sig_a_[y]);
      if (cx != cy) return cx < cy;
      return a_.degree(x) > a_.degree(y);
    });
    map_.assign(static_cast<size_t>(n), kUnreachable);
    used_.assign(static_cast<size_t>(n), 0);
    return extend(0);
  }

 private:
  using Sig = std::pair<Vertex, std::vector<Vertex>>;  // degree, neighbor degrees

  static std::vector<Sig> signatures(const Graph& g) {
    std::vector<Sig> sig(static_cast<size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      std::vector<Vertex> nd;
      for (Vertex w : g.neighbors(v)) nd.push_back(g.degree(w));
      std::sort(nd.begin(), nd.end());
      sig[v] = {g.degree(v), std::move(nd)};
    }
    return sig;
  }

  static long count_sig(const std::vector<Sig>& sorted, const Sig& s) {
    auto range = std::equal_range(sorted.begin(), sorted.end(), s);
    return range.second - range.first;
  }

  bool extend(size_t idx) {
    if (--budget_ < 0) return false;
    if (idx == order_.size()) return true;
    Vertex v = order_[idx];
    for (Vertex cand = 0; cand < b_.num_vertices(); ++cand) {
      if (used_[cand] || sig_b_[cand] != sig_a_[v]) continue;
      bool ok = true;
      for (size_t k = 0; k < idx && ok; ++k) {
        Vertex u = order_[k];
        ok = a_.has_edge(v, u) == b_.has_edge(cand, map_[u]);
      }
      if (!ok) continue;
      map_[v] = cand;
      used_[cand] = 1;
      if (extend(idx + 1)) return true;
      used_[cand] = 0;
      map_[v] = kUnreachable;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  long budget_;
  std::vector<Sig> sig_a_, sig_b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

bool same_adjacency(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices()) return false;
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    auto na = a.neighbors(v);
    auto nb = b.neighbors(v);
    if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) return false;
  }
  return true;
}

}  // namespace

std::string family_token(Family f) {
  switch (f) {
    case Family::Star: return "star";
    case Family::Complete: return "complete";
    case Family::Wheel: return "wheel";
    case Family::CompleteMinusEdge: return "kminus";
    case Family::CompleteBipartite: return "kmn";
    case Family::CocktailParty: return "cocktail";
    case Family::Crown: return "crown";
    case Family::Path: return "path";
    case Family::Ladder: return "ladder";
    case Family::Cycle: return "cycle";
    case Family::CircularLadder: return "circladder";
    case Family::Hypercube: return "hypercube";
    case Family::Tree: return "tree";
  }
  throw ParamError("unknown family");
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Star: return make_star(spec.p1);
    case Family::Complete: return make_complete(spec.p1);
    case Family::Wheel: return make_wheel(spec.p1);
    case Family::CompleteMinusEdge: return make_complete_minus_edge(spec.p1);
    case Family::CompleteBipartite: return make_complete_bipartite(spec.p1, spec.p2);
    case Family::CocktailParty: return make_cocktail_party(spec.p1);
    case Family::Crown: return make_crown(spec.p1);
    case Family::Path: return make_path(spec.p1);
    case Family::Ladder: return make_ladder(spec.p1);
    case Family::Cycle: return make_cycle(spec.p1);
    case Family::CircularLadder: return make_circular_ladder(spec.p1);
    case Family::Hypercube: return make_hypercube(spec.p1);
    case Family::Tree: return make_tree(spec);
  }
  throw ParamError("unknown family");
}

bool verify_family(const Graph& g, const FamilySpec& spec) {
  Graph target;
  try {
    target = generate(spec);
  } catch (const Error&) {
    return false;
  }
  if (g.num_vertices() != target.num_vertices()) return false;
  if (g.num_edges() != target.num_edges()) return false;
  if (g.degree_sequence() != target.degree_sequence()) return false;
  if (same_adjacency(g, target)) return true;
  return IsoMatcher(g, target, 1'000'000).run();
}

FamilySpec parse_family_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
    throw ParseError("bad family spec '" + text + "': expected <family>:<params>");
  std::string name = text.substr(0, colon);
  std::string args = text.substr(colon + 1);

  FamilySpec spec;
  if (name == "star") spec.family = Family::Star;
  else if (name == "complete") spec.family = Family::Complete;
  else if (name == "wheel") spec.family = Family::Wheel;
  else if (name == "kminus") spec.family = Family::CompleteMinusEdge;
  else if (name == "kmn") spec.family = Family::CompleteBipartite;
  else if (name == "cocktail") spec.family = Family::CocktailParty;
  else if (name == "crown") spec.family = Family::Crown;
  else if (name == "path") spec.family = Family::Path;
  else if (name == "ladder") spec.family = Family::Ladder;
  else if (name == "cycle") spec.family = Family::Cycle;
  else if (name == "circladder") spec.family = Family::CircularLadder;
  else if (name == "hypercube") spec.family = Family::Hypercube;
  else if (name == "tree") spec.family = Family::Tree;
  else throw ParseError("unknown family '" + name + "'");

  if (spec.family == Family::Tree) {
    if (args.size() < 2 || args[0] != '@')
      throw ParseError("tree spec must reference an edge file: tree:@<path>");
    spec.tree_path = args.substr(1);
    return spec;
  }

  auto parse_long = [&](const std::string& tok) -> long {
    if (tok.empty()) throw ParseError("empty parameter in spec '" + text + "'");
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad parameter '" + tok + "' in spec '" + text + "'");
    if (tok.size() > 9) throw ParseError("parameter too large in spec '" + text + "'");
    return std::stol(tok);
  };

  auto comma = args.find(',');
  const bool two = spec.family == Family::CompleteBipartite;
  if (two) {
    if (comma == std::string::npos)
      throw ParseError("kmn requires two parameters: kmn:<m>,<n>");
    spec.p1 = parse_long(args.substr(0, comma));
    spec.p2 = parse_long(args.substr(comma + 1));
  } else {
    if (comma != std::string::npos)
      throw ParseError("family '" + name + "' takes a single parameter");
    spec.p1 = parse_long(args);
  }
  return spec;
}

}  // namespace btwc
