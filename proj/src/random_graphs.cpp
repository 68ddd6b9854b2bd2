#include "btwc/random_graphs.hpp"

#include "btwc/errors.hpp"

namespace btwc {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw ParamError("bound must be positive");
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_tree(Vertex n, Rng& rng) {
  if (n < 1) throw ParamError("tree order must be positive");
  if (n <= 2) {
    std::vector<Edge> e;
    if (n == 2) e.emplace_back(0, 1);
    return Graph::build(n, e);
  }

  std::vector<Vertex> pruefer(static_cast<size_t>(n - 2));
  for (auto& x : pruefer) x = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));

  std::vector<Vertex> degree(static_cast<size_t>(n), 1);
  for (Vertex a : pruefer) ++degree[a];

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  Vertex ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  for (Vertex a : pruefer) {
    edges.emplace_back(leaf, a);
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, static_cast<Vertex>(n - 1));
  return Graph::build(n, edges);
}

Graph random_connected_gnp(Vertex n, double p, Rng& rng) {
  if (n < 1) throw ParamError("order must be positive");
  if (!(p > 0.0) || p > 1.0) throw ParamError("edge probability must be in (0, 1]");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.uniform() < p) edges.emplace_back(u, v);
    Graph g = Graph::build(n, edges);
    if (g.is_connected()) return g;
  }
  throw Error("failed to sample a connected graph; p is too small");
}

}  // namespace btwc
