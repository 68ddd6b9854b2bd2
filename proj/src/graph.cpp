#include "btwc/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "btwc/errors.hpp"

namespace btwc {

Graph Graph::build(Vertex n, const std::vector<Edge>& edges) {
  if (n < 0) throw ParamError("vertex count must be nonnegative");

  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParamError("edge endpoint out of range: (" + std::to_string(u) +
                       ", " + std::to_string(v) + ")");
    if (u == v)
      throw ParamError("self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (auto [u, v] : norm) {
    g.offsets_[static_cast<size_t>(u) + 1]++;
    g.offsets_[static_cast<size_t>(v) + 1]++;
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adj_.resize(static_cast<size_t>(g.offsets_[n]));
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : norm) {
    g.adj_[static_cast<size_t>(cursor[u]++)] = v;
    g.adj_[static_cast<size_t>(cursor[v]++)] = u;
  }
  for (Vertex v = 0; v < n; ++v)
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges()));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;  // CSR adjacency is sorted, so this is lexicographic
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n_;
}

std::vector<Vertex> Graph::degree_sequence() const {
  std::vector<Vertex> deg(static_cast<size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) deg[v] = degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

GeodesicProfile bfs_profile(const Graph& g, Vertex source) {
  const Vertex n = g.num_vertices();
  if (source < 0 || source >= n) throw ParamError("bfs source out of range");

  GeodesicProfile p;
  p.dist.assign(static_cast<size_t>(n), kUnreachable);
  p.sigma.assign(static_cast<size_t>(n), Int(0));
  p.preds.resize(static_cast<size_t>(n));
  p.order.reserve(static_cast<size_t>(n));

  p.dist[source] = 0;
  p.sigma[source] = 1;
  std::queue<Vertex> q;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    p.order.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (p.dist[w] == kUnreachable) {
        p.dist[w] = p.dist[u] + 1;
        q.push(w);
      }
      if (p.dist[w] == p.dist[u] + 1) {
        p.sigma[w] += p.sigma[u];
        p.preds[w].push_back(u);
      }
    }
  }
  return p;
}

Int num_geodesics(const Graph& g, Vertex s, Vertex t) {
  if (s == t) return 1;
  auto p = bfs_profile(g, s);
  if (t < 0 || t >= g.num_vertices()) throw ParamError("vertex out of range");
  return p.sigma[t];
}

Int geodesics_through(const Graph& g, Vertex s, Vertex t, Vertex v) {
  const Vertex n = g.num_vertices();
  if (t < 0 || t >= n || v < 0 || v >= n) throw ParamError("vertex out of range");
  if (s == t || v == s || v == t)
    throw ParamError("geodesics_through requires distinct s, t, v");
  auto from_s = bfs_profile(g, s);
  if (from_s.dist[t] == kUnreachable || from_s.dist[v] == kUnreachable) return 0;
  auto from_v = bfs_profile(g, v);
  if (from_s.dist[v] + from_v.dist[t] != from_s.dist[t]) return 0;
  return from_s.sigma[v] * from_v.sigma[t];
}

}  // namespace btwc
