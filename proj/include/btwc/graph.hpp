#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "btwc/rational.hpp"

namespace btwc {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kUnreachable = -1;

// Simple undirected graph in CSR form. Vertices are 0..n-1; parallel edges
// and self-loops are rejected at build time.
class Graph {
 public:
  static Graph build(Vertex n, const std::vector<Edge>& edges);

  Vertex num_vertices() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(Vertex u, Vertex v) const;

  // Edges as sorted (u, v) pairs with u < v, lexicographic.
  std::vector<Edge> edge_list() const;

  bool is_connected() const;

  std::vector<Vertex> degree_sequence() const;  // sorted ascending

 private:
  Vertex n_ = 0;
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> adj_;
};

// Single-source shortest-path structure from BFS.
struct GeodesicProfile {
  std::vector<Vertex> dist;            // kUnreachable if not reached
  std::vector<Int> sigma;              // geodesic counts from the source
  std::vector<std::vector<Vertex>> preds;  // predecessors on geodesics
  std::vector<Vertex> order;           // vertices in nondecreasing distance
};

GeodesicProfile bfs_profile(const Graph& g, Vertex source);

// Number of geodesics between s and t (0 if disconnected, 1 if s == t).
Int num_geodesics(const Graph& g, Vertex s, Vertex t);

// Number of s-t geodesics passing through interior vertex v.
Int geodesics_through(const Graph& g, Vertex s, Vertex t, Vertex v);

}  // namespace btwc
