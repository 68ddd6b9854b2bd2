#include "btwc/betweenness.hpp"

#include <algorithm>
#include <atomic>
#include <queue>
#include <string>
#include <thread>

#include "btwc/errors.hpp"

namespace btwc {

namespace {

int resolve_threads(int threads, Vertex n) {
  if (threads == 1 || n <= 1) return 1;
  if (threads <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    threads = hw ? static_cast<int>(hw) : 1;
  }
  return std::max(1, std::min<int>(threads, n));
}

void accumulate_source_exact(const Graph& g, Vertex s, std::vector<Rat>& acc) {
  auto prof = bfs_profile(g, s);
  const Vertex n = g.num_vertices();
  std::vector<Rat> delta(static_cast<size_t>(n), Rat(0));
  for (auto it = prof.order.rbegin(); it != prof.order.rend(); ++it) {
    Vertex w = *it;
    if (w == s) continue;
    Rat coeff = (Rat(1) + delta[w]) / Rat(prof.sigma[w]);
    for (Vertex p : prof.preds[w]) delta[p] += Rat(prof.sigma[p]) * coeff;
    acc[w] += delta[w];
  }
}

std::vector<Vertex> bfs_distances(const Graph& g, Vertex s) {
  std::vector<Vertex> dist(static_cast<size_t>(g.num_vertices()), kUnreachable);
  dist[s] = 0;
  std::queue<Vertex> q;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

// Deltas for one source with double sigma; out must be zeroed, length n.
void source_deltas_float(const Graph& g, Vertex s, std::vector<double>& out) {
  const Vertex n = g.num_vertices();
  std::vector<Vertex> dist(static_cast<size_t>(n), kUnreachable);
  std::vector<double> sigma(static_cast<size_t>(n), 0.0);
  std::vector<Vertex> order;
  order.reserve(static_cast<size_t>(n));

  dist[s] = 0;
  sigma[s] = 1.0;
  std::queue<Vertex> q;
  q.push(s);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    order.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
      if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex w = *it;
    if (w == s) continue;
    double coeff = (1.0 + out[w]) / sigma[w];
    for (Vertex p : g.neighbors(w))
      if (dist[p] == dist[w] - 1) out[p] += sigma[p] * coeff;
  }
  out[s] = 0.0;
}

}  // namespace

ScoreVector betweenness_exact(const Graph& g, int threads) {
  const Vertex n = g.num_vertices();
  std::vector<Rat> total(static_cast<size_t>(n), Rat(0));
  const int t = resolve_threads(threads, n);
  if (t == 1) {
    for (Vertex s = 0; s < n; ++s) accumulate_source_exact(g, s, total);
  } else {
    std::vector<std::vector<Rat>> parts(
        static_cast<size_t>(t), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    std::atomic<Vertex> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i)
      pool.emplace_back([&, i] {
        for (;;) {
          Vertex s = next.fetch_add(1);
          if (s >= n) break;
          accumulate_source_exact(g, s, parts[static_cast<size_t>(i)]);
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& part : parts)
      for (Vertex v = 0; v < n; ++v) total[v] += part[v];
  }
  for (auto& x : total) x /= 2;
  return {std::move(total)};
}

ScoreVector betweenness_bruteforce(const Graph& g, Vertex cap) {
  const Vertex n = g.num_vertices();
  if (n > cap)
    throw SizeError("bruteforce engine capped at " + std::to_string(cap) +
                    " vertices, got " + std::to_string(n));
  std::vector<Rat> total(static_cast<size_t>(n), Rat(0));
  std::vector<Int> through(static_cast<size_t>(n));
  std::vector<Vertex> path;

  for (Vertex t = 0; t < n; ++t) {
    auto dist_t = bfs_distances(g, t);
    for (Vertex s = 0; s < t; ++s) {
      if (dist_t[s] == kUnreachable) continue;
      Int count = 0;
      std::fill(through.begin(), through.end(), Int(0));
      path.clear();

      // Every geodesic toward t steps strictly down in dist_t.
      auto enumerate = [&](auto&& self, Vertex v) -> void {
        if (v == t) {
          ++count;
          for (Vertex u : path)
            if (u != s) ++through[u];
          return;
        }
        path.push_back(v);
        for (Vertex w : g.neighbors(v))
          if (dist_t[w] == dist_t[v] - 1) self(self, w);
        path.pop_back();
      };
      enumerate(enumerate, s);

      for (Vertex v = 0; v < n; ++v)
        if (through[v] != 0) total[v] += make_rat(through[v], count);
    }
  }
  return {std::move(total)};
}

std::vector<double> betweenness_float(const Graph& g, int threads) {
  const Vertex n = g.num_vertices();
  std::vector<double> total(static_cast<size_t>(n), 0.0);
  const int t = resolve_threads(threads, n);
  const Vertex chunk = std::min<Vertex>(n > 0 ? n : 1, std::max(16, 4 * t));
  std::vector<std::vector<double>> buf(
      static_cast<size_t>(chunk), std::vector<double>(static_cast<size_t>(n), 0.0));

  for (Vertex base = 0; base < n; base += chunk) {
    const Vertex count = std::min<Vertex>(chunk, n - base);
    if (t == 1) {
      for (Vertex i = 0; i < count; ++i) {
        auto& row = buf[static_cast<size_t>(i)];
        std::fill(row.begin(), row.end(), 0.0);
        source_deltas_float(g, base + i, row);
      }
    } else {
      std::atomic<Vertex> next{0};
      std::vector<std::thread> pool;
      for (int k = 0; k < t; ++k)
        pool.emplace_back([&] {
          for (;;) {
            Vertex i = next.fetch_add(1);
            if (i >= count) break;
            auto& row = buf[static_cast<size_t>(i)];
            std::fill(row.begin(), row.end(), 0.0);
            source_deltas_float(g, base + i, row);
          }
        });
      for (auto& th : pool) th.join();
    }
    // Merge strictly in ascending source order: thread-count independent.
    for (Vertex i = 0; i < count; ++i) {
      const auto& row = buf[static_cast<size_t>(i)];
      for (Vertex v = 0; v < n; ++v) total[v] += row[v];
    }
  }
  for (auto& x : total) x *= 0.5;
  return total;
}

Int total_interior_credit(const Graph& g) {
  const Vertex n = g.num_vertices();
  std::int64_t doubled = 0;
  for (Vertex s = 0; s < n; ++s) {
    auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < n; ++v)
      if (v != s && dist[v] != kUnreachable) doubled += dist[v] - 1;
  }
  return Int(doubled) / 2;
}

}  // namespace btwc
