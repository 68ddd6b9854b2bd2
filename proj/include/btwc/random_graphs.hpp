#pragma once

#include <cstdint>

#include "btwc/graph.hpp"

namespace btwc {

// splitmix64: tiny and stable across platforms, so seeded runs reproduce
// everywhere. Standard-library distributions are implementation-defined and
// would not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // uniform in [0, bound), unbiased
  double uniform();                          // [0, 1)

 private:
  std::uint64_t state_;
};

// Uniform random labeled tree (decoded from a random Pruefer sequence).
Graph random_tree(Vertex n, Rng& rng);

// G(n, p) conditioned on connectivity, by resampling.
Graph random_connected_gnp(Vertex n, double p, Rng& rng);

}  // namespace btwc
