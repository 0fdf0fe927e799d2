#pragma once

// Seeded random cacti. Uses its own bounded sampling on top of mt19937_64 so
// that a seed gives the same graphs on every standard library.

#include <cactus/graph.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace cactus {

class CactusRng {
 public:
  explicit CactusRng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = engine_.max() - engine_.max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(below(hi - lo + 1)); }

  /// SplitMix64 finalizer; derives independent per-item seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

/// Random cactus on exactly n vertices, grown by attaching a pendant edge or
/// a cycle (each with probability 1/2 when a cycle still fits) at a uniformly
/// chosen existing vertex.
inline Graph random_cactus(CactusRng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("random cactus needs n >= 1");
  std::vector<Edge> edges;
  std::size_t m = 1;
  while (m < n) {
    const auto at = static_cast<Vertex>(rng.below(m));
    const std::size_t room = n - m;
    if (room >= 2 && rng.below(2) == 0) {
      const std::size_t len = rng.between(3, room + 1);
      Vertex prev = at;
      for (std::size_t j = 0; j + 1 < len; ++j) {
        const auto fresh = static_cast<Vertex>(m++);
        edges.push_back({prev, fresh});
        prev = fresh;
      }
      edges.push_back({prev, at});
    } else {
      edges.push_back({at, static_cast<Vertex>(m++)});
    }
  }
  return Graph::from_edges(n, edges);
}

/// The i-th cactus of a seeded corpus; order uniform in [n_min, n_max].
inline Graph seeded_random_cactus(std::uint64_t seed, std::size_t index, std::size_t n_min, std::size_t n_max) {
  CactusRng rng(seed ^ CactusRng::mix(index));
  return random_cactus(rng, rng.between(n_min, n_max));
}

}  // namespace cactus
