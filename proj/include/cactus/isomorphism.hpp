#pragma once

// Direct backtracking isomorphism test. Deliberately shares nothing with
// canonical.hpp so the two can cross-check each other.

#include <cactus/graph.hpp>

#include <algorithm>
#include <vector>

namespace cactus {

namespace detail {

/// Degree followed by the BFS layer sizes: an isomorphism invariant of a vertex.
inline std::vector<std::uint32_t> vertex_profile(const Graph& g, Vertex v) {
  const DistanceRow row = bfs_distances(g, v);
  std::vector<std::uint32_t> layers;
  std::uint32_t unreachable = 0;
  for (auto d : row.dist) {
    if (d == DistanceRow::kUnreachable) {
      ++unreachable;
      continue;
    }
    if (layers.size() <= d) layers.resize(d + 1, 0);
    ++layers[d];
  }
  layers.insert(layers.begin(), {static_cast<std::uint32_t>(g.degree(v)), unreachable});
  return layers;
}

class IsoMatcher {
 public:
  IsoMatcher(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  bool run() {
    const std::size_t n = a_.order();
    if (n != b_.order() || a_.size() != b_.size()) return false;
    pa_.resize(n);
    pb_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      pa_[v] = vertex_profile(a_, v);
      pb_[v] = vertex_profile(b_, v);
    }
    auto sa = pa_, sb = pb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    // Visit a's vertices in BFS order from each component root so that each
    // new vertex is usually adjacent to one already mapped.
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      std::vector<Vertex> q{s};
      seen[s] = true;
      for (std::size_t h = 0; h < q.size(); ++h) {
        order_.push_back(q[h]);
        for (Vertex w : a_.neighbors(q[h])) {
          if (!seen[w]) {
            seen[w] = true;
            q.push_back(w);
          }
        }
      }
    }
    map_.assign(n, kNone);
    used_.assign(n, false);
    return extend(0);
  }

 private:
  static constexpr Vertex kNone = DistanceRow::kUnreachable;

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    for (Vertex y = 0; y < b_.order(); ++y) {
      if (used_[y] || pa_[x] != pb_[y] || !consistent(x, y, depth)) continue;
      map_[x] = y;
      used_[y] = true;
      if (extend(depth + 1)) return true;
      used_[y] = false;
      map_[x] = kNone;
    }
    return false;
  }

  bool consistent(Vertex x, Vertex y, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex p = order_[i];
      if (a_.has_edge(x, p) != b_.has_edge(y, map_[p])) return false;
    }
    return true;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<std::vector<std::uint32_t>> pa_, pb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace detail

inline bool are_isomorphic(const Graph& a, const Graph& b) { return detail::IsoMatcher(a, b).run(); }

}  // namespace cactus
