#pragma once

// Exponential-decay closeness: C_G(u) = sum over v != u of 2^-d(u,v), and C(G) the
// sum of C_G(u) over all u. Unreachable pairs contribute nothing.

#include <cactus/dyadic.hpp>
#include <cactus/graph.hpp>

#include <vector>

namespace cactus {

namespace detail {

/// Adds `counts[d]` copies of 2^-d into one dyadic value, d >= 1.
inline DyadicRational sum_inverse_powers(const std::vector<std::size_t>& counts) {
  if (counts.size() <= 1) return {};
  const auto top = static_cast<std::uint32_t>(counts.size() - 1);
  BigInt num = 0;
  for (std::uint32_t d = 1; d <= top; ++d) {
    if (counts[d] != 0) num += BigInt(counts[d]) << (top - d);
  }
  return {num, top};
}

inline void accumulate_row(const DistanceRow& row, std::vector<std::size_t>& counts) {
  for (std::uint32_t d : row.dist) {
    if (d == 0 || d == DistanceRow::kUnreachable) continue;
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
}

}  // namespace detail

inline DyadicRational vertex_closeness(const Graph& g, Vertex u) {
  std::vector<std::size_t> counts;
  detail::accumulate_row(bfs_distances(g, u), counts);
  return detail::sum_inverse_powers(counts);
}

inline std::vector<DyadicRational> all_vertex_closeness(const Graph& g) {
  std::vector<DyadicRational> out;
  out.reserve(g.order());
  for (Vertex u = 0; u < g.order(); ++u) out.push_back(vertex_closeness(g, u));
  return out;
}

inline DyadicRational graph_closeness(const Graph& g) {
  std::vector<std::size_t> counts;
  for (Vertex u = 0; u < g.order(); ++u) detail::accumulate_row(bfs_distances(g, u), counts);
  return detail::sum_inverse_powers(counts);
}

}  // namespace cactus
