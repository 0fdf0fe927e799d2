#pragma once

#include <cactus/closeness.hpp>
#include <cactus/graph.hpp>

#include <stdexcept>
#include <string>

namespace cactus {

inline Graph make_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  Graph g = make_path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

/// Star K_{1,leaves} with the center at index 0.
inline Graph make_star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

/// Parameters of D(n; k1, k2): a path on n-k vertices whose first k1 and
/// last k2 edges each carry a triangle.
struct DParams {
  std::size_t n = 1;
  std::size_t k1 = 0;
  std::size_t k2 = 0;

  std::size_t k() const { return k1 + k2; }

  void validate() const {
    if (n == 0) throw std::invalid_argument("D(n;k1,k2) needs n >= 1");
    if (2 * k() > n - 1) {
      throw std::invalid_argument("D(n;k1,k2) needs k1+k2 <= floor((n-1)/2); got n=" + std::to_string(n) +
                                  " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2));
    }
  }

  /// The balanced member D(n; floor(k/2), ceil(k/2)).
  static DParams balanced(std::size_t n, std::size_t k) { return {n, k / 2, k - k / 2}; }
};

/// Vertices 0..n-k-1 are the path u_1..u_{n-k}; vertex n-k+i-1 is the apex v_i.
inline Graph make_D(const DParams& p) {
  p.validate();
  const std::size_t k = p.k();
  const std::size_t spine = p.n - k;
  Graph g(p.n);
  for (Vertex i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    const auto apex = static_cast<Vertex>(spine + i - 1);
    // u_j lives at index j-1
    const auto left = static_cast<Vertex>(i <= p.k1 ? i - 1 : p.n - 2 * k - 2 + i);
    g.add_edge(apex, left);
    g.add_edge(apex, left + 1);
  }
  return g;
}

/// Disjoint union of h1 and h2 with v1 and v2 merged. h1 keeps its indices
/// (the merged vertex is v1); h2's other vertices follow in ascending order.
inline Graph identify_vertices(const Graph& h1, Vertex v1, const Graph& h2, Vertex v2) {
  if (v1 >= h1.order() || v2 >= h2.order()) throw std::out_of_range("identified vertex out of range");
  const std::size_t n1 = h1.order();
  Graph g(n1 + h2.order() - 1);
  for (const Edge& e : h1.edges()) g.add_edge(e.u, e.v);
  auto map = [&](Vertex x) -> Vertex {
    if (x == v2) return v1;
    return static_cast<Vertex>(n1 + (x < v2 ? x : x - 1));
  };
  for (const Edge& e : h2.edges()) g.add_edge(map(e.u), map(e.v));
  return g;
}

/// C(H1) + C(H2) + 2 C_{H1}(v1) C_{H2}(v2): the closeness of the graph
/// obtained by gluing h1 and h2 at v1 = v2, computed from the parts.
inline DyadicRational closeness_by_decomposition(const Graph& h1, Vertex v1, const Graph& h2, Vertex v2) {
  if (v1 >= h1.order() || v2 >= h2.order()) throw std::out_of_range("identified vertex out of range");
  return graph_closeness(h1) + graph_closeness(h2) + DyadicRational(2) * vertex_closeness(h1, v1) *
                                                        vertex_closeness(h2, v2);
}

}  // namespace cactus
