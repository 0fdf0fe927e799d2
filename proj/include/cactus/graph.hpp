#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cactus {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted
/// so that two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      if (!g.add_edge(e.u, e.v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
      }
    }
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Returns false when the edge is already present. Self-loops are rejected.
  bool add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto pos = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (pos != adj_[u].end() && *pos == v) return false;
    adj_[u].insert(pos, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
    return true;
  }

  /// Returns false when the edge is absent.
  bool remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    auto pos = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (pos == adj_[u].end() || *pos != v) return false;
    adj_[u].erase(pos);
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --edge_count_;
    return true;
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= adj_.size()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                              std::to_string(adj_.size()));
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Shortest-path distances from one source.
struct DistanceRow {
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  Vertex source = 0;
  std::vector<std::uint32_t> dist;

  bool reachable(Vertex v) const { return dist.at(v) != kUnreachable; }
};

inline DistanceRow bfs_distances(const Graph& g, Vertex source) {
  if (source >= g.order()) {
    throw std::out_of_range("bfs source " + std::to_string(source) + " out of range");
  }
  DistanceRow row{source, std::vector<std::uint32_t>(g.order(), DistanceRow::kUnreachable)};
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  queue.push_back(source);
  row.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (row.dist[w] == DistanceRow::kUnreachable) {
        row.dist[w] = row.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const DistanceRow row = bfs_distances(g, 0);
  return std::none_of(row.dist.begin(), row.dist.end(),
                      [](std::uint32_t d) { return d == DistanceRow::kUnreachable; });
}

/// Subgraph induced by `vertices` (sorted ascending). Vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> index(g.order(), DistanceRow::kUnreachable);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  Graph sub(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (index[w] != DistanceRow::kUnreachable && index[w] > i) sub.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return sub;
}

/// Relabels so that old vertex v becomes perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

}  // namespace cactus
