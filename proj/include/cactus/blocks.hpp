#pragma once

// Block (biconnected component) decomposition and cactus recognition.

#include <cactus/graph.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace cactus {

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // u < v, sorted

  bool is_bridge() const { return edges.size() == 1; }
  bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
};

/// Blocks of g in a deterministic order (sorted by vertex list). Isolated
/// vertices form no block.
inline std::vector<Block> blocks(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<Edge> stack;
  std::vector<Block> out;
  std::uint32_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    std::vector<Frame> frames{{root, root, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[w] == 0) {
          stack.push_back({f.v, w});
          disc[w] = low[w] = ++timer;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex parent = f.parent;
      frames.pop_back();
      if (frames.empty()) break;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        Block b;
        std::set<Vertex> vs;
        while (true) {
          const Edge e = stack.back();
          stack.pop_back();
          b.edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
          vs.insert(e.u);
          vs.insert(e.v);
          if (e.u == parent && e.v == v) break;
        }
        b.vertices.assign(vs.begin(), vs.end());
        std::sort(b.edges.begin(), b.edges.end());
        out.push_back(std::move(b));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return out;
}

struct CactusCheck {
  bool is_cactus = false;
  std::size_t cycles = 0;  // meaningful only when is_cactus
};

/// Connected, and every block is a single edge or a cycle.
inline CactusCheck is_cactus(const Graph& g) {
  if (!is_connected(g)) return {};
  for (const Block& b : blocks(g)) {
    if (!b.is_bridge() && !b.is_cycle()) return {};
  }
  return {true, g.size() + 1 - g.order()};
}

/// Vertices of a cycle block in cyclic order, starting at the smallest vertex
/// and continuing towards its smaller neighbor.
inline std::vector<Vertex> cycle_order(const Block& b) {
  std::vector<std::vector<Vertex>> local;
  auto find = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(b.vertices.begin(), b.vertices.end(), v) - b.vertices.begin());
  };
  local.resize(b.vertices.size());
  for (const Edge& e : b.edges) {
    local[find(e.u)].push_back(e.v);
    local[find(e.v)].push_back(e.u);
  }
  std::vector<Vertex> order{b.vertices.front()};
  Vertex prev = b.vertices.front();
  Vertex cur = std::min(local[0][0], local[0][1]);
  while (cur != b.vertices.front()) {
    order.push_back(cur);
    const auto& nb = local[find(cur)];
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

/// Component labels of g with the given edges ignored. Labels are assigned in
/// order of smallest vertex.
inline std::vector<std::uint32_t> components_without(const Graph& g, std::span<const Edge> removed) {
  auto is_removed = [&](Vertex a, Vertex b) {
    return std::any_of(removed.begin(), removed.end(), [&](const Edge& e) {
      return (e.u == a && e.v == b) || (e.u == b && e.v == a);
    });
  };
  std::vector<std::uint32_t> label(g.order(), DistanceRow::kUnreachable);
  std::uint32_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != DistanceRow::kUnreachable) continue;
    label[s] = next;
    std::vector<Vertex> todo{s};
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == DistanceRow::kUnreachable && !is_removed(v, w)) {
          label[w] = next;
          todo.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

/// Vertex set of the component containing `start` once the given edges are ignored.
inline std::vector<Vertex> component_of(const Graph& g, Vertex start, std::span<const Edge> removed) {
  const auto label = components_without(g, removed);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (label[v] == label[start]) out.push_back(v);
  }
  return out;
}

/// Branches of g at v: for each component of g - v, its vertex set plus v,
/// sorted; branches ordered by their smallest non-v vertex.
inline std::vector<std::vector<Vertex>> branches_at(const Graph& g, Vertex v) {
  std::vector<std::uint32_t> label(g.order(), DistanceRow::kUnreachable);
  label[v] = 0;
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != DistanceRow::kUnreachable) continue;
    std::vector<Vertex> part{v, s};
    label[s] = 1;
    std::vector<Vertex> todo{s};
    while (!todo.empty()) {
      const Vertex x = todo.back();
      todo.pop_back();
      for (Vertex w : g.neighbors(x)) {
        if (label[w] == DistanceRow::kUnreachable) {
          label[w] = 1;
          part.push_back(w);
          todo.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace cactus
