#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Graph container: distances come from Floyd-Warshall,
// values are plain boost rationals, cactus recognition enumerates simple
// cycles, and isomorphism classes come from filtering every edge subset.

#include <cactus/graph.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using cactus::Edge;
using cactus::Graph;
using cactus::Vertex;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kInf = 1 << 28;

inline std::vector<std::vector<int>> floyd(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Rational pow2_inv(int d) { return Rational(1, boost::multiprecision::cpp_int(1) << d); }

inline Rational vertex_closeness(const Graph& g, Vertex u) {
  const auto d = floyd(g);
  Rational s = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (v != u && d[u][v] < kInf) s += pow2_inv(d[u][v]);
  return s;
}

// Sum over unordered pairs, doubled.
inline Rational graph_closeness(const Graph& g) {
  const auto d = floyd(g);
  Rational s = 0;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (d[u][v] < kInf) s += pow2_inv(d[u][v]);
  return 2 * s;
}

inline std::string str(const Rational& r) { return r.str(); }

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = floyd(g);
  return std::all_of(d[0].begin(), d[0].end(), [](int x) { return x < kInf; });
}

// Every simple cycle as a sorted edge list. Exponential; small graphs only.
inline std::vector<std::vector<std::pair<Vertex, Vertex>>> simple_cycles(const Graph& g) {
  std::set<std::vector<std::pair<Vertex, Vertex>>> found;
  const std::size_t n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> on(n, false);
  // Cycles are rooted at their smallest vertex.
  auto dfs = [&](auto&& self, Vertex root, Vertex v) -> void {
    for (Vertex w : g.neighbors(v)) {
      if (w == root && path.size() >= 3) {
        std::vector<std::pair<Vertex, Vertex>> es;
        for (std::size_t i = 0; i < path.size(); ++i) {
          Vertex a = path[i], b = path[(i + 1) % path.size()];
          es.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(es.begin(), es.end());
        found.insert(es);
      } else if (w > root && !on[w]) {
        on[w] = true;
        path.push_back(w);
        self(self, root, w);
        path.pop_back();
        on[w] = false;
      }
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    on[r] = true;
    path = {r};
    dfs(dfs, r, r);
    on[r] = false;
  }
  return {found.begin(), found.end()};
}

struct CactusAnswer {
  bool is_cactus = false;
  std::size_t cycles = 0;
};

// Connected, and no edge lies on two distinct simple cycles.
inline CactusAnswer is_cactus(const Graph& g) {
  if (!connected(g)) return {};
  const auto cycles = simple_cycles(g);
  std::set<std::pair<Vertex, Vertex>> used;
  for (const auto& c : cycles)
    for (const auto& e : c)
      if (!used.insert(e).second) return {};
  return {true, cycles.size()};
}

// Backtracking isomorphism: extend a partial map one vertex at a time,
// only to targets of equal degree that keep adjacency consistent.
inline bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex t = 0; t < n; ++t) {
      if (used[t] || a.degree(v) != b.degree(t)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(static_cast<Vertex>(map[u]), t);
      if (!ok) continue;
      map[v] = static_cast<int>(t);
      used[t] = true;
      if (self(self, v + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

// Per vertex: degree and distance histogram; sorted.
inline std::vector<std::vector<int>> fingerprint(const Graph& g) {
  const auto d = floyd(g);
  std::vector<std::vector<int>> rows;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<int> row(g.order() + 1, 0);
    row[0] = static_cast<int>(g.degree(v));
    for (Vertex u = 0; u < g.order(); ++u)
      if (d[v][u] < kInf) ++row[1 + d[v][u]];
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline bool connected_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& es) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (const auto& [u, v] : es) {
    const Vertex a = find(u), b = find(v);
    if (a != b) parent[a] = b, --parts;
  }
  return parts <= 1;
}

// Representatives of every isomorphism class of cacti with n vertices and k
// cycles, found by scanning all edge subsets of size n - 1 + k.
inline std::vector<Graph> all_cacti(std::size_t n, std::size_t k) {
  std::vector<std::pair<Vertex, Vertex>> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const std::size_t m = n - 1 + k;
  std::vector<Graph> reps;
  if (m > slots.size()) return reps;
  std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets;
  std::vector<bool> pick(slots.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(m), true);
  std::vector<std::pair<Vertex, Vertex>> chosen;
  do {
    chosen.clear();
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (pick[i]) chosen.push_back(slots[i]);
    if (!connected_edges(n, chosen)) continue;
    Graph g(n);
    for (const auto& [u, v] : chosen) g.add_edge(u, v);
    const auto ans = oracle::is_cactus(g);
    if (!ans.is_cactus || ans.cycles != k) continue;
    auto& bucket = buckets[fingerprint(g)];
    if (std::none_of(bucket.begin(), bucket.end(), [&](std::size_t r) { return isomorphic(reps[r], g); })) {
      bucket.push_back(reps.size());
      reps.push_back(std::move(g));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return reps;
}

// Random connected graph: random tree plus `extra` random chords.
inline Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, static_cast<Vertex>(rng() % v));
  for (std::size_t i = 0; i < extra && n > 1; ++i) {
    const auto a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
    if (a != b) g.add_edge(a, b);
  }
  return g;
}

inline Graph random_relabel(std::mt19937_64& rng, const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return cactus::permute(g, p);
}

}  // namespace oracle
