#pragma once

// Canonical graph6 strings by colour refinement plus individualization.
// Search-tree branches equivalent under automorphisms already discovered
// are skipped, which keeps symmetric trees (stars, spiders) cheap.

#include <cactus/graph.hpp>
#include <cactus/graph6.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace cactus {

namespace detail {

using Coloring = std::vector<std::uint32_t>;

inline std::uint32_t densify(Coloring& c) {
  std::vector<std::uint32_t> keys(c);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (auto& x : c) x = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), x) - keys.begin());
  return static_cast<std::uint32_t>(keys.size());
}

/// Coarsest equitable refinement of c. Cell order depends only on the
/// structure, never on vertex labels.
inline Coloring refine(const Graph& g, Coloring c) {
  const std::size_t n = g.order();
  std::uint32_t cells = densify(c);
  while (cells < n) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(c[v]);
      for (Vertex w : g.neighbors(v)) sig[v].push_back(c[w]);
      std::sort(sig[v].begin() + 1, sig[v].end());
    }
    std::vector<std::vector<std::uint32_t>> keys(sig);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    if (keys.size() == cells) break;
    for (Vertex v = 0; v < n; ++v) {
      c[v] = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    }
    cells = static_cast<std::uint32_t>(keys.size());
  }
  return c;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<Vertex> run() {
    std::vector<Vertex> prefix;
    visit(refine(g_, Coloring(g_.order(), 0)), prefix);
    return best_perm_;
  }

  const std::string& best() const { return best_; }

 private:
  void visit(const Coloring& c, std::vector<Vertex>& prefix) {
    const std::size_t n = g_.order();
    std::vector<std::uint32_t> cell_size(n, 0);
    for (auto x : c) ++cell_size[x];
    std::uint32_t target = 0;
    while (target < n && cell_size[target] <= 1) ++target;
    if (target >= n) {
      leaf(c);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex x = 0; x < n; ++x) {
      if (c[x] != target) continue;
      if (!explored.empty() && equivalent_to_explored(x, explored, prefix)) continue;
      explored.push_back(x);
      Coloring next(c);
      for (Vertex w = 0; w < n; ++w) next[w] = 2 * c[w] + ((c[w] == target && w != x) ? 1 : 0);
      prefix.push_back(x);
      visit(refine(g_, std::move(next)), prefix);
      prefix.pop_back();
    }
  }

  bool equivalent_to_explored(Vertex x, const std::vector<Vertex>& explored, const std::vector<Vertex>& prefix) const {
    // Orbits of the group generated by known automorphisms fixing the prefix.
    std::vector<Vertex> parent(g_.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& a : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return a[p] == p; })) continue;
      for (Vertex v = 0; v < g_.order(); ++v) parent[find(v)] = find(a[v]);
    }
    const Vertex rx = find(x);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == rx; });
  }

  void leaf(const Coloring& c) {
    std::vector<Vertex> perm(c.begin(), c.end());
    std::string code = to_graph6(permute(g_, perm));
    if (first_.empty()) {
      first_ = code;
      first_perm_ = perm;
    } else if (code == first_) {
      record_automorphism(first_perm_, perm);
    }
    if (best_.empty() || code > best_) {
      best_ = std::move(code);
      best_perm_ = std::move(perm);
    } else if (code == best_ && best_perm_ != first_perm_) {
      record_automorphism(best_perm_, perm);
    }
  }

  void record_automorphism(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    // Both labelings give the same graph, so a^-1 . b is an automorphism.
    std::vector<Vertex> inv(a.size());
    for (Vertex v = 0; v < a.size(); ++v) inv[a[v]] = v;
    std::vector<Vertex> sigma(a.size());
    for (Vertex v = 0; v < a.size(); ++v) sigma[v] = inv[b[v]];
    bool identity = true;
    for (Vertex v = 0; v < sigma.size(); ++v) identity = identity && sigma[v] == v;
    if (!identity) automorphisms_.push_back(std::move(sigma));
  }

  const Graph& g_;
  std::string first_;
  std::vector<Vertex> first_perm_;
  std::string best_;
  std::vector<Vertex> best_perm_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

/// Labeling that sends vertex v to canonical position result[v].
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  detail::CanonicalSearch search(g);
  return search.run();
}

/// graph6 string identical for exactly the graphs isomorphic to g.
inline std::string canonical_form(const Graph& g) {
  if (g.order() == 0) return to_graph6(g);
  detail::CanonicalSearch search(g);
  search.run();
  return search.best();
}

inline Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

}  // namespace cactus
