#pragma once

// Closeness-reducing graph rewrites on cacti. Each rewrite re-checks the
// hypotheses of its binding against the graph and throws SiteError when
// they fail; it never repairs a bad binding.

#include <cactus/blocks.hpp>
#include <cactus/closeness.hpp>
#include <cactus/graph.hpp>
#include <cactus/lemma_site.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace cactus {

namespace detail {

inline bool is_sorted_set(const std::vector<Vertex>& s) { return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end(); }

inline bool contains(const std::vector<Vertex>& sorted, Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

inline std::size_t local_index(const std::vector<Vertex>& sorted, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

/// Closeness of v inside the subgraph induced by `part`.
inline DyadicRational closeness_within(const Graph& g, const std::vector<Vertex>& part, Vertex v) {
  return vertex_closeness(induced_subgraph(g, part), static_cast<Vertex>(local_index(part, v)));
}

/// Farthest vertex from `from` inside the subgraph induced by `part`; ties go
/// to the smallest index.
inline Vertex farthest_within(const Graph& g, const std::vector<Vertex>& part, Vertex from) {
  const DistanceRow row = bfs_distances(induced_subgraph(g, part), static_cast<Vertex>(local_index(part, from)));
  std::size_t best = 0;
  for (std::size_t i = 1; i < part.size(); ++i) {
    if (row.dist[i] != DistanceRow::kUnreachable && row.dist[i] > row.dist[best]) best = i;
  }
  return part[best];
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw SiteError(message);
}

inline void require_edge(const Graph& g, Vertex a, Vertex b) {
  require(a < g.order() && b < g.order() && g.has_edge(a, b),
          "bound edge " + std::to_string(a) + "-" + std::to_string(b) + " missing");
}

inline std::vector<Vertex> set_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Vertex> set_intersection(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Moves every edge (from, w) with w in `part` to (to, w).
inline void reattach(Graph& g, Vertex from, Vertex to, const std::vector<Vertex>& part) {
  std::vector<Vertex> moved;
  for (Vertex w : g.neighbors(from)) {
    if (w != from && contains(part, w)) moved.push_back(w);
  }
  for (Vertex w : moved) {
    g.remove_edge(from, w);
    g.add_edge(to, w);
  }
}

inline bool is_single_block(const Graph& h) {
  if (!is_connected(h)) return false;
  if (h.order() == 2) return h.size() == 1;
  if (h.order() < 3 || h.size() != h.order()) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) != 2) return false;
  }
  return true;
}

inline bool is_path_graph(const Graph& h) {
  if (!is_connected(h) || h.size() + 1 != h.order()) return false;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 2) return false;
  }
  return true;
}

/// Longest simple path length overall and between two given vertices, by
/// exhaustive DFS. Fine for the small parts the harness works with.
struct LongestPaths {
  std::size_t overall = 0;
  std::size_t between = 0;
  bool connected_pair = false;
};

inline LongestPaths longest_paths(const Graph& h, Vertex a, Vertex b) {
  LongestPaths out;
  std::vector<bool> on_path(h.order(), false);
  Vertex start = 0;
  auto dfs = [&](auto&& self, Vertex v, std::size_t len) -> void {
    out.overall = std::max(out.overall, len);
    if (start == a && v == b && len > 0) {
      out.between = std::max(out.between, len);
      out.connected_pair = true;
    }
    for (Vertex w : h.neighbors(v)) {
      if (on_path[w]) continue;
      on_path[w] = true;
      self(self, w, len + 1);
      on_path[w] = false;
    }
  };
  for (start = 0; start < h.order(); ++start) {
    on_path[start] = true;
    dfs(dfs, start, 0);
    on_path[start] = false;
  }
  return out;
}

inline RewriteOutcome finish(LemmaId lemma, const Graph& before, std::vector<Graph> after) {
  RewriteOutcome out;
  out.lemma = lemma;
  out.before = before;
  out.closeness_before = graph_closeness(before);
  const CactusCheck in = is_cactus(before);
  out.class_preserved = true;
  for (const Graph& a : after) {
    out.closeness_after.push_back(graph_closeness(a));
    const CactusCheck res = is_cactus(a);
    out.class_preserved = out.class_preserved && res.is_cactus && in.is_cactus && res.cycles == in.cycles &&
                          a.order() == before.order();
  }
  out.after = std::move(after);
  return out;
}

inline bool any_strictly_smaller(const RewriteOutcome& o) {
  return std::any_of(o.closeness_after.begin(), o.closeness_after.end(),
                     [&](const DyadicRational& c) { return c < o.closeness_before; });
}

// Hypothesis checks. Each throws SiteError on failure.

inline void check_cycle_site(const Graph& g, const std::vector<Vertex>& cycle, std::size_t min_length) {
  const std::size_t r = cycle.size();
  require(r >= min_length, "cycle length " + std::to_string(r) + " below the required " + std::to_string(min_length));
  std::vector<Vertex> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "cycle vertices repeat");
  std::vector<Edge> cycle_edges;
  for (std::size_t i = 0; i < r; ++i) {
    require_edge(g, cycle[i], cycle[(i + 1) % r]);
    cycle_edges.push_back({cycle[i], cycle[(i + 1) % r]});
  }
  const auto label = components_without(g, cycle_edges);
  std::set<std::uint32_t> all(label.begin(), label.end());
  std::set<std::uint32_t> at_cycle;
  for (Vertex v : cycle) at_cycle.insert(label[v]);
  require(all.size() == r && at_cycle.size() == r,
          "removing the cycle edges must leave exactly " + std::to_string(r) + " components, one per cycle vertex");
}

inline std::vector<std::vector<Vertex>> hanging_parts(const Graph& g, const std::vector<Vertex>& cycle) {
  std::vector<Edge> cycle_edges;
  for (std::size_t i = 0; i < cycle.size(); ++i) cycle_edges.push_back({cycle[i], cycle[(i + 1) % cycle.size()]});
  const auto label = components_without(g, cycle_edges);
  std::vector<std::vector<Vertex>> parts(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (label[v] == label[cycle[i]]) parts[i].push_back(v);
    }
  }
  return parts;
}

inline void check_branch_site(const Graph& g, const BranchSite& s) {
  require(s.cut < g.order(), "cut vertex out of range");
  const auto parts = branches_at(g, s.cut);
  require(parts.size() >= 3, "vertex " + std::to_string(s.cut) + " must split the graph into at least three parts");
  auto find_part = [&](const std::vector<Vertex>& h) { return std::find(parts.begin(), parts.end(), h); };
  const auto i1 = find_part(s.h1);
  const auto i2 = find_part(s.h2);
  require(i1 != parts.end() && i2 != parts.end() && i1 != i2, "H_1 and H_2 must be distinct branches at the cut vertex");
  std::vector<Vertex> rest{s.cut};
  for (auto it = parts.begin(); it != parts.end(); ++it) {
    if (it != i1 && it != i2) rest = set_union(rest, *it);
  }
  require(rest == s.h3, "H_3 must be the union of the remaining branches");
  require(s.u1 == farthest_within(g, s.h1, s.cut) && s.u2 == farthest_within(g, s.h2, s.cut),
          "u_1, u_2 must be the farthest vertices from the cut vertex (smallest index on ties)");
  const DyadicRational c1 = closeness_within(g, s.h1, s.cut);
  const DyadicRational c2 = closeness_within(g, s.h2, s.cut);
  const DyadicRational bound = std::min(c1, c2);
  require(closeness_within(g, s.h1, s.u1) <= bound && closeness_within(g, s.h2, s.u2) <= bound,
          "farthest-vertex closeness condition unsatisfiable");
}

inline void check_triangle_site(const Graph& g, const TriangleSite& s) {
  const auto& t = s.triangle;
  for (std::size_t i = 0; i < 3; ++i) require_edge(g, t[i], t[(i + 1) % 3]);
  const std::vector<Vertex> tri(t.begin(), t.end());
  const auto label = components_without(g, std::vector<Edge>{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}});
  std::set<std::uint32_t> all(label.begin(), label.end());
  require(all.size() == 3 && label[t[0]] != label[t[1]] && label[t[1]] != label[t[2]] && label[t[0]] != label[t[2]],
          "removing the triangle edges must leave exactly three components");
  const auto parts = hanging_parts(g, tri);
  for (const auto& p : parts) require(p.size() >= 2, "every triangle vertex needs a nontrivial incident component");
  require(is_single_block(induced_subgraph(g, parts[0])) && is_single_block(induced_subgraph(g, parts[1])),
          "H_1 and H_2 must be end-blocks (a single edge or cycle)");
  require(s.v1 == farthest_within(g, parts[0], t[0]) && s.v2 == farthest_within(g, parts[1], t[1]),
          "v_1, v_2 must be the farthest vertices of H_1, H_2 (smallest index on ties)");
  const DyadicRational bound = std::min(closeness_within(g, parts[0], t[0]), closeness_within(g, parts[1], t[1]));
  require(closeness_within(g, parts[0], s.v1) <= bound && closeness_within(g, parts[1], s.v2) <= bound,
          "farthest-vertex closeness condition unsatisfiable");
}

inline void check_pendant_site(const Graph& g, const PendantSite& s) {
  const std::size_t r = s.path.size();
  require(r >= 2, "pendant path needs at least two vertices");
  require(s.path.front() == s.v2, "the pendant path must start at v_2");
  require(is_sorted_set(s.h1) && is_sorted_set(s.h2), "vertex sets must be sorted and duplicate-free");
  for (std::size_t i = 0; i + 1 < r; ++i) require_edge(g, s.path[i], s.path[i + 1]);
  require(g.degree(s.path.back()) == 1, "pendant path must end at a leaf");
  for (std::size_t i = 1; i + 1 < r; ++i) require(g.degree(s.path[i]) == 2, "pendant path interior must have degree 2");
  std::vector<Vertex> path_set(s.path);
  std::sort(path_set.begin(), path_set.end());
  require(std::adjacent_find(path_set.begin(), path_set.end()) == path_set.end(), "pendant path repeats a vertex");
  require(set_intersection(s.h1, s.h2) == std::vector<Vertex>{s.v1}, "H_1 and H_2 must share exactly v_1");
  require(set_intersection(s.h2, path_set) == std::vector<Vertex>{s.v2}, "H_2 and the path must share exactly v_2");
  require(set_intersection(s.h1, path_set).empty(), "H_1 must not meet the pendant path");
  require(s.h1.size() + s.h2.size() + r - 2 == g.order(), "H_1, H_2 and the path must cover the graph");
  for (const Edge& e : g.edges()) {
    const bool inside = (contains(s.h1, e.u) && contains(s.h1, e.v)) || (contains(s.h2, e.u) && contains(s.h2, e.v)) ||
                        (contains(path_set, e.u) && contains(path_set, e.v));
    require(inside, "gluing pattern not matched: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                        " crosses the decomposition");
  }
  require(s.h1.size() >= 2 && is_connected(induced_subgraph(g, s.h1)), "H_1 must be connected with at least two vertices");
  const Graph h2 = induced_subgraph(g, s.h2);
  require(is_connected(h2) && s.h2.size() >= 3, "H_2 must be connected with at least three vertices");
  require(!is_path_graph(h2), "H_2 must not be a path");
  const LongestPaths lp = longest_paths(h2, static_cast<Vertex>(local_index(s.h2, s.v1)),
                                        static_cast<Vertex>(local_index(s.h2, s.v2)));
  require(lp.connected_pair && lp.between == lp.overall, "v_1 and v_2 must be the ends of a longest path of H_2");
}

inline void check_balance_site(const Graph& g, const BalanceSite& s) {
  const std::size_t r = s.path.size();
  require(r >= 4, "end balancing needs r >= 4, got r = " + std::to_string(r));
  require(is_sorted_set(s.h1) && is_sorted_set(s.h2), "vertex sets must be sorted and duplicate-free");
  std::vector<Vertex> path_set(s.path);
  std::sort(path_set.begin(), path_set.end());
  require(std::adjacent_find(path_set.begin(), path_set.end()) == path_set.end(), "path repeats a vertex");
  for (std::size_t i = 0; i + 1 < r; ++i) require_edge(g, s.path[i], s.path[i + 1]);
  const Vertex w1 = s.path[0], wr2 = s.path[r - 3], wr1 = s.path[r - 2], wr = s.path[r - 1];
  require_edge(g, wr2, wr);
  require(set_intersection(s.h1, path_set) == std::vector<Vertex>{w1}, "H_1 must meet the path exactly at w_1");
  require(set_intersection(s.h2, path_set) == std::vector<Vertex>{wr1}, "H_2 must meet the path exactly at w_{r-1}");
  require(set_intersection(s.h1, s.h2).empty(), "H_1 and H_2 must be disjoint");
  require(s.h1.size() + s.h2.size() + r - 2 == g.order(), "H_1, H_2 and the path must cover the graph");
  for (const Edge& e : g.edges()) {
    const bool in_m = contains(path_set, e.u) && contains(path_set, e.v);
    const bool inside = (contains(s.h1, e.u) && contains(s.h1, e.v)) || (contains(s.h2, e.u) && contains(s.h2, e.v));
    require(inside || in_m, "gluing pattern not matched: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                " crosses the decomposition");
  }
  // M itself must be exactly P_r + w_{r-2}w_r.
  std::size_t m_edges = 0;
  for (const Edge& e : g.edges()) {
    if (contains(path_set, e.u) && contains(path_set, e.v)) ++m_edges;
  }
  require(m_edges == r, "path vertices carry extra edges beyond P_r + w_{r-2}w_r");
  require(is_connected(induced_subgraph(g, s.h1)) && is_connected(induced_subgraph(g, s.h2)),
          "H_1 and H_2 must be connected");
  require(s.h1.size() <= s.h2.size(), "size ordering violated: |V(H_1)| must not exceed |V(H_2)|");
}

}  // namespace detail

/// G' = G - u_1u_r + u_{r-2}u_r. Claim: C(G') < C(G).
inline RewriteOutcome shorten_cycle(const Graph& g, const LemmaSite& site) {
  const auto* s = std::get_if<CycleSite>(&site.binding);
  if (s == nullptr) throw SiteError("shorten_cycle needs a cycle binding");
  detail::check_cycle_site(g, s->cycle, 5);
  const auto& c = s->cycle;
  const std::size_t r = c.size();
  Graph after = g;
  after.remove_edge(c[0], c[r - 1]);
  after.add_edge(c[r - 3], c[r - 1]);
  RewriteOutcome out = detail::finish(LemmaId::Cycle, g, {std::move(after)});
  out.claim_holds = out.closeness_after[0] < out.closeness_before;
  return out;
}

/// G' = G - u_1u_4 + u_2u_4. Claim: C(G') <= C(G); the size condition
/// |V(H_1)| = |V(H_2)| is recorded as the predicted equality case.
inline RewriteOutcome swap_c4(const Graph& g, const LemmaSite& site) {
  const auto* s = std::get_if<C4Site>(&site.binding);
  if (s == nullptr) throw SiteError("swap_c4 needs a four-cycle binding");
  const std::vector<Vertex> cycle(s->cycle.begin(), s->cycle.end());
  detail::check_cycle_site(g, cycle, 4);
  const auto parts = detail::hanging_parts(g, cycle);
  const std::size_t largest =
      std::max_element(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); })
          ->size();
  detail::require(parts[0].size() == largest, "H_1 must have maximum order among the four components");
  Graph after = g;
  after.remove_edge(cycle[0], cycle[3]);
  after.add_edge(cycle[1], cycle[3]);
  RewriteOutcome out = detail::finish(LemmaId::C4, g, {std::move(after)});
  out.claim_holds = out.closeness_after[0] <= out.closeness_before;
  out.equality_predicted = parts[0].size() == parts[1].size();
  out.equality_observed = out.closeness_after[0] == out.closeness_before;
  return out;
}

/// Moves H_3's attachment from the cut vertex to u_1 (first alternative) or
/// u_2 (second). Claim: at least one alternative strictly lowers C.
inline RewriteOutcome relocate_branch(const Graph& g, const LemmaSite& site) {
  const auto* s = std::get_if<BranchSite>(&site.binding);
  if (s == nullptr) throw SiteError("relocate_branch needs a branch binding");
  detail::check_branch_site(g, *s);
  Graph g1 = g, g2 = g;
  detail::reattach(g1, s->cut, s->u1, s->h3);
  detail::reattach(g2, s->cut, s->u2, s->h3);
  RewriteOutcome out = detail::finish(LemmaId::Branch, g, {std::move(g1), std::move(g2)});
  out.claim_holds = detail::any_strictly_smaller(out);
  return out;
}

/// Moves H_3's attachment from u_3 to v_1 (first alternative) or v_2
/// (second). Claim: at least one alternative strictly lowers C.
inline RewriteOutcome relocate_triangle_branch(const Graph& g, const LemmaSite& site) {
  const auto* s = std::get_if<TriangleSite>(&site.binding);
  if (s == nullptr) throw SiteError("relocate_triangle_branch needs a triangle binding");
  detail::check_triangle_site(g, *s);
  const std::vector<Vertex> tri(s->triangle.begin(), s->triangle.end());
  const auto parts = detail::hanging_parts(g, tri);
  Graph g1 = g, g2 = g;
  detail::reattach(g1, tri[2], s->v1, parts[2]);
  detail::reattach(g2, tri[2], s->v2, parts[2]);
  RewriteOutcome out = detail::finish(LemmaId::Triangle, g, {std::move(g1), std::move(g2)});
  out.claim_holds = detail::any_strictly_smaller(out);
  return out;
}

/// Case (i), when C_{H2}(v2) <= C_{H2}(v1): H_1 moves from v_1 to the path
/// end w_r. Case (ii), otherwise: additionally the path is re-rooted from
/// v_2 to v_1. Claim: the applied case strictly lowers C.
inline RewriteOutcome move_pendant_path(const Graph& g, const LemmaSite& site) {
  const auto* s = std::get_if<PendantSite>(&site.binding);
  if (s == nullptr) throw SiteError("move_pendant_path needs a pendant-path binding");
  detail::check_pendant_site(g, *s);
  const DyadicRational c_v1 = detail::closeness_within(g, s->h2, s->v1);
  const DyadicRational c_v2 = detail::closeness_within(g, s->h2, s->v2);
  const Vertex wr = s->path.back();
  Graph after = g;
  detail::reattach(after, s->v1, wr, s->h1);
  int applied = 1;
  if (c_v2 > c_v1) {
    applied = 2;
    after.remove_edge(s->v2, s->path[1]);
    after.add_edge(s->v1, s->path[1]);
  }
  RewriteOutcome out = detail::finish(LemmaId::Pendant, g, {std::move(after)});
  out.applied_case = applied;
  out.claim_holds = out.closeness_after[0] < out.closeness_before;
  return out;
}

/// Turns M = P_r + w_{r-2}w_r into M' = M - {w_{r-2}w_r, w_{r-1}w_r} +
/// {w_1w_r, w_2w_r}, moving the triangle next to the smaller side H_1.
/// Claim checked: C(after) <= C(before), equality predicted iff
/// |V(H_1)| = |V(H_2)|.
inline RewriteOutcome balance_ends(const Graph& g, const LemmaSite& site) {
  const auto* s = std::get_if<BalanceSite>(&site.binding);
  if (s == nullptr) throw SiteError("balance_ends needs an end-balancing binding");
  detail::check_balance_site(g, *s);
  const auto& w = s->path;
  const std::size_t r = w.size();
  Graph after = g;
  after.remove_edge(w[r - 3], w[r - 1]);
  after.remove_edge(w[r - 2], w[r - 1]);
  after.add_edge(w[0], w[r - 1]);
  after.add_edge(w[1], w[r - 1]);
  RewriteOutcome out = detail::finish(LemmaId::Balance, g, {std::move(after)});
  out.claim_holds = out.closeness_after[0] <= out.closeness_before;
  out.equality_predicted = s->h1.size() == s->h2.size();
  out.equality_observed = out.closeness_after[0] == out.closeness_before;
  return out;
}

/// Dispatches on the binding's lemma.
inline RewriteOutcome apply_rewrite(const Graph& g, const LemmaSite& site) {
  switch (site.lemma()) {
    case LemmaId::Branch: return relocate_branch(g, site);
    case LemmaId::Cycle: return shorten_cycle(g, site);
    case LemmaId::C4: return swap_c4(g, site);
    case LemmaId::Triangle: return relocate_triangle_branch(g, site);
    case LemmaId::Pendant: return move_pendant_path(g, site);
    case LemmaId::Balance: return balance_ends(g, site);
  }
  throw SiteError("unknown lemma");
}

}  // namespace cactus
