#pragma once

// Discovery of every binding at which a rewrite applies. Candidates are
// produced from the block structure and kept only if the rewrite's own
// hypothesis check accepts them, so discovery and rewriting cannot drift.

#include <cactus/blocks.hpp>
#include <cactus/lemma_site.hpp>
#include <cactus/transformations.hpp>

#include <algorithm>
#include <vector>

namespace cactus {

namespace detail {

template <typename Check, typename Site>
void keep_if_valid(std::vector<LemmaSite>& out, const Graph& g, Check check, Site site) {
  try {
    check(g, site);
  } catch (const SiteError&) {
    return;
  }
  out.push_back(LemmaSite{std::move(site)});
}

/// All 2r rotations and reflections of a cyclic sequence.
inline std::vector<std::vector<Vertex>> cyclic_readings(const std::vector<Vertex>& cycle) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t r = cycle.size();
  for (std::size_t start = 0; start < r; ++start) {
    std::vector<Vertex> fwd, bwd;
    for (std::size_t i = 0; i < r; ++i) {
      fwd.push_back(cycle[(start + i) % r]);
      bwd.push_back(cycle[(start + r - i) % r]);
    }
    out.push_back(std::move(fwd));
    out.push_back(std::move(bwd));
  }
  return out;
}

inline void find_cycle_sites(const Graph& g, std::vector<LemmaSite>& out) {
  for (const Block& b : blocks(g)) {
    if (!b.is_cycle() || b.vertices.size() < 5) continue;
    for (auto& reading : cyclic_readings(cycle_order(b))) {
      keep_if_valid(out, g, [](const Graph& gg, const CycleSite& s) { check_cycle_site(gg, s.cycle, 5); },
                    CycleSite{std::move(reading)});
    }
  }
}

inline void find_c4_sites(const Graph& g, std::vector<LemmaSite>& out) {
  for (const Block& b : blocks(g)) {
    if (!b.is_cycle() || b.vertices.size() != 4) continue;
    for (const auto& reading : cyclic_readings(cycle_order(b))) {
      C4Site site;
      std::copy(reading.begin(), reading.end(), site.cycle.begin());
      keep_if_valid(
          out, g,
          [](const Graph& gg, const C4Site& s) {
            const std::vector<Vertex> c(s.cycle.begin(), s.cycle.end());
            check_cycle_site(gg, c, 4);
            const auto parts = hanging_parts(gg, c);
            for (const auto& p : parts) require(p.size() <= parts[0].size(), "H_1 not maximal");
          },
          site);
    }
  }
}

inline void find_branch_sites(const Graph& g, std::vector<LemmaSite>& out) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 3) continue;
    const auto parts = branches_at(g, v);
    if (parts.size() < 3) continue;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        BranchSite site{v, parts[i], parts[j], {v}, 0, 0};
        for (std::size_t l = 0; l < parts.size(); ++l) {
          if (l != i && l != j) site.h3 = set_union(site.h3, parts[l]);
        }
        site.u1 = farthest_within(g, site.h1, v);
        site.u2 = farthest_within(g, site.h2, v);
        keep_if_valid(out, g, check_branch_site, std::move(site));
      }
    }
  }
}

inline void find_triangle_sites(const Graph& g, std::vector<LemmaSite>& out) {
  for (const Block& b : blocks(g)) {
    if (!b.is_cycle() || b.vertices.size() != 3) continue;
    const auto& t = b.vertices;
    for (std::size_t third = 0; third < 3; ++third) {
      TriangleSite site;
      std::size_t k = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i != third) site.triangle[k++] = t[i];
      }
      site.triangle[2] = t[third];
      const auto parts = hanging_parts(g, {site.triangle.begin(), site.triangle.end()});
      if (parts[0].size() < 2 || parts[1].size() < 2) continue;
      site.v1 = farthest_within(g, parts[0], site.triangle[0]);
      site.v2 = farthest_within(g, parts[1], site.triangle[1]);
      keep_if_valid(out, g, check_triangle_site, site);
    }
  }
}

inline void find_pendant_sites(const Graph& g, std::vector<LemmaSite>& out) {
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    std::vector<Vertex> path{leaf};
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf)[0];
    while (g.degree(cur) == 2) {
      path.push_back(cur);
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) == 1) continue;  // the whole graph is a path
    path.push_back(cur);
    std::reverse(path.begin(), path.end());
    const Vertex v2 = path.front();

    std::vector<Vertex> path_tail(path.begin() + 1, path.end());
    std::sort(path_tail.begin(), path_tail.end());
    for (Vertex v1 = 0; v1 < g.order(); ++v1) {
      if (v1 == v2 || contains(path_tail, v1)) continue;
      std::vector<Vertex> h1{v1};
      for (const auto& part : branches_at(g, v1)) {
        if (!contains(part, v2)) h1 = set_union(h1, part);
      }
      if (h1.size() < 2) continue;
      std::vector<Vertex> h2;
      for (Vertex x = 0; x < g.order(); ++x) {
        if (x == v1 || (!contains(h1, x) && !contains(path_tail, x))) h2.push_back(x);
      }
      keep_if_valid(out, g, check_pendant_site, PendantSite{v1, v2, std::move(h1), std::move(h2), path});
    }
  }
}

inline void find_balance_sites(const Graph& g, std::vector<LemmaSite>& out) {
  for (const Block& b : blocks(g)) {
    if (!b.is_cycle() || b.vertices.size() != 3) continue;
    const auto& t = b.vertices;
    for (std::size_t a = 0; a < 3; ++a) {      // w_r
      for (std::size_t c = 0; c < 3; ++c) {    // w_{r-2}
        if (a == c) continue;
        const Vertex wr = t[a], wr2 = t[c], wr1 = t[3 - a - c];
        if (g.degree(wr) != 2 || g.degree(wr2) != 3) continue;
        Vertex prev = wr2;
        Vertex cur = 0;
        for (Vertex x : g.neighbors(wr2)) {
          if (x != wr && x != wr1) cur = x;
        }
        // chain = w_{r-3}, w_{r-4}, ... ; any prefix end can serve as w_1
        std::vector<Vertex> chain{cur};
        while (g.degree(cur) == 2) {
          const auto nb = g.neighbors(cur);
          const Vertex next = nb[0] == prev ? nb[1] : nb[0];
          if (std::find(chain.begin(), chain.end(), next) != chain.end() || next == wr2) break;
          prev = cur;
          cur = next;
          chain.push_back(cur);
        }
        for (std::size_t end = 0; end < chain.size(); ++end) {
          std::vector<Vertex> path(chain.rend() - static_cast<std::ptrdiff_t>(end + 1), chain.rend());
          path.insert(path.end(), {wr2, wr1, wr});
          const Vertex w1 = path[0], w2 = path[1];
          BalanceSite site;
          site.path = path;
          const std::vector<Edge> cut_w1{{w1, w2}};
          site.h1 = component_of(g, w1, cut_w1);
          const std::vector<Edge> cut_m{{wr2, wr1}, {wr1, wr}};
          site.h2 = component_of(g, wr1, cut_m);
          keep_if_valid(out, g, check_balance_site, std::move(site));
        }
      }
    }
  }
}

}  // namespace detail

/// Every binding of the given rewrite on g, sorted by the site's vertex tuple.
inline std::vector<LemmaSite> find_lemma_sites(const Graph& g, LemmaId lemma) {
  std::vector<LemmaSite> out;
  if (!is_connected(g)) return out;
  switch (lemma) {
    case LemmaId::Branch: detail::find_branch_sites(g, out); break;
    case LemmaId::Cycle: detail::find_cycle_sites(g, out); break;
    case LemmaId::C4: detail::find_c4_sites(g, out); break;
    case LemmaId::Triangle: detail::find_triangle_sites(g, out); break;
    case LemmaId::Pendant: detail::find_pendant_sites(g, out); break;
    case LemmaId::Balance: detail::find_balance_sites(g, out); break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cactus
