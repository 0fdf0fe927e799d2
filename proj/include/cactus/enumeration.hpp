#pragma once

// Isomorph-free generation of the cacti with n vertices and k cycles.
//
// Every cactus on two or more vertices has a leaf block; removing it leaves
// a smaller cactus. So growing from a single vertex by attaching a pendant
// edge or a cycle at any vertex reaches every cactus, and keeping one
// canonical form per isomorphism class at each (order, cycles) level makes
// the output duplicate-free.

#include <cactus/canonical.hpp>
#include <cactus/closeness.hpp>
#include <cactus/graph.hpp>
#include <cactus/graph6.hpp>
#include <cactus/parallel.hpp>

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cactus {

struct CactusClassKey {
  std::size_t n = 1;
  std::size_t k = 0;

  void validate() const {
    if (n == 0 || 2 * k > n - 1) {
      throw std::invalid_argument("need n >= 1 and 0 <= k <= floor((n-1)/2); got n=" + std::to_string(n) +
                                  " k=" + std::to_string(k));
    }
  }
  static std::size_t max_cycles(std::size_t n) { return n == 0 ? 0 : (n - 1) / 2; }
  friend auto operator<=>(const CactusClassKey&, const CactusClassKey&) = default;
};

/// Above this order exhaustive runs grow quickly (thousands of classes per
/// key at n = 11 and roughly threefold per extra vertex).
inline constexpr std::size_t kDefaultExhaustiveCeiling = 10;

/// Canonical graph6 strings of all cacti in the class, sorted.
inline std::vector<std::string> enumerate_cactus_codes(const CactusClassKey& key, unsigned workers = 1) {
  key.validate();
  const std::size_t n = key.n, k = key.k;
  // level[(order, cycles)] = canonical codes
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> level;
  level[{1, 0}].insert(canonical_form(Graph(1)));

  auto feasible = [&](std::size_t m, std::size_t c) { return c <= k && m + 2 * (k - c) <= n; };

  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t c = 0; c <= k; ++c) {
      auto it = level.find({m, c});
      if (it == level.end()) continue;
      const std::vector<std::string> parents(it->second.begin(), it->second.end());
      // per parent: (target level, code) pairs
      std::vector<std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::string>>> children(parents.size());
      parallel_for(parents.size(), workers, [&](std::size_t i) {
        const Graph g = from_graph6(parents[i]);
        for (Vertex v = 0; v < m; ++v) {
          if (feasible(m + 1, c)) {
            Graph h(m + 1);
            for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
            h.add_edge(v, static_cast<Vertex>(m));
            children[i].push_back({{m + 1, c}, canonical_form(h)});
          }
          for (std::size_t len = 3; feasible(m + len - 1, c + 1); ++len) {
            const std::size_t mm = m + len - 1;
            Graph h(mm);
            for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
            Vertex prev = v;
            for (std::size_t j = m; j < mm; ++j) {
              h.add_edge(prev, static_cast<Vertex>(j));
              prev = static_cast<Vertex>(j);
            }
            h.add_edge(prev, v);
            children[i].push_back({{mm, c + 1}, canonical_form(h)});
          }
        }
      });
      for (auto& list : children) {
        for (auto& [lvl, code] : list) level[lvl].insert(std::move(code));
      }
      level.erase({m, c});
    }
  }
  const auto& final_level = level[{n, k}];
  return {final_level.begin(), final_level.end()};
}

/// One canonically labelled representative per isomorphism class, in
/// canonical-code order.
inline std::vector<Graph> enumerate_cacti(const CactusClassKey& key, unsigned workers = 1) {
  std::vector<Graph> out;
  for (const auto& code : enumerate_cactus_codes(key, workers)) out.push_back(from_graph6(code));
  return out;
}

enum class Direction { Min, Max };

inline std::string_view direction_name(Direction d) { return d == Direction::Min ? "min" : "max"; }

struct ExtremalResult {
  DyadicRational value;
  std::vector<std::string> witnesses;  // canonical graph6, sorted
  std::size_t class_size = 0;
};

struct ClassCloseness {
  std::vector<std::string> codes;
  std::vector<DyadicRational> values;
};

inline ClassCloseness class_closeness(const CactusClassKey& key, unsigned workers = 1) {
  ClassCloseness out;
  out.codes = enumerate_cactus_codes(key, workers);
  out.values.resize(out.codes.size());
  parallel_for(out.codes.size(), workers,
               [&](std::size_t i) { out.values[i] = graph_closeness(from_graph6(out.codes[i])); });
  return out;
}

inline ExtremalResult extremal_of(const ClassCloseness& cls, Direction dir) {
  ExtremalResult out;
  out.class_size = cls.codes.size();
  for (std::size_t i = 0; i < cls.codes.size(); ++i) {
    const auto& v = cls.values[i];
    const bool better = out.witnesses.empty() || (dir == Direction::Min ? v < out.value : v > out.value);
    if (better) {
      out.value = v;
      out.witnesses = {cls.codes[i]};
    } else if (v == out.value) {
      out.witnesses.push_back(cls.codes[i]);
    }
  }
  return out;
}

/// Exact extremal closeness over the class and every class attaining it.
inline ExtremalResult extremal_closeness(const CactusClassKey& key, Direction dir, unsigned workers = 1) {
  return extremal_of(class_closeness(key, workers), dir);
}

}  // namespace cactus
