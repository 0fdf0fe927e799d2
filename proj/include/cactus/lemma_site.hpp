#pragma once

// Bindings of the closeness-reducing rewrites to concrete vertices.

#include <cactus/dyadic.hpp>
#include <cactus/graph.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cactus {

enum class LemmaId { Branch, Cycle, C4, Triangle, Pendant, Balance };

inline constexpr std::array<LemmaId, 6> kAllLemmas = {LemmaId::Branch,   LemmaId::Cycle,   LemmaId::C4,
                                                      LemmaId::Triangle, LemmaId::Pendant, LemmaId::Balance};

inline std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::Branch: return "L-branch";
    case LemmaId::Cycle: return "L-cycle";
    case LemmaId::C4: return "L-c4";
    case LemmaId::Triangle: return "L-triangle";
    case LemmaId::Pendant: return "L-pendant";
    case LemmaId::Balance: return "L-balance";
  }
  return "?";
}

/// Accepts "L-cycle" as well as the bare "cycle".
inline std::optional<LemmaId> parse_lemma(std::string_view text) {
  if (text.starts_with("L-")) text.remove_prefix(2);
  for (LemmaId id : kAllLemmas) {
    if (lemma_name(id).substr(2) == text) return id;
  }
  return std::nullopt;
}

/// A cut vertex whose branches split as H1, H2 and H3 (the union of the
/// remaining branches). u1, u2 are the farthest vertices from the cut vertex
/// inside H1, H2. All vertex sets include the cut vertex and are sorted.
struct BranchSite {
  Vertex cut = 0;
  std::vector<Vertex> h1, h2, h3;
  Vertex u1 = 0, u2 = 0;
};

/// Cycle u_1..u_r in cyclic order, r >= 5.
struct CycleSite {
  std::vector<Vertex> cycle;
};

/// Four-cycle u_1 u_2 u_3 u_4 with the largest hanging component at u_1.
struct C4Site {
  std::array<Vertex, 4> cycle{};
};

/// Triangle u_1 u_2 u_3 whose hanging parts at u_1 and u_2 are end-blocks;
/// v_1, v_2 are the farthest vertices of those end-blocks.
struct TriangleSite {
  std::array<Vertex, 3> triangle{};
  Vertex v1 = 0, v2 = 0;
};

/// G = H1 . H2 . P_r with H1 glued to H2 at v1 and the pendant path
/// w_1..w_r glued to H2 at v2 = w_1.
struct PendantSite {
  Vertex v1 = 0, v2 = 0;
  std::vector<Vertex> h1, h2;
  std::vector<Vertex> path;
};

/// Path w_1..w_r plus the chord w_{r-2}w_r, with H1 glued at w_1 and H2 at w_{r-1}.
struct BalanceSite {
  std::vector<Vertex> path;
  std::vector<Vertex> h1, h2;
};

struct LemmaSite {
  std::variant<BranchSite, CycleSite, C4Site, TriangleSite, PendantSite, BalanceSite> binding;

  LemmaId lemma() const { return static_cast<LemmaId>(binding.index()); }

  /// Ordering key: the site's defining vertex tuple.
  std::vector<Vertex> key() const {
    return std::visit(
        [](const auto& s) -> std::vector<Vertex> {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, BranchSite>) {
            std::vector<Vertex> k{s.cut, s.h1[0] == s.cut ? s.h1[1] : s.h1[0], s.h2[0] == s.cut ? s.h2[1] : s.h2[0]};
            return k;
          } else if constexpr (std::is_same_v<T, CycleSite>) {
            return s.cycle;
          } else if constexpr (std::is_same_v<T, C4Site>) {
            return {s.cycle.begin(), s.cycle.end()};
          } else if constexpr (std::is_same_v<T, TriangleSite>) {
            return {s.triangle.begin(), s.triangle.end()};
          } else if constexpr (std::is_same_v<T, PendantSite>) {
            std::vector<Vertex> k{s.v1};
            k.insert(k.end(), s.path.begin(), s.path.end());
            return k;
          } else {
            return s.path;
          }
        },
        binding);
  }

  friend bool operator<(const LemmaSite& a, const LemmaSite& b) {
    if (a.binding.index() != b.binding.index()) return a.binding.index() < b.binding.index();
    return a.key() < b.key();
  }
};

/// Raised when a binding does not satisfy the hypotheses of its rewrite.
class SiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RewriteOutcome {
  LemmaId lemma{};
  Graph before;
  std::vector<Graph> after;  // two entries for the either/or rewrites
  DyadicRational closeness_before;
  std::vector<DyadicRational> closeness_after;
  bool claim_holds = false;
  bool class_preserved = false;
  /// Equality characterizations (C4 swap, end balancing): what the size
  /// condition predicts versus what was observed.
  std::optional<bool> equality_predicted;
  std::optional<bool> equality_observed;
  /// Pendant-path move: 1 or 2, the alternative that was applied.
  std::optional<int> applied_case;

  bool equality_mismatch() const {
    return equality_predicted.has_value() && equality_observed.has_value() && *equality_predicted != *equality_observed;
  }
};

}  // namespace cactus
