#pragma once

// JSON views of the harness's records. Closeness values are written as an
// exact "num/den" string plus a 15-digit decimal.

#include <cactus/graph6.hpp>
#include <cactus/lemma_site.hpp>
#include <cactus/verification.hpp>

#include <nlohmann/json.hpp>

#include <variant>

namespace cactus {

using Json = nlohmann::ordered_json;

inline Json exact_json(const DyadicRational& d) { return d.to_string(); }

inline Json site_json(const LemmaSite& site) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BranchSite>) {
          return {{"cut", s.cut}, {"h1", s.h1}, {"h2", s.h2}, {"h3", s.h3}, {"u1", s.u1}, {"u2", s.u2}};
        } else if constexpr (std::is_same_v<T, CycleSite>) {
          return {{"cycle", s.cycle}};
        } else if constexpr (std::is_same_v<T, C4Site>) {
          return {{"cycle", s.cycle}};
        } else if constexpr (std::is_same_v<T, TriangleSite>) {
          return {{"triangle", s.triangle}, {"v1", s.v1}, {"v2", s.v2}};
        } else if constexpr (std::is_same_v<T, PendantSite>) {
          return {{"v1", s.v1}, {"v2", s.v2}, {"h1", s.h1}, {"h2", s.h2}, {"path", s.path}};
        } else {
          return {{"path", s.path}, {"h1", s.h1}, {"h2", s.h2}};
        }
      },
      site.binding);
}

inline Json record_json(const LemmaRecord& r) {
  Json after = Json::array();
  for (const auto& c : r.outcome.closeness_after) after.push_back(exact_json(c));
  Json after_graphs = Json::array();
  for (const auto& g : r.outcome.after) after_graphs.push_back(to_graph6(g));
  Json j{{"graph6", r.graph6},
         {"lemma", lemma_name(r.site.lemma())},
         {"site", site_json(r.site)},
         {"c_before", exact_json(r.outcome.closeness_before)},
         {"c_after", after},
         {"after_graph6", after_graphs},
         {"holds", r.outcome.claim_holds && r.outcome.class_preserved},
         {"class_preserved", r.outcome.class_preserved}};
  if (r.outcome.applied_case) j["applied_case"] = *r.outcome.applied_case;
  if (r.outcome.equality_predicted) {
    j["equality_predicted"] = *r.outcome.equality_predicted;
    j["equality_observed"] = *r.outcome.equality_observed;
  }
  return j;
}

inline Json report_json(const VerificationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"graph6", v.graph6}, {"closeness", exact_json(v.closeness)}, {"kind", v.kind}});
  }
  return {{"n", r.key.n},
          {"k", r.key.k},
          {"class_size", r.class_size},
          {"min_value", exact_json(r.min_value)},
          {"min_decimal", r.min_value.to_decimal()},
          {"max_value", exact_json(r.max_value)},
          {"max_decimal", r.max_value.to_decimal()},
          {"minimizers", r.minimizers},
          {"maximizers", r.maximizers},
          {"balanced_graph6", r.balanced_graph6},
          {"balanced_value", exact_json(r.balanced_value)},
          {"theorem_holds", r.theorem_holds},
          {"resolved_direction", r.resolved_direction ? Json(direction_name(*r.resolved_direction)) : Json(nullptr)},
          {"violations", violations}};
}

inline Json corpus_json(const LemmaCorpusReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(record_json(v));
  Json findings = Json::array();
  for (const auto& v : r.equality_findings) findings.push_back(record_json(v));
  return {{"lemma", lemma_name(r.lemma)},
          {"graphs_checked", r.graphs_checked},
          {"graphs_with_sites", r.graphs_with_sites},
          {"sites_checked", r.sites_checked},
          {"violation_count", r.violations.size()},
          {"violations", violations},
          {"equality_findings", findings}};
}

}  // namespace cactus
