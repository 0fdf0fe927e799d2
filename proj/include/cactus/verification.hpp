#pragma once

// Exhaustive checks: which cactus is extremal for closeness in each class,
// and whether each rewrite behaves as claimed on a corpus of cacti.

#include <cactus/canonical.hpp>
#include <cactus/constructions.hpp>
#include <cactus/enumeration.hpp>
#include <cactus/parallel.hpp>
#include <cactus/random_cactus.hpp>
#include <cactus/site_finder.hpp>
#include <cactus/transformations.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cactus {

struct ExtremalViolation {
  std::string graph6;
  DyadicRational closeness;
  std::string kind;  // "tie": shares the extremal value with D; "beats": strictly better than D
};

struct VerificationReport {
  CactusClassKey key;
  std::size_t class_size = 0;
  DyadicRational min_value, max_value;
  std::vector<std::string> minimizers, maximizers;
  std::string balanced_graph6;  // canonical D(n; floor(k/2), ceil(k/2))
  DyadicRational balanced_value;
  bool theorem_holds = false;
  std::optional<Direction> resolved_direction;
  std::vector<ExtremalViolation> violations;
};

/// Decides whether D(n; floor(k/2), ceil(k/2)) is the unique minimizer or the
/// unique maximizer of closeness over the class. When it is neither, the
/// direction it attains (if any) is reported with the competing witnesses.
inline VerificationReport verify_class(const CactusClassKey& key, unsigned workers = 1) {
  VerificationReport rep;
  rep.key = key;
  const ClassCloseness cls = class_closeness(key, workers);
  const ExtremalResult lo = extremal_of(cls, Direction::Min);
  const ExtremalResult hi = extremal_of(cls, Direction::Max);
  rep.class_size = cls.codes.size();
  rep.min_value = lo.value;
  rep.max_value = hi.value;
  rep.minimizers = lo.witnesses;
  rep.maximizers = hi.witnesses;
  const Graph balanced = make_D(DParams::balanced(key.n, key.k));
  rep.balanced_graph6 = canonical_form(balanced);
  rep.balanced_value = graph_closeness(balanced);

  const std::vector<std::string> only_d{rep.balanced_graph6};
  if (rep.minimizers == only_d) {
    rep.theorem_holds = true;
    rep.resolved_direction = Direction::Min;
    return rep;
  }
  if (rep.maximizers == only_d) {
    rep.theorem_holds = true;
    rep.resolved_direction = Direction::Max;
    return rep;
  }
  auto attains = [&](const std::vector<std::string>& ws) {
    return std::find(ws.begin(), ws.end(), rep.balanced_graph6) != ws.end();
  };
  if (attains(rep.minimizers) || attains(rep.maximizers)) {
    const bool at_min = attains(rep.minimizers);
    rep.resolved_direction = at_min ? Direction::Min : Direction::Max;
    for (const auto& w : at_min ? rep.minimizers : rep.maximizers) {
      if (w != rep.balanced_graph6) rep.violations.push_back({w, at_min ? rep.min_value : rep.max_value, "tie"});
    }
    return rep;
  }
  // D is not extremal either way: report the minimizers that beat it.
  for (const auto& w : rep.minimizers) rep.violations.push_back({w, rep.min_value, "beats"});
  return rep;
}

/// All classes with 3 <= n <= n_max, in (n, k) order.
inline std::vector<VerificationReport> verify_theorem(std::size_t n_max, unsigned workers = 1) {
  std::vector<CactusClassKey> keys;
  for (std::size_t n = 3; n <= n_max; ++n) {
    for (std::size_t k = 0; k <= CactusClassKey::max_cycles(n); ++k) keys.push_back({n, k});
  }
  std::vector<VerificationReport> out(keys.size());
  parallel_for(keys.size(), workers, [&](std::size_t i) { out[i] = verify_class(keys[i]); });
  return out;
}

/// One rewrite applied at one site of one graph.
struct LemmaRecord {
  std::string graph6;
  LemmaSite site;
  RewriteOutcome outcome;

  bool violation() const { return !outcome.claim_holds || !outcome.class_preserved; }
};

inline std::vector<LemmaRecord> check_lemma_sites(const Graph& g, LemmaId lemma) {
  std::vector<LemmaRecord> out;
  const std::string code = to_graph6(g);
  for (auto& site : find_lemma_sites(g, lemma)) {
    RewriteOutcome outcome = apply_rewrite(g, site);
    out.push_back({code, std::move(site), std::move(outcome)});
  }
  return out;
}

struct LemmaCorpusOptions {
  std::size_t exhaustive_n_max = 8;
  std::size_t random_count = 500;
  std::size_t random_n_min = 3;
  std::size_t random_n_max = 14;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

struct LemmaCorpusReport {
  LemmaId lemma{};
  std::size_t graphs_checked = 0;
  std::size_t graphs_with_sites = 0;
  std::size_t sites_checked = 0;
  std::vector<LemmaRecord> violations;         // claim or class preservation failed
  std::vector<LemmaRecord> equality_findings;  // observed equality disagrees with the size condition
};

/// Runs the rewrite at every site of every cactus with 1 <= n <=
/// exhaustive_n_max and of `random_count` seeded random cacti.
inline LemmaCorpusReport verify_lemma_corpus(LemmaId lemma, const LemmaCorpusOptions& opt) {
  std::vector<Graph> corpus;
  for (std::size_t n = 1; n <= opt.exhaustive_n_max; ++n) {
    for (std::size_t k = 0; k <= CactusClassKey::max_cycles(n); ++k) {
      for (auto& g : enumerate_cacti({n, k}, opt.workers)) corpus.push_back(std::move(g));
    }
  }
  for (std::size_t i = 0; i < opt.random_count; ++i) {
    corpus.push_back(seeded_random_cactus(opt.seed, i, opt.random_n_min, opt.random_n_max));
  }
  std::vector<std::vector<LemmaRecord>> per_graph(corpus.size());
  parallel_for(corpus.size(), opt.workers, [&](std::size_t i) { per_graph[i] = check_lemma_sites(corpus[i], lemma); });

  LemmaCorpusReport rep;
  rep.lemma = lemma;
  rep.graphs_checked = corpus.size();
  for (auto& records : per_graph) {
    if (!records.empty()) ++rep.graphs_with_sites;
    rep.sites_checked += records.size();
    for (auto& r : records) {
      if (r.violation()) {
        rep.violations.push_back(r);
      } else if (r.outcome.equality_mismatch()) {
        rep.equality_findings.push_back(r);
      }
    }
  }
  return rep;
}

}  // namespace cactus
