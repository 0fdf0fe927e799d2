#include <cactus/blocks.hpp>
#include <cactus/constructions.hpp>
#include <cactus/isomorphism.hpp>
#include <cactus/json.hpp>
#include <cactus/verification.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace cactus;

TEST(VerifyClass, UniqueMinimizer) {
  const auto r = verify_class({5, 1});
  EXPECT_TRUE(r.theorem_holds);
  EXPECT_EQ(r.resolved_direction, Direction::Min);
  EXPECT_EQ(r.class_size, 5u);
  EXPECT_EQ(r.min_value, DyadicRational(7));
  EXPECT_EQ(r.minimizers, std::vector<std::string>{r.balanced_graph6});
  EXPECT_TRUE(r.violations.empty());
}

// C4 and the triangle with a pendant vertex both have closeness 5.
TEST(VerifyClass, FourVerticesOneCycleTie) {
  const auto r = verify_class({4, 1});
  EXPECT_FALSE(r.theorem_holds);
  EXPECT_EQ(r.resolved_direction, Direction::Min);
  EXPECT_EQ(r.min_value, DyadicRational(5));
  EXPECT_EQ(r.max_value, DyadicRational(5));
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].graph6, canonical_form(make_cycle(4)));
  EXPECT_EQ(r.violations[0].kind, "tie");
}

// D(9;1,2) shares the minimum with one other cactus.
TEST(VerifyClass, NineVerticesThreeCyclesTie) {
  const auto r = verify_class({9, 3});
  EXPECT_FALSE(r.theorem_holds);
  EXPECT_EQ(r.resolved_direction, Direction::Min);
  EXPECT_EQ(r.min_value, DyadicRational(18));
  EXPECT_EQ(r.balanced_value, DyadicRational(18));
  ASSERT_EQ(r.violations.size(), 1u);
  const Graph rival = from_graph6(r.violations[0].graph6);
  EXPECT_EQ(oracle::str(oracle::graph_closeness(rival)), "18");
  EXPECT_EQ(is_cactus(rival).cycles, 3u);
  EXPECT_FALSE(are_isomorphic(rival, make_D({9, 1, 2})));
}

TEST(VerifyTheorem, BalancedDAlwaysAttainsTheMinimum) {
  for (const auto& r : verify_theorem(9, 4)) {
    EXPECT_EQ(r.resolved_direction, Direction::Min) << r.key.n << "," << r.key.k;
    EXPECT_EQ(r.balanced_value, r.min_value) << r.key.n << "," << r.key.k;
    EXPECT_FALSE(r.minimizers.empty());
    EXPECT_FALSE(r.maximizers.empty());
    for (const auto& v : r.violations) EXPECT_EQ(v.kind, "tie");
  }
}

TEST(VerifyTheorem, UniqueOutsideKnownTies) {
  for (const auto& r : verify_theorem(8)) {
    const bool known_tie = r.key.n == 4 && r.key.k == 1;
    EXPECT_EQ(r.theorem_holds, !known_tie) << r.key.n << "," << r.key.k;
  }
}

TEST(VerifyTheorem, WorkerCountDoesNotChangeReports) {
  Json a = Json::array(), b = Json::array();
  for (const auto& r : verify_theorem(8, 1)) a.push_back(report_json(r));
  for (const auto& r : verify_theorem(8, 3)) b.push_back(report_json(r));
  EXPECT_EQ(a.dump(), b.dump());
}

// No rewrite improves on a class minimizer.
TEST(LemmaClosure, MinimizersAdmitNoImprovement) {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t k = 0; k <= CactusClassKey::max_cycles(n); ++k) {
      const auto lo = extremal_closeness({n, k}, Direction::Min);
      for (const auto& code : lo.witnesses) {
        for (LemmaId id : kAllLemmas) {
          for (const auto& rec : check_lemma_sites(from_graph6(code), id)) {
            for (const auto& c : rec.outcome.closeness_after) EXPECT_GE(c, lo.value) << code;
          }
        }
      }
    }
  }
}

namespace {
LemmaCorpusReport corpus(LemmaId id) { return verify_lemma_corpus(id, LemmaCorpusOptions{.workers = 4}); }
}  // namespace

TEST(LemmaCorpus, EitherOrAndPendantClaimsHold) {
  for (LemmaId id : {LemmaId::Branch, LemmaId::Triangle, LemmaId::Pendant}) {
    const auto rep = corpus(id);
    EXPECT_GT(rep.sites_checked, 0u) << lemma_name(id);
    EXPECT_TRUE(rep.violations.empty()) << lemma_name(id) << ": " << rep.violations.size();
  }
}

TEST(LemmaCorpus, CorpusShape) {
  const auto rep = corpus(LemmaId::Cycle);
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 0; k <= CactusClassKey::max_cycles(n); ++k) exhaustive += enumerate_cactus_codes({n, k}).size();
  EXPECT_EQ(rep.graphs_checked, exhaustive + 500);
}

// Strict decrease fails for cycle shortening; every failure is a real one.
TEST(LemmaCorpus, CycleShorteningCounterexamplesAreGenuine) {
  const auto rep = corpus(LemmaId::Cycle);
  EXPECT_FALSE(rep.violations.empty());
  for (const auto& v : rep.violations) {
    EXPECT_TRUE(v.outcome.class_preserved);
    EXPECT_GE(v.outcome.closeness_after[0], v.outcome.closeness_before);
    EXPECT_EQ(v.outcome.closeness_after[0].to_string(), oracle::str(oracle::graph_closeness(v.outcome.after[0])));
  }
}

TEST(LemmaCorpus, EveryRewriteStaysInClass) {
  for (LemmaId id : kAllLemmas) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      const Graph g = seeded_random_cactus(5, i, 3, 14);
      for (const auto& rec : check_lemma_sites(g, id)) ASSERT_TRUE(rec.outcome.class_preserved) << rec.graph6;
    }
  }
}

TEST(LemmaCorpus, EmptyWhenNoSites) {
  LemmaCorpusOptions opt;
  opt.exhaustive_n_max = 2;
  opt.random_count = 0;
  const auto rep = verify_lemma_corpus(LemmaId::Cycle, opt);
  EXPECT_EQ(rep.sites_checked, 0u);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Json, RecordFields) {
  const auto recs = check_lemma_sites(make_cycle(5), LemmaId::Cycle);
  ASSERT_FALSE(recs.empty());
  const Json j = record_json(recs[0]);
  EXPECT_EQ(j["graph6"], to_graph6(make_cycle(5)));
  EXPECT_EQ(j["lemma"], "L-cycle");
  EXPECT_EQ(j["c_before"], "15/2");
  EXPECT_EQ(j["c_after"][0], "7");
  EXPECT_EQ(j["holds"], true);
}
