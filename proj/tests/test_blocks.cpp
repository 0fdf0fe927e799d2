#include <cactus/blocks.hpp>
#include <cactus/constructions.hpp>
#include <cactus/graph6.hpp>
#include <cactus/random_cactus.hpp>

#include <gtest/gtest.h>

#include "oracle.hpp"

#include <random>

using namespace cactus;

namespace {
Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}
}  // namespace

TEST(Cactus, Examples) {
  const auto c5 = is_cactus(make_cycle(5));
  EXPECT_TRUE(c5.is_cactus);
  EXPECT_EQ(c5.cycles, 1u);
  EXPECT_FALSE(is_cactus(complete(4)).is_cactus);
  const auto d = is_cactus(make_D({7, 1, 2}));
  EXPECT_TRUE(d.is_cactus);
  EXPECT_EQ(d.cycles, 3u);
  EXPECT_TRUE(is_cactus(make_path(6)).is_cactus);
  EXPECT_TRUE(is_cactus(Graph(1)).is_cactus);
  EXPECT_FALSE(is_cactus(Graph(2)).is_cactus);  // disconnected
}

TEST(Cactus, ThetaGraphIsNot) {
  // Two vertices joined by three internally disjoint paths.
  const Graph theta = Graph::from_edges(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
  EXPECT_FALSE(is_cactus(theta).is_cactus);
}

TEST(Cactus, AgreesWithCycleOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const Graph g = oracle::random_connected(rng, 1 + rng() % 9, rng() % 4);
    const auto got = is_cactus(g);
    const auto want = oracle::is_cactus(g);
    ASSERT_EQ(got.is_cactus, want.is_cactus) << to_graph6(g);
    if (want.is_cactus) ASSERT_EQ(got.cycles, want.cycles) << to_graph6(g);
  }
}

TEST(Cactus, RandomCactiAreCacti) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Graph g = seeded_random_cactus(99, i, 3, 14);
    const auto want = oracle::is_cactus(g);
    ASSERT_TRUE(want.is_cactus);
    ASSERT_EQ(is_cactus(g).cycles, want.cycles);
    ASSERT_EQ(g.size(), g.order() - 1 + want.cycles);
  }
}

TEST(Blocks, BowtieHasTwoTriangles) {
  const auto bs = blocks(make_D({5, 1, 1}));
  ASSERT_EQ(bs.size(), 2u);
  for (const auto& b : bs) {
    EXPECT_TRUE(b.is_cycle());
    EXPECT_EQ(b.vertices.size(), 3u);
  }
  EXPECT_EQ(branches_at(make_D({5, 1, 1}), 1).size(), 2u);
}

TEST(Blocks, CycleOrderWalksTheCycle) {
  const Graph g = make_cycle(7);
  const auto bs = blocks(g);
  ASSERT_EQ(bs.size(), 1u);
  const auto order = cycle_order(bs[0]);
  ASSERT_EQ(order.size(), 7u);
  for (std::size_t i = 0; i < 7; ++i) EXPECT_TRUE(g.has_edge(order[i], order[(i + 1) % 7]));
}

TEST(Blocks, BranchesOfStar) {
  const auto parts = branches_at(make_star(3), 0);
  ASSERT_EQ(parts.size(), 3u);
  for (const auto& p : parts) EXPECT_EQ(p.size(), 2u);
}
