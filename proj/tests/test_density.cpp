#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace torflag;

TEST(Density, SmallGraphs) {
  EXPECT_EQ(essential_density(Graph(2, {{0, 1}}), DensityMode::Exhaustive).density, Rational(1, 2));
  EXPECT_EQ(essential_density(Graph(2, {{0, 1}}), DensityMode::MaxFlow).density, Rational(1, 2));
  for (auto mode : {DensityMode::Exhaustive, DensityMode::MaxFlow}) {
    EXPECT_EQ(essential_density(Graph::complete(4), mode).density, Rational(3, 2));
    EXPECT_EQ(essential_density(Graph(3, {}), mode).density, Rational(0));
  }
  EXPECT_THROW(essential_density(Graph(0, {}), DensityMode::MaxFlow), std::invalid_argument);
}

TEST(Density, Rp2Graph) {
  const Graph g = rp2_flag().one_skeleton();
  for (auto mode : {DensityMode::Exhaustive, DensityMode::MaxFlow}) {
    const auto r = essential_density(g, mode);
    EXPECT_EQ(r.density, Rational(30, 11));
    EXPECT_EQ(r.witness.size(), 11U);
    EXPECT_TRUE(r.strictly_balanced);
  }
}

TEST(Density, WitnessAttainsDensity) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_graph(10, 0.35, rng);
    for (auto mode : {DensityMode::Exhaustive, DensityMode::MaxFlow}) {
      const auto r = essential_density(g, mode);
      ASSERT_FALSE(r.witness.empty());
      Rational w(static_cast<long>(detail::induced_edge_count(g, r.witness)), static_cast<long>(r.witness.size()));
      w.canonicalize();
      EXPECT_EQ(w, r.density);
    }
  }
}

TEST(Density, ModesMatchBruteForce) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + t % 11;
    const Graph g = oracle::random_graph(n, 0.15 + 0.01 * t, rng);
    const Rational expected = oracle::max_density(g);
    EXPECT_EQ(essential_density(g, DensityMode::Exhaustive).density, expected);
    EXPECT_EQ(essential_density(g, DensityMode::MaxFlow).density, expected);
  }
}

TEST(Density, StrictBalanceModesAgree) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const Graph g = oracle::random_graph(7, 0.5, rng);
    if (g.num_edges() == 0) continue;
    // Brute force: every proper nonempty subgraph is strictly sparser.
    const Rational whole(static_cast<long>(g.num_edges()), static_cast<long>(g.num_vertices()));
    bool strict = true;
    for (std::uint32_t mask = 1; mask + 1 < (1U << 7); ++mask) {
      const auto verts = detail::mask_vertices(mask);
      Rational r(static_cast<long>(detail::induced_edge_count(g, verts)), static_cast<long>(verts.size()));
      if (r >= whole) strict = false;
    }
    EXPECT_EQ(strictly_balanced(g, DensityMode::Exhaustive), strict);
    EXPECT_EQ(strictly_balanced(g, DensityMode::MaxFlow), strict);
  }
}

TEST(Density, BoundsBracketExactValue) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    const auto [lo, hi] = density_bounds(g);
    const auto m = essential_density(g, DensityMode::MaxFlow).density;
    EXPECT_LE(lo, m);
    EXPECT_LE(m, hi);
  }
  const auto [lo, hi] = density_bounds(Graph::complete(4));
  EXPECT_EQ(lo, Rational(3, 2));
  EXPECT_EQ(hi, Rational(3, 2));
}

TEST(Density, XmUpperBoundIsAtMostSix) {
  for (std::uint64_t m : {2, 5, 12, 37}) EXPECT_LE(density_bounds(build_xm(m).first.one_skeleton()).second, Rational(6));
}

TEST(Density, XmAverageDegreeApproachesTenThirds) {
  Rational prev = 0;
  for (int nk : {4, 10, 20, 40}) {
    const auto lo = density_bounds(build_xm(std::uint64_t{1} << nk).first.one_skeleton()).first;
    EXPECT_GT(lo, prev);
    EXPECT_LT(lo, Rational(10, 3));
    prev = lo;
  }
  EXPECT_GT(prev, Rational(33, 10));
}

TEST(Density, MaxEdgesBySize) {
  const auto rows = max_edges_by_size(rp2_flag().one_skeleton());
  ASSERT_EQ(rows.size(), 11U);
  EXPECT_EQ(rows[0].max_edges, 0U);
  EXPECT_EQ(rows[5].max_edges, 10U);
  EXPECT_EQ(rows[8].max_edges, 21U);
  EXPECT_EQ(rows[10].max_edges, 30U);
  // v1, v4, v7, v8, v9, v11 -> ids 0, 3, 6, 7, 8, 10 attains the maximum for size 6.
  EXPECT_EQ(detail::induced_edge_count(rp2_flag().one_skeleton(), {0, 3, 6, 7, 8, 10}), 10U);
  EXPECT_THROW(max_edges_by_size(Graph(25, {})), std::invalid_argument);
}

TEST(Density, SevenVertexMaximumOfRp2Graph) {
  // The seven vertices v1, v2, v3, v4, v7, v8, v9 span 14 edges.
  const Graph g = rp2_flag().one_skeleton();
  EXPECT_EQ(detail::induced_edge_count(g, {0, 1, 2, 3, 6, 7, 8}), 14U);
  EXPECT_EQ(max_edges_by_size(g)[6].max_edges, 14U);
}

TEST(Density, MaxEdgesMatchesBruteForce) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(9, 0.45, rng);
    const auto rows = max_edges_by_size(g);
    for (std::size_t s = 1; s <= 9; ++s) {
      std::size_t best = 0;
      for (std::uint32_t mask = 1; mask < (1U << 9); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == s)
          best = std::max(best, detail::induced_edge_count(g, detail::mask_vertices(mask)));
      EXPECT_EQ(rows[s - 1].max_edges, best);
      EXPECT_EQ(detail::induced_edge_count(g, rows[s - 1].witness), best);
    }
  }
}

TEST(Search, TriangleInTriangle) {
  const auto r = contains_induced(Graph::complete(3), Graph::complete(3));
  ASSERT_EQ(r.outcome, SearchOutcome::Found);
  EXPECT_EQ(r.embedding->map, (std::vector<VertexId>{0, 1, 2}));
}

TEST(Search, PathInDiamond) {
  const Graph path(3, {{0, 1}, {1, 2}});
  const Graph g = oracle::diamond();
  const auto r = contains_induced(path, g);
  ASSERT_EQ(r.outcome, SearchOutcome::Found);
  std::vector<VertexId> image = r.embedding->map;
  std::sort(image.begin(), image.end());
  // Labels 1..4 shifted to 0..3: the path must use 2 and 4 (ids 1, 3).
  EXPECT_TRUE(image == (std::vector<VertexId>{0, 1, 3}) || image == (std::vector<VertexId>{1, 2, 3}));
  EXPECT_FALSE(verify_embedding(path, g, Embedding{{0, 1, 2}}, true));
  EXPECT_FALSE(verify_embedding(path, g, Embedding{{1, 0, 2}}, true));
}

TEST(Search, PatternWithNonEdgesNotInCompleteGraph) {
  const auto r = contains_induced(rp2_flag().one_skeleton(), Graph::complete(11));
  EXPECT_EQ(r.outcome, SearchOutcome::NotFound);
  EXPECT_EQ(contains_induced(rp2_flag().one_skeleton(), Graph::complete(11), kDefaultBudget, false).outcome,
            SearchOutcome::Found);
}

TEST(Search, MatchesBruteForce) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 150; ++t) {
    const Graph pattern = oracle::random_graph(3 + t % 3, 0.5, rng);
    const Graph host = oracle::random_graph(7, 0.5, rng);
    for (bool induced : {true, false}) {
      const auto r = contains_induced(pattern, host, kDefaultBudget, induced);
      EXPECT_EQ(r.outcome == SearchOutcome::Found, oracle::contains(pattern, host, induced)) << t;
      if (r.embedding) {
        EXPECT_TRUE(verify_embedding(pattern, host, *r.embedding, induced));
      }
    }
  }
}

TEST(Search, BudgetExhaustion) {
  const Graph host = sample_graph({60, Probability::parse("0.5"), 1, 2});
  const auto r = contains_induced(rp2_flag().one_skeleton(), host, 3);
  EXPECT_EQ(r.outcome, SearchOutcome::BudgetExhausted);
  EXPECT_FALSE(r.embedding.has_value());
}

TEST(Search, FindsPlantedRp2) {
  const Graph pattern = rp2_flag().one_skeleton();
  const auto [host, image] = sample_planted_graph({80, Probability::parse("0.2"), 5, 2}, pattern);
  const auto r = contains_induced(pattern, host);
  ASSERT_EQ(r.outcome, SearchOutcome::Found);
  EXPECT_TRUE(verify_embedding(pattern, host, *r.embedding, true));
}
