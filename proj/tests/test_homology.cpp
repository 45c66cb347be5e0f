#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace torflag;

namespace {

oracle::Dense to_dense(const IntegerMatrix& m) {
  oracle::Dense d(m.rows(), std::vector<BigInt>(m.cols(), 0));
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) d[r][c] = v;
  return d;
}

}  // namespace

TEST(Smith, IdentityAndZero) {
  const auto id = smith_normal_form(IntegerMatrix::from_dense({{1, 0}, {0, 1}}));
  EXPECT_EQ(id.invariant_factors, (std::vector<BigInt>{1, 1}));
  const auto zero = smith_normal_form(IntegerMatrix::from_dense({{0, 0}, {0, 0}}));
  EXPECT_TRUE(zero.invariant_factors.empty());
  EXPECT_EQ(zero.rank, 0U);
}

TEST(Smith, TwoByTwoExample) {
  const auto s = smith_normal_form(IntegerMatrix::from_dense({{2, 4}, {6, 8}}));
  EXPECT_EQ(s.invariant_factors, (std::vector<BigInt>{2, 4}));
}

TEST(Smith, NormalizeDiagonalBuildsDivisibilityChain) {
  EXPECT_EQ(normalize_diagonal({6, 4}), (std::vector<BigInt>{2, 12}));
  EXPECT_EQ(normalize_diagonal({3, 1, 5}), (std::vector<BigInt>{1, 1, 15}));
}

TEST(Smith, AgreesWithDeterminantalDivisors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
  std::bernoulli_distribution sparse(0.4);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = dim(rng), cols = dim(rng);
    std::vector<std::vector<long>> m(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols)));
    for (auto& row : m)
      for (auto& x : row) x = sparse(rng) ? 0 : entry(rng);
    const auto im = IntegerMatrix::from_dense(m);
    const auto s = smith_normal_form(im);
    const auto expected = oracle::invariant_factors(to_dense(im));
    EXPECT_EQ(s.invariant_factors, expected) << "trial " << trial;
    EXPECT_EQ(s.rank, expected.size());
  }
}

TEST(Smith, FallsBackToBigIntegersOnOverflow) {
  const long big = 3037000499L * 2;  // products overflow int64
  const auto m = IntegerMatrix::from_dense({{big, big - 1}, {big + 1, big}});
  const auto s = smith_normal_form(m);
  const auto expected = oracle::invariant_factors(to_dense(m));
  EXPECT_EQ(s.invariant_factors, expected);
}

TEST(Smith, IntegerImageTest) {
  const auto a = IntegerMatrix::from_dense({{2, 0}, {0, 3}});
  EXPECT_TRUE(in_integer_image(a, {{0, BigInt(4)}, {1, BigInt(9)}}));
  EXPECT_FALSE(in_integer_image(a, {{0, BigInt(1)}}));
  EXPECT_FALSE(in_integer_image(a, {{1, BigInt(2)}}));
}

TEST(Boundary, TriangleTopMap) {
  const auto c = clique_complex(Graph::complete(3));
  const auto b = boundary_matrix(c, 2);
  ASSERT_EQ(b.rows(), 3U);
  ASSERT_EQ(b.cols(), 1U);
  EXPECT_EQ(b.get(0, 0), 1);
  EXPECT_EQ(b.get(1, 0), -1);
  EXPECT_EQ(b.get(2, 0), 1);
}

TEST(Boundary, FourCycleRank) {
  const auto b = boundary_matrix(clique_complex(Graph::cycle(4)), 1);
  EXPECT_EQ(b.rows(), 4U);
  EXPECT_EQ(b.cols(), 4U);
  EXPECT_EQ(smith_normal_form(b).rank, 3U);
  EXPECT_EQ(oracle::rank(to_dense(b), 0), 3U);
}

TEST(Boundary, SquaresToZero) {
  const auto c = rp2_flag();
  const auto prod = boundary_matrix(c, 1).multiply(boundary_matrix(c, 2));
  EXPECT_TRUE(prod.is_zero());
}

TEST(Homology, SphereHasFreeTopClass) {
  const auto h = homology(build_sphere_stage(0), 2);
  EXPECT_EQ(h.free_rank, 1U);
  EXPECT_FALSE(h.has_torsion());
}

TEST(Homology, Rp2HasTwoTorsion) {
  const auto h = homology(rp2_flag(), 1);
  EXPECT_EQ(h.free_rank, 0U);
  EXPECT_EQ(h.torsion, (std::vector<BigInt>{2}));
  EXPECT_EQ(h.to_string(), "Z/2");
  EXPECT_TRUE(homology(rp2_flag(), 2).is_zero());
}

TEST(Homology, SixVertexRp2) {
  EXPECT_EQ(homology(oracle::rp2_six(), 1).torsion, (std::vector<BigInt>{2}));
}

TEST(Homology, XSixHasFreeRankOneAndSixTorsion) {
  const auto h = homology(build_xm(6).first, 1);
  EXPECT_EQ(h.free_rank, 1U);
  EXPECT_EQ(h.torsion, (std::vector<BigInt>{6}));
}

TEST(Homology, ReducedVersusUnreduced) {
  const SimplicialComplex two_points = SimplicialComplex::from_faces(2, {{0}, {1}});
  EXPECT_EQ(homology(two_points, 0, false).free_rank, 2U);
  EXPECT_EQ(homology(two_points, 0, true).free_rank, 1U);
  const SimplicialComplex empty = SimplicialComplex::from_faces(0, {});
  EXPECT_EQ(homology(empty, -1, true).free_rank, 1U);
  EXPECT_THROW(homology(empty, -1, false), std::invalid_argument);
}

TEST(Homology, ModPDimensionsOfRp2) {
  const auto c = rp2_flag();
  EXPECT_EQ(homology_dim_mod(c, 1, Characteristic(2)), 1U);
  EXPECT_EQ(homology_dim_mod(c, 1, Characteristic(0)), 0U);
  EXPECT_EQ(homology_dim_mod(c, 2, Characteristic(2)), 1U);
  EXPECT_EQ(homology_dim_mod(c, 2, Characteristic(0)), 0U);
  EXPECT_EQ(homology_dim_mod(c, 1, Characteristic(3)), 0U);
}

TEST(Homology, CharZeroMatchesFreeRank) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const auto c = oracle::random_complex(7, 8, 4, rng);
    for (int d = 0; d <= c.dimension(); ++d)
      EXPECT_EQ(homology_dim_mod(c, d, Characteristic(0)), homology(c, d).free_rank);
  }
}

TEST(Homology, FieldDimensionsMatchDenseElimination) {
  std::mt19937_64 rng(17);
  std::vector<SimplicialComplex> family{oracle::rp2_six(), rp2_flag()};
  for (int t = 0; t < 40; ++t) family.push_back(oracle::random_complex(8, 10, 4, rng));
  for (const auto& c : family)
    for (std::uint64_t p : {0, 2, 3, 5}) {
      const auto expected = oracle::reduced_betti(c, p);
      for (int d = -1; d <= c.dimension(); ++d)
        EXPECT_EQ(homology_dim_mod(c, d, Characteristic(p), true), expected[static_cast<std::size_t>(d + 1)]);
    }
}

TEST(Homology, UniversalCoefficientsOnTorsionComplexes) {
  for (const auto& c : {oracle::rp2_six(), rp2_flag(), build_xm(6).first, build_group_complex({2, 4})}) {
    const auto h = integer_homology(c, false);
    for (std::uint64_t p : {2, 3, 5})
      for (int d = 0; d <= c.dimension(); ++d)
        EXPECT_EQ(homology_dim_mod(c, d, Characteristic(p)), universal_coefficient_dim(h, d, Characteristic(p)));
  }
}

TEST(Homology, SquareCyclesInPuncturedSphereSumToBoundary) {
  const auto y2 = build_punctured_sphere_named(2);
  const auto h = homology(y2.complex, 1);
  EXPECT_EQ(h.free_rank, 1U);
  EXPECT_FALSE(h.has_torsion());
  auto t1 = tau_square(1), t2 = tau_square(2);
  const auto c1 = square_cycle(y2, t1), c2 = square_cycle(y2, t2);
  EXPECT_TRUE(is_cycle(y2.complex, c1));
  EXPECT_FALSE(is_integer_boundary(y2.complex, c1));
  std::map<std::uint32_t, BigInt> merged;
  for (const auto& [r, v] : c1) merged[r] += v;
  for (const auto& [r, v] : c2) merged[r] += v;
  SparseColumn<BigInt> sum;
  for (const auto& [r, v] : merged)
    if (v != 0) sum.push_back({r, v});
  EXPECT_TRUE(is_integer_boundary(y2.complex, sum));
}
