#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace torflag;

namespace {

std::multiset<std::size_t> degree_multiset(const SimplicialComplex& c) {
  const Graph g = c.one_skeleton();
  std::multiset<std::size_t> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.insert(g.degree(v));
  return out;
}

}  // namespace

TEST(SphereStage, StageZeroIsTetrahedronBoundary) {
  const auto t0 = build_sphere_stage(0);
  EXPECT_EQ(t0.f_vector(), (FVector{{4, 6, 4}}));
  EXPECT_EQ(degree_multiset(t0), (std::multiset<std::size_t>{3, 3, 3, 3}));
}

TEST(SphereStage, StageTwoDegrees) {
  const auto t2 = build_sphere_stage(2);
  EXPECT_EQ(t2.f_vector(), (FVector{{8, 18, 12}}));
  EXPECT_EQ(degree_multiset(t2), (std::multiset<std::size_t>{4, 4, 4, 4, 5, 5, 5, 5}));
}

TEST(SphereStage, StageFiveDegreeSixVertices) {
  const auto t5 = build_sphere_stage_named(5);
  EXPECT_EQ(t5.complex.f_vector(), (FVector{{14, 36, 24}}));
  const Graph g = t5.complex.one_skeleton();
  std::vector<int> six;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 6) six.push_back(t5.name(v).idx[0]);
  std::sort(six.begin(), six.end());
  EXPECT_EQ(six, (std::vector<int>{4, 5, 6, 7, 8, 9}));
}

TEST(SphereStage, EveryStageIsASphere) {
  for (int i = 0; i <= 10; ++i) {
    const auto t = build_sphere_stage(i);
    EXPECT_EQ(t.f_vector(), expected_sphere_stage(i)) << i;
    // The tetrahedron boundary misses its 3-face; later stages are flag.
    EXPECT_EQ(is_flag(t), i > 0) << i;
    EXPECT_LE(max_degree(t), 6U);
    EXPECT_EQ(homology(t, 2).free_rank, 1U);
    EXPECT_TRUE(homology(t, 1).is_zero());
  }
}

TEST(Telescope, SmallCases) {
  const auto y1 = build_telescope(1);
  EXPECT_EQ(y1.f_vector(), (FVector{{16, 44, 28}}));
  EXPECT_EQ(max_degree(y1), 6U);
  const auto y2 = build_telescope(2);
  EXPECT_EQ(y2.f_vector(), (FVector{{28, 84, 56}}));
  EXPECT_EQ(max_degree(y2), 9U);
  const auto h = homology(build_telescope(3), 1);
  EXPECT_EQ(h.free_rank, 1U);
  EXPECT_FALSE(h.has_torsion());
}

TEST(Telescope, CountsAndFlagness) {
  for (int nk = 1; nk <= 10; ++nk) {
    const auto y1 = build_telescope(nk);
    EXPECT_EQ(y1.f_vector(), (FVector{{static_cast<std::size_t>(12 * nk + 4), static_cast<std::size_t>(40 * nk + 4),
                                        static_cast<std::size_t>(28 * nk)}}));
    EXPECT_TRUE(is_flag(y1));
  }
}

TEST(Telescope, SquareCyclesDoubleAlongTheChain) {
  // 2 gamma_i - gamma_{i+1} is a boundary, gamma_i alone is not.
  const auto y1 = build_telescope_named(3);
  for (int i = 0; i < 3; ++i) {
    const auto gi = square_cycle(y1, gamma_square(i)), gn = square_cycle(y1, gamma_square(i + 1));
    std::map<std::uint32_t, BigInt> merged;
    for (const auto& [r, v] : gi) merged[r] += 2 * v;
    for (const auto& [r, v] : gn) merged[r] -= v;
    SparseColumn<BigInt> chain;
    for (const auto& [r, v] : merged)
      if (v != 0) chain.push_back({r, v});
    EXPECT_TRUE(is_integer_boundary(y1.complex, chain)) << i;
    EXPECT_FALSE(is_integer_boundary(y1.complex, gi)) << i;
  }
}

TEST(PuncturedSphere, SpecificCounts) {
  EXPECT_EQ(build_punctured_sphere(1).f_vector(), (FVector{{14, 35, 22}}));
  EXPECT_EQ(build_punctured_sphere(16).f_vector(), (FVector{{100, 278, 164}}));
}

TEST(PuncturedSphere, FlagBoundedDegreeAndFreeHomology) {
  for (int k = 1; k <= 20; ++k) {
    const auto y2 = build_punctured_sphere(k);
    EXPECT_EQ(y2.f_vector(), expected_punctured_sphere(k)) << k;
    EXPECT_TRUE(is_flag(y2)) << k;
    EXPECT_LE(max_degree(y2), 12U) << k;
    const auto h = homology(y2, 1);
    EXPECT_EQ(h.free_rank, static_cast<std::size_t>(k - 1)) << k;
    EXPECT_FALSE(h.has_torsion()) << k;
  }
}

TEST(BinaryDecomposition, Examples) {
  const BinaryDecomposition six(6);
  EXPECT_EQ(six.k, 2);
  EXPECT_EQ(six.nk, 2);
  EXPECT_EQ(six.delta, 2);
  const BinaryDecomposition four(4);
  EXPECT_EQ(four.k, 1);
  EXPECT_EQ(four.nk, 2);
  EXPECT_EQ(four.delta, 3);
}

TEST(Xm, SmallExamples) {
  const auto [x2, c2] = build_xm(2);
  EXPECT_EQ(x2.f_vector(), (FVector{{26, 75, 50}}));
  EXPECT_EQ(homology(x2, 1).torsion, (std::vector<BigInt>{2}));
  EXPECT_EQ(homology(x2, 1).free_rank, 0U);
  EXPECT_TRUE(c2.passed());

  const auto x4 = build_xm(4).first;
  EXPECT_EQ(homology(x4, 1).torsion, (std::vector<BigInt>{4}));
  EXPECT_EQ(homology(x4, 1).free_rank, 0U);

  const auto x5 = build_xm(5).first, x6 = build_xm(6).first;
  EXPECT_EQ(x5.f_vector(), (FVector{{38, 122, 84}}));
  EXPECT_EQ(x6.f_vector(), x5.f_vector());
  EXPECT_EQ(homology(x5, 1).torsion, (std::vector<BigInt>{5}));
  EXPECT_EQ(homology(x6, 1).to_string(), "Z + Z/6");
}

TEST(Xm, LargeExponent) {
  const auto [x, cert] = build_xm(std::uint64_t{1} << 20);
  EXPECT_TRUE(cert.passed());
  EXPECT_EQ(homology(x, 1).torsion, (std::vector<BigInt>{BigInt(1) << 20}));
}

TEST(Xm, RejectsSmallM) {
  EXPECT_THROW(build_xm(1), std::invalid_argument);
  EXPECT_THROW(build_xm(0), std::invalid_argument);
}

TEST(Xm, CertificateReportsFailures) {
  const auto cert = certify("bad", rp2_flag(), FVector{{1, 2, 3}}, 2, HomologyGroup{});
  EXPECT_FALSE(cert.passed());
  EXPECT_GE(cert.failures().size(), 3U);
}

TEST(GroupComplex, InvariantFactorsRoundTrip) {
  EXPECT_EQ(homology(build_group_complex({2, 4}), 1).torsion, (std::vector<BigInt>{2, 4}));
  const auto h = homology(build_group_complex({2, 2, 2}), 1);
  EXPECT_EQ(h.torsion, (std::vector<BigInt>{2, 2, 2}));
  EXPECT_EQ(h.free_rank, 0U);
  EXPECT_EQ(build_group_complex({3}), build_xm(3).first);
}

TEST(GroupComplex, RejectsInvalidChains) {
  EXPECT_THROW(build_group_complex({}), std::invalid_argument);
  EXPECT_THROW(build_group_complex({2, 3}), std::invalid_argument);
  EXPECT_THROW(build_group_complex({1, 2}), std::invalid_argument);
}

TEST(Rp2, FlagWithTwoTorsion) {
  const auto c = rp2_flag();
  EXPECT_TRUE(is_flag(c));
  EXPECT_EQ(homology(c, 1).torsion, (std::vector<BigInt>{2}));
  EXPECT_EQ(rp2_flag_named().name(0).to_string(), "v1");
}

TEST(VertexNames, Formatting) {
  EXPECT_EQ(v_(4).to_string(), "v4");
  EXPECT_EQ(vp_(3).to_string(), "v'3");
  EXPECT_EQ(wp_(7, 3).to_string(), "w'3,7");
  EXPECT_EQ(u_(7).to_string(), "u7");
}
