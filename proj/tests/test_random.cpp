#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace torflag;

namespace {

FlagModelParams params(std::size_t n, const std::string& p, std::uint64_t seed, int max_dim = 2) {
  return FlagModelParams{n, Probability::parse(p), seed, max_dim};
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.pattern = "rp2";
  cfg.n_values = {20, 40};
  cfg.p_values = {Probability::parse("0.3"), Probability::parse("0.6")};
  cfg.trials = 6;
  cfg.seed = 99;
  return cfg;
}

}  // namespace

TEST(Probability, ParsesExactValues) {
  EXPECT_EQ(Probability::parse("0.5").value(), Rational(1, 2));
  EXPECT_EQ(Probability::parse("0.08").str(), "2/25");
  EXPECT_THROW(Probability::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Probability::parse("-0.1"), std::invalid_argument);
}

TEST(Probability, ExtremesAreExact) {
  const auto zero = Probability::parse("0"), one = Probability::parse("1");
  for (std::uint64_t d : {std::uint64_t{0}, std::uint64_t{1}, ~std::uint64_t{0}}) {
    EXPECT_FALSE(zero.accepts(d));
    EXPECT_TRUE(one.accepts(d));
  }
}

TEST(Sampling, ZeroAndOne) {
  EXPECT_EQ(sample_graph(params(9, "0", 1)).num_edges(), 0U);
  EXPECT_EQ(sample_graph(params(9, "1", 1)), Graph::complete(9));
  EXPECT_EQ(sample_flag_complex(params(4, "1", 3, 3)).f_vector(), (FVector{{4, 6, 4, 1}}));
  EXPECT_EQ(sample_flag_complex(params(5, "0", 3)).f_vector(), (FVector{{5}}));
}

TEST(Sampling, DeterministicSerialisation) {
  const auto a = to_json(sample_flag_complex(params(30, "0.3", 12345))).dump();
  const auto b = to_json(sample_flag_complex(params(30, "0.3", 12345))).dump();
  const auto c = to_json(sample_flag_complex(params(30, "0.3", 12346))).dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Sampling, MonotoneCouplingInP) {
  // The same uniform draw decides each pair, so edges at p are edges at p' > p.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph lo = sample_graph(params(25, "0.2", seed)), hi = sample_graph(params(25, "0.45", seed));
    for (auto [u, v] : lo.edges()) EXPECT_TRUE(hi.adjacent(u, v));
  }
}

TEST(Sampling, EdgeFrequencyIsCloseToP) {
  std::size_t edges = 0, pairs = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    edges += sample_graph(params(60, "0.3", seed)).num_edges();
    pairs += 60 * 59 / 2;
  }
  const double freq = static_cast<double>(edges) / static_cast<double>(pairs);
  EXPECT_NEAR(freq, 0.3, 0.01);
}

TEST(Sampling, PlantedCopyIsInduced) {
  const Graph pattern = rp2_flag().one_skeleton();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [host, image] = sample_planted_graph(params(30, "0.4", seed), pattern);
    ASSERT_EQ(image.size(), 11U);
    EXPECT_TRUE(verify_embedding(pattern, host, Embedding{image}, true));
  }
}

TEST(Experiment, WilsonInterval) {
  auto [lo, hi] = wilson_interval(0, 50);
  EXPECT_DOUBLE_EQ(lo, 0.0);
  EXPECT_NEAR(hi, 0.071348, 1e-6);
  std::tie(lo, hi) = wilson_interval(50, 50);
  EXPECT_NEAR(lo, 0.928652, 1e-6);
  EXPECT_DOUBLE_EQ(hi, 1.0);
  std::tie(lo, hi) = wilson_interval(5, 10);
  EXPECT_NEAR(lo, 0.236593, 1e-6);
  EXPECT_NEAR(hi, 0.763407, 1e-6);
}

TEST(Experiment, DerivedSeedsArePureAndDistinct) {
  const auto p = Probability::parse("0.5");
  EXPECT_EQ(derive_seed(1, 10, p, 3), derive_seed(1, 10, p, 3));
  EXPECT_NE(derive_seed(1, 10, p, 3), derive_seed(1, 10, p, 4));
  EXPECT_NE(derive_seed(1, 10, p, 3), derive_seed(1, 11, p, 3));
  EXPECT_NE(derive_seed(1, 10, p, 3), derive_seed(2, 10, p, 3));
  EXPECT_NE(derive_seed(1, 10, p, 3), derive_seed(1, 10, Probability::parse("0.4"), 3));
}

TEST(Experiment, EmptyGraphNeverContainsPattern) {
  ExperimentConfig cfg = small_config();
  cfg.n_values = {150};
  cfg.p_values = {Probability::parse("0")};
  cfg.trials = 10;
  const auto r = run_threshold_experiment(cfg);
  ASSERT_EQ(r.points.size(), 1U);
  EXPECT_EQ(r.points[0].found, 0U);
  EXPECT_EQ(*r.points[0].frequency, 0.0);
}

TEST(Experiment, OutputIsIndependentOfThreadCount) {
  ExperimentConfig a = small_config(), b = small_config();
  a.threads = 1;
  b.threads = 3;
  const auto ra = run_threshold_experiment(a), rb = run_threshold_experiment(b);
  EXPECT_EQ(experiment_csv(ra), experiment_csv(rb));
  EXPECT_EQ(experiment_json(a, ra).dump(), experiment_json(b, rb).dump());
}

TEST(Experiment, ThresholdReferenceUsesPatternDensity) {
  const auto r = run_threshold_experiment(small_config());
  ASSERT_TRUE(r.pattern_density.has_value());
  EXPECT_EQ(*r.pattern_density, Rational(30, 11));
  EXPECT_NEAR(*r.points[0].threshold, std::pow(20.0, -11.0 / 30.0), 1e-12);
}

TEST(Experiment, BudgetExhaustionIsItsOwnColumn) {
  ExperimentConfig cfg = small_config();
  cfg.n_values = {60};
  cfg.p_values = {Probability::parse("0.5")};
  cfg.budget = 5;
  const auto r = run_threshold_experiment(cfg);
  EXPECT_EQ(r.points[0].exhausted, cfg.trials);
  EXPECT_EQ(r.points[0].found + r.points[0].not_found, 0U);
  EXPECT_FALSE(r.points[0].frequency.has_value());
  for (const auto& t : r.trials) EXPECT_EQ(t.outcome, SearchOutcome::BudgetExhausted);
}

TEST(Experiment, SubgraphEventIsMonotoneUnderCoupling) {
  // Same seed for each trial at both p values: containment at p implies
  // containment at p'.
  ExperimentConfig cfg = small_config();
  cfg.subgraph = true;
  cfg.n_values = {30};
  cfg.trials = 15;
  const Graph pattern = resolve_pattern("rp2");
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = derive_seed(cfg.seed, 30, Probability::parse("0.3"), t);
    const Graph lo = sample_graph(params(30, "0.3", seed)), hi = sample_graph(params(30, "0.6", seed));
    const bool at_lo = contains_induced(pattern, lo, kDefaultBudget, false).outcome == SearchOutcome::Found;
    const bool at_hi = contains_induced(pattern, hi, kDefaultBudget, false).outcome == SearchOutcome::Found;
    if (at_lo) {
      EXPECT_TRUE(at_hi);
    }
  }
}

TEST(Experiment, InvalidConfigsAreRejected) {
  ExperimentConfig cfg = small_config();
  cfg.trials = 0;
  EXPECT_THROW(run_threshold_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.n_values.clear();
  EXPECT_THROW(run_threshold_experiment(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.pattern = "no-such-pattern";
  EXPECT_THROW(run_threshold_experiment(cfg), std::invalid_argument);
}

TEST(Experiment, PlantedTrialsAreFoundInDetectPatternMode) {
  ExperimentConfig cfg = small_config();
  cfg.n_values = {20};
  cfg.p_values = {Probability::parse("0.3")};
  cfg.plant = Probability::parse("1");
  const auto r = run_threshold_experiment(cfg);
  EXPECT_EQ(r.points[0].found, cfg.trials);
}

TEST(Experiment, CsvHeaderAndPlotData) {
  const auto r = run_threshold_experiment(small_config());
  const auto csv = experiment_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,p,trials,found,not_found,exhausted,frequency,ci_low,ci_high,threshold_p");
  const auto plot = experiment_plot_data(r);
  EXPECT_NE(plot.find("20 0.300000"), std::string::npos);
}
