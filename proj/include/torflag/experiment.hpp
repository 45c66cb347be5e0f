#pragma once

// Seeded Monte Carlo sweeps over (n, p): how often a fixed pattern appears
// induced in G(n, p), or how often the random flag complex has an induced
// subcomplex with torsion. Every trial has its own derived seed, so results
// do not depend on the thread count.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torflag/construction.hpp"
#include "torflag/density.hpp"
#include "torflag/hochster.hpp"
#include "torflag/induced_search.hpp"
#include "torflag/io.hpp"
#include "torflag/parallel.hpp"
#include "torflag/random_flag.hpp"

namespace torflag {

enum class ExperimentMode { DetectPattern, DetectTorsion };

struct ExperimentConfig {
  std::string pattern = "rp2";  // rp2 | xm:<m> | path to a graph/complex JSON file
  std::vector<std::size_t> n_values;
  std::vector<Probability> p_values;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultBudget;
  ExperimentMode mode = ExperimentMode::DetectPattern;
  bool subgraph = false;             // plain containment instead of induced
  Probability plant{Rational(0)};    // chance of forcing a pattern copy into a trial
  int max_dim = 2;
  std::size_t torsion_guard = 20;    // largest n for the exhaustive torsion scan
  std::optional<std::size_t> torsion_cap;  // largest |alpha| in that scan
  unsigned threads = 1;
  bool timings = false;              // record wall time (breaks byte-stability)

  void validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (n_values.empty() || p_values.empty()) throw std::invalid_argument("n and p grids must be nonempty");
    if (max_dim < 2) throw std::invalid_argument("max_dim must be at least 2");
  }
};

struct TrialRecord {
  std::size_t n = 0;
  std::string p;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  SearchOutcome outcome = SearchOutcome::NotFound;
  bool planted = false;
  std::uint64_t nodes = 0;
  std::optional<std::vector<VertexId>> witness;
  std::set<std::uint64_t> primes;  // detect-torsion mode
  std::optional<double> elapsed_ms;
};

struct PointSummary {
  std::size_t n = 0;
  std::string p;
  std::size_t trials = 0, found = 0, not_found = 0, exhausted = 0;
  std::optional<double> frequency;  // found / (found + not_found)
  double ci_low = 0, ci_high = 1;
  std::optional<double> threshold;  // n^{-1/m(pattern)}
};

struct ExperimentResult {
  std::vector<PointSummary> points;
  std::vector<TrialRecord> trials;
  std::optional<Rational> pattern_density;
};

/// Wilson score interval at 95% confidence.
inline std::pair<double, double> wilson_interval(std::size_t successes, std::size_t total) {
  if (total == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(total);
  const double phat = static_cast<double>(successes) / n;
  const double denom = 1 + z * z / n;
  const double center = (phat + z * z / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1 - phat) / n + z * z / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Seed of one trial: a pure function of (master, n, p, trial).
inline std::uint64_t derive_seed(std::uint64_t master, std::size_t n, const Probability& p, std::size_t trial) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(n));
  h = splitmix64(h ^ fnv1a(p.str()));
  return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

/// Named builtin or file pattern as a graph.
inline Graph resolve_pattern(const std::string& spec) {
  if (spec == "rp2") return rp2_flag().one_skeleton();
  if (spec.rfind("xm:", 0) == 0) {
    std::uint64_t m = 0;
    try {
      m = std::stoull(spec.substr(3));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad pattern " + spec);
    }
    return build_xm(m).first.one_skeleton();
  }
  std::ifstream probe(spec);
  if (!probe) throw std::invalid_argument("unknown pattern " + spec + " (expected rp2, xm:<m> or a JSON file)");
  return graph_from_json(read_json_file(spec));
}

namespace detail {

inline std::set<std::uint64_t> torsion_primes_of(const SimplicialComplex& c) {
  std::set<std::uint64_t> out;
  const auto h = integer_homology(c, true);
  for (int d = 0; d <= h.max_dim(); ++d)
    for (const auto& t : h[d].torsion)
      for (const auto& p : prime_divisors(t)) out.insert(p.get_ui());
  return out;
}

inline TrialRecord run_trial(const ExperimentConfig& cfg, const Graph& pattern, std::size_t n, const Probability& p,
                             std::size_t trial) {
  const auto start = std::chrono::steady_clock::now();
  TrialRecord rec;
  rec.n = n;
  rec.p = p.str();
  rec.trial = trial;
  rec.seed = derive_seed(cfg.seed, n, p, trial);
  FlagModelParams params{n, p, rec.seed, cfg.max_dim};
  rec.planted = pattern.num_vertices() <= n && cfg.plant.accepts(counter_draw(rec.seed, ~std::uint64_t{0}));
  const Graph host = rec.planted ? sample_planted_graph(params, pattern).first : sample_graph(params);

  const SearchResult search = contains_induced(pattern, host, cfg.budget, !cfg.subgraph);
  rec.nodes = search.nodes;
  if (cfg.mode == ExperimentMode::DetectPattern) {
    rec.outcome = search.outcome;
    if (search.embedding) rec.witness = search.embedding->map;
  } else {
    const SimplicialComplex delta = clique_complex(host, cfg.max_dim);
    std::optional<std::set<std::uint64_t>> primes;
    if (search.outcome == SearchOutcome::Found && !cfg.subgraph) {
      const auto& map = search.embedding->map;
      auto on_witness = torsion_primes_of(induced_subcomplex(delta, map).complex);
      if (!on_witness.empty()) {
        primes = std::move(on_witness);
        std::vector<VertexId> alpha = map;
        std::sort(alpha.begin(), alpha.end());
        rec.witness = std::move(alpha);
      }
    }
    if (!primes && n <= cfg.torsion_guard) {
      HochsterOptions opt;
      opt.guard = cfg.torsion_guard;
      opt.max_size = cfg.torsion_cap;
      auto report = torsion_primes(delta, opt);
      primes = report.primes;
      if (!report.primes.empty()) rec.witness = report.witness.begin()->second.alpha;
    }
    if (!primes) rec.outcome = SearchOutcome::BudgetExhausted;
    else if (primes->empty()) rec.outcome = SearchOutcome::NotFound;
    else {
      rec.outcome = SearchOutcome::Found;
      rec.primes = *primes;
    }
  }
  if (cfg.timings)
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

}  // namespace detail

inline ExperimentResult run_threshold_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const Graph pattern = resolve_pattern(cfg.pattern);
  ExperimentResult result;
  if (pattern.num_vertices() > 0) result.pattern_density = essential_density(pattern, DensityMode::MaxFlow).density;

  struct Job {
    std::size_t n, p_index, trial;
  };
  std::vector<Job> jobs;
  for (std::size_t n : cfg.n_values)
    for (std::size_t pi = 0; pi < cfg.p_values.size(); ++pi)
      for (std::size_t t = 0; t < cfg.trials; ++t) jobs.push_back({n, pi, t});
  result.trials.resize(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t j) {
    const auto& job = jobs[j];
    result.trials[j] = detail::run_trial(cfg, pattern, job.n, cfg.p_values[job.p_index], job.trial);
  });

  std::size_t j = 0;
  for (std::size_t n : cfg.n_values)
    for (const auto& p : cfg.p_values) {
      PointSummary pt;
      pt.n = n;
      pt.p = p.str();
      pt.trials = cfg.trials;
      for (std::size_t t = 0; t < cfg.trials; ++t, ++j) {
        switch (result.trials[j].outcome) {
          case SearchOutcome::Found: ++pt.found; break;
          case SearchOutcome::NotFound: ++pt.not_found; break;
          case SearchOutcome::BudgetExhausted: ++pt.exhausted; break;
        }
      }
      const std::size_t decided = pt.found + pt.not_found;
      if (decided > 0) pt.frequency = static_cast<double>(pt.found) / static_cast<double>(decided);
      std::tie(pt.ci_low, pt.ci_high) = wilson_interval(pt.found, decided);
      if (result.pattern_density && *result.pattern_density > 0 && n > 0)
        pt.threshold = std::pow(static_cast<double>(n), -1.0 / result.pattern_density->get_d());
      result.points.push_back(pt);
    }
  return result;
}

inline std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline std::string experiment_csv(const ExperimentResult& r) {
  std::ostringstream os;
  os << "n,p,trials,found,not_found,exhausted,frequency,ci_low,ci_high,threshold_p\n";
  for (const auto& pt : r.points) {
    os << pt.n << ',' << pt.p << ',' << pt.trials << ',' << pt.found << ',' << pt.not_found << ',' << pt.exhausted << ','
       << (pt.frequency ? fixed6(*pt.frequency) : "") << ',' << fixed6(pt.ci_low) << ',' << fixed6(pt.ci_high) << ','
       << (pt.threshold ? fixed6(*pt.threshold) : "") << '\n';
  }
  return os.str();
}

inline Json experiment_json(const ExperimentConfig& cfg, const ExperimentResult& r) {
  Json config{{"pattern", cfg.pattern},
              {"n_values", cfg.n_values},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"budget", cfg.budget},
              {"mode", cfg.mode == ExperimentMode::DetectPattern ? "detect-pattern" : "detect-torsion"},
              {"subgraph", cfg.subgraph},
              {"plant", cfg.plant.str()},
              {"max_dim", cfg.max_dim}};
  Json ps = Json::array();
  for (const auto& p : cfg.p_values) ps.push_back(p.str());
  config["p_values"] = std::move(ps);
  Json points = Json::array();
  for (const auto& pt : r.points) {
    Json j{{"n", pt.n},         {"p", pt.p},
           {"trials", pt.trials}, {"found", pt.found},
           {"not_found", pt.not_found}, {"exhausted", pt.exhausted},
           {"ci_low", fixed6(pt.ci_low)}, {"ci_high", fixed6(pt.ci_high)}};
    j["frequency"] = pt.frequency ? Json(fixed6(*pt.frequency)) : Json(nullptr);
    j["threshold_p"] = pt.threshold ? Json(fixed6(*pt.threshold)) : Json(nullptr);
    points.push_back(std::move(j));
  }
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    Json j{{"n", t.n}, {"p", t.p}, {"trial", t.trial}, {"seed", t.seed}, {"outcome", to_string(t.outcome)},
           {"planted", t.planted}, {"nodes", t.nodes}};
    if (t.witness) j["witness"] = *t.witness;
    if (!t.primes.empty()) j["primes"] = t.primes;
    if (t.elapsed_ms) j["elapsed_ms"] = *t.elapsed_ms;
    trials.push_back(std::move(j));
  }
  Json out{{"config", std::move(config)}, {"points", std::move(points)}, {"trials", std::move(trials)}};
  if (r.pattern_density) out["pattern_density"] = r.pattern_density->get_str();
  return out;
}

/// gnuplot-friendly columns: n p frequency ci_low ci_high.
inline std::string experiment_plot_data(const ExperimentResult& r) {
  std::ostringstream os;
  os << "# n p frequency ci_low ci_high\n";
  for (const auto& pt : r.points) {
    const Probability p = Probability::parse(pt.p);
    os << pt.n << ' ' << fixed6(p.to_double()) << ' ' << (pt.frequency ? fixed6(*pt.frequency) : "nan") << ' '
       << fixed6(pt.ci_low) << ' ' << fixed6(pt.ci_high) << '\n';
  }
  return os.str();
}

}  // namespace torflag
