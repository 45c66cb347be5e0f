// Essential density of the RP^2 graph, and a small seeded search for it in
// G(n, p).

#include <iostream>

#include "torflag/torflag.hpp"

using namespace torflag;

int main() {
  const Graph g = rp2_flag().one_skeleton();
  const auto exact = essential_density(g, DensityMode::Exhaustive);
  std::cout << "m(G) = " << exact.density.get_str() << " (" << exact.density.get_d() << "), strictly balanced: "
            << (exact.strictly_balanced ? "yes" : "no") << '\n';
  for (const auto& row : exact.per_size)
    std::cout << "  " << row.size << " vertices: at most " << row.max_edges << " edges\n";

  const auto [lo, hi] = density_bounds(g);
  std::cout << "bounds: avgdeg/2 = " << lo.get_str() << ", maxdeg/2 = " << hi.get_str() << "\n\n";

  ExperimentConfig cfg;
  cfg.pattern = "rp2";
  cfg.n_values = {30, 60};
  cfg.p_values = {Probability::parse("0.3"), Probability::parse("0.5")};
  cfg.trials = 10;
  cfg.seed = 7;
  cfg.threads = default_threads();
  std::cout << experiment_csv(run_threshold_experiment(cfg));
}
