#pragma once

// Erdos-Renyi graphs G(n, p) and their clique complexes, driven by a
// counter-based generator: the deviate for pair {u, v} depends only on the
// seed and the pair index, so samples are identical across platforms and
// thread counts, and graphs for p <= p' under one seed are nested.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torflag/complex.hpp"
#include "torflag/numeric.hpp"

namespace torflag {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform 64-bit deviate for stream `counter` under `seed`.
inline std::uint64_t counter_draw(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed) ^ splitmix64(counter ^ 0xD1B54A32D192ED03ULL));
}

/// Exact probability in [0, 1] with its 64-bit acceptance threshold.
class Probability {
 public:
  Probability() = default;
  explicit Probability(const Rational& p) : value_(p) {
    value_.canonicalize();
    if (value_ < 0 || value_ > 1) throw std::invalid_argument("probability must lie in [0, 1]");
    if (value_ == 1) {
      always_ = true;
      return;
    }
    BigInt scaled = value_.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 64);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value_.get_den_mpz_t());
    threshold_ = mpz_get_ui(scaled.get_mpz_t());
    static_assert(sizeof(unsigned long) == 8);
  }
  static Probability parse(std::string_view text) { return Probability(parse_decimal(text)); }

  const Rational& value() const { return value_; }
  /// Canonical text: the reduced fraction, or an integer.
  std::string str() const { return value_.get_str(); }
  double to_double() const { return value_.get_d(); }
  bool accepts(std::uint64_t draw) const { return always_ || draw < threshold_; }

 private:
  Rational value_{0};
  std::uint64_t threshold_ = 0;  // floor(p * 2^64) for p < 1
  bool always_ = false;
};

struct FlagModelParams {
  std::size_t n = 0;
  Probability p;
  std::uint64_t seed = 0;
  int max_dim = 2;
};

/// Index of pair {u, v}, u < v, in colexicographic order.
inline std::uint64_t pair_index(VertexId u, VertexId v) {
  return static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
}

inline Graph sample_graph(const FlagModelParams& params) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < params.n; ++v)
    for (VertexId u = 0; u < v; ++u)
      if (params.p.accepts(counter_draw(params.seed, pair_index(u, v)))) edges.emplace_back(u, v);
  return Graph(params.n, std::move(edges));
}

inline SimplicialComplex sample_flag_complex(const FlagModelParams& params) {
  if (params.max_dim < 1) throw std::invalid_argument("max_dim must be at least 1");
  return clique_complex(sample_graph(params), params.max_dim);
}

/// G(n, p) with a copy of `pattern` forced onto a seeded random set of
/// |V(pattern)| vertices: pairs inside the set follow the pattern exactly,
/// every other pair is drawn as in sample_graph. Returns the graph and the
/// planted vertices (host image of pattern vertex i at position i).
inline std::pair<Graph, std::vector<VertexId>> sample_planted_graph(const FlagModelParams& params, const Graph& pattern) {
  const std::size_t k = pattern.num_vertices();
  if (k > params.n) throw std::invalid_argument("pattern larger than host");
  // Partial Fisher-Yates driven by a separate counter stream.
  std::vector<VertexId> perm(params.n);
  for (VertexId v = 0; v < params.n; ++v) perm[v] = v;
  const std::uint64_t stream = splitmix64(params.seed ^ 0x5A17ED5A17EDULL);
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint64_t r = counter_draw(stream, i) % (params.n - i);
    std::swap(perm[i], perm[i + r]);
  }
  std::vector<VertexId> image(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<std::int64_t> slot(params.n, -1);
  for (std::size_t i = 0; i < k; ++i) slot[image[i]] = static_cast<std::int64_t>(i);

  std::vector<Edge> edges;
  for (VertexId v = 1; v < params.n; ++v)
    for (VertexId u = 0; u < v; ++u) {
      bool on;
      if (slot[u] >= 0 && slot[v] >= 0)
        on = pattern.adjacent(static_cast<VertexId>(slot[u]), static_cast<VertexId>(slot[v]));
      else
        on = params.p.accepts(counter_draw(params.seed, pair_index(u, v)));
      if (on) edges.emplace_back(u, v);
    }
  return {Graph(params.n, std::move(edges)), std::move(image)};
}

}  // namespace torflag
