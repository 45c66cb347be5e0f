#pragma once

// Essential density m(G) = max |E(H)| / |V(H)| over nonempty subgraphs H.
// Removing edges never raises the ratio, so only induced subgraphs (vertex
// subsets) need to be searched. Two engines: an exhaustive subset sweep with
// per-size maxima, and Goldberg's max-flow reduction under binary search
// over the finitely many candidate ratios a/b with b <= |V|.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "torflag/graph.hpp"

namespace torflag {

enum class DensityMode { Exhaustive, MaxFlow };

struct SizeMaximum {
  std::size_t size = 0;
  std::size_t max_edges = 0;
  std::vector<VertexId> witness;  // lexicographically least attaining subset
};

struct DensityReport {
  Rational density;
  std::vector<VertexId> witness;
  bool strictly_balanced = false;
  std::vector<SizeMaximum> per_size;  // exhaustive mode only; index s-1 for size s
};

inline constexpr std::size_t kExhaustiveLimit = 24;

namespace detail {

inline std::vector<VertexId> mask_vertices(std::uint64_t mask) {
  std::vector<VertexId> out;
  while (mask) {
    out.push_back(static_cast<VertexId>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return out;
}

/// Lexicographic comparison of the sorted vertex lists of two masks.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const std::uint64_t la = a & (~a + 1), lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return b != 0;  // proper prefix is smaller
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

inline Rational ratio(std::size_t a, std::size_t b) {
  Rational r(BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b)));
  r.canonicalize();
  return r;
}

/// Dinic max-flow on int64 capacities.
class Dinic {
 public:
  explicit Dinic(std::size_t n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(std::size_t u, std::size_t v, std::int64_t cap, std::int64_t rev_cap = 0) {
    edges_.push_back({v, cap, head_[u]});
    head_[u] = static_cast<std::int64_t>(edges_.size() - 1);
    edges_.push_back({u, rev_cap, head_[v]});
    head_[v] = static_cast<std::int64_t>(edges_.size() - 1);
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      for (std::size_t i = 0; i < head_.size(); ++i) it_[i] = head_[i];
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) flow += f;
    }
    return flow;
  }

  /// Vertices reachable from s in the residual graph (after max_flow).
  std::vector<char> source_side(std::size_t s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::int64_t e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          stack.push_back(edges_[e].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    std::int64_t next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::int64_t e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t pushed) {
    if (u == t) return pushed;
    for (std::int64_t& e = it_[u]; e >= 0; e = edges_[e].next) {
      Arc& arc = edges_[e];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(arc.to, t, std::min(pushed, arc.cap))) {
        arc.cap -= got;
        edges_[e ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> edges_;
  std::vector<std::int64_t> head_;
  std::vector<int> level_;
  std::vector<std::int64_t> it_;
};

/// Some vertex set S has |E(S)| * b > a * |S|. Returns such an S (the
/// residual source side of a minimum cut) or nothing.
inline std::optional<std::vector<VertexId>> denser_than(const Graph& g, std::int64_t a, std::int64_t b) {
  const std::size_t n = g.num_vertices();
  const auto m = static_cast<std::int64_t>(g.num_edges());
  const std::size_t s = n, t = n + 1;
  Dinic flow(n + 2);
  for (VertexId v = 0; v < n; ++v) {
    flow.add_edge(s, v, m * b);
    flow.add_edge(v, t, m * b + 2 * a - static_cast<std::int64_t>(g.degree(v)) * b);
  }
  for (auto [u, v] : g.edges()) flow.add_edge(u, v, b, b);
  // cut(S) = n m b + 2 a |S| - 2 b |E(S)|
  const std::int64_t cut = flow.max_flow(s, t);
  if (cut >= static_cast<std::int64_t>(n) * m * b) return std::nullopt;
  auto side = flow.source_side(s);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (side[v]) out.push_back(v);
  return out;
}

inline std::size_t induced_edge_count(const Graph& g, const std::vector<VertexId>& set) {
  std::size_t e = 0;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.adjacent(set[i], set[j])) ++e;
  return e;
}

}  // namespace detail

/// Maximum edge count of an s-vertex induced subgraph for every s, with the
/// lexicographically least witness. Requires |V| <= 24.
inline std::vector<SizeMaximum> max_edges_by_size(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kExhaustiveLimit)
    throw std::invalid_argument("exhaustive density needs at most 24 vertices; use maxflow mode");
  const auto adj = detail::adjacency_masks(g);
  std::vector<SizeMaximum> best(n);
  for (std::size_t s = 0; s < n; ++s) best[s].size = s + 1;
  std::vector<std::uint64_t> best_mask(n, 0);
  std::vector<char> seen(n, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint16_t> edges(total, 0);
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int low = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & (mask - 1);
    edges[mask] = static_cast<std::uint16_t>(edges[rest] + __builtin_popcountll(adj[low] & rest));
    const std::size_t s = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    const std::size_t e = edges[mask];
    if (!seen[s] || e > best[s].max_edges || (e == best[s].max_edges && detail::mask_lex_less(mask, best_mask[s]))) {
      seen[s] = 1;
      best[s].max_edges = e;
      best_mask[s] = mask;
    }
  }
  for (std::size_t s = 0; s < n; ++s) best[s].witness = detail::mask_vertices(best_mask[s]);
  return best;
}

/// Every proper subgraph has strictly smaller edge/vertex ratio than g.
inline bool strictly_balanced(const Graph& g, DensityMode mode = DensityMode::MaxFlow);

inline DensityReport essential_density(const Graph& g, DensityMode mode) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("essential density of the empty graph is undefined");
  DensityReport report;
  if (mode == DensityMode::Exhaustive) {
    report.per_size = max_edges_by_size(g);
    std::optional<std::size_t> arg;
    for (std::size_t s = 0; s < n; ++s) {
      const auto& row = report.per_size[s];
      if (!arg) {
        arg = s;
        continue;
      }
      const auto& cur = report.per_size[*arg];
      // row.max_edges / (s+1) vs cur.max_edges / (arg+1)
      const std::uint64_t lhs = row.max_edges * (*arg + 1), rhs = cur.max_edges * (s + 1);
      if (lhs > rhs || (lhs == rhs && row.witness < cur.witness)) arg = s;
    }
    report.density = detail::ratio(report.per_size[*arg].max_edges, *arg + 1);
    report.witness = report.per_size[*arg].witness;
    // Strict balance: only the full vertex set may attain the maximum ratio.
    const Rational whole = detail::ratio(g.num_edges(), n);
    bool strict = whole == report.density;
    for (std::size_t s = 0; s + 1 < n && strict; ++s)
      if (detail::ratio(report.per_size[s].max_edges, s + 1) >= whole) strict = false;
    report.strictly_balanced = strict;
    return report;
  }

  // Candidate ratios a/b in lowest terms: 1 <= b <= n, a <= |E|, and
  // a/b <= maxdeg/2, which bounds every subgraph ratio.
  std::vector<std::pair<std::int64_t, std::int64_t>> cand;
  const auto m = static_cast<std::int64_t>(g.num_edges());
  const auto maxdeg = static_cast<std::int64_t>(graph_stats(g).maxdeg);
  for (std::int64_t b = 1; b <= static_cast<std::int64_t>(n); ++b)
    for (std::int64_t a = 0; a <= std::min(m, b * maxdeg / 2); ++a)
      if (std::gcd(a, b) == 1) cand.push_back({a, b});
  std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.first * y.second < y.first * x.second; });
  // First candidate c with no set denser than c: that is m(G).
  std::size_t lo = 0, hi = cand.size() - 1;
  std::vector<VertexId> witness{0};
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (auto s = detail::denser_than(g, cand[mid].first, cand[mid].second)) {
      lo = mid + 1;
      witness = std::move(*s);
    } else {
      hi = mid;
    }
  }
  report.density = detail::ratio(static_cast<std::size_t>(cand[lo].first), static_cast<std::size_t>(cand[lo].second));
  if (lo > 0) {
    // The cut at the previous candidate is denser than it, hence optimal.
    if (auto s = detail::denser_than(g, cand[lo - 1].first, cand[lo - 1].second)) witness = std::move(*s);
  }
  if (detail::ratio(detail::induced_edge_count(g, witness), witness.size()) != report.density)
    throw std::logic_error("max-flow witness does not attain the density");
  report.witness = std::move(witness);
  report.strictly_balanced = strictly_balanced(g, DensityMode::MaxFlow);
  return report;
}

inline bool strictly_balanced(const Graph& g, DensityMode mode) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  if (mode == DensityMode::Exhaustive) return essential_density(g, DensityMode::Exhaustive).strictly_balanced;
  if (n == 1) return true;
  // Proper subgraphs lie inside some G - v, or drop edges of G itself (which
  // strictly lowers the ratio exactly when |E| > 0).
  const auto m = static_cast<std::int64_t>(g.num_edges());
  if (m == 0) return false;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> keep;
    for (VertexId u = 0; u < n; ++u)
      if (u != v) keep.push_back(u);
    const Graph h = g.induced(keep);
    // For |S| < n: e(S) n >= m |S|  <=>  e(S) n^2 > (m n - 1) |S|.
    const std::int64_t nn = static_cast<std::int64_t>(n);
    if (detail::denser_than(h, m * nn - 1, nn * nn)) return false;
  }
  return true;
}

/// Elementary bounds |E|/|V| <= m(G) <= maxdeg/2.
inline std::pair<Rational, Rational> density_bounds(const Graph& g) {
  const auto stats = graph_stats(g);
  Rational lower = stats.avgdeg / 2;
  Rational upper = detail::ratio(stats.maxdeg, 2);
  return {lower, upper};
}

}  // namespace torflag
