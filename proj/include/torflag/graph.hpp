#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "torflag/numeric.hpp"

namespace torflag {

/// Dense vertex index in [0, n).
using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Finite simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Loops and out-of-range endpoints are rejected; repeated pairs collapse.
  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adjacency_(n) {
    for (auto& [u, v] : edges) {
      if (u == v) throw std::invalid_argument("graph loop at vertex " + std::to_string(u));
      if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  static Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v < n; ++v)
      for (VertexId u = 0; u < v; ++u) e.emplace_back(u, v);
    return Graph(n, std::move(e));
  }

  static Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (VertexId v = 0; v < n; ++v) e.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    return Graph(n, std::move(e));
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }

  bool adjacent(VertexId u, VertexId v) const {
    const auto& a = adjacency_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  /// Subgraph induced on `vertices` (any order, no repeats), relabelled so
  /// that vertices[i] becomes i.
  Graph induced(std::span<const VertexId> vertices) const {
    std::vector<std::int64_t> position(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] >= n_) throw std::invalid_argument("vertex out of range");
      if (position[vertices[i]] >= 0) throw std::invalid_argument("repeated vertex");
      position[vertices[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<Edge> e;
    for (auto [u, v] : edges_)
      if (position[u] >= 0 && position[v] >= 0)
        e.emplace_back(static_cast<VertexId>(position[u]), static_cast<VertexId>(position[v]));
    return Graph(vertices.size(), std::move(e));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

struct GraphStats {
  std::size_t maxdeg = 0;
  Rational avgdeg;  // 2|E|/|V|, or 0 for the empty graph
  std::size_t edge_count = 0;
};

inline GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.edge_count = g.num_edges();
  for (VertexId v = 0; v < g.num_vertices(); ++v) s.maxdeg = std::max(s.maxdeg, g.degree(v));
  if (g.num_vertices() > 0) {
    s.avgdeg = Rational(BigInt(static_cast<unsigned long>(2 * g.num_edges())),
                        BigInt(static_cast<unsigned long>(g.num_vertices())));
    s.avgdeg.canonicalize();
  }
  return s;
}

}  // namespace torflag
