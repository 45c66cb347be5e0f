#pragma once

// Finite abstract simplicial complexes, clique (flag) complexes and induced
// subcomplexes.
//
// Faces of dimension d are stored as strictly increasing (d+1)-tuples, flat
// and lexicographically sorted per dimension. That order is the canonical
// face order used by every boundary matrix.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "torflag/graph.hpp"

namespace torflag {

using Simplex = std::vector<VertexId>;

/// Face counts by dimension, starting at dimension 0.
struct FVector {
  std::vector<std::size_t> counts;

  std::size_t operator[](std::size_t d) const { return d < counts.size() ? counts[d] : 0; }
  friend bool operator==(const FVector& a, const FVector& b) {
    auto trim = [](std::vector<std::size_t> v) {
      while (!v.empty() && v.back() == 0) v.pop_back();
      return v;
    };
    return trim(a.counts) == trim(b.counts);
  }
  std::int64_t euler_characteristic() const {
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < counts.size(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[d]);
    return chi;
  }
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of `faces` on vertex set [0, n). Each face must be a
  /// set of in-range vertices; order inside a face does not matter.
  static SimplicialComplex from_faces(std::size_t n, const std::vector<Simplex>& faces) {
    std::vector<std::set<Simplex>> by_dim;
    for (Simplex f : faces) {
      if (f.empty()) continue;
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw std::invalid_argument("face has a repeated vertex");
      if (f.back() >= n) throw std::invalid_argument("face vertex out of range");
      add_closure(f, by_dim);
    }
    SimplicialComplex c;
    c.n_ = n;
    for (const auto& level : by_dim) {
      std::vector<VertexId> flat;
      for (const auto& s : level) flat.insert(flat.end(), s.begin(), s.end());
      c.faces_.push_back(std::move(flat));
    }
    c.trim();
    return c;
  }

  /// Trusted constructor: `faces[d]` is flat, lexicographically sorted, strictly
  /// increasing tuples, and the family is downward closed.
  static SimplicialComplex from_sorted_levels(std::size_t n, std::vector<std::vector<VertexId>> faces) {
    SimplicialComplex c;
    c.n_ = n;
    c.faces_ = std::move(faces);
    c.trim();
    return c;
  }

  std::size_t num_vertices() const { return n_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  std::size_t count(int d) const {
    if (d < 0 || d >= static_cast<int>(faces_.size())) return 0;
    return faces_[d].size() / static_cast<std::size_t>(d + 1);
  }
  std::span<const VertexId> face(int d, std::size_t index) const {
    const std::size_t w = static_cast<std::size_t>(d + 1);
    return {faces_[d].data() + index * w, w};
  }
  const std::vector<VertexId>& level(int d) const { return faces_.at(d); }

  std::optional<std::size_t> index_of(std::span<const VertexId> simplex) const {
    const int d = static_cast<int>(simplex.size()) - 1;
    if (d < 0 || d > dimension()) return std::nullopt;
    std::size_t lo = 0, hi = count(d);
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      auto f = face(d, mid);
      if (std::lexicographical_compare(f.begin(), f.end(), simplex.begin(), simplex.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < count(d)) {
      auto f = face(d, lo);
      if (std::equal(f.begin(), f.end(), simplex.begin(), simplex.end())) return lo;
    }
    return std::nullopt;
  }
  bool contains(std::span<const VertexId> simplex) const { return index_of(simplex).has_value(); }

  FVector f_vector() const {
    FVector fv;
    for (int d = 0; d <= dimension(); ++d) fv.counts.push_back(count(d));
    return fv;
  }

  Graph one_skeleton() const {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < count(1); ++i) {
      auto f = face(1, i);
      e.emplace_back(f[0], f[1]);
    }
    return Graph(n_, std::move(e));
  }

  /// Faces not contained in any larger face, lexicographically sorted.
  std::vector<Simplex> maximal_faces() const {
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d) {
      for (std::size_t i = 0; i < count(d); ++i) {
        auto f = face(d, i);
        if (!has_coface(d, f)) out.emplace_back(f.begin(), f.end());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every codimension-one face of every face is present.
  bool is_downward_closed() const {
    Simplex facet;
    for (int d = 1; d <= dimension(); ++d) {
      for (std::size_t i = 0; i < count(d); ++i) {
        auto f = face(d, i);
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
          facet.clear();
          for (std::size_t j = 0; j < f.size(); ++j)
            if (j != skip) facet.push_back(f[j]);
          if (!contains(facet)) return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.faces_ == b.faces_;
  }

 private:
  static void add_closure(const Simplex& f, std::vector<std::set<Simplex>>& by_dim) {
    const std::size_t k = f.size();
    if (by_dim.size() < k) by_dim.resize(k);
    if (by_dim[k - 1].count(f)) return;
    by_dim[k - 1].insert(f);
    if (k == 1) return;
    Simplex sub(k - 1);
    for (std::size_t skip = 0; skip < k; ++skip) {
      for (std::size_t j = 0, t = 0; j < k; ++j)
        if (j != skip) sub[t++] = f[j];
      add_closure(sub, by_dim);
    }
  }

  bool has_coface(int d, std::span<const VertexId> f) const {
    if (d + 1 > dimension()) return false;
    // A coface of f is f plus one vertex; probing all n candidates is cheap
    // at the sizes handled here.
    Simplex bigger(f.size() + 1);
    for (VertexId v = 0; v < n_; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      auto pos = std::lower_bound(f.begin(), f.end(), v) - f.begin();
      std::copy(f.begin(), f.begin() + pos, bigger.begin());
      bigger[pos] = v;
      std::copy(f.begin() + pos, f.end(), bigger.begin() + pos + 1);
      if (contains(bigger)) return true;
    }
    return false;
  }

  void trim() {
    while (!faces_.empty() && faces_.back().empty()) faces_.pop_back();
  }

  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> faces_;
};

/// Clique complex: a d-face for every (d+1)-clique of `g`, up to `max_dim`.
/// Cliques are grown by ordered expansion over forward neighbours, which
/// emits each dimension already in lexicographic order.
inline SimplicialComplex clique_complex(const Graph& g, std::optional<int> max_dim = std::nullopt) {
  if (max_dim && *max_dim < 1) throw std::invalid_argument("max_dim must be at least 1");
  const int cap = max_dim.value_or(static_cast<int>(g.num_vertices()));
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> forward(n);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.neighbors(v))
      if (u > v) forward[v].push_back(u);

  std::vector<std::vector<VertexId>> levels;
  Simplex clique;
  // candidates[depth] = common forward neighbours of the current clique.
  std::vector<std::vector<VertexId>> candidates;

  auto emit = [&] {
    const std::size_t d = clique.size() - 1;
    if (levels.size() <= d) levels.resize(d + 1);
    levels[d].insert(levels[d].end(), clique.begin(), clique.end());
  };

  auto expand = [&](auto&& self, const std::vector<VertexId>& cands) -> void {
    if (static_cast<int>(clique.size()) - 1 >= cap) return;
    for (VertexId u : cands) {
      std::vector<VertexId> next;
      const auto& fu = forward[u];
      std::set_intersection(cands.begin(), cands.end(), fu.begin(), fu.end(), std::back_inserter(next));
      clique.push_back(u);
      emit();
      self(self, next);
      clique.pop_back();
    }
  };

  for (VertexId v = 0; v < n; ++v) {
    clique.assign(1, v);
    emit();
    expand(expand, forward[v]);
  }
  return SimplicialComplex::from_sorted_levels(n, std::move(levels));
}

/// The complex is the clique complex of its own 1-skeleton.
inline bool is_flag(const SimplicialComplex& c) {
  return clique_complex(c.one_skeleton()) == c;
}

struct InducedSubcomplex {
  SimplicialComplex complex;
  std::vector<VertexId> old_to_new;  // kInvalid for vertices outside alpha
  std::vector<VertexId> new_to_old;
  static constexpr VertexId kInvalid = static_cast<VertexId>(-1);
};

/// Faces of `c` inside `alpha`, relabelled densely in increasing order of the
/// original labels. Duplicates in alpha are ignored.
inline InducedSubcomplex induced_subcomplex(const SimplicialComplex& c, std::span<const VertexId> alpha) {
  InducedSubcomplex out;
  out.old_to_new.assign(c.num_vertices(), InducedSubcomplex::kInvalid);
  std::vector<VertexId> sorted(alpha.begin(), alpha.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (VertexId v : sorted) {
    if (v >= c.num_vertices()) throw std::invalid_argument("induced_subcomplex: vertex out of range");
    out.old_to_new[v] = static_cast<VertexId>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<std::vector<VertexId>> levels;
  for (int d = 0; d <= c.dimension(); ++d) {
    std::vector<VertexId> flat;
    for (std::size_t i = 0; i < c.count(d); ++i) {
      auto f = c.face(d, i);
      bool inside = std::all_of(f.begin(), f.end(),
                                [&](VertexId v) { return out.old_to_new[v] != InducedSubcomplex::kInvalid; });
      if (!inside) continue;
      for (VertexId v : f) flat.push_back(out.old_to_new[v]);
    }
    if (flat.empty()) break;
    levels.push_back(std::move(flat));
  }
  // Relabelling is monotone, so lexicographic order survives.
  out.complex = SimplicialComplex::from_sorted_levels(out.new_to_old.size(), std::move(levels));
  return out;
}

/// Disjoint union; the second complex's vertices are shifted past the first's.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int top = std::max(a.dimension(), b.dimension());
  std::vector<std::vector<VertexId>> levels(static_cast<std::size_t>(top + 1));
  const auto shift = static_cast<VertexId>(a.num_vertices());
  for (int d = 0; d <= top; ++d) {
    if (d <= a.dimension()) levels[d] = a.level(d);
    if (d <= b.dimension())
      for (VertexId v : b.level(d)) levels[d].push_back(v + shift);
  }
  return SimplicialComplex::from_sorted_levels(a.num_vertices() + b.num_vertices(), std::move(levels));
}

/// Largest vertex degree in the 1-skeleton.
inline std::size_t max_degree(const SimplicialComplex& c) { return graph_stats(c.one_skeleton()).maxdeg; }

}  // namespace torflag
