#pragma once

// Simplicial homology: over the integers through Smith normal form, and over
// prime fields through a separate column reduction that never touches the
// integer path.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "torflag/complex.hpp"
#include "torflag/smith.hpp"

namespace torflag {

/// Finitely generated abelian group Z^free_rank + torsion.
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors t_1 | t_2 | ..., each >= 2

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool has_torsion() const { return !torsion.empty(); }

  /// Number of torsion factors divisible by the prime `ell`.
  std::size_t torsion_count(std::uint64_t ell) const {
    BigInt p(static_cast<unsigned long>(ell));
    return static_cast<std::size_t>(
        std::count_if(torsion.begin(), torsion.end(), [&](const BigInt& t) { return arith::divides(p, t); }));
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
      os << "Z";
      if (free_rank > 1) os << "^" << free_rank;
      first = false;
    }
    for (const auto& t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

  friend bool operator==(const HomologyGroup& a, const HomologyGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion;
  }
};

namespace detail {

/// Columns of the boundary map C_d -> C_{d-1} with +-1 entries. For d == 0 the
/// augmentation row is used when `reduced`, otherwise the map is zero.
inline std::vector<SparseColumn<std::int64_t>> boundary_columns(const SimplicialComplex& c, int d, bool reduced,
                                                                std::size_t* rows_out = nullptr) {
  std::vector<SparseColumn<std::int64_t>> cols(c.count(d));
  if (d == 0) {
    if (rows_out) *rows_out = reduced ? 1 : 0;
    if (reduced)
      for (auto& col : cols) col.push_back({0, 1});
    return cols;
  }
  if (rows_out) *rows_out = c.count(d - 1);
  Simplex facet(static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto f = c.face(d, j);
    for (std::size_t skip = 0; skip <= static_cast<std::size_t>(d); ++skip) {
      for (std::size_t t = 0, k = 0; t <= static_cast<std::size_t>(d); ++t)
        if (t != skip) facet[k++] = f[t];
      auto row = c.index_of(facet);
      if (!row) throw std::logic_error("complex is not downward closed");
      cols[j].push_back({static_cast<std::uint32_t>(*row), skip % 2 == 0 ? 1 : -1});
    }
    std::sort(cols[j].begin(), cols[j].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return cols;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

/// Rank over F_p by left-to-right column reduction with pivot lookup on the
/// lowest nonzero row.
template <class Small>
std::size_t rank_mod_p(std::size_t rows, const std::vector<SparseColumn<Small>>& columns, std::uint64_t p) {
  using Col = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
  auto reduce_entry = [p](const auto& v) -> std::uint64_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, BigInt>) {
      BigInt r;
      mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p));
      return r.get_ui();
    } else {
      std::int64_t m = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
      return static_cast<std::uint64_t>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
    }
  };
  std::vector<std::int64_t> pivot_of_row(rows, -1);
  std::vector<Col> reduced;
  reduced.reserve(columns.size());
  std::size_t rank = 0;
  for (const auto& src : columns) {
    Col col;
    for (const auto& [r, v] : src) {
      std::uint64_t e = reduce_entry(v);
      if (e) col.push_back({r, e});
    }
    while (!col.empty()) {
      auto [low, val] = col.back();
      std::int64_t k = pivot_of_row[low];
      if (k < 0) break;
      const Col& piv = reduced[static_cast<std::size_t>(k)];
      // col -= (val / piv_low) * piv
      std::uint64_t factor = val * inverse_mod(piv.back().second, p) % p;
      Col merged;
      merged.reserve(col.size() + piv.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          merged.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          merged.push_back({piv[j].first, (p - factor * piv[j].second % p) % p});
          ++j;
        } else {
          std::uint64_t e = (col[i].second + p - factor * piv[j].second % p) % p;
          if (e) merged.push_back({col[i].first, e});
          ++i;
          ++j;
        }
      }
      col = std::move(merged);
    }
    if (!col.empty()) {
      pivot_of_row[col.back().first] = static_cast<std::int64_t>(reduced.size());
      ++rank;
    }
    reduced.push_back(std::move(col));
  }
  return rank;
}

}  // namespace detail

/// Boundary map C_d -> C_{d-1} in canonical face order. The column of
/// (v_0 < ... < v_d) has (-1)^i in the row of the face omitting v_i. For d = 0
/// the map is 0 x f_0.
inline IntegerMatrix boundary_matrix(const SimplicialComplex& c, int d) {
  if (d < 0) return IntegerMatrix(0, 0);
  std::size_t rows = 0;
  auto cols = detail::boundary_columns(c, d, false, &rows);
  IntegerMatrix m(rows, 0);
  for (auto& col : cols) {
    SparseColumn<BigInt> big;
    for (auto [r, v] : col) big.push_back({r, BigInt(static_cast<long>(v))});
    m.append_column(std::move(big));
  }
  return m;
}

/// Integer homology in every dimension from min_dim() (-1 when reduced) to
/// the top dimension of the complex.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  HomologyProfile(bool reduced, std::vector<HomologyGroup> groups) : reduced_(reduced), groups_(std::move(groups)) {}

  bool reduced() const { return reduced_; }
  int min_dim() const { return reduced_ ? -1 : 0; }
  int max_dim() const { return min_dim() + static_cast<int>(groups_.size()) - 1; }

  /// Zero group outside the stored range.
  const HomologyGroup& operator[](int d) const {
    static const HomologyGroup zero{};
    if (d < min_dim() || d > max_dim()) return zero;
    return groups_[static_cast<std::size_t>(d - min_dim())];
  }

 private:
  bool reduced_ = false;
  std::vector<HomologyGroup> groups_;
};

/// All homology groups of `c` over Z.
inline HomologyProfile integer_homology(const SimplicialComplex& c, bool reduced) {
  const int top = c.dimension();
  // rank_of[d] = rank of boundary d (C_d -> C_{d-1}); factors_of[d] likewise.
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(top + 2), 0);
  std::vector<std::vector<BigInt>> torsion_of(static_cast<std::size_t>(top + 2));
  if (top >= 0 && reduced) rank_of[0] = c.count(0) > 0 ? 1 : 0;
  for (int d = 1; d <= top; ++d) {
    std::size_t rows = 0;
    auto cols = detail::boundary_columns(c, d, false, &rows);
    SmithForm f = detail::smith_from_columns(rows, cols);
    rank_of[d] = f.rank;
    torsion_of[d] = f.torsion();
  }
  std::vector<HomologyGroup> groups;
  if (reduced) {
    HomologyGroup g;
    g.free_rank = 1 - (top >= 0 && c.count(0) > 0 ? 1 : 0);
    groups.push_back(g);
  }
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.free_rank = c.count(d) - rank_of[d] - (d + 1 <= top ? rank_of[d + 1] : 0);
    if (d + 1 <= top) g.torsion = torsion_of[d + 1];
    groups.push_back(std::move(g));
  }
  return HomologyProfile(reduced, std::move(groups));
}

/// H_d(c; Z). With `reduced`, d = -1 is allowed.
inline HomologyGroup homology(const SimplicialComplex& c, int d, bool reduced = false) {
  if (d < (reduced ? -1 : 0)) throw std::invalid_argument("homology dimension out of range");
  return integer_homology(c, reduced)[d];
}

/// Ranks of every boundary map over F_p, indexed by d; index 0 is the
/// augmentation (reduced) or zero map.
inline std::vector<std::size_t> boundary_ranks_mod_p(const SimplicialComplex& c, std::uint64_t p, bool reduced) {
  const int top = c.dimension();
  std::vector<std::size_t> rank_of(static_cast<std::size_t>(std::max(top + 2, 1)), 0);
  if (top >= 0 && reduced) rank_of[0] = c.count(0) > 0 ? 1 : 0;
  for (int d = 1; d <= top; ++d) {
    std::size_t rows = 0;
    auto cols = detail::boundary_columns(c, d, false, &rows);
    rank_of[d] = detail::rank_mod_p(rows, cols, p);
  }
  return rank_of;
}

/// dim of H_d(c; k) for a field k of characteristic `ch`. Characteristic 0
/// uses the integer free rank; a prime uses elimination over F_p.
inline std::size_t homology_dim_mod(const SimplicialComplex& c, int d, Characteristic ch, bool reduced = false) {
  if (d < (reduced ? -1 : 0)) throw std::invalid_argument("homology dimension out of range");
  if (ch.is_zero()) return homology(c, d, reduced).free_rank;
  const int top = c.dimension();
  if (d == -1) return (top >= 0 && c.count(0) > 0) ? 0 : 1;
  if (d > top) return 0;
  auto ranks = boundary_ranks_mod_p(c, ch.value(), reduced);
  return c.count(d) - ranks[d] - (d + 1 <= top ? ranks[d + 1] : 0);
}

/// Field dimension predicted from integer homology by universal coefficients:
/// free rank plus ell-divisible torsion factors in degrees d and d-1.
inline std::size_t universal_coefficient_dim(const HomologyProfile& h, int d, Characteristic ch) {
  if (ch.is_zero()) return h[d].free_rank;
  return h[d].free_rank + h[d].torsion_count(ch.value()) + h[d - 1].torsion_count(ch.value());
}

/// Integer 1-chain from oriented edges: [x, y] contributes +coef on the
/// canonical edge {min, max} when x < y and -coef otherwise.
inline SparseColumn<BigInt> edge_chain(const SimplicialComplex& c,
                                       const std::vector<std::pair<std::pair<VertexId, VertexId>, long>>& terms) {
  std::vector<BigInt> dense(c.count(1));
  for (const auto& [edge, coef] : terms) {
    auto [x, y] = edge;
    Simplex e{std::min(x, y), std::max(x, y)};
    auto idx = c.index_of(e);
    if (!idx) throw std::invalid_argument("chain uses a missing edge");
    dense[*idx] += x < y ? coef : -coef;
  }
  SparseColumn<BigInt> col;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) col.push_back({static_cast<std::uint32_t>(i), dense[i]});
  return col;
}

/// The chain is an integer 1-boundary, i.e. lies in the image of the
/// boundary map from 2-chains.
inline bool is_integer_boundary(const SimplicialComplex& c, const SparseColumn<BigInt>& chain) {
  return in_integer_image(boundary_matrix(c, 2), chain);
}

/// The chain is a 1-cycle.
inline bool is_cycle(const SimplicialComplex& c, const SparseColumn<BigInt>& chain) {
  IntegerMatrix b1 = boundary_matrix(c, 1);
  IntegerMatrix v(c.count(1), 0);
  v.append_column(chain);
  return b1.multiply(v).is_zero();
}

}  // namespace torflag
