#pragma once

// Sparse integer matrices and their Smith normal form.
//
// The reducer diagonalises by unimodular row/column operations, always
// pivoting on an entry of least absolute value (Markowitz cost breaks ties),
// and normalises the diagonal into a divisibility chain at the end. It runs
// on checked int64 first and restarts on BigInt if any intermediate would
// overflow, so results are exact either way.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <ostream>
#include <utility>
#include <vector>

#include "torflag/numeric.hpp"

namespace torflag {

template <class Int>
using SparseColumn = std::vector<std::pair<std::uint32_t, Int>>;  // sorted by row

/// Column-sparse integer matrix with arbitrary-precision entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  static IntegerMatrix from_dense(const std::vector<std::vector<long>>& dense) {
    const std::size_t r = dense.size();
    const std::size_t c = r == 0 ? 0 : dense.front().size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (dense[i].at(j) != 0) m.set(i, j, BigInt(dense[i][j]));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }

  BigInt get(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : BigInt(0);
  }

  void set(std::size_t r, std::size_t c, const BigInt& value) {
    if (r >= rows_ || c >= cols()) throw std::out_of_range("IntegerMatrix::set");
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) {
      if (value == 0) col.erase(it);
      else it->second = value;
    } else if (value != 0) {
      col.insert(it, {static_cast<std::uint32_t>(r), value});
    }
  }

  void append_column(SparseColumn<BigInt> col) {
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    columns_.push_back(std::move(col));
  }

  const SparseColumn<BigInt>& column(std::size_t c) const { return columns_.at(c); }

  IntegerMatrix multiply(const IntegerMatrix& rhs) const {
    if (cols() != rhs.rows()) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix out(rows_, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
      std::vector<BigInt> acc(rows_);
      for (const auto& [k, b] : rhs.column(j))
        for (const auto& [i, a] : columns_[k]) acc[i] += a * b;
      for (std::size_t i = 0; i < rows_; ++i)
        if (acc[i] != 0) out.columns_[j].push_back({static_cast<std::uint32_t>(i), acc[i]});
    }
    return out;
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  /// Plain-text integer grid, one row per line.
  void write_grid(std::ostream& os) const {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols(); ++j) os << (j ? " " : "") << get(i, j);
      os << '\n';
    }
  }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseColumn<BigInt>> columns_;
};

struct SmithForm {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;

  /// Invariant factors greater than one.
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> t;
    for (const auto& d : invariant_factors)
      if (d > 1) t.push_back(d);
    return t;
  }
};

/// Turns any multiset of positive diagonal entries into the invariant-factor
/// chain of the same cokernel.
inline std::vector<BigInt> normalize_diagonal(std::vector<BigInt> diag) {
  std::size_t units = 0;
  std::vector<BigInt> rest;
  for (auto& d : diag) {
    d = ::abs(d);
    if (d == 1) ++units;
    else rest.push_back(std::move(d));
  }
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (arith::divides(rest[i], rest[j])) continue;
      BigInt g = gcd(rest[i], rest[j]);
      BigInt l = (rest[i] / g) * rest[j];
      rest[i] = g;
      rest[j] = l;
    }
  }
  std::sort(rest.begin(), rest.end());
  std::vector<BigInt> out(units, BigInt(1));
  for (auto& d : rest)
    if (d == 1) out.insert(out.begin(), BigInt(1));
    else out.push_back(std::move(d));
  return out;
}

namespace detail {

template <class Int>
class SmithReducer {
 public:
  SmithReducer(std::size_t rows, std::vector<SparseColumn<Int>> columns)
      : cols_(std::move(columns)), alive_(cols_.size(), 1), row_cols_(rows), row_count_(rows, 0) {
    for (std::uint32_t c = 0; c < cols_.size(); ++c)
      for (const auto& [r, v] : cols_[c]) {
        row_cols_[r].push_back(c);
        ++row_count_[r];
      }
  }

  std::vector<Int> run() {
    std::vector<Int> diag;
    while (true) {
      auto pivot = choose_pivot();
      if (!pivot) break;
      auto [r, c] = *pivot;
      settle_pivot(r, c);
      Int v = value_at(c, r);
      // Clear row r outside column c.
      for (std::uint32_t x : live_columns_in_row(r)) {
        if (x == c) continue;
        Int a = value_at(x, r);
        axpy(x, c, arith::quot(a, v));
      }
      diag.push_back(arith::abs(v));
      kill_column(c);
    }
    return diag;
  }

 private:
  struct Pivot {
    std::uint32_t row, col;
  };

  std::optional<Pivot> choose_pivot() {
    std::optional<Pivot> best;
    Int best_abs{};
    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    for (std::uint32_t c = 0; c < cols_.size(); ++c) {
      if (!alive_[c]) continue;
      if (cols_[c].empty()) {
        alive_[c] = 0;
        continue;
      }
      const std::uint64_t csize = cols_[c].size() - 1;
      for (const auto& [r, v] : cols_[c]) {
        Int a = arith::abs(v);
        std::uint64_t cost = csize * static_cast<std::uint64_t>(row_count_[r] - 1);
        if (!best || a < best_abs || (a == best_abs && cost < best_cost)) {
          best = Pivot{r, c};
          best_abs = a;
          best_cost = cost;
          if (arith::is_unit(a) && cost == 0) return best;
        }
      }
    }
    return best;
  }

  // Euclidean steps until the pivot divides its whole row and column.
  void settle_pivot(std::uint32_t& r, std::uint32_t& c) {
    while (true) {
      Int v = value_at(c, r);
      if (arith::is_unit(v)) return;
      bool moved = false;
      // Column entries: row operations.
      for (const auto& [r2, a] : SparseColumn<Int>(cols_[c])) {
        if (r2 == r || arith::divides(v, a)) continue;
        row_axpy(r2, r, arith::quot(a, v));
        r = r2;
        moved = true;
        break;
      }
      if (moved) continue;
      for (std::uint32_t x : live_columns_in_row(r)) {
        if (x == c) continue;
        Int a = value_at(x, r);
        if (arith::divides(v, a)) continue;
        axpy(x, c, arith::quot(a, v));
        c = x;
        moved = true;
        break;
      }
      if (!moved) return;
    }
  }

  Int value_at(std::uint32_t c, std::uint32_t r) const {
    const auto& col = cols_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, std::uint32_t row) { return e.first < row; });
    return (it != col.end() && it->first == r) ? it->second : Int(0);
  }

  std::vector<std::uint32_t> live_columns_in_row(std::uint32_t r) {
    auto& list = row_cols_[r];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    std::vector<std::uint32_t> out;
    std::size_t keep = 0;
    for (std::uint32_t x : list) {
      if (!alive_[x] || arith::is_zero(value_at(x, r))) continue;
      list[keep++] = x;
      out.push_back(x);
    }
    list.resize(keep);
    return out;
  }

  // column x -= q * column c
  void axpy(std::uint32_t x, std::uint32_t c, const Int& q) {
    if (arith::is_zero(q)) return;
    const auto& src = cols_[c];
    auto& dst = cols_[x];
    SparseColumn<Int> merged;
    merged.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        merged.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        merged.push_back({src[j].first, arith::sub(Int(0), arith::mul(q, src[j].second))});
        row_cols_[src[j].first].push_back(x);
        ++row_count_[src[j].first];
        ++j;
      } else {
        Int val = arith::sub(dst[i].second, arith::mul(q, src[j].second));
        if (arith::is_zero(val)) --row_count_[dst[i].first];
        else merged.push_back({dst[i].first, std::move(val)});
        ++i;
        ++j;
      }
    }
    dst = std::move(merged);
  }

  // row r2 -= q * row r
  void row_axpy(std::uint32_t r2, std::uint32_t r, const Int& q) {
    for (std::uint32_t x : live_columns_in_row(r)) {
      Int a = value_at(x, r);
      auto& col = cols_[x];
      auto it = std::lower_bound(col.begin(), col.end(), r2, [](const auto& e, std::uint32_t row) { return e.first < row; });
      Int add = arith::sub(Int(0), arith::mul(q, a));
      if (it != col.end() && it->first == r2) {
        it->second = arith::add(it->second, add);
        if (arith::is_zero(it->second)) {
          col.erase(it);
          --row_count_[r2];
        }
      } else {
        col.insert(it, {r2, add});
        row_cols_[r2].push_back(x);
        ++row_count_[r2];
      }
    }
  }

  void kill_column(std::uint32_t c) {
    for (const auto& [r, v] : cols_[c]) --row_count_[r];
    cols_[c].clear();
    alive_[c] = 0;
  }

  std::vector<SparseColumn<Int>> cols_;
  std::vector<char> alive_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<std::int64_t> row_count_;
};

/// Diagonal of a unimodular diagonalisation, int64 first, BigInt on overflow.
template <class Small>
std::vector<BigInt> smith_diagonal(std::size_t rows, const std::vector<SparseColumn<Small>>& columns) {
  try {
    std::vector<SparseColumn<std::int64_t>> narrow(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [r, v] : columns[c]) {
        if constexpr (std::is_same_v<Small, BigInt>) {
          if (!fits_int64(v)) throw ArithmeticOverflow("entry exceeds int64");
          narrow[c].push_back({r, static_cast<std::int64_t>(v.get_si())});
        } else {
          narrow[c].push_back({r, static_cast<std::int64_t>(v)});
        }
      }
    auto diag = SmithReducer<std::int64_t>(rows, std::move(narrow)).run();
    std::vector<BigInt> out;
    out.reserve(diag.size());
    for (auto d : diag) out.push_back(arith::to_big(d));
    return out;
  } catch (const ArithmeticOverflow&) {
    std::vector<SparseColumn<BigInt>> wide(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
      for (const auto& [r, v] : columns[c]) {
        if constexpr (std::is_same_v<Small, BigInt>) wide[c].push_back({r, v});
        else wide[c].push_back({r, BigInt(static_cast<long>(v))});
      }
    return SmithReducer<BigInt>(rows, std::move(wide)).run();
  }
}

template <class Small>
SmithForm smith_from_columns(std::size_t rows, const std::vector<SparseColumn<Small>>& columns) {
  SmithForm f;
  f.invariant_factors = normalize_diagonal(smith_diagonal(rows, columns));
  f.rank = f.invariant_factors.size();
  return f;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& m) {
  std::vector<SparseColumn<BigInt>> cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols[c] = m.column(c);
  return detail::smith_from_columns(m.rows(), cols);
}

/// Whether `b` lies in the integer column span of `a`: true exactly when
/// appending b keeps the rank and the product of invariant factors.
inline bool in_integer_image(const IntegerMatrix& a, const SparseColumn<BigInt>& b) {
  IntegerMatrix ab = a;
  ab.append_column(b);
  SmithForm fa = smith_normal_form(a);
  SmithForm fb = smith_normal_form(ab);
  if (fa.rank != fb.rank) return false;
  BigInt pa = 1, pb = 1;
  for (const auto& d : fa.invariant_factors) pa *= d;
  for (const auto& d : fb.invariant_factors) pb *= d;
  return pa == pb;
}

}  // namespace torflag
