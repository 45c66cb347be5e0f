#pragma once

// Graded Betti numbers of the Stanley-Reisner ring S / I_Delta through
// Hochster's formula
//
//   beta_{i,j} = sum over |alpha| = j of dim_k H~_{j-i-1}(Delta|_alpha; k),
//
// and detection of l-torsion by scanning the integer homology of induced
// subcomplexes. Field dimensions for a prime come from elimination over F_p;
// torsion comes from Smith normal form, so the two are independent.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "torflag/complex.hpp"
#include "torflag/density.hpp"
#include "torflag/homology.hpp"
#include "torflag/parallel.hpp"

namespace torflag {

inline constexpr std::size_t kHochsterGuard = 24;

struct HochsterOptions {
  std::size_t guard = kHochsterGuard;  // refuse complexes with more vertices
  std::optional<std::size_t> min_size;  // restrict |alpha|
  std::optional<std::size_t> max_size;
  unsigned threads = 1;
};

/// Betti table of S / I_Delta over a field of the given characteristic.
struct BettiTable {
  Characteristic characteristic;
  std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> beta_{i,j}, nonzero only
  bool partial = false;                                  // some subset sizes were skipped

  std::uint64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.entries == b.entries; }

  /// Macaulay2-style grid: columns i, rows j - i, "." for zero.
  std::string render() const {
    int max_i = 0, max_row = 0;
    for (const auto& [ij, v] : entries) {
      max_i = std::max(max_i, ij.first);
      max_row = std::max(max_row, ij.second - ij.first);
    }
    std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(max_row + 2),
                                                std::vector<std::string>(static_cast<std::size_t>(max_i + 1), "."));
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(max_i + 1), 0);
    for (const auto& [ij, v] : entries) {
      cells[static_cast<std::size_t>(ij.second - ij.first + 1)][static_cast<std::size_t>(ij.first)] = std::to_string(v);
      totals[static_cast<std::size_t>(ij.first)] += v;
    }
    std::vector<std::string> labels{"total:"};
    for (int r = 0; r <= max_row; ++r) labels.push_back(std::to_string(r) + ":");
    for (int i = 0; i <= max_i; ++i) cells[0][static_cast<std::size_t>(i)] = std::to_string(totals[static_cast<std::size_t>(i)]);
    std::size_t label_w = 0;
    for (const auto& l : labels) label_w = std::max(label_w, l.size());
    std::vector<std::size_t> col_w(static_cast<std::size_t>(max_i + 1), 1);
    for (int i = 0; i <= max_i; ++i) {
      col_w[static_cast<std::size_t>(i)] = std::to_string(i).size();
      for (const auto& row : cells) col_w[static_cast<std::size_t>(i)] = std::max(col_w[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(i)].size());
    }
    std::ostringstream os;
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    os << std::string(label_w, ' ');
    for (int i = 0; i <= max_i; ++i) os << ' ' << pad(std::to_string(i), col_w[static_cast<std::size_t>(i)]);
    os << '\n';
    for (std::size_t r = 0; r < cells.size(); ++r) {
      os << pad(labels[r], label_w);
      for (int i = 0; i <= max_i; ++i) os << ' ' << pad(cells[r][static_cast<std::size_t>(i)], col_w[static_cast<std::size_t>(i)]);
      os << '\n';
    }
    return os.str();
  }
};

/// Witness for l-torsion: H_d(Delta|_alpha; Z) has a factor divisible by l.
struct TorsionWitness {
  std::vector<VertexId> alpha;
  int dimension = 0;
};

struct TorsionReport {
  std::set<std::uint64_t> primes;
  std::map<std::uint64_t, TorsionWitness> witness;
  bool complete = true;  // every subset was scanned
  std::uint64_t subsets_scanned = 0;
};

/// dim_k H~_d(c; k) for d = -1 .. dim(c), as one vector indexed by d + 1.
inline std::vector<std::uint64_t> reduced_betti_numbers(const SimplicialComplex& c, Characteristic ch) {
  const int top = c.dimension();
  std::vector<std::uint64_t> out(static_cast<std::size_t>(top + 2), 0);
  if (ch.is_zero()) {
    const auto h = integer_homology(c, true);
    for (int d = -1; d <= top; ++d) out[static_cast<std::size_t>(d + 1)] = h[d].free_rank;
    return out;
  }
  if (top < 0) {
    out[0] = 1;
    return out;
  }
  const auto ranks = boundary_ranks_mod_p(c, ch.value(), true);
  for (int d = 0; d <= top; ++d)
    out[static_cast<std::size_t>(d + 1)] = c.count(d) - ranks[d] - (d + 1 <= top ? ranks[d + 1] : 0);
  return out;
}

namespace detail {

inline void check_guard(const SimplicialComplex& c, const HochsterOptions& opt) {
  if (c.num_vertices() > 64) throw std::invalid_argument("subset scans support at most 64 vertices");
  if (c.num_vertices() > opt.guard)
    throw std::invalid_argument("complex has " + std::to_string(c.num_vertices()) + " vertices, above the subset-scan guard of " +
                                std::to_string(opt.guard) + "; raise the guard (--max-vertices) to override");
}

/// Subsets of [0, n) with size in [lo, hi], grouped by size. Within a size,
/// masks ascend numerically; callers needing lexicographic witnesses compare
/// explicitly.
inline std::vector<std::uint64_t> subsets_by_size(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<std::uint64_t> out;
  for (std::size_t s = lo; s <= hi && s <= n; ++s) {
    if (s == 0) {
      out.push_back(0);
      continue;
    }
    if (s == 64) {
      out.push_back(~std::uint64_t{0});
      continue;
    }
    std::uint64_t m = (std::uint64_t{1} << s) - 1;
    const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
    while (true) {
      out.push_back(m);
      // Gosper's hack: next mask with the same popcount.
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t r = m + c;
      if (r == 0) break;
      m = (((r ^ m) >> 2) / c) | r;
      if (limit != 0 && m >= limit) break;
    }
  }
  return out;
}

inline std::pair<std::size_t, std::size_t> size_range(const SimplicialComplex& c, const HochsterOptions& opt) {
  const std::size_t n = c.num_vertices();
  const std::size_t lo = opt.min_size.value_or(0), hi = std::min(opt.max_size.value_or(n), n);
  return {lo, hi};
}

}  // namespace detail

/// Betti table via Hochster's formula. Each alpha contributes
/// dim H~_d(Delta|_alpha) to beta_{|alpha|-d-1, |alpha|}; alpha = {} gives
/// beta_{0,0} = 1.
inline BettiTable betti_table(const SimplicialComplex& c, Characteristic ch, const HochsterOptions& opt = {}) {
  detail::check_guard(c, opt);
  const auto [lo, hi] = detail::size_range(c, opt);
  const auto masks = detail::subsets_by_size(c.num_vertices(), lo, hi);
  std::vector<std::vector<std::uint64_t>> dims(masks.size());
  parallel_for(masks.size(), opt.threads, [&](std::size_t k) {
    const auto alpha = detail::mask_vertices(masks[k]);
    dims[k] = reduced_betti_numbers(induced_subcomplex(c, alpha).complex, ch);
  });
  BettiTable t;
  t.characteristic = ch;
  t.partial = lo > 0 || hi < c.num_vertices();
  for (std::size_t k = 0; k < masks.size(); ++k) {
    const int j = __builtin_popcountll(masks[k]);
    for (std::size_t e = 0; e < dims[k].size(); ++e) {
      if (dims[k][e] == 0) continue;
      const int d = static_cast<int>(e) - 1;
      t.entries[{j - d - 1, j}] += dims[k][e];
    }
  }
  return t;
}

/// Primes dividing a torsion coefficient of some induced subcomplex, each
/// with its lexicographically least witness subset.
inline TorsionReport torsion_primes(const SimplicialComplex& c, const HochsterOptions& opt = {}) {
  detail::check_guard(c, opt);
  const auto [lo, hi] = detail::size_range(c, opt);
  const auto masks = detail::subsets_by_size(c.num_vertices(), lo, hi);
  std::vector<std::vector<std::pair<std::uint64_t, int>>> found(masks.size());  // (prime, dimension)
  parallel_for(masks.size(), opt.threads, [&](std::size_t k) {
    const auto sub = induced_subcomplex(c, detail::mask_vertices(masks[k])).complex;
    if (sub.dimension() < 2) return;  // torsion needs a 2-face
    const auto h = integer_homology(sub, true);
    for (int d = 0; d <= h.max_dim(); ++d)
      for (const auto& t : h[d].torsion)
        for (const auto& p : prime_divisors(t)) found[k].push_back({p.get_ui(), d});
  });
  TorsionReport report;
  report.complete = lo == 0 && hi >= c.num_vertices();
  report.subsets_scanned = masks.size();
  std::map<std::uint64_t, std::pair<std::uint64_t, int>> best;  // prime -> (mask, d)
  for (std::size_t k = 0; k < masks.size(); ++k)
    for (auto [p, d] : found[k]) {
      report.primes.insert(p);
      auto it = best.find(p);
      if (it == best.end() || detail::mask_lex_less(masks[k], it->second.first) ||
          (masks[k] == it->second.first && d < it->second.second))
        best[p] = {masks[k], d};
    }
  for (const auto& [p, md] : best) report.witness[p] = {detail::mask_vertices(md.first), md.second};
  return report;
}

struct SemicontinuityResult {
  bool holds = true;                            // beta over Q <= beta over F_l everywhere
  std::vector<std::pair<int, int>> strict;      // positions where the inequality is strict
  BettiTable rational, modular;
};

inline SemicontinuityResult semicontinuity_check(const SimplicialComplex& c, std::uint64_t ell, const HochsterOptions& opt = {}) {
  if (!is_prime(ell)) throw std::invalid_argument("semicontinuity needs a prime");
  SemicontinuityResult r;
  r.rational = betti_table(c, Characteristic(0), opt);
  r.modular = betti_table(c, Characteristic(ell), opt);
  std::set<std::pair<int, int>> keys;
  for (const auto& [ij, v] : r.rational.entries) keys.insert(ij);
  for (const auto& [ij, v] : r.modular.entries) keys.insert(ij);
  for (const auto& ij : keys) {
    const auto q = r.rational.at(ij.first, ij.second), f = r.modular.at(ij.first, ij.second);
    if (q > f) r.holds = false;
    if (q < f) r.strict.push_back(ij);
  }
  return r;
}

}  // namespace torflag
