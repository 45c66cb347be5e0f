#pragma once

// Budgeted backtracking search for a copy of a pattern graph inside a host,
// either induced (non-edges must map to non-edges) or as a plain subgraph.
// Candidate sets are host bitsets: the intersection of the neighbourhoods of
// already placed pattern neighbours, minus the neighbourhoods of placed
// pattern non-neighbours in induced mode, minus used vertices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torflag/graph.hpp"

namespace torflag {

enum class SearchOutcome { Found, NotFound, BudgetExhausted };

inline std::string to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::NotFound: return "not-found";
    case SearchOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

/// Pattern vertex i maps to host vertex map[i].
struct Embedding {
  std::vector<VertexId> map;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NotFound;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Independent check that `e` is an (induced) embedding of pattern in host.
inline bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e, bool induced = true) {
  if (e.map.size() != pattern.num_vertices()) return false;
  std::vector<VertexId> sorted = e.map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (VertexId x : e.map)
    if (x >= host.num_vertices()) return false;
  for (VertexId a = 0; a < pattern.num_vertices(); ++a)
    for (VertexId b = a + 1; b < pattern.num_vertices(); ++b) {
      const bool pe = pattern.adjacent(a, b), he = host.adjacent(e.map[a], e.map[b]);
      if (pe && !he) return false;
      if (induced && !pe && he) return false;
    }
  return true;
}

namespace detail {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void fill(std::size_t n) {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    if (n % 64) words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  }
  void and_with(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  template <class F>
  bool for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        if (!f(i)) return false;
        bits &= bits - 1;
      }
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

class InducedSearcher {
 public:
  InducedSearcher(const Graph& pattern, const Graph& host, std::uint64_t budget, bool induced)
      : pattern_(pattern), host_(host), budget_(budget), induced_(induced) {
    const std::size_t hn = host.num_vertices();
    nbr_.assign(hn, Bitset(hn));
    for (auto [u, v] : host.edges()) {
      nbr_[u].set(v);
      nbr_[v].set(u);
    }
    order_pattern();
  }

  SearchResult run() {
    SearchResult r;
    const std::size_t pn = pattern_.num_vertices();
    if (pn == 0) {
      r.outcome = SearchOutcome::Found;
      r.embedding = Embedding{};
      return r;
    }
    if (pn > host_.num_vertices()) {
      r.outcome = SearchOutcome::NotFound;
      return r;
    }
    map_.assign(pn, 0);
    used_ = Bitset(host_.num_vertices());
    const bool found = extend(0);
    r.nodes = nodes_;
    if (found) {
      r.outcome = SearchOutcome::Found;
      r.embedding = Embedding{map_};
      if (!verify_embedding(pattern_, host_, *r.embedding, induced_))
        throw std::logic_error("search produced an invalid embedding");
    } else {
      r.outcome = exhausted_ ? SearchOutcome::BudgetExhausted : SearchOutcome::NotFound;
    }
    return r;
  }

 private:
  // Next pattern vertex: most already-placed neighbours, then highest degree,
  // then lowest index.
  void order_pattern() {
    const std::size_t pn = pattern_.num_vertices();
    std::vector<char> placed(pn, 0);
    std::vector<std::size_t> placed_nbrs(pn, 0);
    for (std::size_t step = 0; step < pn; ++step) {
      std::optional<VertexId> best;
      for (VertexId x = 0; x < pn; ++x) {
        if (placed[x]) continue;
        if (!best || placed_nbrs[x] > placed_nbrs[*best] ||
            (placed_nbrs[x] == placed_nbrs[*best] && pattern_.degree(x) > pattern_.degree(*best)))
          best = x;
      }
      placed[*best] = 1;
      order_.push_back(*best);
      for (VertexId y : pattern_.neighbors(*best)) ++placed_nbrs[y];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const VertexId x = order_[depth];
    const std::size_t hn = host_.num_vertices();
    const std::size_t pn = pattern_.num_vertices();
    Bitset cand(hn);
    cand.fill(hn);
    cand.and_not(used_);
    for (std::size_t d = 0; d < depth; ++d) {
      const VertexId y = order_[d];
      if (pattern_.adjacent(x, y)) cand.and_with(nbr_[map_[y]]);
      else if (induced_) cand.and_not(nbr_[map_[y]]);
    }
    const std::size_t need_deg = pattern_.degree(x);
    const std::size_t need_nondeg = pn - 1 - need_deg;
    bool found = false;
    cand.for_each([&](std::size_t h) {
      const std::size_t deg = host_.degree(static_cast<VertexId>(h));
      if (deg < need_deg) return true;
      if (induced_ && hn - 1 - deg < need_nondeg) return true;
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return false;
      }
      ++nodes_;
      map_[x] = static_cast<VertexId>(h);
      used_.set(h);
      if (extend(depth + 1)) {
        found = true;
        return false;
      }
      used_.reset(h);
      return !exhausted_;
    });
    return found;
  }

  const Graph& pattern_;
  const Graph& host_;
  std::uint64_t budget_;
  bool induced_;
  std::vector<Bitset> nbr_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_;
  Bitset used_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Searches for an induced copy (or, with induced = false, any copy) of
/// `pattern` in `host`. Each tried assignment counts as one node; hitting the
/// budget yields BudgetExhausted rather than NotFound.
inline SearchResult contains_induced(const Graph& pattern, const Graph& host, std::uint64_t budget = kDefaultBudget,
                                     bool induced = true) {
  return detail::InducedSearcher(pattern, host, budget, induced).run();
}

}  // namespace torflag
