#pragma once

// Recomputes the tabulated degree and count data from scratch and diffs it
// against transcribed expected values, cell by cell.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "torflag/construction.hpp"
#include "torflag/density.hpp"
#include "torflag/parallel.hpp"

namespace torflag {

struct ReproCell {
  std::string row, column, expected, actual;
  bool pass = false;
};

struct ReproduceReport {
  std::string id;
  std::vector<ReproCell> cells;

  bool passed() const {
    return !cells.empty() && std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.pass; });
  }
  void add(std::string row, std::string column, std::string expected, std::string actual) {
    const bool ok = expected == actual;
    cells.push_back({std::move(row), std::move(column), std::move(expected), std::move(actual), ok});
  }
};

inline const std::vector<std::string>& reproduce_ids() {
  static const std::vector<std::string> ids{"T1", "T2", "T3", "T4", "T5", "counts", "lemma51"};
  return ids;
}

namespace detail {

inline std::string w_list(const std::vector<int>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + ("w" + std::to_string(idx[i]));
  return s;
}

inline std::vector<int> w_range(int lo, int hi) {
  std::vector<int> out;
  for (int j = lo; j <= hi; ++j) out.push_back(j);
  return out;
}

/// degree -> sorted w indices, for the w vertices of a named complex.
inline std::map<std::size_t, std::vector<int>> w_degrees(const NamedComplex& c) {
  std::map<std::size_t, std::vector<int>> out;
  const Graph g = c.complex.one_skeleton();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& name = c.name(v);
    if (name.kind == VertexKind::W && name.idx.size() == 1) out[g.degree(v)].push_back(name.idx[0]);
  }
  for (auto& [d, list] : out) std::sort(list.begin(), list.end());
  return out;
}

inline void diff_degree_rows(ReproduceReport& r, const std::string& row, const std::map<std::size_t, std::vector<int>>& expected,
                             const std::map<std::size_t, std::vector<int>>& actual) {
  std::set<std::size_t> keys;
  for (const auto& [d, v] : expected) keys.insert(d);
  for (const auto& [d, v] : actual) keys.insert(d);
  for (auto d : keys) {
    auto e = expected.count(d) ? w_list(expected.at(d)) : "";
    auto a = actual.count(d) ? w_list(actual.at(d)) : "";
    r.add(row, "degree " + std::to_string(d), e, a);
  }
}

inline std::string q(const Rational& x) { return x.get_str(); }

/// a*k + b*nk + c with rational coefficients, as a canonical fraction.
inline std::string affine(const Rational& a, int k, const Rational& b, int nk, const Rational& c) {
  Rational v = a * k + b * nk + c;
  v.canonicalize();
  return v.get_str();
}

inline Rational R(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Vertex degrees of the sphere stages T_0 .. T_max_i.
inline ReproduceReport reproduce_table1(int max_i = 10) {
  using namespace detail;
  ReproduceReport r{"T1", {}};
  for (int i = 0; i <= max_i; ++i) {
    std::map<std::size_t, std::vector<int>> expected;
    if (i == 0) expected[3] = {0, 1, 2, 3};
    else if (i == 1) expected[4] = {0, 1, 2, 3, 4, 5};
    else if (i == 2) {
      expected[4] = {0, 1, 6, 7};
      expected[5] = {2, 3, 4, 5};
    } else {
      expected[4] = {0, 1, 2 * i + 2, 2 * i + 3};
      expected[5] = {2, 3, 2 * i, 2 * i + 1};
      expected[6] = w_range(4, 2 * i - 1);
    }
    diff_degree_rows(r, "T_" + std::to_string(i), expected, w_degrees(build_sphere_stage_named(i)));
  }
  return r;
}

/// Degrees of the w vertices of T~_i with k = 4i + 4 holes (before vertex
/// replacement).
inline ReproduceReport reproduce_table2(int max_i = 8) {
  using namespace detail;
  ReproduceReport r{"T2", {}};
  for (int i = 0; i <= max_i; ++i) {
    std::map<std::size_t, std::vector<int>> expected;
    if (i == 0) {
      expected[6] = {2, 3};
      expected[7] = {1};
      expected[9] = {0};
    } else if (i == 1) {
      expected[8] = {4, 5};
      expected[9] = {2, 3};
      expected[10] = {1};
      expected[12] = {0};
    } else if (i == 2) {
      expected[8] = {6, 7};
      expected[10] = {1};
      expected[11] = {4, 5};
      expected[12] = {0, 2, 3};
    } else {
      expected[8] = {2 * i + 2, 2 * i + 3};
      expected[10] = {1};
      expected[11] = {2 * i, 2 * i + 1};
      expected[12] = {0, 2, 3};
      expected[14] = w_range(4, 2 * i - 1);
    }
    const int k = 4 * i + 4;
    diff_degree_rows(r, "T~_" + std::to_string(i) + " (k=" + std::to_string(k) + ")", expected,
                     w_degrees(build_holed_sphere_named(k)));
  }
  return r;
}

/// |V|, |E|, |F| of Y2 for k in [13, max_k] against the per-residue rows.
inline ReproduceReport reproduce_table3(int max_k = 40) {
  using namespace detail;
  ReproduceReport r{"T3", {}};
  // Rows indexed by delta: (a_V, c_V), (a_E, c_E), (a_F, c_F) for a*k + c.
  const Rational aV = R(13, 2), aE = R(37, 2), aF = R(11);
  const Rational cV[] = {R(-4), R(-3, 2), R(0), R(5, 2)};
  const Rational cE[] = {R(-18), R(-21, 2), R(-6), R(3, 2)};
  const Rational cF[] = {R(-12), R(-7), R(-4), R(1)};
  for (int k = 13; k <= max_k; ++k) {
    const int d = delta_for(k);
    const auto f = build_punctured_sphere(k).f_vector();
    const std::string row = "k=" + std::to_string(k) + " delta=" + std::to_string(d);
    r.add(row, "|V|", affine(aV, k, 0, 0, cV[d]), std::to_string(f[0]));
    r.add(row, "|E|", affine(aE, k, 0, 0, cE[d]), std::to_string(f[1]));
    r.add(row, "|F|", affine(aF, k, 0, 0, cF[d]), std::to_string(f[2]));
  }
  return r;
}

/// Glued counts need n_k >= k - 1 (m has k binary digits); samples are
/// m = 2^{n_k} + 2^{k-1} - 1 for k in [13, 20] and several n_k.
inline std::vector<std::pair<int, int>> table4_samples() {
  std::vector<std::pair<int, int>> out;
  for (int k = 13; k <= 20; ++k)
    for (int extra : {0, 1, 4}) out.push_back({k, k - 1 + extra});
  return out;
}

inline std::uint64_t table4_m(int k, int nk) { return (std::uint64_t{1} << nk) + (std::uint64_t{1} << (k - 1)) - 1; }

inline ReproduceReport reproduce_table4(unsigned threads = 1) {
  using namespace detail;
  ReproduceReport r{"T4", {}};
  const Rational aV = R(5, 2), bV = R(12), aE = R(29, 2), bE = R(40), aF = R(11), bF = R(28);
  const Rational cV[] = {R(0), R(5, 2), R(4), R(13, 2)};
  const Rational cE[] = {R(-14), R(-13, 2), R(-2), R(11, 2)};
  const Rational cF[] = {R(-12), R(-7), R(-4), R(1)};
  const auto samples = table4_samples();
  std::vector<std::pair<FVector, std::size_t>> built(samples.size());
  parallel_for(samples.size(), threads, [&](std::size_t s) {
    auto [k, nk] = samples[s];
    const auto x = build_xm_named(table4_m(k, nk)).complex;
    built[s] = {x.f_vector(), max_degree(x)};
  });
  for (std::size_t s = 0; s < samples.size(); ++s) {
    auto [k, nk] = samples[s];
    const int d = delta_for(k);
    const auto& f = built[s].first;
    const std::string row = "m=" + std::to_string(table4_m(k, nk)) + " k=" + std::to_string(k) + " n_k=" + std::to_string(nk) +
                            " delta=" + std::to_string(d);
    r.add(row, "|V|", affine(aV, k, bV, nk, cV[d]), std::to_string(f[0]));
    r.add(row, "|E|", affine(aE, k, bE, nk, cE[d]), std::to_string(f[1]));
    r.add(row, "|F|", affine(aF, k, bF, nk, cF[d]), std::to_string(f[2]));
    r.add(row, "maxdeg<=12", "true", built[s].second <= 12 ? "true" : "false");
  }
  return r;
}

/// Maximum edges of s-vertex subgraphs of the RP^2 graph.
inline ReproduceReport reproduce_table5() {
  using namespace detail;
  ReproduceReport r{"T5", {}};
  struct Row {
    int size, max_edges;
    std::vector<int> witness;  // v_i labels
    Rational ratio;
  };
  const std::vector<Row> table{
      {1, 0, {1}, R(0)},
      {2, 1, {1, 2}, R(1, 2)},
      {3, 3, {1, 2, 6}, R(1)},
      {4, 5, {1, 2, 5, 6}, R(5, 4)},
      {5, 7, {1, 2, 4, 5, 6}, R(7, 5)},
      {6, 10, {1, 4, 7, 8, 9, 11}, R(5, 3)},
      {7, 13, {1, 2, 4, 7, 8, 9, 11}, R(13, 7)},
      {8, 17, {1, 2, 4, 6, 7, 8, 9, 11}, R(17, 8)},
      {9, 21, {1, 2, 3, 4, 6, 7, 8, 9, 11}, R(7, 3)},
      {10, 25, {1, 2, 3, 4, 5, 6, 7, 8, 9, 11}, R(5, 2)},
      {11, 30, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, R(30, 11)},
  };
  const auto rp2 = rp2_flag_named();
  const Graph g = rp2.complex.one_skeleton();
  const auto computed = max_edges_by_size(g);
  for (const auto& row : table) {
    const auto& got = computed[static_cast<std::size_t>(row.size - 1)];
    const std::string label = "|V(H)|=" + std::to_string(row.size);
    r.add(label, "max |E(H)|", std::to_string(row.max_edges), std::to_string(got.max_edges));
    r.add(label, "max ratio", q(row.ratio), q(ratio(got.max_edges, static_cast<std::size_t>(row.size))));
    std::vector<VertexId> w;
    for (int v : row.witness) w.push_back(rp2.id(v_(v)));
    r.add(label, "listed witness edges", std::to_string(row.max_edges), std::to_string(induced_edge_count(g, w)));
  }
  return r;
}

/// Count formulas for T_i, Y1, Y2 (k <= 12) and X_m (k <= 12).
inline ReproduceReport reproduce_counts(unsigned threads = 1) {
  ReproduceReport r{"counts", {}};
  for (int i = 0; i <= 10; ++i)
    r.add("T_" + std::to_string(i), "f-vector", fvector_string(expected_sphere_stage(i)),
          fvector_string(build_sphere_stage(i).f_vector()));
  for (int nk = 1; nk <= 10; ++nk) {
    const auto y1 = build_telescope(nk);
    r.add("Y1 n_k=" + std::to_string(nk), "f-vector", fvector_string(expected_telescope(nk)), fvector_string(y1.f_vector()));
    r.add("Y1 n_k=" + std::to_string(nk), "maxdeg", nk == 1 ? "6" : "9", std::to_string(max_degree(y1)));
  }
  for (int k = 1; k <= 12; ++k)
    r.add("Y2 k=" + std::to_string(k), "f-vector", fvector_string(expected_punctured_sphere(k)),
          fvector_string(build_punctured_sphere(k).f_vector()));
  std::vector<std::string> got(63);
  parallel_for(63, threads, [&](std::size_t s) { got[s] = fvector_string(build_xm_named(s + 2).complex.f_vector()); });
  for (std::uint64_t m = 2; m <= 64; ++m)
    r.add("X_" + std::to_string(m), "f-vector", fvector_string(expected_xm(m)), got[m - 2]);
  return r;
}

inline ReproduceReport reproduce_lemma51() {
  ReproduceReport r{"lemma51", {}};
  const Graph g = rp2_flag().one_skeleton();
  const auto ex = essential_density(g, DensityMode::Exhaustive);
  const auto mf = essential_density(g, DensityMode::MaxFlow);
  r.add("exhaustive", "m(G)", "30/11", ex.density.get_str());
  r.add("maxflow", "m(G)", "30/11", mf.density.get_str());
  r.add("exhaustive", "witness size", "11", std::to_string(ex.witness.size()));
  r.add("exhaustive", "strictly balanced", "true", ex.strictly_balanced ? "true" : "false");
  r.add("maxflow", "strictly balanced", "true", mf.strictly_balanced ? "true" : "false");
  r.add("graph", "maxdeg/2", "3", detail::ratio(graph_stats(g).maxdeg, 2).get_str());
  return r;
}

inline ReproduceReport reproduce(const std::string& id, unsigned threads = 1) {
  if (id == "T1") return reproduce_table1();
  if (id == "T2") return reproduce_table2();
  if (id == "T3") return reproduce_table3();
  if (id == "T4") return reproduce_table4(threads);
  if (id == "T5") return reproduce_table5();
  if (id == "counts") return reproduce_counts(threads);
  if (id == "lemma51") return reproduce_lemma51();
  throw std::invalid_argument("unknown table id " + id);
}

/// Certificates for X_m, m in [m_min, m_max]; build failures become failed
/// certificates rather than exceptions.
inline std::vector<ConstructionCertificate> verify_xm_range(std::uint64_t m_min, std::uint64_t m_max, unsigned threads = 1) {
  if (m_min < 2 || m_min > m_max) throw std::invalid_argument("need 2 <= m_min <= m_max");
  std::vector<ConstructionCertificate> out(static_cast<std::size_t>(m_max - m_min + 1));
  parallel_for(out.size(), threads, [&](std::size_t s) {
    const std::uint64_t m = m_min + s;
    try {
      auto named = build_xm_named(m);
      out[s] = certify("X_" + std::to_string(m), named.complex, expected_xm(m), 12, expected_xm_h1(m));
    } catch (const std::exception& e) {
      out[s].label = "X_" + std::to_string(m);
      out[s].checks.push_back({"build", false, e.what()});
    }
  });
  return out;
}

}  // namespace torflag
