#pragma once

// Flag complexes with prescribed torsion in first homology.
//
// Y1 is a telescope of punctured projective planes realising the relations
// 2 g_i = g_{i+1}; Y2 is a flag 2-sphere with k square holes whose boundaries
// sum to zero; X_m glues the j-th hole of Y2 onto the square g_{n_j} of Y1,
// where m = 2^{n_1} + ... + 2^{n_k}. All builders work on named vertices and
// assign dense ids only at the end, ordered by (kind, indices).

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "torflag/complex.hpp"
#include "torflag/homology.hpp"

namespace torflag {

/// Raised when a built complex fails one of its own certificate checks.
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vertex families, in id order.
enum class VertexKind : int { V = 0, VPrime = 1, W = 2, U = 3, WPrime = 4 };

/// v_j, v'_j, w_j (w_{j,1} / w_{j,2} after splitting), u_j, w'_{s,t}.
struct VertexName {
  VertexKind kind = VertexKind::V;
  std::vector<int> idx;

  friend auto operator<=>(const VertexName&, const VertexName&) = default;
  friend bool operator==(const VertexName&, const VertexName&) = default;

  std::string to_string() const {
    static const char* prefix[] = {"v", "v'", "w", "u", "w'"};
    std::string s = prefix[static_cast<int>(kind)];
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
    return s;
  }
};

inline VertexName v_(int j) { return {VertexKind::V, {j}}; }
inline VertexName vp_(int j) { return {VertexKind::VPrime, {j}}; }
inline VertexName w_(int j) { return {VertexKind::W, {j}}; }
inline VertexName u_(int j) { return {VertexKind::U, {j}}; }
inline VertexName wp_(int s, int t) { return {VertexKind::WPrime, {std::min(s, t), std::max(s, t)}}; }

using NamedTriangle = std::array<VertexName, 3>;

/// A complex together with its vertex names.
struct NamedComplex {
  SimplicialComplex complex;
  std::vector<VertexName> names;  // id -> name, sorted

  VertexId id(const VertexName& name) const {
    auto it = std::lower_bound(names.begin(), names.end(), name);
    if (it == names.end() || *it != name) throw std::out_of_range("unknown vertex " + name.to_string());
    return static_cast<VertexId>(it - names.begin());
  }
  bool has(const VertexName& name) const { return std::binary_search(names.begin(), names.end(), name); }
  const VertexName& name(VertexId v) const { return names.at(v); }

  /// Triangles back in named form.
  std::vector<NamedTriangle> named_triangles() const {
    std::vector<NamedTriangle> out;
    for (std::size_t i = 0; i < complex.count(2); ++i) {
      auto f = complex.face(2, i);
      out.push_back({names[f[0]], names[f[1]], names[f[2]]});
    }
    return out;
  }
};

/// Closure of a list of named triangles.
inline NamedComplex assemble(const std::vector<NamedTriangle>& triangles) {
  std::set<VertexName> all;
  for (const auto& t : triangles) all.insert(t.begin(), t.end());
  NamedComplex out;
  out.names.assign(all.begin(), all.end());
  std::vector<Simplex> faces;
  faces.reserve(triangles.size());
  for (const auto& t : triangles) faces.push_back({out.id(t[0]), out.id(t[1]), out.id(t[2])});
  out.complex = SimplicialComplex::from_faces(out.names.size(), faces);
  return out;
}

/// m = 2^{n_1} + ... + 2^{n_k} with n_1 < ... < n_k; delta = -k mod 4.
struct BinaryDecomposition {
  std::uint64_t m = 0;
  std::vector<int> exponents;
  int k = 0;
  int nk = 0;
  int delta = 0;

  explicit BinaryDecomposition(std::uint64_t value) : m(value) {
    if (value < 2) throw std::invalid_argument("m must be at least 2");
    for (int b = 0; b < 64; ++b)
      if ((value >> b) & 1U) exponents.push_back(b);
    k = static_cast<int>(exponents.size());
    nk = exponents.back();
    delta = (4 - k % 4) % 4;
  }
};

// ---------------------------------------------------------------------------
// Expected counts. Rows are (|V|, |E|, |F|).

inline FVector expected_sphere_stage(int i) { return {{std::size_t(2 * i + 4), std::size_t(6 * i + 6), std::size_t(4 * i + 4)}}; }

inline FVector expected_telescope(int nk) {
  return {{std::size_t(12 * nk + 4), std::size_t(40 * nk + 4), std::size_t(28 * nk)}};
}

inline int delta_for(int k) { return (4 - k % 4) % 4; }

/// Y2 counts; for k >= 13 these are the tabulated half-integer formulas,
/// evaluated on doubled values.
inline FVector expected_punctured_sphere(int k) {
  const int d = delta_for(k);
  if (k <= 12) return {{std::size_t(6 * k + 2 * d + 2), std::size_t(17 * k + 6 * d), std::size_t(10 * k + 4 * d)}};
  // 2|V| = 13k + a, 2|E| = 37k + b, |F| = 11k + c
  static const int a[] = {-8, -3, 0, 5}, b[] = {-36, -21, -12, 3}, c[] = {-12, -7, -4, 1};
  return {{std::size_t((13 * k + a[d]) / 2), std::size_t((37 * k + b[d]) / 2), std::size_t(11 * k + c[d])}};
}

inline FVector expected_xm_counts(int k, int nk) {
  const int d = delta_for(k);
  if (k <= 12)
    return {{std::size_t(2 * k + 12 * nk + 6 + 2 * d), std::size_t(13 * k + 40 * nk + 4 + 6 * d),
             std::size_t(10 * k + 28 * nk + 4 * d)}};
  // 2|V| = 5k + 24nk + a, 2|E| = 29k + 80nk + b, |F| = 11k + 28nk + c
  static const int a[] = {0, 5, 8, 13}, b[] = {-28, -13, -4, 11}, c[] = {-12, -7, -4, 1};
  return {{std::size_t((5 * k + 24 * nk + a[d]) / 2), std::size_t((29 * k + 80 * nk + b[d]) / 2),
           std::size_t(11 * k + 28 * nk + c[d])}};
}

inline FVector expected_xm(std::uint64_t m) {
  BinaryDecomposition bd(m);
  return expected_xm_counts(bd.k, bd.nk);
}

// ---------------------------------------------------------------------------
// Sphere stages T_i.

/// Edge list of T_i on w_0 .. w_{2i+3}.
inline std::set<std::pair<int, int>> sphere_stage_edges(int i) {
  if (i < 0) throw std::invalid_argument("stage index must be nonnegative");
  std::set<std::pair<int, int>> e;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) e.insert({a, b});
  for (int s = 0; s < i; ++s) {
    e.erase({2 * s + 1, 2 * s + 3});
    for (auto [a, b] : {std::pair{2 * s, 2 * s + 4}, {2 * s + 1, 2 * s + 4}, {2 * s + 3, 2 * s + 4}, {2 * s + 1, 2 * s + 5},
                        {2 * s + 2, 2 * s + 5}, {2 * s + 3, 2 * s + 5}, {2 * s + 4, 2 * s + 5}})
      e.insert({a, b});
  }
  return e;
}

/// T_i: clique complex of the stage graph, capped at dimension 2 so that
/// T_0 is the tetrahedron boundary rather than the solid simplex. Vertex
/// w_j has id j.
inline NamedComplex build_sphere_stage_named(int i) {
  std::vector<Edge> edges;
  for (auto [a, b] : sphere_stage_edges(i)) edges.emplace_back(a, b);
  const std::size_t n = static_cast<std::size_t>(2 * i + 4);
  NamedComplex out;
  out.complex = clique_complex(Graph(n, std::move(edges)), 2);
  for (std::size_t j = 0; j < n; ++j) out.names.push_back(w_(static_cast<int>(j)));
  return out;
}

inline SimplicialComplex build_sphere_stage(int i) { return build_sphere_stage_named(i).complex; }

// ---------------------------------------------------------------------------
// Telescope Y1.

/// Triangles of the punctured projective plane between squares i and i+1.
inline std::vector<NamedTriangle> telescope_block(int i) {
  const auto a = v_(4 * i), b = v_(4 * i + 1), c = v_(4 * i + 2), d = v_(4 * i + 3);
  const auto A = v_(4 * i + 4), B = v_(4 * i + 5), C = v_(4 * i + 6), D = v_(4 * i + 7);
  std::array<VertexName, 8> p;
  for (int t = 0; t < 8; ++t) p[t] = vp_(8 * i + t);
  return {
      {a, b, p[0]},    {b, p[1], p[0]}, {p[1], A, p[0]}, {b, c, p[1]},    {p[1], c, p[2]}, {p[1], p[2], B},
      {p[1], B, A},    {c, d, p[2]},    {p[2], d, p[3]}, {p[2], p[3], B}, {p[3], d, a},    {p[3], a, p[4]},
      {p[3], p[4], C}, {p[3], C, B},    {p[4], a, b},    {p[4], b, p[5]}, {p[4], p[5], C}, {p[5], b, c},
      {p[5], c, p[6]}, {p[5], p[6], D}, {p[5], D, C},    {p[6], c, d},    {p[6], d, p[7]}, {p[6], p[7], D},
      {p[7], d, a},    {p[7], a, p[0]}, {p[7], p[0], A}, {p[7], A, D},
  };
}

inline NamedComplex build_telescope_named(int nk) {
  if (nk < 1) throw std::invalid_argument("telescope length must be at least 1");
  std::vector<NamedTriangle> tris;
  for (int i = 0; i < nk; ++i) {
    auto block = telescope_block(i);
    tris.insert(tris.end(), block.begin(), block.end());
  }
  return assemble(tris);
}

inline SimplicialComplex build_telescope(int nk) { return build_telescope_named(nk).complex; }

/// Oriented square cycle x0 -> x1 -> x2 -> x3 -> x0, written as
/// [x0,x1] + [x1,x2] + [x2,x3] - [x0,x3].
inline SparseColumn<BigInt> square_cycle(const NamedComplex& c, const std::array<VertexName, 4>& x) {
  std::array<VertexId, 4> id{};
  for (int t = 0; t < 4; ++t) id[t] = c.id(x[t]);
  return edge_chain(c.complex, {{{id[0], id[1]}, 1}, {{id[1], id[2]}, 1}, {{id[2], id[3]}, 1}, {{id[0], id[3]}, -1}});
}

inline std::array<VertexName, 4> gamma_square(int i) { return {v_(4 * i), v_(4 * i + 1), v_(4 * i + 2), v_(4 * i + 3)}; }
inline std::array<VertexName, 4> tau_square(int j) {
  return {u_(4 * j - 4), u_(4 * j - 3), u_(4 * j - 2), u_(4 * j - 1)};
}

// ---------------------------------------------------------------------------
// Punctured sphere Y2.

/// Faces of T_i in hole-assignment order: lexicographic, with the three
/// faces reserved for plain subdivision moved to the end.
inline std::vector<std::array<int, 3>> ordered_stage_faces(int i) {
  auto stage = build_sphere_stage(i);
  std::vector<std::array<int, 3>> faces;
  for (std::size_t f = 0; f < stage.count(2); ++f) {
    auto s = stage.face(2, f);
    faces.push_back({int(s[0]), int(s[1]), int(s[2])});
  }
  // [2i-1, 2i+2, 2i+3] does not exist for i = 0; [0, 2, 3] takes its place.
  const std::array<int, 3> second = i == 0 ? std::array<int, 3>{0, 2, 3} : std::array<int, 3>{2 * i - 1, 2 * i + 2, 2 * i + 3};
  const std::array<std::array<int, 3>, 3> tail = {
      std::array<int, 3>{2 * i, 2 * i + 1, 2 * i + 3}, second, std::array<int, 3>{2 * i + 1, 2 * i + 2, 2 * i + 3}};
  for (const auto& t : tail) {
    auto it = std::find(faces.begin(), faces.end(), t);
    if (it == faces.end()) throw std::logic_error("reserved face missing from sphere stage");
    faces.erase(it);
  }
  faces.insert(faces.end(), tail.begin(), tail.end());
  return faces;
}

/// Ten triangles filling face [w_r, w_s, w_t] around the square hole
/// u_{4j-4} .. u_{4j-1}, with u_{4j-4} and u_{4j-1} next to w_r and the
/// square running in the direction r -> s -> t. Every edge of the face is
/// subdivided.
inline std::vector<NamedTriangle> hole_triangles(int r, int s, int t, int j) {
  const auto wr = w_(r), ws = w_(s), wt = w_(t);
  const auto rs = wp_(r, s), rt = wp_(r, t), st = wp_(s, t);
  const auto q0 = u_(4 * j - 4), q1 = u_(4 * j - 3), q2 = u_(4 * j - 2), q3 = u_(4 * j - 1);
  return {{ws, st, q1}, {ws, q1, rs}, {rs, q1, q0}, {rs, q0, wr}, {wr, q0, q3},
          {rt, q3, wr}, {rt, q2, q3}, {wt, q2, rt}, {wt, st, q2}, {st, q1, q2}};
}

/// Four triangles of the barycentric-edge subdivision of [w_r, w_s, w_t].
inline std::vector<NamedTriangle> subdivided_triangles(int r, int s, int t) {
  const auto rs = wp_(r, s), rt = wp_(r, t), st = wp_(s, t);
  return {{w_(r), rs, rt}, {w_(s), rs, st}, {w_(t), rt, st}, {rs, rt, st}};
}

/// Coherent orientation of a closed oriented surface given by sorted
/// triples: +1 where the order r < s < t agrees with the orientation of the
/// first face, -1 otherwise.
inline std::vector<int> coherent_orientation(const std::vector<std::array<int, 3>>& faces) {
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_edge;
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int e = 0; e < 3; ++e) {
      int a = faces[f][e], b = faces[f][(e + 1) % 3];
      by_edge[std::minmax(a, b)].push_back(f);
    }
  // Direction in which face f traverses edge {a, b} with sign +1.
  auto direction = [&](std::size_t f, int a, int b) {
    for (int e = 0; e < 3; ++e)
      if (faces[f][e] == a && faces[f][(e + 1) % 3] == b) return 1;
    return -1;
  };
  std::vector<int> sign(faces.size(), 0);
  std::vector<std::size_t> queue{0};
  if (!faces.empty()) sign[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t f = queue[head];
    for (int e = 0; e < 3; ++e) {
      const int a = faces[f][e], b = faces[f][(e + 1) % 3];
      for (std::size_t g : by_edge[std::minmax(a, b)]) {
        if (g == f) continue;
        // Neighbours must traverse the shared edge in opposite directions.
        const int want = -sign[f] * direction(f, a, b) * direction(g, a, b);
        if (sign[g] == 0) {
          sign[g] = want;
          queue.push_back(g);
        } else if (sign[g] != want) {
          throw std::logic_error("surface is not orientable");
        }
      }
    }
  }
  return sign;
}

/// T~: the stage T_i with i = (k + delta)/4 - 1 and k holes. Each hole
/// square u_{4j-4} -> ... -> u_{4j-1} runs along the coherent orientation of
/// T_i, so the hole boundaries sum to zero.
inline std::vector<NamedTriangle> holed_sphere_triangles(int k) {
  if (k < 1) throw std::invalid_argument("number of holes must be at least 1");
  const int i = (k + delta_for(k)) / 4 - 1;
  auto faces = ordered_stage_faces(i);
  const auto sign = coherent_orientation(faces);
  std::vector<NamedTriangle> tris;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto [r, s, t] = faces[f];
    if (sign[f] < 0) std::swap(s, t);
    auto add = static_cast<int>(f) < k ? hole_triangles(r, s, t, static_cast<int>(f) + 1) : subdivided_triangles(r, s, t);
    tris.insert(tris.end(), add.begin(), add.end());
  }
  if (k == 1) {
    // All three plainly subdivided faces meet at w_3, whose link would be the
    // empty triangle w'_{0,3} w'_{1,3} w'_{2,3}. Flipping the edge
    // [w'_{0,3}, w'_{1,3}] gives w_3 degree 4 and keeps every count.
    auto drop = [&](NamedTriangle t) {
      std::sort(t.begin(), t.end());
      auto it = std::find_if(tris.begin(), tris.end(), [&](NamedTriangle x) {
        std::sort(x.begin(), x.end());
        return x == t;
      });
      if (it == tris.end()) throw std::logic_error("flip triangle missing");
      tris.erase(it);
    };
    drop({w_(3), wp_(0, 3), wp_(1, 3)});
    drop({wp_(0, 1), wp_(0, 3), wp_(1, 3)});
    tris.push_back({w_(3), wp_(0, 1), wp_(0, 3)});
    tris.push_back({w_(3), wp_(0, 1), wp_(1, 3)});
  }
  return tris;
}

inline NamedComplex build_holed_sphere_named(int k) { return assemble(holed_sphere_triangles(k)); }

namespace detail {

/// Replaces w_j (degree 14, link a 14-cycle) by w_{j,1}, w_{j,2}, each coned
/// over half of the link. The halves are cut at the lexicographically least
/// pair of w' vertices sitting opposite each other on the cycle.
inline std::vector<NamedTriangle> split_vertex(const std::vector<NamedTriangle>& tris, const VertexName& center) {
  std::map<VertexName, std::vector<VertexName>> link;
  std::vector<NamedTriangle> kept;
  for (const auto& t : tris) {
    auto pos = std::find(t.begin(), t.end(), center);
    if (pos == t.end()) {
      kept.push_back(t);
      continue;
    }
    std::vector<VertexName> other;
    for (const auto& x : t)
      if (x != center) other.push_back(x);
    link[other[0]].push_back(other[1]);
    link[other[1]].push_back(other[0]);
  }
  if (link.size() != 14) throw ConstructionError("vertex " + center.to_string() + " does not have degree 14");
  for (const auto& [x, nb] : link)
    if (nb.size() != 2) throw ConstructionError("link of " + center.to_string() + " is not a cycle");

  // Walk the link once to get cyclic positions.
  std::vector<VertexName> cycle{link.begin()->first};
  VertexName prev = cycle[0];
  VertexName cur = link.begin()->second[0];
  while (cur != cycle[0]) {
    cycle.push_back(cur);
    const auto& nb = link[cur];
    VertexName next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != 14) throw ConstructionError("link of " + center.to_string() + " is not a single cycle");

  std::optional<std::pair<VertexName, VertexName>> cut;
  for (std::size_t x = 0; x < 14; ++x) {
    const auto& a = cycle[x];
    const auto& c = cycle[(x + 7) % 14];
    if (a.kind != VertexKind::WPrime || c.kind != VertexKind::WPrime) continue;
    std::pair<VertexName, VertexName> pair = std::minmax(a, c);
    if (!cut || pair < *cut) cut = pair;
  }
  if (!cut) throw ConstructionError("no opposite w' pair around " + center.to_string());

  // Start at the smaller endpoint and step toward its smaller neighbour.
  const auto& [a, c] = *cut;
  const std::size_t start = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), a) - cycle.begin());
  const auto& left = cycle[(start + 13) % 14];
  const auto& right = cycle[(start + 1) % 14];
  const int step = right < left ? 1 : 13;
  std::vector<VertexName> walk;
  for (int s = 0; s <= 14; ++s) walk.push_back(cycle[(start + static_cast<std::size_t>(s * step)) % 14]);

  VertexName j1{VertexKind::W, {center.idx[0], 1}}, j2{VertexKind::W, {center.idx[0], 2}};
  for (int s = 0; s < 7; ++s) kept.push_back({j1, walk[s], walk[s + 1]});
  for (int s = 7; s < 14; ++s) kept.push_back({j2, walk[s], walk[s + 1]});
  kept.push_back({j1, j2, a});
  kept.push_back({j1, j2, c});
  return kept;
}

}  // namespace detail

/// Y2: T~ with every w vertex of degree 14 split in two.
inline NamedComplex build_punctured_sphere_named(int k) {
  auto tris = holed_sphere_triangles(k);
  auto holed = assemble(tris);
  const Graph g = holed.complex.one_skeleton();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& name = holed.name(v);
    if (name.kind != VertexKind::W || g.degree(v) <= 12) continue;
    tris = detail::split_vertex(tris, name);
  }
  return assemble(tris);
}

inline SimplicialComplex build_punctured_sphere(int k) { return build_punctured_sphere_named(k).complex; }

// ---------------------------------------------------------------------------
// X_m and friends.

/// Y1 and Y2 glued along u_{4j-4+q} = v_{4 n_j + q}.
inline NamedComplex build_xm_named(std::uint64_t m) {
  BinaryDecomposition bd(m);
  auto tris = build_telescope_named(bd.nk).named_triangles();
  auto y2 = build_punctured_sphere_named(bd.k).named_triangles();
  for (auto& t : y2) {
    for (auto& x : t) {
      if (x.kind != VertexKind::U) continue;
      const int j = x.idx[0] / 4, q = x.idx[0] % 4;
      x = v_(4 * bd.exponents[static_cast<std::size_t>(j)] + q);
    }
  }
  tris.insert(tris.end(), y2.begin(), y2.end());
  return assemble(tris);
}

struct CertificateCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Self-check record of a built complex.
struct ConstructionCertificate {
  std::string label;
  FVector fvector;
  FVector expected_fvector;
  std::size_t maxdeg = 0;
  std::size_t maxdeg_bound = 0;
  HomologyGroup h1;
  HomologyGroup expected_h1;
  bool is_flag = false;
  std::vector<CertificateCheck> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
  }
  std::string failures() const {
    std::string s;
    for (const auto& c : checks)
      if (!c.pass) s += (s.empty() ? "" : "; ") + c.name + ": " + c.detail;
    return s;
  }
};

inline std::string fvector_string(const FVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.counts.size(); ++i) s += (i ? "," : "") + std::to_string(f.counts[i]);
  return s + ")";
}

/// Runs flag, closure, f-vector, degree and H_1 checks.
inline ConstructionCertificate certify(std::string label, const SimplicialComplex& c, const FVector& expected_f,
                                       std::size_t maxdeg_bound, const HomologyGroup& expected_h1) {
  ConstructionCertificate cert;
  cert.label = std::move(label);
  cert.fvector = c.f_vector();
  cert.expected_fvector = expected_f;
  cert.maxdeg = max_degree(c);
  cert.maxdeg_bound = maxdeg_bound;
  cert.h1 = homology(c, 1);
  cert.expected_h1 = expected_h1;
  cert.is_flag = is_flag(c);
  cert.checks.push_back({"flag", cert.is_flag, cert.is_flag ? "" : "not the clique complex of its 1-skeleton"});
  const bool closed = c.is_downward_closed();
  cert.checks.push_back({"downward_closed", closed, closed ? "" : "missing a boundary face"});
  const bool fv_ok = cert.fvector == expected_f;
  cert.checks.push_back({"fvector", fv_ok, fvector_string(cert.fvector) + " vs " + fvector_string(expected_f)});
  const bool deg_ok = cert.maxdeg <= maxdeg_bound;
  cert.checks.push_back({"maxdeg", deg_ok, std::to_string(cert.maxdeg) + " <= " + std::to_string(maxdeg_bound)});
  const bool h1_ok = cert.h1 == expected_h1;
  cert.checks.push_back({"h1", h1_ok, cert.h1.to_string() + " vs " + expected_h1.to_string()});
  return cert;
}

inline HomologyGroup expected_xm_h1(std::uint64_t m) {
  BinaryDecomposition bd(m);
  return {static_cast<std::size_t>(bd.k - 1), {BigInt(static_cast<unsigned long>(m))}};
}

/// X_m with its certificate. Throws ConstructionError if any check fails.
inline std::pair<SimplicialComplex, ConstructionCertificate> build_xm(std::uint64_t m) {
  auto named = build_xm_named(m);
  auto cert = certify("X_" + std::to_string(m), named.complex, expected_xm(m), 12, expected_xm_h1(m));
  if (!cert.passed()) throw ConstructionError(cert.label + " failed: " + cert.failures());
  return {std::move(named.complex), std::move(cert)};
}

/// Disjoint union of X_{m_1}, ..., X_{m_r} for a divisibility chain
/// m_1 | m_2 | ... | m_r with every m_i >= 2.
inline SimplicialComplex build_group_complex(const std::vector<std::uint64_t>& factors) {
  if (factors.empty()) throw std::invalid_argument("need at least one invariant factor");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 2) throw std::invalid_argument("invariant factors must be at least 2");
    if (i > 0 && factors[i] % factors[i - 1] != 0) throw std::invalid_argument("invariant factors must form a divisibility chain");
  }
  SimplicialComplex out = build_xm(factors[0]).first;
  for (std::size_t i = 1; i < factors.size(); ++i) out = disjoint_union(out, build_xm(factors[i]).first);
  return out;
}

/// The 11-vertex, 30-edge minimal flag triangulation of RP^2. Vertex v_i has id i-1.
inline NamedComplex rp2_flag_named() {
  static const int tris[20][3] = {{3, 2, 9}, {3, 10, 9}, {9, 2, 1},  {9, 10, 11}, {9, 1, 8},  {9, 11, 8}, {2, 6, 1},
                                  {10, 5, 11}, {6, 1, 5},  {5, 11, 6}, {1, 5, 4},   {1, 8, 4},  {11, 6, 7}, {11, 8, 7},
                                  {8, 7, 4}, {5, 10, 4}, {6, 2, 7},  {10, 4, 3},  {2, 7, 3}, {3, 4, 7}};
  std::vector<NamedTriangle> named;
  for (const auto& t : tris) named.push_back({v_(t[0]), v_(t[1]), v_(t[2])});
  return assemble(named);
}

inline SimplicialComplex rp2_flag() { return rp2_flag_named().complex; }

}  // namespace torflag
