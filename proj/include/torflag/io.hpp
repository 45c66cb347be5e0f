#pragma once

// Canonical JSON for complexes and graphs:
//   {"n": <int>, "maximal_faces": [[v0, v1, ...], ...]}
// with strictly increasing faces in lexicographic order. A graph is the same
// object with faces of size at most 2 (isolated vertices as singletons).
// Identical objects serialise to identical bytes.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "torflag/construction.hpp"
#include "torflag/hochster.hpp"

namespace torflag {

using Json = nlohmann::json;

inline Json to_json(const SimplicialComplex& c) {
  Json faces = Json::array();
  for (const auto& f : c.maximal_faces()) faces.push_back(f);
  return Json{{"n", c.num_vertices()}, {"maximal_faces", std::move(faces)}};
}

inline Json to_json(const Graph& g) {
  std::vector<Simplex> faces;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) faces.push_back({v});
  for (auto [u, v] : g.edges()) faces.push_back({u, v});
  std::sort(faces.begin(), faces.end());
  Json arr = Json::array();
  for (const auto& f : faces) arr.push_back(f);
  return Json{{"n", g.num_vertices()}, {"maximal_faces", std::move(arr)}};
}

inline SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("maximal_faces"))
    throw std::invalid_argument("complex JSON needs fields \"n\" and \"maximal_faces\"");
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Simplex> faces;
  for (const auto& f : j.at("maximal_faces")) faces.push_back(f.get<Simplex>());
  return SimplicialComplex::from_faces(n, faces);
}

/// A graph file, or the 1-skeleton of any complex file.
inline Graph graph_from_json(const Json& j) { return complex_from_json(j).one_skeleton(); }

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline Json to_json(const FVector& f) { return f.counts; }

inline Json to_json(const HomologyGroup& h) {
  Json t = Json::array();
  for (const auto& x : h.torsion) t.push_back(x.get_str());
  return Json{{"rank", h.free_rank}, {"torsion", std::move(t)}};
}

inline Json to_json(const ConstructionCertificate& c) {
  Json checks = Json::array();
  for (const auto& ch : c.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  return Json{{"label", c.label},
              {"fvector", to_json(c.fvector)},
              {"expected_fvector", to_json(c.expected_fvector)},
              {"maxdeg", c.maxdeg},
              {"maxdeg_bound", c.maxdeg_bound},
              {"h1", to_json(c.h1)},
              {"expected_h1", to_json(c.expected_h1)},
              {"is_flag", c.is_flag},
              {"checks", std::move(checks)},
              {"pass", c.passed()}};
}

inline Json to_json(const BettiTable& t) {
  Json e = Json::array();
  for (const auto& [ij, v] : t.entries) e.push_back({ij.first, ij.second, v});
  return Json{{"char", t.characteristic.value()}, {"partial", t.partial}, {"entries", std::move(e)}};
}

inline Json to_json(const TorsionReport& r) {
  Json w = Json::object();
  for (const auto& [p, wit] : r.witness) w[std::to_string(p)] = {{"alpha", wit.alpha}, {"dimension", wit.dimension}};
  return Json{{"primes", r.primes}, {"witness", std::move(w)}, {"complete", r.complete}, {"subsets_scanned", r.subsets_scanned}};
}

inline Json to_json(const DensityReport& r) {
  Json j{{"density", r.density.get_str()}, {"witness", r.witness}, {"strictly_balanced", r.strictly_balanced}};
  if (!r.per_size.empty()) {
    Json rows = Json::array();
    for (const auto& s : r.per_size) rows.push_back({{"size", s.size}, {"max_edges", s.max_edges}, {"witness", s.witness}});
    j["per_size"] = std::move(rows);
  }
  return j;
}

}  // namespace torflag
