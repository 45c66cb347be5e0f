// torflag: command-line front end for the constructions, homology, Betti
// tables, densities, searches and Monte Carlo experiments.
//
// Exit codes: 0 success, 1 verify/reproduce failure, 2 usage or input error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torflag/torflag.hpp"

using namespace torflag;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::string format = "text";
};

unsigned thread_count(const Globals& g) { return g.threads == 0 ? default_threads() : g.threads; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": " + s);
  }
}

/// Builtin name or JSON file. Builtins: rp2, xm:<m>, group:<m1,m2,..>,
/// telescope:<nk>, sphere:<i>, holed:<k>, punctured:<k>.
SimplicialComplex load_complex(const std::string& spec) {
  if (spec == "rp2") return rp2_flag();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
    if (kind == "xm") return build_xm(parse_u64(arg, "m")).first;
    if (kind == "group") {
      std::vector<std::uint64_t> factors;
      for (const auto& f : split(arg, ',')) factors.push_back(parse_u64(f, "factor"));
      return build_group_complex(factors);
    }
    const int x = static_cast<int>(parse_u64(arg, kind + " index"));
    if (kind == "telescope") return build_telescope(x);
    if (kind == "sphere") return build_sphere_stage(x);
    if (kind == "holed") return build_holed_sphere_named(x).complex;
    if (kind == "punctured") return build_punctured_sphere(x);
  }
  return complex_from_json(read_json_file(spec));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else write_text_file(out_path, text);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string homology_text(const HomologyProfile& h) {
  std::ostringstream os;
  for (int d = h.min_dim(); d <= h.max_dim(); ++d) os << (h.reduced() ? "H~_" : "H_") << d << " = " << h[d].to_string() << '\n';
  return os.str();
}

std::string report_text(const ReproduceReport& r, bool verbose) {
  std::ostringstream os;
  std::size_t bad = 0;
  for (const auto& c : r.cells) {
    if (!c.pass) ++bad;
    if (!c.pass || verbose)
      os << (c.pass ? "  ok   " : "  FAIL ") << c.row << " | " << c.column << " | expected " << c.expected << " | got " << c.actual
         << '\n';
  }
  os << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cells.size() - bad << "/" << r.cells.size() << " cells)\n";
  return os.str();
}

Json report_json(const ReproduceReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells)
    cells.push_back({{"row", c.row}, {"column", c.column}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return Json{{"id", r.id}, {"pass", r.passed()}, {"cells", std::move(cells)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string witness_text(const std::vector<VertexId>& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion in flag complexes: constructions, homology, Betti tables and random-flag experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master seed for sampling and experiments");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));

  int status = 0;

  // construct
  auto* construct = app.add_subcommand("construct", "Build a complex: summary as text, faces as JSON");
  std::string construct_name, construct_out;
  construct->add_option("name", construct_name, "rp2 | xm:<m> | group:<m1,m2,..> | telescope:<nk> | sphere:<i> | holed:<k> | punctured:<k>")
      ->required();
  construct->add_option("-o,--output", construct_out, "Write to file instead of stdout");
  construct->callback([&] {
    const auto c = load_complex(construct_name);
    if (g.format == "text") {
      std::ostringstream os;
      os << "f-vector " << fvector_string(c.f_vector()) << "\nmaxdeg " << max_degree(c) << "\nflag " << (is_flag(c) ? "yes" : "no")
         << '\n';
      if (!construct_out.empty()) write_text_file(construct_out, dump(to_json(c)));
      std::cout << os.str();
    } else {
      emit(dump(to_json(c)), construct_out);
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "Certify X_m for every m in a range");
  std::uint64_t m_min = 2, m_max = 64;
  verify->add_option("--m-min", m_min, "Smallest m")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  verify->add_option("--m-max", m_max, "Largest m")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
  verify->callback([&] {
    if (m_min > m_max) throw CLI::ValidationError("--m-min", "must not exceed --m-max");
    const auto certs = verify_xm_range(m_min, m_max, thread_count(g));
    std::size_t passed = 0;
    for (const auto& c : certs) passed += c.passed();
    if (g.format == "json") {
      Json arr = Json::array();
      for (const auto& c : certs) arr.push_back(to_json(c));
      std::cout << dump(Json{{"passed", passed}, {"total", certs.size()}, {"certificates", std::move(arr)}});
    } else if (g.format == "csv") {
      std::cout << "label,pass,fvector,expected_fvector,maxdeg,h1,expected_h1,flag\n";
      for (const auto& c : certs)
        std::cout << c.label << ',' << (c.passed() ? "pass" : "fail") << ',' << csv_field(fvector_string(c.fvector)) << ','
                  << csv_field(fvector_string(c.expected_fvector)) << ',' << c.maxdeg << ',' << csv_field(c.h1.to_string()) << ','
                  << csv_field(c.expected_h1.to_string()) << ',' << (c.is_flag ? "yes" : "no") << '\n';
    } else {
      for (const auto& c : certs) {
        std::cout << c.label << ": " << (c.passed() ? "pass" : "FAIL") << "  f=" << fvector_string(c.fvector) << " maxdeg=" << c.maxdeg
                  << " H1=" << c.h1.to_string() << '\n';
        for (const auto& f : c.failures()) std::cout << "    " << f << '\n';
      }
      std::cout << passed << "/" << certs.size() << " passed\n";
    }
    if (passed != certs.size()) status = 1;
  });

  // homology
  auto* homology_cmd = app.add_subcommand("homology", "Integer homology, or field Betti numbers with --char");
  std::string homology_in;
  bool homology_reduced = false;
  std::uint64_t homology_char = 0;
  bool homology_char_set = false;
  homology_cmd->add_option("complex", homology_in, "Complex file or builtin name")->required();
  homology_cmd->add_flag("--reduced", homology_reduced, "Reduced homology");
  auto* char_opt = homology_cmd->add_option("--char", homology_char, "Field characteristic (0 or a prime)");
  homology_cmd->callback([&] {
    homology_char_set = char_opt->count() > 0;
    const auto c = load_complex(homology_in);
    if (homology_char_set) {
      const Characteristic ch(homology_char);
      Json dims = Json::object();
      std::ostringstream os;
      for (int d = homology_reduced ? -1 : 0; d <= std::max(c.dimension(), 0); ++d) {
        const auto v = homology_dim_mod(c, d, ch, homology_reduced);
        dims[std::to_string(d)] = v;
        os << "dim " << (homology_reduced ? "H~_" : "H_") << d << " = " << v << '\n';
      }
      std::cout << (g.format == "json" ? dump(Json{{"char", homology_char}, {"reduced", homology_reduced}, {"dims", dims}}) : os.str());
      return;
    }
    const auto h = integer_homology(c, homology_reduced);
    if (g.format == "json") {
      Json groups = Json::object();
      for (int d = h.min_dim(); d <= h.max_dim(); ++d) groups[std::to_string(d)] = to_json(h[d]);
      std::cout << dump(Json{{"reduced", homology_reduced}, {"groups", groups}});
    } else {
      std::cout << homology_text(h);
    }
  });

  // betti
  auto* betti = app.add_subcommand("betti", "Graded Betti table of the Stanley-Reisner ring via Hochster's formula");
  std::string betti_in;
  std::uint64_t betti_char = 0;
  HochsterOptions betti_opt;
  betti->add_option("complex", betti_in, "Complex file or builtin name")->required();
  betti->add_option("--char", betti_char, "Field characteristic (0 or a prime)");
  betti->add_option("--max-vertices", betti_opt.guard, "Refuse complexes with more vertices (at most 64)");
  betti->add_option("--min-size", betti_opt.min_size, "Smallest |alpha| to scan");
  betti->add_option("--max-size", betti_opt.max_size, "Largest |alpha| to scan");
  betti->callback([&] {
    const auto c = load_complex(betti_in);
    betti_opt.threads = thread_count(g);
    const auto t = betti_table(c, Characteristic(betti_char), betti_opt);
    if (g.format == "json") std::cout << dump(to_json(t));
    else if (g.format == "csv") {
      std::cout << "i,j,beta\n";
      for (const auto& [ij, v] : t.entries) std::cout << ij.first << ',' << ij.second << ',' << v << '\n';
    } else {
      std::cout << t.render();
      if (t.partial) std::cout << "(partial: some subset sizes skipped)\n";
    }
  });

  // torsion
  auto* torsion = app.add_subcommand("torsion", "Primes appearing as torsion in induced subcomplexes");
  std::string torsion_in;
  HochsterOptions torsion_opt;
  torsion->add_option("complex", torsion_in, "Complex file or builtin name")->required();
  torsion->add_option("--max-vertices", torsion_opt.guard, "Refuse complexes with more vertices (at most 64)");
  torsion->add_option("--min-size", torsion_opt.min_size, "Smallest |alpha| to scan");
  torsion->add_option("--max-size", torsion_opt.max_size, "Largest |alpha| to scan");
  torsion->callback([&] {
    const auto c = load_complex(torsion_in);
    torsion_opt.threads = thread_count(g);
    const auto r = torsion_primes(c, torsion_opt);
    if (g.format == "json") {
      std::cout << dump(to_json(r));
      return;
    }
    if (g.format == "csv") std::cout << "prime,dimension,witness\n";
    for (const auto& [p, w] : r.witness) {
      if (g.format == "csv") std::cout << p << ',' << w.dimension << ',' << csv_field(witness_text(w.alpha)) << '\n';
      else std::cout << p << "-torsion in H_" << w.dimension << " on " << witness_text(w.alpha) << '\n';
    }
    if (g.format == "text") {
      if (r.primes.empty()) std::cout << "no torsion\n";
      std::cout << r.subsets_scanned << " subsets scanned" << (r.complete ? "" : " (partial)") << '\n';
    }
  });

  // density
  auto* density = app.add_subcommand("density", "Essential density m(G) of a graph or 1-skeleton");
  std::string density_in, density_mode = "maxflow";
  bool per_size = false;
  density->add_option("graph", density_in, "Graph/complex file or builtin name")->required();
  density->add_option("--mode", density_mode, "Algorithm")->check(CLI::IsMember({"exhaustive", "maxflow"}));
  density->add_flag("--per-size", per_size, "Also list max edges per subgraph size (exhaustive)");
  density->callback([&] {
    const Graph gr = load_complex(density_in).one_skeleton();
    const auto mode = density_mode == "exhaustive" || per_size ? DensityMode::Exhaustive : DensityMode::MaxFlow;
    const auto r = essential_density(gr, mode);
    const auto [lo, hi] = density_bounds(gr);
    if (g.format == "json") {
      auto j = to_json(r);
      j["bounds"] = {lo.get_str(), hi.get_str()};
      std::cout << dump(j);
    } else if (g.format == "csv") {
      std::cout << "size,max_edges,ratio,witness\n";
      for (const auto& s : r.per_size)
        std::cout << s.size << ',' << s.max_edges << ',' << detail::ratio(s.max_edges, s.size).get_str() << ','
                  << csv_field(witness_text(s.witness)) << '\n';
    } else {
      std::cout << "m(G) = " << r.density.get_str() << "\nwitness " << witness_text(r.witness) << "\nstrictly balanced "
                << (r.strictly_balanced ? "yes" : "no") << "\nbounds [" << lo.get_str() << ", " << hi.get_str() << "]\n";
      if (per_size)
        for (const auto& s : r.per_size)
          std::cout << "  |V(H)|=" << s.size << " max|E(H)|=" << s.max_edges << " " << witness_text(s.witness) << '\n';
    }
  });

  // search
  auto* search = app.add_subcommand("search", "Look for a pattern as an induced subgraph of a host");
  std::string pattern_in, host_in;
  std::uint64_t budget = kDefaultBudget;
  bool subgraph = false;
  search->add_option("pattern", pattern_in, "Pattern graph/complex")->required();
  search->add_option("host", host_in, "Host graph/complex")->required();
  search->add_option("--budget", budget, "Search node limit");
  search->add_flag("--subgraph", subgraph, "Plain (non-induced) containment");
  search->callback([&] {
    const Graph pattern = load_complex(pattern_in).one_skeleton();
    const Graph host = load_complex(host_in).one_skeleton();
    const auto r = contains_induced(pattern, host, budget, !subgraph);
    if (g.format == "json") {
      Json j{{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}};
      if (r.embedding) j["embedding"] = r.embedding->map;
      std::cout << dump(j);
    } else {
      std::cout << to_string(r.outcome);
      if (r.embedding) std::cout << ' ' << witness_text(r.embedding->map);
      std::cout << "\nnodes " << r.nodes << '\n';
    }
  });

  // sample
  auto* sample = app.add_subcommand("sample", "Sample the random flag complex Delta(n, p)");
  std::size_t sample_n = 0;
  std::string sample_p, sample_out;
  int sample_dim = 2;
  sample->add_option("-n", sample_n, "Number of vertices")->required();
  sample->add_option("-p", sample_p, "Edge probability as an exact decimal or fraction")->required();
  sample->add_option("--max-dim", sample_dim, "Largest face dimension kept");
  sample->add_option("-o,--output", sample_out, "Write to file instead of stdout");
  sample->callback([&] {
    const FlagModelParams params{sample_n, Probability::parse(sample_p), g.seed, sample_dim};
    const auto c = sample_flag_complex(params);
    if (g.format == "text") {
      if (!sample_out.empty()) write_text_file(sample_out, dump(to_json(c)));
      std::cout << "f-vector " << fvector_string(c.f_vector()) << '\n';
    } else {
      emit(dump(to_json(c)), sample_out);
    }
  });

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo frequency of induced patterns or torsion in Delta(n, p)");
  ExperimentConfig cfg;
  std::string n_list, p_list, mode = "detect-pattern", plant = "0", exp_out, plot_out;
  experiment->add_option("--pattern", cfg.pattern, "rp2 | xm:<m> | graph/complex file");
  experiment->add_option("--n", n_list, "Comma-separated vertex counts")->required();
  experiment->add_option("--p", p_list, "Comma-separated exact probabilities")->required();
  experiment->add_option("--trials", cfg.trials, "Trials per grid point")->check(CLI::PositiveNumber);
  experiment->add_option("--budget", cfg.budget, "Search node limit per trial");
  experiment->add_option("--mode", mode, "Event measured")->check(CLI::IsMember({"detect-pattern", "detect-torsion"}));
  experiment->add_flag("--subgraph", cfg.subgraph, "Plain containment instead of induced");
  experiment->add_option("--plant", plant, "Probability of planting a copy of the pattern in a trial");
  experiment->add_option("--max-dim", cfg.max_dim, "Largest face dimension of Delta(n, p)");
  experiment->add_option("--torsion-guard", cfg.torsion_guard, "Largest n for the exhaustive torsion scan");
  experiment->add_option("--torsion-cap", cfg.torsion_cap, "Largest |alpha| in the torsion scan");
  experiment->add_flag("--timings", cfg.timings, "Record per-trial wall time (JSON only)");
  experiment->add_option("-o,--output", exp_out, "Write the table to a file instead of stdout");
  experiment->add_option("--plot", plot_out, "Also write gnuplot data to this file");
  experiment->callback([&] {
    for (const auto& n : split(n_list, ',')) cfg.n_values.push_back(parse_u64(n, "n"));
    for (const auto& p : split(p_list, ',')) cfg.p_values.push_back(Probability::parse(p));
    cfg.plant = Probability::parse(plant);
    cfg.mode = mode == "detect-torsion" ? ExperimentMode::DetectTorsion : ExperimentMode::DetectPattern;
    cfg.seed = g.seed;
    cfg.threads = thread_count(g);
    const auto r = run_threshold_experiment(cfg);
    if (g.format == "json") emit(dump(experiment_json(cfg, r)), exp_out);
    else emit(experiment_csv(r), exp_out);
    if (!plot_out.empty()) write_text_file(plot_out, experiment_plot_data(r));
  });

  // reproduce
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute a reference table and diff it cell by cell");
  std::string table_id;
  bool verbose = false;
  std::vector<std::string> choices = reproduce_ids();
  choices.push_back("all");
  reproduce_cmd->add_option("table", table_id, "T1 | T2 | T3 | T4 | T5 | counts | lemma51 | all")->required()->check(CLI::IsMember(choices));
  reproduce_cmd->add_flag("-v,--verbose", verbose, "List passing cells too");
  reproduce_cmd->callback([&] {
    std::vector<std::string> ids = table_id == "all" ? reproduce_ids() : std::vector<std::string>{table_id};
    Json all = Json::array();
    if (g.format == "csv") std::cout << "table,row,column,expected,actual,pass\n";
    for (const auto& id : ids) {
      const auto r = reproduce(id, thread_count(g));
      if (!r.passed()) status = 1;
      if (g.format == "json") all.push_back(report_json(r));
      else if (g.format == "csv")
        for (const auto& c : r.cells)
          std::cout << r.id << ',' << csv_field(c.row) << ',' << csv_field(c.column) << ',' << csv_field(c.expected) << ','
                    << csv_field(c.actual) << ',' << (c.pass ? "pass" : "fail") << '\n';
      else std::cout << report_text(r, verbose);
    }
    if (g.format == "json") std::cout << dump(ids.size() == 1 ? all[0] : all);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
