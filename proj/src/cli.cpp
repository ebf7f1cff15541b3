#include "uplus/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "uplus/errors.hpp"
#include "uplus/property_suite.hpp"
#include "uplus/serialize.hpp"

namespace uplus::cli {

namespace {

enum class Format { Json, Text };

struct RunConfig {
  unsigned n = 2;
  Format format = Format::Json;
  std::size_t cap = kDefaultOrbitCap;
  std::size_t max_degree = 5;
  std::size_t budget = ScanLimits{}.max_component_dim;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_report_text(std::ostream& out, const GenerationReport& r) {
  out << "k=" << r.k << " component_dim=" << r.component_dim << " span_rank=" << r.span_rank
      << " generated=" << bool_text(r.generated);
  if (r.witness) out << " witness=" << r.witness->rep().str() << " witness_invariant=" << rational_string(r.witness_invariant);
  out << '\n';
}

std::vector<IrrPermutation> parse_gens(const std::vector<std::string>& names) {
  std::vector<IrrPermutation> gens;
  for (const auto& name : names) {
    try {
      gens.push_back(IrrPermutation::by_name(name));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return gens;
}

int cmd_fuse(const RunConfig& cfg, const std::string& xs, const std::string& ys, bool with_dim, std::ostream& out) {
  const Word x = Word::parse(xs);
  const Word y = Word::parse(ys);
  const FusionElement f = fuse(x, y);
  bool holds = true;
  Json check = Json::object();
  if (with_dim) {
    DimensionTable table(cfg.n);
    const Integer lhs = table.dim(x) * table.dim(y);
    const Integer rhs = table.dim(f);
    holds = lhs == rhs;
    check["n"] = cfg.n;
    check["dim_product"] = lhs.str();
    check["dim_sum"] = rhs.str();
    check["holds"] = holds;
  }
  if (cfg.format == Format::Json) {
    if (with_dim) {
      Json j = Json::object();
      j["product"] = to_json(f);
      j["dimension_check"] = std::move(check);
      emit(out, j);
    } else {
      out << to_json(f).dump() << '\n';
    }
  } else {
    bool first = true;
    out << x.str() << " (x) " << y.str() << " = ";
    for (const auto& [w, c] : f) {
      out << (first ? "" : " + ") << (c == 1 ? "" : c.str() + "*") << w.str();
      first = false;
    }
    out << '\n';
    if (with_dim)
      out << "dim check (n=" << cfg.n << "): " << check["dim_product"].get<std::string>() << " = "
          << check["dim_sum"].get<std::string>() << " " << (holds ? "ok" : "FAILED") << '\n';
  }
  return holds ? kSuccess : kContradiction;
}

int cmd_check_fingen(const RunConfig& cfg, std::size_t k, std::ostream& out) {
  check_budget(k, ScanLimits{cfg.budget});
  const GenerationReport r = degree_generated(k);
  if (cfg.format == Format::Json)
    emit(out, to_json(r));
  else
    print_report_text(out, r);
  return r.generated ? kContradiction : kSuccess;
}

int cmd_scan(const RunConfig& cfg, std::size_t kmax, std::ostream& out) {
  const auto reports = finite_generation_scan(kmax, ScanLimits{cfg.budget});
  bool contradicted = false;
  Json j = Json::array();
  for (const auto& r : reports) {
    contradicted = contradicted || r.generated;
    if (cfg.format == Format::Json)
      j.push_back(to_json(r));
    else
      print_report_text(out, r);
  }
  if (cfg.format == Format::Json) emit(out, j);
  return contradicted ? kContradiction : kSuccess;
}

int cmd_graph(const RunConfig& cfg, std::size_t k, bool dot, bool edges, std::ostream& out) {
  check_budget(k, ScanLimits{cfg.budget});
  const HypercubeGraph g = build_graph(k);
  const bool full_search = k <= 5;
  const bool hypercube = full_search ? verify_hypercube_iso(g) : hypercube_invariants_hold(g.graph(), k);
  if (dot) {
    out << g.to_dot();
  } else if (edges) {
    out << g.edge_list();
  } else if (cfg.format == Format::Json) {
    Json j = to_json(g);
    j["hypercube"] = hypercube;
    j["check"] = full_search ? "isomorphism" : "invariants";
    emit(out, j);
  } else {
    out << "k=" << k << " vertices=" << g.vertices().size() << " edges=" << g.graph().edge_count()
        << " hypercube=" << bool_text(hypercube) << " (" << (full_search ? "isomorphism" : "invariants") << ")\n";
  }
  return hypercube ? kSuccess : kContradiction;
}

int cmd_orbit(const RunConfig& cfg, const std::string& seed, const std::vector<std::string>& gen_names, std::ostream& out) {
  const OrbitReport r = orbit(Word::parse(seed), parse_gens(gen_names), cfg.cap);
  if (cfg.format == Format::Json) {
    emit(out, to_json(r));
  } else {
    out << "seed=" << r.seed.str() << " size=" << r.size << " truncated=" << bool_text(r.truncated) << " orbit=";
    bool first = true;
    for (const auto& w : r.orbit) {
      out << (first ? "" : ",") << w.str();
      first = false;
    }
    out << '\n';
  }
  return kSuccess;
}

int cmd_compact(const RunConfig& cfg, const std::string& generator, const std::vector<std::string>& gen_names,
                std::size_t max_len, std::ostream& out) {
  const CompactnessReport r = compact_action_check(parse_gens(gen_names), Word::parse(generator), max_len, cfg.cap);
  if (cfg.format == Format::Json) {
    emit(out, to_json(r));
  } else {
    out << "all_orbits_finite=" << bool_text(r.all_orbits_finite) << " max_orbit_size=" << r.max_orbit_size
        << " words_checked=" << r.words_checked << '\n';
  }
  return r.all_orbits_finite ? kSuccess : kContradiction;
}

int cmd_surjectivity(const RunConfig& cfg, std::size_t degree, std::ostream& out) {
  const bool ok = check_surjectivity_onto_invariants(degree);
  if (cfg.format == Format::Json) {
    Json j = Json::object();
    j["degree"] = degree;
    j["surjective"] = ok;
    emit(out, j);
  } else {
    out << "degree=" << degree << " surjective=" << bool_text(ok) << '\n';
  }
  return ok ? kSuccess : kContradiction;
}

int cmd_verify(const RunConfig& cfg, std::uint64_t seed, std::size_t samples, std::ostream& out) {
  const auto results = run_property_suite(SuiteConfig{seed, cfg.max_degree, samples});
  bool all = true;
  Json j = Json::array();
  for (const auto& r : results) {
    all = all && r.passed;
    if (cfg.format == Format::Json) {
      Json item = Json::object();
      item["property"] = r.name;
      item["passed"] = r.passed;
      item["cases"] = r.cases;
      if (!r.passed) item["counterexample"] = r.detail;
      j.push_back(std::move(item));
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
      if (!r.passed) out << " counterexample: " << r.detail;
      out << '\n';
    }
  }
  if (cfg.format == Format::Json) emit(out, j);
  return all ? kSuccess : kContradiction;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fusion-ring combinatorics of the free unitary quantum group U_n+", "uplus"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--n", cfg.n, "Matrix size n of U_n+ (dimension checks)")->check(CLI::Range(2u, 1000000u))->capture_default_str();
  app.add_option("--cap", cfg.cap, "Orbit size cap")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-degree", cfg.max_degree, "Largest k for verify's graph and generation checks")
      ->check(CLI::Range(std::size_t{1}, std::size_t{12}))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Largest admissible component dimension 2^k")->capture_default_str();

  std::string fx, fy;
  bool with_dim = false;
  auto* fuse_cmd = app.add_subcommand("fuse", "Decompose the tensor product of two irreducibles");
  fuse_cmd->add_option("x", fx, "First word over {a,b}, or e")->required();
  fuse_cmd->add_option("y", fy, "Second word over {a,b}, or e")->required();
  fuse_cmd->add_flag("--dim", with_dim, "Also check dim(x) dim(y) = dim of the decomposition at --n");

  std::size_t k = 0;
  auto* fingen_cmd = app.add_subcommand("check-fingen", "Test whether degree-(k+1) invariants are generated in lower degree");
  fingen_cmd->add_option("--k", k, "Degree offset k >= 1")->required()->check(CLI::Range(std::size_t{1}, std::size_t{62}));

  std::size_t kmax = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Run the generation test for k = 1..kmax");
  scan_cmd->add_option("--kmax", kmax, "Largest k")->required()->check(CLI::Range(std::size_t{1}, std::size_t{62}));

  std::size_t graph_k = 0;
  bool dot = false, edges = false;
  auto* graph_cmd = app.add_subcommand("graph", "Build the star-class graph of degree k+1");
  graph_cmd->add_option("--k", graph_k, "Degree offset k >= 1")->required()->check(CLI::Range(std::size_t{1}, std::size_t{62}));
  auto* dot_flag = graph_cmd->add_flag("--dot", dot, "Emit DOT text");
  graph_cmd->add_flag("--edges", edges, "Emit an edge list")->excludes(dot_flag);

  std::string seed_word;
  std::vector<std::string> gens{"gamma"};
  auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of an irreducible under fusion-compatible permutations");
  orbit_cmd->add_option("--seed", seed_word, "Seed word")->required();
  orbit_cmd->add_option("--gens", gens, "Generators: identity, gamma, dual, dual_gamma")
      ->delimiter(',')
      ->capture_default_str();

  std::string generator = "a";
  std::size_t max_len = kDefaultMaxLen;
  std::vector<std::string> compact_gens{"gamma"};
  auto* compact_cmd = app.add_subcommand("compact", "Check that every orbit of words up to --max-len is finite");
  compact_cmd->add_option("--generator", generator, "Word of the generating representation")->capture_default_str();
  compact_cmd->add_option("--gens", compact_gens, "Generators: identity, gamma, dual, dual_gamma")
      ->delimiter(',')
      ->capture_default_str();
  compact_cmd->add_option("--max-len", max_len, "Largest word length checked")->capture_default_str();

  std::size_t surj_degree = 0;
  auto* surj_cmd = app.add_subcommand("surjectivity", "Check the forgetful map hits every invariant class");
  surj_cmd->add_option("--degree", surj_degree, "Largest degree")->required();

  std::uint64_t verify_seed = 1;
  std::size_t samples = 500;
  auto* verify_cmd = app.add_subcommand("verify", "Run every property check");
  verify_cmd->add_option("--seed", verify_seed, "Random seed for sampled properties")->capture_default_str();
  verify_cmd->add_option("--samples", samples, "Samples per randomized property")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.format = format == "text" ? Format::Text : Format::Json;

  try {
    if (fuse_cmd->parsed()) return cmd_fuse(cfg, fx, fy, with_dim, out);
    if (fingen_cmd->parsed()) return cmd_check_fingen(cfg, k, out);
    if (scan_cmd->parsed()) return cmd_scan(cfg, kmax, out);
    if (graph_cmd->parsed()) return cmd_graph(cfg, graph_k, dot, edges, out);
    if (orbit_cmd->parsed()) return cmd_orbit(cfg, seed_word, gens, out);
    if (compact_cmd->parsed()) return cmd_compact(cfg, generator, compact_gens, max_len, out);
    if (surj_cmd->parsed()) return cmd_surjectivity(cfg, surj_degree, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, verify_seed, samples, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const GeneratorOrbitInfiniteError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const NotBipartiteError& e) {
    err << "error: " << e.what() << '\n';
    return kContradiction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace uplus::cli
