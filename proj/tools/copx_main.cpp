#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "copx/errors.hpp"
#include "copx/facets.hpp"
#include "copx/hull.hpp"
#include "copx/instances.hpp"
#include "copx/json_io.hpp"
#include "copx/optimality.hpp"
#include "copx/verify.hpp"

namespace {

using namespace copx;

constexpr int kExitUsage = 2;
constexpr int kExitRefuted = 3;
constexpr int kExitCap = 4;
constexpr int kExitDivergence = 5;

Graph named_graph(const std::string& name) {
  if (name == "triangle" || name == "k3") return Graph::complete(3);
  if (name == "k4") return Graph::complete(4);
  if (name == "k5") return Graph::complete(5);
  if (name == "k6") return Graph::complete(6);
  throw ParseError("unknown graph: " + name + " (use triangle, k4, k5, k6)");
}

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void write_error_file(const Config& cfg, const std::string& kind,
                      const std::string& message, const std::string& ray = "") {
  try {
    ojson j;
    j["error"] = kind;
    j["message"] = message;
    if (!ray.empty()) j["ray"] = ray;
    write_json(cfg.results_dir + "/error.json", j);
  } catch (...) {
    // best effort; the exit code and stderr line still report the failure
  }
}

struct GenOpts {
  std::string family, graph = "triangle", out;
  int cities = 4, n = 0, k = 0;
};

int cmd_gen(const Config& cfg, const GenOpts& o) {
  Instance inst;
  if (o.family == "spanning-trees")
    inst = gen_spanning_trees(named_graph(o.graph));
  else if (o.family == "perfect-matchings")
    inst = gen_perfect_matchings(named_graph(o.graph));
  else if (o.family == "tsp")
    inst = gen_tsp_tours(o.cities);
  else if (o.family == "k-subsets")
    inst = gen_k_subsets(o.n, o.k);
  else
    throw ParseError("unknown family: " + o.family +
                     " (use spanning-trees, perfect-matchings, tsp, k-subsets)");

  std::string out = o.out.empty() ? cfg.results_dir + "/" + o.family + ".json" : o.out;
  std::filesystem::path p(out);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  save_instance(inst, out);
  std::printf("family=%s |X|=%zu N=%d -> %s\n", inst.family.c_str(),
              inst.vertices.size(), inst.n, out.c_str());
  return 0;
}

struct CertifyOpts {
  std::string instance, weights, regime = "general";
  int vertex = -1;
  bool all = false;
  std::uint64_t random_trials = 0;
};

int cmd_certify(const Config& cfg, const CertifyOpts& o) {
  Instance inst = load_instance(o.instance);
  Regime regime = regime_from_name(o.regime);

  if (o.random_trials > 0) {
    EquivalenceReport er = equivalence_trial(inst, regime, o.random_trials, cfg.seed, cfg);
    std::string out = cfg.results_dir + "/equivalence_" + o.regime + ".json";
    write_json(out, json_of(er));
    std::printf("trials=%llu checks=%llu mismatches=%zu -> %s\n",
                static_cast<unsigned long long>(er.trials),
                static_cast<unsigned long long>(er.checks), er.mismatches.size(),
                out.c_str());
    return er.ok ? 0 : kExitRefuted;
  }

  if (o.weights.empty())
    throw ParseError("a weights file is required unless --random is given");
  if (o.all == (o.vertex >= 0))
    throw ParseError("pass exactly one of --vertex K or --all");
  RatVec c = load_weights(o.weights, inst.n);

  if (o.all) {
    OptimalSetReport rep = optimal_set(inst, c, regime, cfg);
    std::string out = cfg.results_dir + "/verdicts.json";
    write_json(out, json_of(rep));
    std::string opt;
    for (int k : rep.optimal) opt += (opt.empty() ? "" : ",") + std::to_string(k);
    std::printf("optimal={%s} agree=%s -> %s\n", opt.c_str(),
                rep.agree ? "yes" : "NO", out.c_str());
    return rep.agree ? 0 : kExitRefuted;
  }

  OptimalityVerdict v = decide_optimal(inst, c, o.vertex, regime, cfg);
  std::string out = cfg.results_dir + "/verdict.json";
  write_json(out, json_of(v));
  std::printf("k=%d optimal=%s cross_check=%s -> %s\n", v.vertex,
              v.optimal ? "yes" : "no", v.cross_check ? "yes" : "NO", out.c_str());
  return v.cross_check ? 0 : kExitRefuted;
}

struct FacetsOpts {
  std::string instance, variant = "V", mode = "irreducible";
  bool audit = false;
};

int cmd_facets(const Config& cfg, const FacetsOpts& o) {
  Instance inst = load_instance(o.instance);
  Variant variant = variant_from_name(o.variant);
  MinimalityMode mode = mode_from_name(o.mode);

  DescriptionReport desc = full_description(inst, variant, mode, cfg);
  std::string out =
      cfg.results_dir + "/description_" + o.variant + "_" + o.mode + ".json";
  write_json(out, json_of(desc));
  std::string match = desc.polytope_match.has_value()
                          ? (*desc.polytope_match ? "yes" : "NO")
                          : "not computed (hull cap)";
  std::printf("rows=%zu divergences=%zu polytope_match=%s -> %s\n", desc.rows.size(),
              desc.divergences.size(), match.c_str(), out.c_str());

  if (o.audit) {
    if (desc.polytope_match.has_value() && *desc.polytope_match) {
      NecessityReport audit = necessity_audit(inst, desc, cfg);
      std::string apath =
          cfg.results_dir + "/necessity_" + o.variant + "_" + o.mode + ".json";
      write_json(apath, json_of(audit));
      std::printf("audit: box=%zu necessary=%zu unnecessary=%zu -> %s\n",
                  audit.box_rows.size(), audit.necessary.size(),
                  audit.unnecessary.size(), apath.c_str());
    } else {
      std::printf("audit skipped: needs polytope_match\n");
    }
  }

  if (mode == MinimalityMode::literal && !desc.divergences.empty()) {
    std::fprintf(stderr,
                 "literal thinning diverges from the full cone at anchor %d; "
                 "lineality dimension %zu (see report)\n",
                 desc.divergences.front().anchor,
                 desc.divergences.front().lineality.size());
    return kExitDivergence;
  }
  if (variant == Variant::V) {
    if (!desc.polytope_match.has_value()) {
      write_error_file(cfg, "size_cap",
                       "dimension exceeds the hull cap; polytope_match not computed");
      return kExitCap;
    }
    return *desc.polytope_match ? 0 : kExitRefuted;
  }
  for (const FacetRow& row : desc.rows)
    if (row.face.cls == FaceClass::invalid) return kExitRefuted;
  return 0;
}

struct VerifyOpts {
  std::vector<std::string> instances;
  std::string suite = "default";
};

int cmd_verify(const Config& cfg, const VerifyOpts& o) {
  SuiteScope scope = SuiteScope::preset(o.suite);
  std::vector<std::pair<std::string, Instance>> insts;
  for (const std::string& path : o.instances)
    insts.emplace_back(path_stem(path), load_instance(path));

  SuiteReport rep = run_suite(insts, scope, cfg);
  std::string out = cfg.results_dir + "/suite_report.json";
  write_json(out, json_of(rep));
  for (const ClaimReport& c : rep.claims) {
    if (c.verdict == ClaimVerdict::confirmed) continue;
    std::printf("%s %s %s%s%s\n", claim_verdict_name(c.verdict), claim_name(c.claim),
                c.instance_tag.c_str(), c.evidence.note.empty() ? "" : ": ",
                c.evidence.note.c_str());
  }
  std::printf("claims=%zu confirmed=%zu refuted=%zu skipped=%zu -> %s\n",
              rep.claims.size(), rep.confirmed, rep.refuted, rep.skipped, out.c_str());
  return rep.ok ? 0 : kExitRefuted;
}

struct OracleOpts {
  std::string input, direction = "v2h";
};

int cmd_oracle(const Config& cfg, const OracleOpts& o) {
  if (o.direction == "v2h") {
    Instance inst = load_instance(o.input);
    VRep v;
    for (int k = 0; k < static_cast<int>(inst.vertices.size()); ++k)
      v.vertices.push_back(inst.vertex_rat(k));
    std::sort(v.vertices.begin(), v.vertices.end());
    HRep h = vrep_to_hrep(v, cfg.hull);
    std::string out = cfg.results_dir + "/hrep.json";
    write_json(out, json_of(h));
    for (const auto& c : h.equalities)
      std::printf("eq  %s = %s\n", vec_str(c.a).c_str(), c.b.str().c_str());
    for (const auto& c : h.inequalities)
      std::printf("ineq %s <= %s\n", vec_str(c.a).c_str(), c.b.str().c_str());
    std::printf("equalities=%zu inequalities=%zu -> %s\n", h.equalities.size(),
                h.inequalities.size(), out.c_str());
    return 0;
  }
  if (o.direction == "h2v") {
    ojson j = load_json(o.input);
    HRep h = hrep_from_json(j);
    std::optional<Box> box = box_from_json(j);
    VRep v = hrep_to_vrep(h, box, cfg.hull);
    std::string out = cfg.results_dir + "/vrep.json";
    write_json(out, json_of(v));
    for (const auto& p : v.vertices) std::printf("vertex %s\n", vec_str(p).c_str());
    std::printf("vertices=%zu -> %s\n", v.vertices.size(), out.c_str());
    return 0;
  }
  throw ParseError("unknown direction: " + o.direction + " (use v2h or h2v)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact optimality certificates and facet synthesis for 0/1 polytopes"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("COPX_RESULTS_DIR")) cfg.results_dir = env;
  app.add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for all randomized runs")->capture_default_str();
  app.add_option("--results-dir", cfg.results_dir, "directory for JSON artifacts")
      ->capture_default_str();
  app.add_option("--full-cap", cfg.lattice.full_lattice_cap,
                 "max dimension for {-1,0,1} lattice enumeration")
      ->capture_default_str();
  app.add_option("--cube-cap", cfg.lattice.cube_cap,
                 "max dimension for 0/1 lattice enumeration")
      ->capture_default_str();
  app.add_option("--hull-cap", cfg.hull.hull_dim_cap,
                 "max dimension for hull conversions")
      ->capture_default_str();

  GenOpts gen_o;
  CLI::App* gen = app.add_subcommand("gen", "generate a built-in instance family");
  gen->add_option("--family", gen_o.family,
                  "spanning-trees | perfect-matchings | tsp | k-subsets")
      ->required();
  gen->add_option("--graph", gen_o.graph, "triangle | k4 | k5 | k6")->capture_default_str();
  gen->add_option("--cities", gen_o.cities, "tsp city count")->capture_default_str();
  gen->add_option("--n", gen_o.n, "k-subsets ground-set size");
  gen->add_option("--k", gen_o.k, "k-subsets subset size");
  gen->add_option("--out", gen_o.out, "output path (default results dir)");

  CertifyOpts cert_o;
  CLI::App* certify =
      app.add_subcommand("certify", "decide optimality by cone membership");
  certify->add_option("instance", cert_o.instance, "instance JSON file")->required();
  certify->add_option("weights", cert_o.weights, "weights JSON file");
  certify->add_option("--vertex", cert_o.vertex, "vertex index to certify");
  certify->add_flag("--all", cert_o.all, "certify every vertex");
  certify->add_option("--regime", cert_o.regime, "nonneg | signed_support | general")
      ->capture_default_str();
  certify->add_option("--random", cert_o.random_trials,
                      "run this many random-weight equivalence trials instead");

  FacetsOpts fac_o;
  CLI::App* facets =
      app.add_subcommand("facets", "synthesize a candidate facet description");
  facets->add_option("instance", fac_o.instance, "instance JSON file")->required();
  facets->add_option("--variant", fac_o.variant, "V | H")->capture_default_str();
  facets->add_option("--mode", fac_o.mode, "literal | irreducible")->capture_default_str();
  facets->add_flag("--audit", fac_o.audit, "run the per-row necessity audit");

  VerifyOpts ver_o;
  CLI::App* verify = app.add_subcommand("verify", "run the claim-check suite");
  verify->add_option("instances", ver_o.instances, "instance JSON files");
  verify->add_option("--suite", ver_o.suite, "default | regions | shift | trials")
      ->capture_default_str();

  OracleOpts ora_o;
  CLI::App* oracle =
      app.add_subcommand("oracle", "standalone hull conversions");
  oracle->add_option("input", ora_o.input, "instance file (v2h) or H-rep file (h2v)")
      ->required();
  oracle->add_option("--direction", ora_o.direction, "v2h | h2v")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, gen_o);
    if (certify->parsed()) return cmd_certify(cfg, cert_o);
    if (facets->parsed()) return cmd_facets(cfg, fac_o);
    if (verify->parsed()) return cmd_verify(cfg, ver_o);
    if (oracle->parsed()) return cmd_oracle(cfg, ora_o);
  } catch (const SizeCapError& e) {
    std::fprintf(stderr, "size cap: %s\n", e.what());
    write_error_file(cfg, "size_cap", e.what());
    return kExitCap;
  } catch (const UnboundedError& e) {
    std::fprintf(stderr, "unbounded: %s\n", e.what());
    write_error_file(cfg, "unbounded", e.what(), e.ray_text());
    return kExitCap;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    write_error_file(cfg, "parse", e.what());
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "dimension error: %s\n", e.what());
    write_error_file(cfg, "dimension", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    write_error_file(cfg, "invalid_argument", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
