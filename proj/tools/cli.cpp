#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "fuzzytop/random.hpp"
#include "io/json_io.hpp"

namespace fuzzytop::cli {

namespace {

using io::json;
using io::ParseError;

struct RunConfig {
  std::string topology_file;
  std::string grid_step = "1/64";
  std::uint64_t seed = 7;
  std::size_t sweeps = 100;

  // Grid resolution k for grid_step = 1/k, k >= 8.
  [[nodiscard]] long grid() const {
    Rational step;
    try {
      step = Rational::parse(grid_step);
    } catch (const DomainError& e) {
      throw ParseError(std::string("grid step: ") + e.what());
    }
    if (step.numerator() != 1 || step.denominator() < 8 || !step.denominator().fits_slong_p()) {
      throw ParseError("grid step must be 1/k with k >= 8, got " + grid_step);
    }
    return step.denominator().get_si();
  }

  [[nodiscard]] SweepConfig sweep_config() const {
    SweepConfig c;
    c.seed = seed;
    c.cases = sweeps;
    c.grid = grid();
    if (!topology_file.empty()) c.topology = io::topology_from(io::read_json_file(topology_file));
    return c;
  }
};

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "random seed");
  sub->add_option("--sweeps", cfg.sweeps, "number of randomized cases per sweep")->check(CLI::PositiveNumber);
  sub->add_option("--grid-step", cfg.grid_step, "pointwise grid step 1/k, k >= 8");
}

int verdict(bool ok) { return ok ? kOk : kVerdictFailed; }

int summarize(const std::vector<SweepResult>& results, json& doc) {
  bool ok = true;
  doc["sweeps"] = json::array();
  for (const auto& r : results) {
    doc["sweeps"].push_back(io::to_json(r));
    ok = ok && r.ok();
  }
  doc["ok"] = ok;
  return verdict(ok);
}

FuzzyTopology counterexample_topology(const std::vector<std::string>& ground) {
  const GroundRef g = make_ground(ground);
  return FuzzyTopology(g, {{"0", FuzzySet::constant(g, Rational(0))},
                           {"1", FuzzySet::constant(g, Rational(1))},
                           {"T", FuzzySet::constant(g, Rational(1, 3))}});
}

int cmd_validate(const RunConfig& cfg, json& doc) {
  const io::FamilyDoc fam = io::family_from(io::read_json_file(cfg.topology_file));
  const ValidationReport r = fz_is_topology(fam.ground, fam.opens);
  doc["ok"] = r.ok;
  doc["failure"] = to_string(r.failure);
  doc["message"] = r.message;
  json witness = json::object();
  if (r.left) witness["left"] = *r.left;
  if (r.right) witness["right"] = *r.right;
  if (r.absent) witness["absent"] = io::to_json(*r.absent);
  doc["witness"] = witness;
  return verdict(r.ok);
}

int cmd_cylinder(const RunConfig& cfg, json& doc) {
  const FuzzyTopology topo = io::topology_from(io::read_json_file(cfg.topology_file));
  doc["opens"] = json::array();
  for (const auto& o : topo.opens()) {
    doc["opens"].push_back({{"name", o.name}, {"psi_star", io::to_json(psi_star(o.set))}});
  }
  return kOk;
}

int cmd_laws(const RunConfig& cfg, json& doc) {
  const SweepConfig sc = cfg.sweep_config();
  bool topo_ok = true;
  if (sc.topology) {
    const LawReport law = verify_psi_laws(*sc.topology);
    topo_ok = law.ok;
    doc["topology_laws"] = {{"ok", law.ok},         {"checks", law.checks},          {"exhaustive", law.exhaustive},
                            {"failed_law", law.law}, {"witness_opens", law.witness_opens}};
  }
  const int code = summarize({sweep_psi_laws(sc), sweep_round_trip(sc), sweep_indicator_compat(sc),
                              sweep_retraction(sc), sweep_sigma(sc), sweep_path_laws(sc), sweep_dsl_continuity(sc),
                              sweep_complement(sc)},
                             doc);
  doc["ok"] = doc["ok"].get<bool>() && topo_ok;
  return topo_ok ? code : kVerdictFailed;
}

int cmd_counterexample(const std::vector<std::string>& ground, json& doc) {
  const FuzzyTopology topo = counterexample_topology(ground);
  const FuzzySet& t = topo.open("T");
  const CompatReport r = complement_compat(t);
  const CylinderOpen psi = psi_star(t);
  doc["topology"] = io::to_json(topo);
  doc["psi_star_T"] = psi.str();
  doc["complement_of_psi_star_T"] = r.complement_of_psi.str();
  doc["psi_star_of_complement"] = r.psi_of_complement.str();
  doc["verdict"] = r.equal ? "equal" : "unequal";
  doc["witness"] = {{"x", r.witness_element.value_or("")},
                    {"alpha", r.witness_level ? io::to_json(*r.witness_level) : json(nullptr)}};
  doc["sets"] = {{"psi_star_T", io::to_json(psi)},
                 {"complement_of_psi_star_T", io::to_json(r.complement_of_psi)},
                 {"psi_star_of_complement", io::to_json(r.psi_of_complement)}};
  return kOk;
}

int cmd_connectivity(const RunConfig& cfg, json& doc) {
  const FuzzyTopology topo = io::topology_from(io::read_json_file(cfg.topology_file));
  const ConnectivityReport r = check_pc_lpc(topo);
  const FiniteTopology base = iota_x(topo);
  doc["pc"] = r.pc;
  doc["lpc"] = r.lpc;
  doc["lpc_reason"] = r.lpc_reason;
  doc["components"] = r.components;
  doc["base_topology"] = io::to_json(base);

  bool ok = true;
  if (r.pc) {
    // Connect every pair of grid points and check each connecting path.
    const std::vector<Rational> levels{Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
    std::vector<SubbasisElem> targets;
    for (const auto& g : critical_gammas(topo)) {
      for (const auto& o : topo.opens()) targets.emplace_back(TStar{o.name, g});
      targets.emplace_back(Pi2{g});
    }
    std::size_t verified = 0;
    json sample = json::array();
    for (const auto& x : topo.ground()->elements()) {
      for (const auto& y : topo.ground()->elements()) {
        for (const auto& a : levels) {
          for (const auto& b : levels) {
            const CylPoint from{x, a}, to{y, b};
            const auto path = connecting_path(topo, from, to);
            bool good = path && path->start() == from && path->finish() == to;
            for (std::size_t k = 0; good && k < targets.size(); ++k) good = path_preimage_open(*path, targets[k], topo);
            ok = ok && good;
            verified += good ? 1 : 0;
            if (good && a == levels[2] && b == levels[2]) {
              sample.push_back({{"from", io::to_json(from)}, {"to", io::to_json(to)}, {"path", io::to_json(*path)}});
            }
          }
        }
      }
    }
    doc["paths_verified"] = verified;
    doc["sample_paths"] = sample;
  } else {
    // Each component cylinder is realized by an open expression.
    doc["separations"] = json::array();
    for (const auto& comp : r.components) {
      const OpenExpr expr = component_cylinder_expr(topo, comp);
      const CylinderOpen realized = open_realize(expr, topo);
      const std::set<std::string> members(comp.begin(), comp.end());
      bool exact = true;
      for (std::size_t i = 0; i < topo.ground()->size(); ++i) {
        const bool inside = members.count(topo.ground()->name(i)) != 0;
        exact = exact && realized.fiber(i) == (inside ? IntervalSet::of(unit_segment()) : IntervalSet{});
      }
      ok = ok && exact;
      doc["separations"].push_back(
          {{"component", comp}, {"clauses", expr.clauses.size()}, {"realized", io::to_json(realized)}, {"exact", exact}});
    }
  }
  doc["ok"] = ok;
  return verdict(ok);
}

int cmd_verify_retraction(const RunConfig& cfg, const std::string& certificates, const std::string& out_file,
                          json& doc) {
  const FuzzyTopology topo = io::topology_from(io::read_json_file(cfg.topology_file));
  std::vector<BoxWitness> witnesses;
  if (!certificates.empty()) {
    const json certs = io::read_json_file(certificates);
    if (!certs.is_array()) throw ParseError("certificate file must hold a JSON array");
    for (const auto& c : certs) witnesses.push_back(io::witness_from(c, topo));
    doc["mode"] = "replay";
  } else {
    witnesses = random_witnesses(topo, cfg.sweeps, cfg.seed);
    doc["mode"] = "generate";
  }
  json records = json::array();
  json failures = json::array();
  std::map<std::string, std::size_t> cases;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    const BoxWitness& w = witnesses[i];
    records.push_back(io::to_json(w));
    const WitnessCheck c = check_witness(w, topo);
    ++cases[to_string(witness_case(w.anchor_t))];
    if (!c.ok) {
      failures.push_back({{"index", i},
                          {"anchor_inside", c.anchor_inside},
                          {"region_realizes", c.region_realizes},
                          {"image_inside", c.image_inside}});
    }
  }
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw ParseError("cannot write " + out_file);
    out << records.dump(2) << '\n';
  }
  doc["certificates"] = witnesses.size();
  doc["verified"] = witnesses.size() - failures.size();
  doc["cases"] = cases;
  doc["failures"] = failures;
  doc["ok"] = failures.empty();
  return verdict(failures.empty());
}

int cmd_paths(const RunConfig& cfg, const std::string& path_file, json& doc) {
  if (!path_file.empty()) {
    if (cfg.topology_file.empty()) throw ParseError("--path needs --topology");
    const FuzzyTopology topo = io::topology_from(io::read_json_file(cfg.topology_file));
    const PathExpr p = io::path_from(io::read_json_file(path_file), iota_x(topo));
    const long k = cfg.grid();
    json samples = json::array();
    for (long i = 0; i <= k; ++i) samples.push_back(io::to_json(eval_path(p, Rational(i, k))));
    bool continuous = true;
    for (const auto& g : critical_gammas(topo)) {
      for (const auto& o : topo.opens()) continuous = continuous && path_preimage_open(p, TStar{o.name, g}, topo);
      continuous = continuous && path_preimage_open(p, Pi2{g}, topo);
    }
    const PathNormalForm nf = normal_form(p);
    json pieces = json::array();
    for (std::size_t j = 0; j < nf.gaps.size(); ++j) {
      pieces.push_back({{"from", io::to_json(nf.breaks[j])},
                        {"to", io::to_json(nf.breaks[j + 1])},
                        {"x", nf.gaps[j].x},
                        {"c0", io::to_json(nf.gaps[j].c0)},
                        {"c1", io::to_json(nf.gaps[j].c1)}});
    }
    doc["path"] = io::to_json(p);
    doc["samples"] = samples;
    doc["normal_form"] = pieces;
    doc["continuous"] = continuous;
    doc["ok"] = continuous;
    return verdict(continuous);
  }
  const SweepConfig sc = cfg.sweep_config();
  return summarize({sweep_path_laws(sc), sweep_dsl_continuity(sc)}, doc);
}

int cmd_decide_complement(const RunConfig& cfg, const std::string& f, const std::string& g, json& doc) {
  const FuzzyTopology topo = io::topology_from(io::read_json_file(cfg.topology_file));
  if (!topo.has_open(f)) throw ParseError("no open named " + f);
  if (!topo.has_open(g)) throw ParseError("no open named " + g);
  const ComplementReport r = complement_report(topo.open(f), topo.open(g));
  doc = io::to_json(r);
  doc["f"] = f;
  doc["g"] = g;
  return verdict(r.inversion);
}

int cmd_oracle(const RunConfig& cfg, long resolution, json& doc) {
  if (resolution < 2) throw ParseError("resolution must be at least 2");
  SweepConfig sc = cfg.sweep_config();
  sc.oracle_resolution = resolution;
  const std::vector<SweepResult> results{sweep_psi_laws(sc), sweep_round_trip(sc), sweep_indicator_compat(sc),
                                         sweep_retraction(sc), sweep_sigma(sc)};
  std::size_t checks = 0, mismatches = 0;
  for (const auto& r : results) {
    checks += r.oracle_checks;
    mismatches += r.oracle_failures;
  }
  const int code = summarize(results, doc);
  doc["resolution"] = resolution;
  doc["oracle_checks"] = checks;
  doc["oracle_mismatches"] = mismatches;
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fuzzy topology and cylinder-space toolkit", "fuzzytop"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate = app.add_subcommand("validate", "check the fuzzy topology axioms for a family");
  validate->add_option("--topology", cfg.topology_file, "family JSON")->required();

  auto* cylinder = app.add_subcommand("cylinder", "dump psi_star of every open");
  cylinder->add_option("--topology", cfg.topology_file, "topology JSON")->required();

  auto* laws = app.add_subcommand("laws", "psi laws on a topology plus the randomized law sweeps");
  laws->add_option("--topology", cfg.topology_file, "topology JSON used by every sweep");
  add_run_options(laws, cfg);

  std::vector<std::string> ground{"x"};
  auto* counter = app.add_subcommand("counterexample", "set complement against fuzzy complement on {0, 1, 1/3}");
  counter->add_option("--ground", ground, "ground elements")->delimiter(',');

  auto* connectivity = app.add_subcommand("connectivity", "path components of the cylinder");
  connectivity->add_option("--topology", cfg.topology_file, "topology JSON")->required();

  std::string certificates, out_file;
  auto* retraction = app.add_subcommand("verify-retraction", "generate or replay continuity certificates");
  retraction->add_option("--topology", cfg.topology_file, "topology JSON")->required();
  retraction->add_option("--certificates", certificates, "certificate JSON array to replay");
  retraction->add_option("--out", out_file, "write the certificates here");
  add_run_options(retraction, cfg);

  std::string path_file;
  auto* paths = app.add_subcommand("paths", "path identity sweeps, or one path from --path");
  paths->add_option("--topology", cfg.topology_file, "topology JSON");
  paths->add_option("--path", path_file, "path expression JSON to evaluate");
  add_run_options(paths, cfg);

  std::string f_name, g_name;
  auto* decide = app.add_subcommand("decide-complement", "decide G = 1 - F by path inversion");
  decide->add_option("--topology", cfg.topology_file, "topology JSON")->required();
  decide->add_option("--f", f_name, "name of F")->required();
  decide->add_option("--g", g_name, "name of G")->required();

  long resolution = 64;
  auto* grid_oracle = app.add_subcommand("oracle", "cross-check symbolic sets against grid rasters");
  grid_oracle->add_option("--topology", cfg.topology_file, "topology JSON");
  grid_oracle->add_option("--resolution", resolution, "grid resolution N");
  add_run_options(grid_oracle, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fuzzytop: " << e.what() << '\n';
    return kMalformed;
  }

  json doc = json::object();
  int code = kOk;
  try {
    if (*validate) code = cmd_validate(cfg, doc);
    else if (*cylinder) code = cmd_cylinder(cfg, doc);
    else if (*laws) code = cmd_laws(cfg, doc);
    else if (*counter) code = cmd_counterexample(ground, doc);
    else if (*connectivity) code = cmd_connectivity(cfg, doc);
    else if (*retraction) code = cmd_verify_retraction(cfg, certificates, out_file, doc);
    else if (*paths) code = cmd_paths(cfg, path_file, doc);
    else if (*decide) code = cmd_decide_complement(cfg, f_name, g_name, doc);
    else code = cmd_oracle(cfg, resolution, doc);
  } catch (const ParseError& e) {
    err << "fuzzytop: " << e.what() << '\n';
    return kMalformed;
  } catch (const DomainError& e) {
    err << "fuzzytop: " << e.what() << '\n';
    return kMalformed;
  }
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace fuzzytop::cli
