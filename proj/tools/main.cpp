// stairbound: build staircase hard instances, evaluate the weighted
// adversary bound exactly, and verify the supporting inequality chain.
//
// Exit codes: 0 success, 1 validation error, 2 budget exceeded,
// 3 verification failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stairbound/errors.hpp"
#include "stairbound/json_io.hpp"

using namespace stairbound;

namespace {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct GraphSource {
  std::string file;
  std::string family;
  int n = 0, rows = 0, cols = 0, dim = 0, degree = 0;
  std::uint64_t seed = 0;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--graph", file, "graph JSON file");
    cmd->add_option("--family", family,
                    "graph family: path, cycle, complete, grid, hypercube, "
                    "random-regular");
    cmd->add_option("--n", n, "vertex count (family mode)");
    cmd->add_option("--rows", rows, "grid rows");
    cmd->add_option("--cols", cols, "grid cols");
    cmd->add_option("--dim", dim, "hypercube dimension");
    cmd->add_option("--degree", degree, "random-regular degree");
    cmd->add_option("--seed", seed, "generation seed");
  }

  Graph load(Json* provenance) const {
    if (!file.empty() && !family.empty())
      throw ValidationError("give either --graph or --family, not both");
    if (!file.empty()) {
      if (provenance) (*provenance)["graph_file"] = file;
      return graph_from_json(Json::parse(read_file(file)));
    }
    if (family.empty())
      throw ValidationError("a graph is required: --graph FILE or --family NAME");
    FamilyParams params;
    params.n = n;
    params.rows = rows;
    params.cols = cols;
    params.dim = dim;
    params.degree = degree;
    if (provenance) {
      (*provenance)["family"] = family;
      if (n) (*provenance)["n"] = n;
      if (degree) (*provenance)["degree"] = degree;
      (*provenance)["graph_seed"] = seed;
    }
    std::optional<GraphFamily> kind = parse_family(family);
    if (!kind) throw ValidationError("unknown graph family '" + family + "'");
    return generate(*kind, params, seed);
  }
};

void emit(const std::string& out, const Json& report) {
  std::string text = dump_stable(report);
  if (out.empty())
    std::cout << text;
  else
    write_atomic(out, text);
}

int default_L(int n) { return std::max(1, static_cast<int>(std::sqrt(n))); }

Json evaluation_to_json(const AdversaryEvaluation& ev) {
  Json j;
  j["mode"] = "full";
  j["bound"] = fmt12(ev.bound);
  j["min_ratio_squared"] = exact_string(ev.min_ratio_squared);
  j["witness"] = {
      {"milestones_1", ev.witness_f1.milestones.entries},
      {"b_1", ev.witness_f1.b},
      {"milestones_2", ev.witness_f2.milestones.entries},
      {"b_2", ev.witness_f2.b},
      {"vertex", ev.witness_vertex},
      {"M_1", exact_string(ev.witness_m1)},
      {"M_2", exact_string(ev.witness_m2)},
      {"nu_1", exact_string(ev.witness_nu1)},
      {"nu_2", exact_string(ev.witness_nu2)},
  };
  j["M_min"] = exact_string(ev.m_min);
  j["M_max"] = exact_string(ev.m_max);
  j["good_labels"] = ev.good_labels;
  j["triples"] = ev.triples;
  return j;
}

Json estimate_to_json(const SampledEstimate& est) {
  Json j;
  j["mode"] = "sampled";
  j["note"] = "sampled estimate: an upper bound on the true minimum ratio";
  j["bound"] = fmt12(est.bound);
  j["min_ratio_squared"] = exact_string(est.min_ratio_squared);
  j["witness"] = {
      {"milestones_1", est.witness_f1.milestones.entries},
      {"b_1", est.witness_f1.b},
      {"milestones_2", est.witness_f2.milestones.entries},
      {"b_2", est.witness_f2.b},
      {"vertex", est.witness_vertex},
  };
  j["samples"] = est.samples;
  j["valid_samples"] = est.valid_samples;
  j["sample_seed"] = est.seed;
  return j;
}

struct CliConfig {
  // gen-graph / routes / adversary / verify
  GraphSource source;
  std::string out;
  // routes
  std::string method = "shortest";
  std::string paths_file;
  long iters = 1000;
  std::uint64_t route_seed = 0;
  // adversary / verify
  int L = 0;
  long sampled = 0;
  std::uint64_t sample_seed = 0;
  long budget_labels = FamilyBudgets{}.max_labels;
  long budget_rprime = FamilyBudgets{}.max_rprime_evals;
  bool force_exact = false;
  bool allow_float = false;
  std::string verify = "none";
  // solve
  std::string instance_file;
  std::string algo = "steepest";
  std::vector<int> milestones;
  int b = -1;
  int start = 1;
  long probes = 4;
  std::uint64_t solve_seed = 0;
  // scaling
  std::vector<std::string> families;
};

InstanceFamily build_family(const CliConfig& cfg, const Graph& g, Json* report) {
  int L = cfg.L > 0 ? cfg.L : default_L(g.n);
  FamilyBudgets budgets;
  budgets.max_labels = cfg.budget_labels;
  budgets.max_rprime_evals = cfg.budget_rprime;
  if (budgets.max_labels < 1 || budgets.max_rprime_evals < 1)
    throw ValidationError("budgets must be positive");
  InstanceFamily fam(g, shortest_path_system(g), L, budgets);
  if (cfg.force_exact && !fam.exact())
    throw ValidationError(
        "--exact requires a perfect-square n (n^{1.5} is irrational here); "
        "rerun with --float to accept an approximation");
  if (report) {
    (*report)["n"] = fam.n();
    (*report)["L"] = fam.L();
    (*report)["g"] = fam.g();
    (*report)["labels"] = fam.label_count();
    (*report)["path_rule"] = "bfs-shortest, smallest-label parent";
    (*report)["arithmetic"] = fam.exact() ? "exact" : "approximate";
  }
  return fam;
}

int cmd_gen_graph(const CliConfig& cfg) {
  if (!cfg.source.file.empty())
    throw ValidationError("gen-graph generates from --family, not --graph");
  Graph g = cfg.source.load(nullptr);
  emit(cfg.out, graph_to_json(g));
  return 0;
}

int cmd_routes(const CliConfig& cfg) {
  Json report;
  Graph g = cfg.source.load(&report);
  report["method"] = cfg.method;

  PathSystem ps;
  if (cfg.method == "shortest") {
    ps = shortest_path_system(g);
  } else if (cfg.method == "bruteforce") {
    ps = min_congestion_bruteforce(g).system;
  } else if (cfg.method == "anneal") {
    PathSystem base = cfg.paths_file.empty()
        ? shortest_path_system(g)
        : path_system_from_json(Json::parse(read_file(cfg.paths_file)));
    validate_path_system(g, base);
    ps = anneal_congestion(g, base, cfg.iters, cfg.route_seed);
    report["iterations"] = cfg.iters;
    report["seed"] = cfg.route_seed;
  } else {
    throw ValidationError("unknown --method '" + cfg.method +
                          "' (shortest, bruteforce, anneal)");
  }

  CongestionReport cong = vertex_congestion(ps);
  CongestionRatio ratio = check_congestion_inequality(g, ps);
  report["congestion"] = congestion_report_to_json(cong);
  report["beta"] = exact_string(ratio.beta);
  report["congestion_ratio"] = fmt12(ratio.ratio);
  report["paths"] = path_system_to_json(ps);
  emit(cfg.out, report);
  std::cerr << "g=" << cong.g << " g_e=" << cong.g_e << "\n";
  return 0;
}

int cmd_adversary(const CliConfig& cfg, bool verify_only) {
  Json report;
  Graph g = cfg.source.load(&report);
  InstanceFamily fam = build_family(cfg, g, &report);

  bool failed = false;
  if (!verify_only) {
    if (cfg.sampled > 0) {
      report["evaluation"] =
          estimate_to_json(sampled_adversary_bound(fam, cfg.sampled, cfg.sample_seed));
    } else {
      AdversaryEvaluation ev = adversary_bound(fam);
      report["evaluation"] = evaluation_to_json(ev);
      BoundReport bounds = bound_calculator(fam.n(), fam.g());
      report["threshold"] = fmt12(bounds.threshold);
      report["congestion_bound"] = fmt12(bounds.congestion_bound);
    }
  }

  if (verify_only || cfg.verify == "all") {
    Json checks = Json::array();
    for (const CheckReport& rep : verify_all(fam)) {
      checks.push_back(check_report_to_json(rep));
      if (!rep.pass) failed = true;
      std::cerr << (rep.pass ? "pass" : "FAIL") << "  " << rep.name
                << "  (checked " << rep.checked << ")\n";
    }
    report["checks"] = checks;
  } else if (cfg.verify != "none") {
    throw ValidationError("unknown --verify mode '" + cfg.verify +
                          "' (all, none)");
  }

  emit(cfg.out, report);
  if (failed) throw VerificationError("one or more inequality checks failed");
  return 0;
}

int cmd_solve(const CliConfig& cfg) {
  HardInstance inst;
  Json report;
  if (!cfg.instance_file.empty()) {
    inst = instance_from_json(Json::parse(read_file(cfg.instance_file)));
    report["instance_file"] = cfg.instance_file;
  } else {
    Graph g = cfg.source.load(&report);
    if (cfg.milestones.empty())
      throw ValidationError("solve needs --instance FILE or --milestones");
    std::optional<int> b;
    if (cfg.b != -1) b = cfg.b;
    inst = make_instance(g, shortest_path_system(g),
                         make_milestones(cfg.milestones, g.n), b);
  }
  report["milestones"] = inst.milestones.entries;
  report["b"] = inst.hidden_bit ? Json(*inst.hidden_bit) : Json(nullptr);

  auto mode = (cfg.algo == "decide") ? QueryOracle::Mode::decorated
                                     : QueryOracle::Mode::f_only;
  QueryOracle oracle(inst, mode);
  SolveResult res;
  if (cfg.algo == "steepest") {
    res = steepest_descent(oracle, cfg.start);
  } else if (cfg.algo == "random") {
    res = random_descent(oracle, cfg.probes, cfg.solve_seed);
  } else if (cfg.algo == "decide") {
    res = decision_from_search(oracle, cfg.start);
  } else {
    throw ValidationError("unknown --algo '" + cfg.algo +
                          "' (steepest, random, decide)");
  }
  report.update(solve_result_to_json(cfg.algo, cfg.solve_seed, res));
  report["transcript"] = oracle.transcript();
  emit(cfg.out, report);
  return 0;
}

int cmd_scaling(const CliConfig& cfg) {
  std::ostringstream csv;
  csv << "family,n,L,g,mode,bound,min_ratio_squared,threshold,ratio\n";
  for (const std::string& entry : cfg.families) {
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw ValidationError("family entry '" + entry + "' is not NAME:N");
    CliConfig row = cfg;
    row.source = GraphSource{};
    row.source.family = entry.substr(0, colon);
    row.source.n = std::stoi(entry.substr(colon + 1));
    row.source.seed = cfg.source.seed;
    Graph g = row.source.load(nullptr);
    InstanceFamily fam = build_family(row, g, nullptr);
    BoundReport bounds = bound_calculator(fam.n(), fam.g());

    std::string mode;
    double bound = 0.0;
    Rational min_sq;
    try {
      AdversaryEvaluation ev = adversary_bound(fam);
      mode = "full";
      bound = ev.bound;
      min_sq = ev.min_ratio_squared;
    } catch (const BudgetError&) {
      long samples = cfg.sampled > 0 ? cfg.sampled : 100000;
      SampledEstimate est = sampled_adversary_bound(fam, samples, cfg.sample_seed);
      mode = "sampled";
      bound = est.bound;
      min_sq = est.min_ratio_squared;
    }
    csv << row.source.family << ',' << fam.n() << ',' << fam.L() << ','
        << fam.g() << ',' << mode << ',' << fmt12(bound) << ','
        << exact_string(min_sq) << ',' << fmt12(bounds.threshold) << ','
        << fmt12(bound / bounds.threshold) << '\n';
  }
  if (cfg.out.empty())
    std::cout << csv.str();
  else
    write_atomic(cfg.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"staircase hard instances, exact adversary bounds, and "
               "inequality-chain verification"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_family_opts = [&](CLI::App* cmd) {
    cmd->add_option("--L", cfg.L, "quasi-segment count (default: floor(sqrt(n)))");
    cmd->add_option("--budget-labels", cfg.budget_labels,
                    "full-mode label budget");
    cmd->add_option("--budget-rprime", cfg.budget_rprime,
                    "full-mode r' evaluation budget");
    cmd->add_flag("--exact", cfg.force_exact,
                  "require exact arithmetic (perfect-square n)");
    cmd->add_flag("--float", cfg.allow_float,
                  "accept approximate n^{1.5} for non-square n (default)");
  };

  CLI::App* gen = app.add_subcommand("gen-graph", "generate a graph file");
  cfg.source.add_options(gen);
  gen->add_option("--out", cfg.out, "output file (default: stdout)");

  CLI::App* routes = app.add_subcommand("routes", "build a path system");
  cfg.source.add_options(routes);
  routes->add_option("--method", cfg.method, "shortest, bruteforce, or anneal");
  routes->add_option("--paths", cfg.paths_file, "input path system (anneal)");
  routes->add_option("--iters", cfg.iters, "anneal iterations");
  routes->add_option("--route-seed", cfg.route_seed, "anneal seed");
  routes->add_option("--out", cfg.out, "output file (default: stdout)");

  CLI::App* adv = app.add_subcommand("adversary", "evaluate the adversary bound");
  cfg.source.add_options(adv);
  add_family_opts(adv);
  adv->add_option("--sampled", cfg.sampled, "sample count (sampled mode)");
  adv->add_option("--sample-seed", cfg.sample_seed, "sampling seed");
  adv->add_option("--verify", cfg.verify, "run the inequality checks (all, none)");
  adv->add_option("--out", cfg.out, "output file (default: stdout)");

  CLI::App* ver = app.add_subcommand("verify", "run the full inequality chain");
  cfg.source.add_options(ver);
  add_family_opts(ver);
  ver->add_option("--out", cfg.out, "output file (default: stdout)");

  CLI::App* solve = app.add_subcommand("solve", "run a query-counted solver");
  cfg.source.add_options(solve);
  solve->add_option("--instance", cfg.instance_file, "instance JSON file");
  solve->add_option("--milestones", cfg.milestones,
                    "inline milestone sequence, e.g. --milestones 1 3 2");
  solve->add_option("--b", cfg.b, "hidden bit for inline instances");
  solve->add_option("--algo", cfg.algo, "steepest, random, or decide");
  solve->add_option("--start", cfg.start, "start vertex");
  solve->add_option("--probes", cfg.probes, "random-descent probe count");
  solve->add_option("--solve-seed", cfg.solve_seed, "random-descent seed");
  solve->add_option("--out", cfg.out, "output file (default: stdout)");

  CLI::App* scaling = app.add_subcommand("scaling", "tabulate bounds as CSV");
  scaling->add_option("--families", cfg.families,
                      "entries NAME:N, e.g. complete:4 complete:9");
  scaling->add_option("--seed", cfg.source.seed, "generation seed");
  add_family_opts(scaling);
  scaling->add_option("--sampled", cfg.sampled, "sample count for large rows");
  scaling->add_option("--sample-seed", cfg.sample_seed, "sampling seed");
  scaling->add_option("--out", cfg.out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cfg.force_exact && cfg.allow_float)
      throw ValidationError("--exact and --float are mutually exclusive");
    if (gen->parsed()) return cmd_gen_graph(cfg);
    if (routes->parsed()) return cmd_routes(cfg);
    if (adv->parsed()) return cmd_adversary(cfg, false);
    if (ver->parsed()) return cmd_adversary(cfg, true);
    if (solve->parsed()) return cmd_solve(cfg);
    if (scaling->parsed()) return cmd_scaling(cfg);
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
