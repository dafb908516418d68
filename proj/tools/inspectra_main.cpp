// inspectra: solver CLI for strategic network inspection instances.
// Subcommands: covers | plan | refine | solve-exact | eval | decompose | gen.
// JSON payloads go to stdout, diagnostics to stderr. Timing lives under the
// "millis" key so reproducibility checks can exclude it.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "inspectra/colgen.hpp"
#include "inspectra/covers.hpp"
#include "inspectra/decomp.hpp"
#include "inspectra/errors.hpp"
#include "inspectra/exact.hpp"
#include "inspectra/game.hpp"
#include "inspectra/generator.hpp"
#include "inspectra/json_io.hpp"
#include "inspectra/planner.hpp"

namespace {

using inspectra::DetectionModel;
using inspectra::MixedStrategy;
using ordered_json = nlohmann::ordered_json;

struct GlobalOpts {
  std::uint64_t seed = 1;
  double tol = 1e-9;
  bool pretty = false;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void emit(const ordered_json& payload, const GlobalOpts& opts) {
  std::cout << (opts.pretty ? payload.dump(2) : payload.dump()) << "\n";
}

ordered_json strategy_json(const DetectionModel& model, const MixedStrategy& s) {
  return ordered_json::parse(inspectra::write_strategy_json(model, s));
}

ordered_json ids_json(const std::vector<std::string>& ids) {
  ordered_json arr = ordered_json::array();
  for (const auto& id : ids) arr.push_back(id);
  return arr;
}

int run_covers(const std::string& path, bool greedy, const GlobalOpts& opts) {
  const Stopwatch clock;
  const DetectionModel model = inspectra::read_instance_file(path);
  model.require_valid();
  const auto mode = greedy ? inspectra::SolveMode::kGreedy : inspectra::SolveMode::kExact;
  const auto cover = inspectra::solve_msc(model, mode);
  const auto packing = inspectra::solve_msp(model, mode);

  ordered_json out;
  out["n_star"] = cover.size;
  out["m_star"] = packing.size;
  out["cover"] = ids_json(model.node_ids(cover.cover));
  out["packing"] = ids_json(model.component_ids(packing.packing));
  out["status"] = greedy ? "heuristic" : "exact";
  out["millis"] = clock.millis();
  emit(out, opts);
  return 0;
}

ordered_json plan_json(const DetectionModel& model, const inspectra::PlanReport& report) {
  ordered_json out;
  out["alpha"] = report.alpha;
  out["b2"] = report.b2;
  out["n_star"] = report.n_star;
  out["m_star"] = report.m_star;
  out["cover_mode"] =
      report.cover_mode == inspectra::SolveMode::kExact ? "exact" : "heuristic";
  out["b1"] = report.b1;
  out["gap"] = report.optimality_gap;
  out["epsilon"] = report.epsilon;
  out["relative_loss_bound"] = report.relative_loss_bound;
  out["certificates_valid"] = report.certificates_valid;
  out["guaranteed_rate"] = report.guaranteed_rate;
  out["sigma1"] = strategy_json(model, report.sigma1);
  out["sigma2"] = report.sigma2 ? strategy_json(model, *report.sigma2) : ordered_json();
  if (report.refined) {
    ordered_json r;
    r["b1"] = report.refined->b1;
    r["rate"] = report.refined->rate;
    r["sigma1"] = strategy_json(model, report.refined->sigma1);
    out["refined"] = std::move(r);
  }
  out["warnings"] = report.warnings;
  return out;
}

void write_strategy_files(const DetectionModel& model, const inspectra::PlanReport& report,
                          const std::string& prefix) {
  inspectra::write_text_file(prefix + ".sigma1.json",
                             inspectra::write_strategy_json(model, report.sigma1));
  if (report.sigma2) {
    inspectra::write_text_file(prefix + ".sigma2.json",
                               inspectra::write_strategy_json(model, *report.sigma2));
  }
  if (report.refined) {
    inspectra::write_text_file(prefix + ".sigma1_refined.json",
                               inspectra::write_strategy_json(model, report.refined->sigma1));
  }
}

int run_plan(const std::string& path, double alpha, int b2, bool exact, bool greedy_covers,
             const std::string& out_prefix, const GlobalOpts& opts) {
  const Stopwatch clock;
  const DetectionModel model = inspectra::read_instance_file(path);
  const inspectra::PlanReport report =
      exact ? inspectra::plan_exact(model, alpha, b2)
            : inspectra::plan_approx(model, alpha, b2,
                                     greedy_covers ? inspectra::SolveMode::kGreedy
                                                   : inspectra::SolveMode::kExact);
  ordered_json out = plan_json(model, report);
  out["millis"] = clock.millis();
  emit(out, opts);
  if (!out_prefix.empty()) write_strategy_files(model, report, out_prefix);
  return 0;
}

int run_refine(const std::string& path, double alpha, int b2, int max_iters,
               const std::string& trace_path, const std::string& out_prefix,
               const GlobalOpts& opts) {
  const Stopwatch clock;
  const DetectionModel model = inspectra::read_instance_file(path);
  const inspectra::RefinementOutcome outcome =
      inspectra::refine(model, alpha, b2, opts.tol, max_iters);

  ordered_json out;
  out["alpha"] = alpha;
  out["b2"] = b2;
  out["n_star"] = outcome.n_star;
  out["m_star"] = outcome.m_star;
  out["b1"] = outcome.selected_b1;
  out["rate"] = outcome.selected_rate;
  ordered_json records = ordered_json::array();
  for (const auto& rec : outcome.records) {
    ordered_json r;
    r["b1"] = rec.b1;
    r["rate"] = rec.rate;
    r["iterations"] = rec.iterations;
    r["epsilon_prime"] = rec.epsilon_prime;
    r["loss_prime"] = rec.loss_prime;
    r["sigma1"] = strategy_json(model, rec.sigma1);
    records.push_back(std::move(r));
  }
  out["records"] = std::move(records);
  out["sigma1"] = strategy_json(model, outcome.sigma1);
  out["millis"] = clock.millis();
  emit(out, opts);

  if (!trace_path.empty()) {
    std::string csv = "b1,iteration,z,epsilon_prime,loss_prime,support_size\n";
    int iter = 0;
    int last_b1 = -1;
    for (const auto& [b1, row] : outcome.trace) {
      if (b1 != last_b1) { iter = 0; last_b1 = b1; }
      csv += std::to_string(b1) + "," + std::to_string(++iter) + "," +
             std::to_string(row.z) + "," + std::to_string(row.epsilon_prime) + "," +
             std::to_string(row.loss_prime) + "," + std::to_string(row.support_size) + "\n";
    }
    inspectra::write_text_file(trace_path, csv);
  }
  if (!out_prefix.empty()) {
    inspectra::write_text_file(out_prefix + ".sigma1.json",
                               inspectra::write_strategy_json(model, outcome.sigma1));
  }
  return 0;
}

int run_solve_exact(const std::string& path, int b1, int b2, const std::string& out_prefix,
                    const GlobalOpts& opts) {
  const Stopwatch clock;
  const DetectionModel model = inspectra::read_instance_file(path);
  inspectra::GameParams params;
  params.b1 = b1;
  params.b2 = b2;
  const inspectra::ExactNE ne = inspectra::solve_exact_ne(model, params);
  const double eps = inspectra::verify_epsilon_ne(model, params, ne.sigma1, ne.sigma2);

  ordered_json out;
  out["b1"] = b1;
  out["b2"] = b2;
  out["value"] = ne.value;
  out["rate"] = ne.rate;
  out["epsilon"] = eps;
  out["sigma1"] = strategy_json(model, ne.sigma1);
  out["sigma2"] = strategy_json(model, ne.sigma2);
  out["millis"] = clock.millis();
  emit(out, opts);
  if (!out_prefix.empty()) {
    inspectra::write_text_file(out_prefix + ".sigma1.json",
                               inspectra::write_strategy_json(model, ne.sigma1));
    inspectra::write_text_file(out_prefix + ".sigma2.json",
                               inspectra::write_strategy_json(model, ne.sigma2));
  }
  return 0;
}

int run_eval(const std::string& path, const std::string& sigma1_path,
             const std::string& sigma2_path, const GlobalOpts& opts) {
  const Stopwatch clock;
  const DetectionModel model = inspectra::read_instance_file(path);
  model.require_valid();
  const MixedStrategy s1 = inspectra::read_strategy_file(model, sigma1_path);
  const MixedStrategy s2 = inspectra::read_strategy_file(model, sigma2_path);
  inspectra::GameParams params;
  params.b1 = s1.budget();
  params.b2 = s2.budget();
  const auto cover = inspectra::solve_msc(model, inspectra::SolveMode::kExact);
  const auto packing = inspectra::solve_msp(model, inspectra::SolveMode::kExact);
  const auto report =
      inspectra::evaluate_profile(model, params, cover.size, packing.size, s1, s2);

  ordered_json out;
  out["u1"] = report.u1;
  out["u2"] = report.u2;
  out["rate"] = report.rate;
  out["epsilon"] = report.epsilon;
  ordered_json bounds;
  bounds["rate_lower"] = report.bounds.lower;
  bounds["rate_upper"] = report.bounds.upper;
  out["bounds"] = std::move(bounds);
  switch (report.bounds.regime) {
    case inspectra::Regime::kB1CoversAll: out["regime"] = "b1>=n*"; break;
    case inspectra::Regime::kB2OverPacking: out["regime"] = "b2>m*"; break;
    case inspectra::Regime::kB2AtPacking: out["regime"] = "b2=m*"; break;
    case inspectra::Regime::kInterior: out["regime"] = "b2<m*"; break;
  }
  out["n_star"] = cover.size;
  out["m_star"] = packing.size;
  out["millis"] = clock.millis();
  emit(out, opts);
  return 0;
}

int run_decompose(const std::string& marginals_path, int b2, const std::string& out_path,
                  const GlobalOpts& opts) {
  const std::string text = inspectra::read_text_file(marginals_path);
  const ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("components") ||
      !j.contains("rho")) {
    throw inspectra::ValidationError(
        "marginals file must carry components and rho arrays");
  }
  std::vector<std::string> comps;
  for (const auto& v : j.at("components")) comps.push_back(v.get<std::string>());
  std::vector<double> rho;
  for (const auto& v : j.at("rho")) rho.push_back(v.get<double>());
  if (comps.size() != rho.size()) {
    throw inspectra::ValidationError("components and rho must have equal length");
  }

  inspectra::MarginalTarget target;
  target.rho = rho;
  target.b2 = b2;
  const MixedStrategy sigma2 = inspectra::decompose(target, opts.tol);

  ordered_json out;
  out["side"] = "attacker";
  out["budget"] = b2;
  ordered_json support = ordered_json::array();
  for (const auto& entry : sigma2.support()) {
    ordered_json item;
    ordered_json action = ordered_json::array();
    for (int e : entry.action) action.push_back(comps.at(e));
    item["action"] = std::move(action);
    item["prob"] = entry.prob;
    support.push_back(std::move(item));
  }
  out["support"] = std::move(support);
  emit(out, opts);
  if (!out_path.empty()) {
    inspectra::write_text_file(out_path, out.dump() + "\n");
  }
  return 0;
}

int run_gen(const inspectra::GenConfig& config, const std::string& out_path,
            const GlobalOpts& opts) {
  const DetectionModel model = inspectra::generate(config);
  const std::string text = inspectra::write_instance_json(model, opts.pretty);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    inspectra::write_text_file(out_path, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strategic network inspection solver"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "Generator seed");
  app.add_option("--tol", opts.tol, "Solver termination tolerance");
  app.add_flag("--json-pretty", opts.pretty, "Pretty-print JSON output");

  // covers
  std::string covers_path;
  bool covers_greedy = false;
  auto* covers = app.add_subcommand("covers", "Minimum set cover and maximum set packing");
  covers->add_option("instance", covers_path, "Instance JSON file")->required();
  covers->add_flag("--greedy", covers_greedy, "Greedy heuristics instead of exact search");

  // plan
  std::string plan_path, plan_prefix;
  double plan_alpha = 0.75;
  int plan_b2 = 1;
  bool plan_exact_flag = false, plan_greedy = false;
  auto* plan = app.add_subcommand("plan", "Detector count and strategy for a target rate");
  plan->add_option("instance", plan_path)->required();
  plan->add_option("--alpha", plan_alpha, "Target detection rate")->required();
  plan->add_option("--b2", plan_b2, "Attacker budget")->required();
  plan->add_flag("--exact", plan_exact_flag, "Refine to the optimal detector count");
  plan->add_flag("--greedy-covers", plan_greedy, "Use greedy cover/packing");
  plan->add_option("--out-prefix", plan_prefix, "Also write strategy files with this prefix");

  // refine
  std::string refine_path, refine_trace, refine_prefix;
  double refine_alpha = 0.75;
  int refine_b2 = 1, refine_max_iters = -1;
  auto* refine = app.add_subcommand("refine", "Column-generation refinement of the plan");
  refine->add_option("instance", refine_path)->required();
  refine->add_option("--alpha", refine_alpha)->required();
  refine->add_option("--b2", refine_b2)->required();
  refine->add_option("--max-iters", refine_max_iters, "Master iteration cap per b1");
  refine->add_option("--trace", refine_trace, "Write per-iteration CSV to this path");
  refine->add_option("--out-prefix", refine_prefix, "Also write the refined strategy file");

  // solve-exact
  std::string se_path, se_prefix;
  int se_b1 = 1, se_b2 = 1;
  auto* solve_exact = app.add_subcommand("solve-exact", "Full-enumeration equilibrium oracle");
  solve_exact->add_option("instance", se_path)->required();
  solve_exact->add_option("--b1", se_b1)->required();
  solve_exact->add_option("--b2", se_b2)->required();
  solve_exact->add_option("--out-prefix", se_prefix, "Also write strategy files");

  // eval
  std::string eval_path, eval_s1, eval_s2;
  auto* eval = app.add_subcommand("eval", "Evaluate a strategy profile");
  eval->add_option("instance", eval_path)->required();
  eval->add_option("--sigma1", eval_s1, "Defender strategy file")->required();
  eval->add_option("--sigma2", eval_s2, "Attacker strategy file")->required();

  // decompose
  std::string dec_marginals, dec_out;
  int dec_b2 = 1;
  auto* decompose = app.add_subcommand("decompose", "Attack strategy from marginal targets");
  decompose->add_option("--marginals", dec_marginals, "JSON with components and rho arrays")
      ->required();
  decompose->add_option("--b2", dec_b2)->required();
  decompose->add_option("--out", dec_out, "Also write the strategy file here");

  // gen
  inspectra::GenConfig config;
  std::string gen_family = "random-bipartite", gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance");
  gen->add_option("--family", gen_family, "random-bipartite | interval | grid-hide-and-seek");
  gen->add_option("--nodes", config.node_count, "Node count");
  gen->add_option("--components", config.component_count, "Component count");
  gen->add_option("--mean-monitor", config.mean_monitor, "Target mean monitoring-set size");
  gen->add_option("--out", gen_out, "Write the instance here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  try {
    if (covers->parsed()) return run_covers(covers_path, covers_greedy, opts);
    if (plan->parsed()) {
      return run_plan(plan_path, plan_alpha, plan_b2, plan_exact_flag, plan_greedy, plan_prefix,
                      opts);
    }
    if (refine->parsed()) {
      return run_refine(refine_path, refine_alpha, refine_b2, refine_max_iters, refine_trace,
                        refine_prefix, opts);
    }
    if (solve_exact->parsed()) return run_solve_exact(se_path, se_b1, se_b2, se_prefix, opts);
    if (eval->parsed()) return run_eval(eval_path, eval_s1, eval_s2, opts);
    if (decompose->parsed()) return run_decompose(dec_marginals, dec_b2, dec_out, opts);
    if (gen->parsed()) {
      config.seed = opts.seed;
      config.family = inspectra::family_from_name(gen_family);
      return run_gen(config, gen_out, opts);
    }
  } catch (const inspectra::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const inspectra::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
