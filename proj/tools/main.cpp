#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pricesched/adversary.hpp"
#include "pricesched/consistency.hpp"
#include "pricesched/engine.hpp"
#include "pricesched/instance_io.hpp"
#include "pricesched/table1.hpp"

using namespace pricesched;

namespace {

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

std::unique_ptr<TieBreaker> make_ties(const std::string& spec) {
  if (spec == "lowest") return lowest_index_ties();
  if (spec == "highest") return highest_index_ties();
  if (spec == "prefer1") return prefer_machine_one_ties();
  if (spec.rfind("scripted:", 0) == 0) {
    std::ifstream is(spec.substr(9));
    if (!is) throw ParseError("cannot open tie script: " + spec.substr(9));
    std::deque<int> picks;
    int machine;
    while (is >> machine) picks.push_back(machine - 1);
    return scripted_ties(std::move(picks));
  }
  throw ParseError("unknown tie policy '" + spec + "' (lowest|highest|prefer1|scripted:<file>)");
}

PriceVector load_prices_file(const std::string& path, int m) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open price file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  std::string text = buf.str();
  PriceVector prices;
  // Either a JSON array of "num/den" strings or a comma/whitespace list.
  std::string cleaned;
  for (char c : text)
    if (c != '[' && c != ']' && c != '"' && c != '\n') cleaned.push_back(c);
  prices = parse_rational_list(cleaned);
  if (static_cast<int>(prices.size()) != m)
    throw ParseError("price file has " + std::to_string(prices.size()) + " entries, expected " +
                     std::to_string(m));
  return prices;
}

void print_report(const RunReport& report) {
  std::cout << "scheme: " << report.scheme_id << "\n";
  std::cout << "instance: " << report.instance_id << "\n";
  std::cout << "ties: " << report.tie_policy << "\n";
  std::cout << "makespan: " << report.makespan.str() << "\n";
  if (report.opt) {
    std::cout << "opt: " << report.opt->makespan.str() << "\n";
    std::cout << "ratio: " << report.ratio_str() << "\n";
  } else if (report.opt_bound) {
    std::cout << "opt_lower_bound: " << report.opt_bound->str() << "\n";
    std::cout << "ratio: " << report.ratio_str() << "\n";
  }
  std::cout << "phases: " << report.phase_count << "\n";
  if (!report.trace_path.empty()) std::cout << "trace: " << report.trace_path << "\n";
}

int cmd_run(const std::string& scheme_spec, const std::string& instance_path,
            const std::string& ties_spec, const std::string& trace_path,
            const std::string& prices_log_path, const std::string& known_lambda,
            const std::string& phase_threshold, bool eager_phase, bool with_opt) {
  Instance instance = load_instance_file(instance_path);
  auto ties = make_ties(ties_spec);

  Trace trace;
  std::string scheme_id = scheme_spec;
  if (scheme_spec == "greedy") {
    trace = run_greedy(instance, *ties);
  } else if (scheme_spec == "flexfit") {
    FlexFitOptions options;
    options.eager_phase = eager_phase;
    trace = run_flexfit(instance, options);
  } else if (scheme_spec == "slowfit") {
    trace = run_slowfit(instance);
  } else if (scheme_spec == "dynrel") {
    DynamicRelatedScheme::Options options;
    if (!known_lambda.empty()) options.known_lambda = Rational::parse(known_lambda);
    options.half_eps_threshold = phase_threshold == "half";
    DynamicRelatedScheme scheme(instance.model, instance.epsilon, options);
    scheme_id = scheme.id();
    trace = run_scheme(scheme, instance, *ties);
  } else if (scheme_spec.rfind("static:", 0) == 0) {
    StaticScheme scheme(instance.model, load_prices_file(scheme_spec.substr(7), instance.m()));
    scheme_id = scheme.id();
    trace = run_scheme(scheme, instance, *ties);
  } else {
    throw ParseError("unknown scheme '" + scheme_spec +
                     "' (greedy|flexfit|slowfit|dynrel|static:<pricefile>)");
  }

  RunReport report = make_report(scheme_id, instance_path, ties->name(), trace, instance, with_opt);
  if (!trace_path.empty()) {
    write_trace_csv(trace, trace_path);
    report.trace_path = trace_path;
  }
  if (!prices_log_path.empty()) {
    std::ofstream os(prices_log_path);
    if (!os) throw ParseError("cannot open prices log for writing: " + prices_log_path);
    write_prices_csv(trace, os);
  }
  print_report(report);
  return 0;
}

int cmd_opt(const std::string& instance_path, std::uint64_t budget) {
  Instance instance = load_instance_file(instance_path);
  OptResult result = opt_bruteforce(instance, budget);
  std::cout << result.makespan.str() << "\n";
  std::cout << "witness:";
  for (int machine : result.witness) std::cout << ' ' << machine + 1;
  std::cout << "\n";
  return 0;
}

int cmd_verify(const std::string& trace_path, const std::string& instance_path,
               const std::string& known_lambda) {
  Trace trace = read_trace_csv_file(trace_path);
  Instance instance = load_instance_file(instance_path);
  ConsistencyOptions options;
  if (!known_lambda.empty()) options.known_lambda = Rational::parse(known_lambda);
  ConsistencyReport report;
  try {
    report = check_flexfit_consistency(trace, instance, options);
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // the pair does not line up; this is bad input, not a violation
  }
  std::cout << report.summary() << "\n";
  for (const StepFinding& finding : report.steps) {
    if (finding.verdict == StepVerdict::violation)
      std::cout << "step " << finding.step << ": " << finding.detail << "\n";
  }
  return report.ok() ? 0 : 1;
}

std::unique_ptr<PricingScheme> make_adversary_scheme(const std::string& spec, int m) {
  MachineModel model = MachineModel::unrelated(m);
  if (spec == "zero") return std::make_unique<StaticScheme>(StaticScheme::zero(model));
  if (spec.rfind("static:", 0) == 0)
    return std::make_unique<StaticScheme>(model, load_prices_file(spec.substr(7), m));
  throw ParseError("unknown adversary scheme '" + spec + "' (zero|static:<pricefile>)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"posted-price makespan scheduling simulator"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run a scheme on an instance and report the makespan");
  std::string scheme_spec, instance_path, ties_spec = "lowest";
  std::string trace_path, prices_log_path, known_lambda, phase_threshold = "full";
  bool eager_phase = false, no_opt = false;
  run->add_option("--scheme", scheme_spec, "greedy|flexfit|slowfit|dynrel|static:<pricefile>")
      ->required();
  run->add_option("--instance", instance_path, "instance JSON file")->required();
  run->add_option("--ties", ties_spec, "lowest|highest|prefer1|scripted:<file>");
  run->add_option("--trace", trace_path, "write the step trace CSV here");
  run->add_option("--prices-log", prices_log_path, "write the posted-prices audit CSV here");
  run->add_option("--known-lambda", known_lambda, "dynrel: pin the estimate to this rational");
  run->add_option("--phase-threshold", phase_threshold,
                  "dynrel: full (2+eps) or half (2+eps/2) pricing threshold")
      ->check(CLI::IsMember({"full", "half"}));
  run->add_flag("--eager-phase", eager_phase, "flexfit: start a phase whenever S is empty");
  run->add_flag("--no-opt", no_opt, "skip the brute-force optimum in the report");

  // opt
  auto* opt = app.add_subcommand("opt", "brute-force optimal makespan and witness");
  std::string opt_instance;
  std::uint64_t opt_budget = 16'000'000;
  opt->add_option("instance", opt_instance, "instance JSON file")->required();
  opt->add_option("--budget", opt_budget, "maximum m^n states");

  // verify
  auto* verify = app.add_subcommand("verify", "check a trace against the permissible actions");
  std::string verify_trace, verify_instance, verify_lambda;
  verify->add_option("trace", verify_trace, "trace CSV file")->required();
  verify->add_option("instance", verify_instance, "instance JSON file")->required();
  verify->add_option("--known-lambda", verify_lambda, "trace came from a pinned-estimate run");

  // adversary
  auto* adversary = app.add_subcommand("adversary", "lower-bound generators");
  adversary->require_subcommand(1);
  int adv_m = 2, adv_phases = 10, adv_jobs = 9, adv_samples = 200;
  std::string adv_eps = "1/10", adv_scheme = "zero", adv_out;
  std::uint64_t adv_seed = 0, adv_max_steps = 1'000'000;

  auto* det = adversary->add_subcommand("det", "deterministic unrelated-machines adversary");
  det->add_option("--m", adv_m, "machines")->required();
  det->add_option("--phases", adv_phases, "phases (m uniform jobs each)");
  det->add_option("--epsilon", adv_eps, "adversary epsilon");
  det->add_option("--scheme", adv_scheme, "zero|static:<pricefile>");
  det->add_option("--out", adv_out, "write the certified instance here");
  det->add_option("--max-steps", adv_max_steps, "abort after this many jobs");

  auto* rnd = adversary->add_subcommand("rand", "oblivious adversary via Monte-Carlo estimation");
  rnd->add_option("--m", adv_m, "machines")->required();
  rnd->add_option("--jobs", adv_jobs, "sequence length");
  rnd->add_option("--epsilon", adv_eps, "adversary epsilon");
  rnd->add_option("--samples", adv_samples, "Monte-Carlo simulations per job");
  rnd->add_option("--seed", adv_seed, "base seed");
  rnd->add_option("--scheme", adv_scheme, "zero|static:<pricefile>");
  rnd->add_option("--out", adv_out, "write the certified instance here");

  auto* flatten = adversary->add_subcommand("flatten", "price-flattening prefix construction");
  std::string flat_model = "identical", flat_speeds, flat_prices, flat_append, flat_out;
  int flat_m = 0;
  flatten->add_option("--model", flat_model, "identical|related|restricted|unrelated");
  flatten->add_option("--m", flat_m, "machines (non-related models)");
  flatten->add_option("--speeds", flat_speeds, "comma-separated speeds (related model)");
  flatten->add_option("--prices", flat_prices, "comma-separated static prices")->required();
  flatten->add_option("--append", flat_append, "append this instance's jobs after the prefix");
  flatten->add_option("--out", flat_out, "write the prefix instance here");

  auto* scale = adversary->add_subcommand("scale", "blow up job sizes past a price bound");
  std::string scale_instance_path, scale_bound = "0", scale_out;
  scale->add_option("--instance", scale_instance_path, "instance JSON file")->required();
  scale->add_option("--price-bound", scale_bound, "maximum absolute static price");
  scale->add_option("--out", scale_out, "write the scaled instance here");

  // bench
  auto* bench = app.add_subcommand("bench", "experiments");
  bench->require_subcommand(1);
  auto* table1 = bench->add_subcommand("table1", "empirical competitive-ratio table");
  int bench_trials = 200;
  std::uint64_t bench_seed = 1;
  std::string bench_out;
  bool bench_serial = false;
  table1->add_option("--trials", bench_trials, "random trials per model");
  table1->add_option("--seed", bench_seed, "base seed");
  table1->add_option("--out", bench_out, "also write the CSV here");
  table1->add_flag("--serial", bench_serial, "disable the OpenMP sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run)
      return cmd_run(scheme_spec, instance_path, ties_spec, trace_path, prices_log_path,
                     known_lambda, phase_threshold, eager_phase, !no_opt);
    if (*opt) return cmd_opt(opt_instance, opt_budget);
    if (*verify) return cmd_verify(verify_trace, verify_instance, verify_lambda);
    if (*det) {
      AdversaryConfig config;
      config.m = adv_m;
      config.phases = adv_phases;
      config.epsilon = Rational::parse(adv_eps);
      config.max_steps = adv_max_steps;
      auto scheme = make_adversary_scheme(adv_scheme, adv_m);
      LowerBoundReport report = run_det_lower_bound(*scheme, config);
      std::cout << "scheme_makespan: " << report.scheme_makespan.str() << "\n";
      std::cout << "witness_makespan: " << report.witness_makespan.str() << "\n";
      std::cout << "claimed_opt_bound: " << report.claimed_opt_bound.str() << "\n";
      std::cout << "ratio: " << (report.ratio ? report.ratio->str() : "n/a") << "\n";
      std::cout << "pair_jobs: " << report.pair_jobs << "\n";
      std::cout << "uniform_jobs: " << report.uniform_jobs << "\n";
      if (!adv_out.empty()) save_certified_file(report.certified, adv_out);
      return 0;
    }
    if (*rnd) {
      AdversaryConfig config;
      config.m = adv_m;
      config.jobs = adv_jobs;
      config.samples = adv_samples;
      config.seed = adv_seed;
      config.epsilon = Rational::parse(adv_eps);
      std::string spec = adv_scheme;
      int m = adv_m;
      SchemeFactory factory = [spec, m](std::uint64_t) {
        return make_adversary_scheme(spec, m);
      };
      CertifiedInstance certified =
          randomized_oblivious_instance(factory, config, ExecMode::parallel);
      std::cout << "jobs: " << certified.instance.n() << "\n";
      std::cout << "witness_makespan: " << certified.witness_makespan().str() << "\n";
      std::cout << "claimed_opt_bound: " << certified.claimed_opt_bound.str() << "\n";
      if (certified.witness_makespan() > certified.claimed_opt_bound) {
        std::cout << "witness INVALID\n";
        return 1;
      }
      if (!adv_out.empty()) save_certified_file(certified, adv_out);
      return 0;
    }
    if (*flatten) {
      MachineModel model;
      if (flat_model == "related") {
        model = MachineModel::related(parse_rational_list(flat_speeds));
      } else {
        ModelKind kind = model_kind_from_string(flat_model);
        if (flat_m < 1) throw ParseError("--m is required for non-related models");
        model = kind == ModelKind::Identical    ? MachineModel::identical(flat_m)
                : kind == ModelKind::Restricted ? MachineModel::restricted(flat_m)
                                                : MachineModel::unrelated(flat_m);
      }
      PriceVector prices = parse_rational_list(flat_prices);
      Instance prefix;
      prefix.model = model;
      prefix.jobs = flatten_prefix(prices, model);
      if (!flat_append.empty()) {
        Instance suffix = load_instance_file(flat_append);
        if (suffix.model.kind != model.kind || suffix.m() != model.m)
          throw ParseError("--append instance has a different machine model");
        prefix.jobs.insert(prefix.jobs.end(), suffix.jobs.begin(), suffix.jobs.end());
      }
      prefix.validate();
      StaticScheme scheme(model, prices);
      auto ties = lowest_index_ties();
      Instance prefix_only;
      prefix_only.model = model;
      prefix_only.jobs.assign(prefix.jobs.begin(), prefix.jobs.begin() + model.m);
      Trace trace = run_scheme(scheme, prefix_only, *ties);
      Rational pi_max(0);
      for (const Rational& p : prices) pi_max = max(pi_max, p);
      std::cout << "pi_max: " << pi_max.str() << "\n";
      for (int i = 0; i < model.m; ++i) {
        Rational flat = trace.steps.back().loads_after[i] + prices[i];
        std::cout << "machine " << i + 1 << ": load+price = " << flat.str()
                  << (flat == pi_max ? " (flat)" : " (NOT FLAT)") << "\n";
        if (flat != pi_max) return 1;
      }
      if (!flat_out.empty()) save_instance_file(prefix, flat_out);
      return 0;
    }
    if (*scale) {
      Instance instance = load_instance_file(scale_instance_path);
      ScaleReport report = pricesched::scale_instance(instance, Rational::parse(scale_bound));
      std::cout << "delta: " << report.delta.str() << "\n";
      std::cout << "factor: " << report.factor.str() << "\n";
      std::cout << "tie_steps:";
      for (int s : report.tie_steps) std::cout << ' ' << s;
      std::cout << "\n";
      if (!scale_out.empty()) save_instance_file(report.scaled, scale_out);
      return 0;
    }
    if (*table1) {
      TableConfig config;
      config.trials = bench_trials;
      config.seed = bench_seed;
      config.mode = bench_serial ? ExecMode::serial : ExecMode::parallel;
      std::string rendered = render_table(ratio_table_experiment(config));
      std::cout << rendered;
      if (!bench_out.empty()) {
        std::ofstream os(bench_out);
        if (!os) throw ParseError("cannot open output file: " + bench_out);
        os << rendered;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
