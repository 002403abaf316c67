#include "pricesched/table1.hpp"

#include <sstream>

#include "pricesched/adversary.hpp"
#include "pricesched/engine.hpp"
#include "pricesched/opt.hpp"

namespace pricesched {

namespace {

struct TrialRatios {
  bool ok = false;
  std::string error;
  bool usable = false;  // opt > 0
  Rational greedy;
  Rational flexfit;
  Rational dynrel;
  bool speeds = false;
};

TrialRatios ratio_trial(ModelKind kind, std::uint64_t seed, const RandomInstanceConfig& gen) {
  TrialRatios out;
  try {
    std::mt19937_64 rng(seed);
    Instance instance = random_instance(kind, rng, gen);
    OptResult opt = opt_bruteforce(instance);
    out.ok = true;
    if (opt.makespan.sign() <= 0) return out;  // degenerate all-zero instance
    out.usable = true;
    auto ties = lowest_index_ties();
    out.greedy = run_greedy(instance, *ties).makespan() / opt.makespan;
    if (instance.model.has_speeds()) {
      out.speeds = true;
      out.flexfit = run_flexfit(instance).makespan() / opt.makespan;
      DynamicRelatedScheme scheme(instance.model, instance.epsilon);
      out.dynrel = run_scheme(scheme, instance, *ties).makespan() / opt.makespan;
    }
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

void max_into(std::vector<TableRow>& rows, const std::string& model, const std::string& scheme,
              const std::string& params, const Rational& ratio) {
  for (TableRow& row : rows) {
    if (row.model == model && row.scheme == scheme && row.params == params) {
      row.max_ratio = max(row.max_ratio, ratio);
      return;
    }
  }
  rows.push_back({model, scheme, params, ratio});
}

}  // namespace

std::vector<TableRow> ratio_table_experiment(const TableConfig& config) {
  std::vector<TableRow> rows;
  const ModelKind kinds[] = {ModelKind::Identical, ModelKind::Related, ModelKind::Restricted,
                             ModelKind::Unrelated};
  for (ModelKind kind : kinds) {
    auto trial = [&](std::size_t t) {
      return ratio_trial(kind, mix_seed(config.seed, t), config.gen);
    };
    std::vector<TrialRatios> results =
        run_trials<TrialRatios>(static_cast<std::size_t>(config.trials), config.mode, trial);
    std::string model = to_string(kind);
    std::string params =
        "trials=" + std::to_string(config.trials) + " seed=" + std::to_string(config.seed);
    for (const TrialRatios& r : results) {
      if (!r.ok) throw ModelError("ratio trial failed: " + r.error);
      if (!r.usable) continue;
      max_into(rows, model, "greedy", params, r.greedy);
      if (r.speeds) {
        max_into(rows, model, "flexfit", params, r.flexfit);
        max_into(rows, model, "dynrel", params, r.dynrel);
      }
    }
  }

  // Exact adversarial ratios against the zero-price scheme per machine count.
  for (int m = config.adversary_min_m; m <= config.adversary_max_m; ++m) {
    AdversaryConfig adv;
    adv.m = m;
    adv.phases = config.adversary_phases;
    StaticScheme zero = StaticScheme::zero(MachineModel::unrelated(m));
    LowerBoundReport report = run_det_lower_bound(zero, adv);
    rows.push_back({"unrelated", "zero-static-vs-adversary",
                    "m=" + std::to_string(m) + " phases=" + std::to_string(adv.phases),
                    report.ratio.value_or(Rational(1))});
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "model,scheme,params,max_ratio,max_ratio_approx\n";
  for (const TableRow& row : rows) {
    os << row.model << ',' << row.scheme << ',' << row.params << ',' << row.max_ratio.str() << ','
       << row.max_ratio.approx() << '\n';
  }
  return os.str();
}

}  // namespace pricesched
