#include "pricesched/engine.hpp"

namespace pricesched {

Trace run_scheme(PricingScheme& scheme, const Instance& instance, TieBreaker& ties) {
  instance.validate();
  Trace trace;
  trace.model = instance.model.kind;
  trace.m = instance.m();
  LoadState state(instance.m());

  for (int j = 0; j < instance.n(); ++j) {
    const JobProfile& job = instance.jobs[j];
    StepRecord rec;
    rec.step = j + 1;
    rec.job = j + 1;
    rec.prices = scheme.post_prices();
    rec.costs = agent_costs(state.loads(), *rec.prices, instance.model, job);
    rec.chosen = agent_choose(*rec.costs, ties);
    Rational p = processing_time(instance.model, job, rec.chosen);
    if (p.is_inf())
      throw ModelError("agent ended up on a machine with infinite processing time");
    state.apply(rec.chosen, p, false);
    scheme.observe_choice(rec.chosen, p);
    rec.new_phase = scheme.last_observe_started_phase();
    rec.lambda = scheme.lambda();
    rec.loads_after = state.loads();
    if (const std::vector<Rational>* virt = scheme.virtual_loads())
      rec.virtual_after = *virt;
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

Trace run_greedy(const Instance& instance, TieBreaker& ties) {
  instance.validate();
  Trace trace;
  trace.model = instance.model.kind;
  trace.m = instance.m();
  LoadState state(instance.m());
  PriceVector zeros(instance.m(), Rational(0));

  for (int j = 0; j < instance.n(); ++j) {
    const JobProfile& job = instance.jobs[j];
    StepRecord rec;
    rec.step = j + 1;
    rec.job = j + 1;
    rec.prices = zeros;
    rec.costs = agent_costs(state.loads(), zeros, instance.model, job);
    rec.chosen = greedy_step(state, job, instance.model, ties);
    state.apply(rec.chosen, processing_time(instance.model, job, rec.chosen), false);
    rec.loads_after = state.loads();
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

Trace run_flexfit(const Instance& instance, const FlexFitOptions& options) {
  instance.validate();
  Trace trace;
  trace.model = instance.model.kind;
  trace.m = instance.m();
  LoadState state(instance.m());
  PhaseState phase;

  for (int j = 0; j < instance.n(); ++j) {
    StepRecord rec;
    rec.step = j + 1;
    rec.job = j + 1;
    FlexFitAction action =
        flexfit_step(state, phase, instance.jobs[j], instance.model, instance.epsilon, options);
    rec.chosen = action.machine;
    rec.new_phase = action.new_phase;
    rec.lambda = phase.lambda;
    rec.loads_after = state.loads();
    rec.virtual_after = state.virtual_loads();
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

Trace run_slowfit(const Instance& instance) {
  instance.validate();
  Trace trace;
  trace.model = instance.model.kind;
  trace.m = instance.m();
  SlowFit slowfit(instance.model);

  for (int j = 0; j < instance.n(); ++j) {
    StepRecord rec;
    rec.step = j + 1;
    rec.job = j + 1;
    std::optional<Rational> before = slowfit.lambda();
    rec.chosen = slowfit.step(instance.jobs[j]);
    rec.lambda = slowfit.lambda();
    rec.new_phase = rec.lambda != before;
    rec.loads_after = slowfit.state().loads();
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

std::string RunReport::ratio_str() const {
  if (ratio) return ratio->str();
  if (opt_bound && opt_bound->sign() > 0) return ">=" + (makespan / *opt_bound).str();
  return "n/a";
}

RunReport make_report(std::string scheme_id, std::string instance_id, std::string tie_policy,
                      const Trace& trace, const Instance& instance, bool with_opt,
                      std::uint64_t opt_budget) {
  RunReport report;
  report.scheme_id = std::move(scheme_id);
  report.instance_id = std::move(instance_id);
  report.tie_policy = std::move(tie_policy);
  report.makespan = trace.makespan();
  report.phase_count = trace.phase_events();
  if (with_opt) {
    try {
      report.opt = opt_bruteforce(instance, opt_budget);
      if (report.opt->makespan.sign() > 0) report.ratio = report.makespan / report.opt->makespan;
    } catch (const OptBudgetExceeded&) {
      report.opt_bound = opt_lower_bound(instance);
    }
  }
  return report;
}

}  // namespace pricesched
