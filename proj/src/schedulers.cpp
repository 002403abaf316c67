#include "pricesched/schedulers.hpp"

namespace pricesched {

void PhaseState::begin(const Rational& initial_lambda, int job) {
  lambda = initial_lambda;
  phase_index = 1;
  history.push_back({phase_index, initial_lambda, job});
}

void PhaseState::advance(const Rational& p, const Rational& fastest_speed, int job) {
  if (!lambda) throw ModelError("phase advance before lambda initialization");
  *lambda *= new_phase_factor(p, fastest_speed, *lambda);
  ++phase_index;
  history.push_back({phase_index, *lambda, job});
}

Rational pow2_at_least(const Rational& x) {
  if (x.is_inf() || x.sign() <= 0) throw ArithmeticError("pow2_at_least needs finite x > 0");
  Rational pow(1);
  while (pow < x) pow *= Rational(2);
  while (pow / Rational(2) >= x) pow /= Rational(2);
  return pow;
}

Rational new_phase_factor(const Rational& p, const Rational& fastest_speed,
                          const Rational& lambda) {
  if (p.is_inf()) throw ArithmeticError("New-Phase with infinite job size");
  if (lambda.sign() <= 0) throw ArithmeticError("New-Phase needs lambda > 0");
  Rational x = p / (fastest_speed * lambda);
  if (x <= Rational(2)) return Rational(2);
  return pow2_at_least(x);
}

FeasibilitySets compute_sets(const MachineModel& model, const std::vector<Rational>& virtual_loads,
                             const Rational& lambda, const Rational& eps, const Rational& p) {
  if (!model.has_speeds()) throw ModelError("feasibility sets need a speed-carrying model");
  FeasibilitySets sets;
  Rational loose = (Rational(2) + eps) * lambda;
  Rational tight = Rational(2) * lambda;
  for (int i = 0; i < model.m; ++i) {
    if (p.is_inf()) continue;
    Rational projected = virtual_loads.at(i) + p / model.speed(i);
    if (projected <= loose) sets.T.push_back(i);
    if (projected <= tight) sets.S.push_back(i);
  }
  sets.k = sets.S.empty() ? model.m - 1 : sets.S.front();
  return sets;
}

FlexFitAction flexfit_step(LoadState& state, PhaseState& phase, const JobProfile& job,
                           const MachineModel& model, const Rational& eps,
                           const FlexFitOptions& options) {
  int job_index = static_cast<int>(state.assignment().size());

  // Until a positive job arrives there is no estimate: such jobs go to a
  // fastest machine and are skipped for lambda initialization.
  if (!phase.lambda) {
    int target = representative(model, state.virtual_loads(), model.m - 1);
    state.apply(target, processing_time(model, job, target), false);
    if (job.size.sign() > 0) {
      phase.begin(job.size / model.fastest_speed(), job_index);
      state.reset_virtual();
      return {target, true};
    }
    return {target, false};
  }

  FeasibilitySets sets = compute_sets(model, state.virtual_loads(), *phase.lambda, eps, job.size);

  bool start_phase = sets.T.empty() || (sets.S.empty() && options.eager_phase);
  if (start_phase) {
    int target = representative(model, state.virtual_loads(), model.m - 1);
    state.apply(target, processing_time(model, job, target), false);
    phase.advance(job.size, model.fastest_speed(), job_index);
    state.reset_virtual();
    return {target, true};
  }

  // Assign to a representative r_i with i in T and s_i <= s_k. T is ordered by
  // machine index (hence by speed), so its front is the slowest eligible
  // machine and is always <= s_k because S is a subset of T.
  int target = representative(model, state.virtual_loads(), sets.T.front());
  state.apply(target, processing_time(model, job, target), true);
  return {target, false};
}

int greedy_step(const LoadState& state, const JobProfile& job, const MachineModel& model,
                TieBreaker& ties) {
  const std::vector<Rational>& loads = state.loads();
  Rational best = Rational::inf();
  bool best_finite = false;
  std::vector<Rational> totals;
  totals.reserve(model.m);
  for (int i = 0; i < model.m; ++i) {
    Rational p = processing_time(model, job, i);
    Rational total = p.is_inf() ? Rational::inf() : loads[i] + p;
    if (!total.is_inf() && (!best_finite || total < best)) {
      best = total;
      best_finite = true;
    }
    totals.push_back(std::move(total));
  }
  std::vector<int> tied;
  for (int i = 0; i < model.m; ++i)
    if (totals[i] == best) tied.push_back(i);
  if (tied.size() == 1) return tied.front();
  return ties.pick(tied);
}

SlowFit::SlowFit(const MachineModel& model) : model_(model), state_(model.m) {
  if (!model.has_speeds()) throw ModelError("Slow-Fit needs a speed-carrying model");
}

int SlowFit::step(const JobProfile& job) {
  if (!lambda_ && job.size.sign() > 0) lambda_ = job.size / model_.fastest_speed();
  if (!lambda_) {  // zero-size prefix: every zero-load machine fits trivially
    state_.apply(0, Rational(0), false);
    return 0;
  }
  for (;;) {
    Rational cap = Rational(2) * *lambda_;
    for (int i = 0; i < model_.m; ++i) {
      if (state_.loads()[i] + job.size / model_.speed(i) <= cap) {
        state_.apply(i, processing_time(model_, job, i), false);
        return i;
      }
    }
    *lambda_ *= Rational(2);
  }
}

}  // namespace pricesched
