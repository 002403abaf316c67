#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pricesched/engine.hpp"
#include "pricesched/random_gen.hpp"
#include "pricesched/schedulers.hpp"

using namespace pricesched;
using pricesched::testing::R;
using pricesched::testing::three_speed_example;

TEST_CASE("new-phase estimate update") {
  CHECK(new_phase_factor(Rational(5), Rational(1), Rational(1)) == Rational(8));
  CHECK(new_phase_factor(R("3/2"), Rational(1), Rational(1)) == Rational(2));
  CHECK(new_phase_factor(R("1/8"), Rational(1), Rational(1)) == Rational(2));
  CHECK(new_phase_factor(Rational(0), Rational(1), Rational(1)) == Rational(2));
  CHECK(new_phase_factor(Rational(2), Rational(1), Rational(1)) == Rational(2));
  CHECK_THROWS_AS(new_phase_factor(Rational::inf(), Rational(1), Rational(1)), ArithmeticError);

  CHECK(pow2_at_least(Rational(5)) == Rational(8));
  CHECK(pow2_at_least(Rational(1)) == Rational(1));
  CHECK(pow2_at_least(R("1/3")) == R("1/2"));
  CHECK(pow2_at_least(Rational(8)) == Rational(8));
}

TEST_CASE("feasibility sets") {
  MachineModel model = MachineModel::related({Rational(1), Rational(2)});
  std::vector<Rational> virt = {Rational(0), Rational(3)};
  FeasibilitySets sets = compute_sets(model, virt, Rational(2), R("1/10"), Rational(2));
  CHECK(sets.T == std::vector<int>{0, 1});
  CHECK(sets.S == std::vector<int>{0, 1});
  CHECK(sets.k == 0);

  FeasibilitySets empty = compute_sets(model, {Rational(100), Rational(100)}, Rational(2),
                                       R("1/10"), Rational(1));
  CHECK(empty.S.empty());
  CHECK(empty.T.empty());
  CHECK(empty.k == 1);  // k = m when S is empty

  FeasibilitySets zero = compute_sets(model, virt, Rational(2), R("1/10"), Rational(0));
  CHECK(zero.S == std::vector<int>{0, 1});
  CHECK(zero.k == 0);
}

TEST_CASE("flexfit first job") {
  MachineModel model = MachineModel::related({Rational(1), Rational(2)});
  LoadState state(2);
  PhaseState phase;
  FlexFitAction action = flexfit_step(state, phase, JobProfile::sized(Rational(4)), model,
                                      R("1/10"));
  CHECK(action.machine == 1);
  CHECK(action.new_phase);
  CHECK(*phase.lambda == Rational(2));
  CHECK(state.loads()[1] == Rational(2));
  CHECK(state.virtual_loads()[1] == Rational(0));
}

TEST_CASE("flexfit starts a phase when T is empty") {
  MachineModel model = MachineModel::related({Rational(1), Rational(2)});
  LoadState state(2);
  PhaseState phase;
  phase.begin(Rational(2), 0);
  state.apply(0, R("39/10"), true);
  state.apply(1, R("39/10"), true);
  FlexFitAction action = flexfit_step(state, phase, JobProfile::sized(Rational(1)), model,
                                      R("1/10"));
  CHECK(action.new_phase);
  CHECK(action.machine == 1);
  CHECK(*phase.lambda == Rational(4));
  CHECK(state.virtual_loads() == std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("flexfit restricts to machines no faster than s_k") {
  MachineModel model = MachineModel::related({Rational(1), Rational(2)});
  LoadState state(2);
  PhaseState phase;
  phase.begin(Rational(2), 0);
  state.apply(1, Rational(3), true);
  FlexFitAction action = flexfit_step(state, phase, JobProfile::sized(Rational(2)), model,
                                      R("1/10"));
  CHECK_FALSE(action.new_phase);
  CHECK(action.machine == 0);  // k = machine 1, so only the speed-1 machine is eligible
  CHECK(state.virtual_loads()[0] == Rational(2));
}

TEST_CASE("greedy on the three-speed example") {
  Instance example = three_speed_example();
  auto ties = lowest_index_ties();
  Trace trace = run_greedy(example, *ties);
  for (const StepRecord& s : trace.steps) CHECK(s.chosen == 2);
  CHECK(trace.makespan() == R("135/68"));

  LoadState fresh(2);
  auto low = lowest_index_ties();
  CHECK(greedy_step(fresh, JobProfile::sized(Rational(1)), MachineModel::identical(2), *low) == 0);
}

TEST_CASE("slowfit reference run") {
  Instance example = three_speed_example();
  Trace trace = run_slowfit(example);
  CHECK(trace.steps[0].chosen == 2);
  CHECK(trace.steps[1].chosen == 1);
  CHECK(trace.steps[2].chosen == 2);
  CHECK(trace.makespan() == R("305/204"));
  CHECK(trace.steps[2].new_phase);  // lambda doubled once for the last job

  // Lowest-index feasible machine wins when both fit.
  SlowFit slowfit(MachineModel::related({Rational(1), Rational(2)}));
  CHECK(slowfit.step(JobProfile::sized(R("1/10"))) == 0);
}

TEST_CASE("phase estimates grow by powers of two and stay below twice the optimum") {
  std::mt19937_64 rng(23);
  RandomInstanceConfig config;
  for (int trial = 0; trial < 300; ++trial) {
    Instance instance = random_instance(ModelKind::Related, rng, config);
    LoadState state(instance.m());
    PhaseState phase;
    for (const JobProfile& job : instance.jobs)
      flexfit_step(state, phase, job, instance.model, instance.epsilon);
    for (std::size_t h = 1; h < phase.history.size(); ++h) {
      Rational ratio = phase.history[h].lambda / phase.history[h - 1].lambda;
      CHECK(ratio >= Rational(2));
      CHECK(pow2_at_least(ratio) == ratio);  // exact power of two
    }
    if (phase.lambda) CHECK(*phase.lambda <= Rational(2) * opt_bruteforce(instance).makespan);
  }
}

TEST_CASE("greedy equals the zero-price selfish run step for step") {
  std::mt19937_64 rng(29);
  RandomInstanceConfig config;
  const ModelKind kinds[] = {ModelKind::Identical, ModelKind::Related, ModelKind::Restricted,
                             ModelKind::Unrelated};
  for (int trial = 0; trial < 200; ++trial) {
    Instance instance = random_instance(kinds[trial % 4], rng, config);
    for (int policy = 0; policy < 2; ++policy) {
      auto tie_a = policy == 0 ? lowest_index_ties() : highest_index_ties();
      auto tie_b = policy == 0 ? lowest_index_ties() : highest_index_ties();
      Trace greedy = run_greedy(instance, *tie_a);
      StaticScheme zero = StaticScheme::zero(instance.model);
      Trace priced = run_scheme(zero, instance, *tie_b);
      REQUIRE(greedy.steps.size() == priced.steps.size());
      for (std::size_t s = 0; s < greedy.steps.size(); ++s)
        CHECK(greedy.steps[s].chosen == priced.steps[s].chosen);
    }
  }
}
