#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pricesched/adversary.hpp"
#include "pricesched/engine.hpp"
#include "pricesched/opt.hpp"
#include "pricesched/random_gen.hpp"

using namespace pricesched;
using pricesched::testing::R;

TEST_CASE("next lower-bound job") {
  Rational eps = R("1/10");
  AdversaryJob uniform = det_unrelated_next(std::vector<Rational>(3),
                                            PriceVector(3, Rational(0)), eps);
  CHECK(uniform.tag == AdversaryCase::uniform);
  CHECK(uniform.job.times == std::vector<Rational>{Rational(1), R("6/5"), R("6/5")});

  AdversaryJob pair = det_unrelated_next({Rational(1), Rational(0), Rational(0)},
                                         PriceVector(3, Rational(0)), eps);
  CHECK(pair.tag == AdversaryCase::pair);
  CHECK(pair.pair_target == 1);
  CHECK(pair.pair_free == 0);
  CHECK(pair.job.times == std::vector<Rational>{Rational(0), R("1/10"), Rational::inf()});

  AdversaryJob all_inf = det_unrelated_next(std::vector<Rational>(3),
                                            PriceVector(3, Rational::inf()), eps);
  CHECK(all_inf.tag == AdversaryCase::uniform);
}

TEST_CASE("deterministic lower bound against zero prices") {
  AdversaryConfig config;
  config.m = 5;
  config.phases = 10;
  StaticScheme zero = StaticScheme::zero(MachineModel::unrelated(5));
  LowerBoundReport report = run_det_lower_bound(zero, config);
  CHECK(report.scheme_makespan >= Rational(50));
  CHECK(report.witness_makespan == Rational(12));
  CHECK(report.claimed_opt_bound == Rational(12));
  CHECK(*report.ratio >= R("25/6"));
  CHECK(report.uniform_jobs == 50);
  CHECK(report.certified.witness_makespan() <= report.claimed_opt_bound);

  AdversaryConfig tiny;
  tiny.m = 1;
  tiny.phases = 4;
  StaticScheme zero1 = StaticScheme::zero(MachineModel::unrelated(1));
  LowerBoundReport single = run_det_lower_bound(zero1, tiny);
  CHECK(*single.ratio == Rational(1));

  AdversaryConfig small;
  small.m = 2;
  small.phases = 1;
  StaticScheme zero2 = StaticScheme::zero(MachineModel::unrelated(2));
  LowerBoundReport two = run_det_lower_bound(zero2, small);
  CHECK(two.scheme_makespan >= Rational(2));
  CHECK(two.witness_makespan <= R("6/5"));
}

TEST_CASE("certified file round trip") {
  AdversaryConfig config;
  config.m = 3;
  config.phases = 2;
  StaticScheme zero = StaticScheme::zero(MachineModel::unrelated(3));
  LowerBoundReport report = run_det_lower_bound(zero, config);
  std::string text = certified_to_json_text(report.certified);
  CertifiedInstance back = parse_certified(text);
  CHECK(back.witness == report.certified.witness);
  CHECK(back.claimed_opt_bound == report.certified.claimed_opt_bound);
  CHECK(back.witness_makespan() == report.certified.witness_makespan());
  CHECK(back.instance.n() == report.certified.instance.n());
}

TEST_CASE("oblivious construction degenerates to the deterministic one") {
  AdversaryConfig det_config;
  det_config.m = 3;
  det_config.phases = 2;
  StaticScheme zero = StaticScheme::zero(MachineModel::unrelated(3));
  LowerBoundReport det = run_det_lower_bound(zero, det_config);

  AdversaryConfig rand_config;
  rand_config.m = 3;
  rand_config.jobs = det.certified.instance.n();
  rand_config.samples = 5;
  auto factory = [](std::uint64_t) {
    return std::make_unique<StaticScheme>(StaticScheme::zero(MachineModel::unrelated(3)));
  };
  CertifiedInstance oblivious = randomized_oblivious_instance(factory, rand_config);
  REQUIRE(oblivious.instance.n() == det.certified.instance.n());
  for (int j = 0; j < oblivious.instance.n(); ++j)
    CHECK(oblivious.instance.jobs[j].times == det.certified.instance.jobs[j].times);
  CHECK(oblivious.witness == det.certified.witness);
}

TEST_CASE("oblivious construction is seed-stable and witness-valid") {
  auto factory = [](std::uint64_t) {
    return std::make_unique<StaticScheme>(StaticScheme::zero(MachineModel::unrelated(3)));
  };
  AdversaryConfig config;
  config.m = 3;
  config.jobs = 9;
  config.samples = 100;
  config.seed = 1;
  CertifiedInstance a = randomized_oblivious_instance(factory, config);
  config.seed = 999;
  CertifiedInstance b = randomized_oblivious_instance(factory, config);
  REQUIRE(a.instance.n() == b.instance.n());
  int uniform_jobs = 0;
  for (int j = 0; j < a.instance.n(); ++j) {
    CHECK(a.instance.jobs[j].times == b.instance.jobs[j].times);
    bool has_inf = false;
    for (const Rational& t : a.instance.jobs[j].times) has_inf = has_inf || t.is_inf();
    if (!has_inf) ++uniform_jobs;
  }
  int groups = (uniform_jobs + config.m - 1) / config.m;
  CHECK(a.witness_makespan() <= (Rational(1) + Rational(2) * config.epsilon) * Rational(groups));
  CHECK(a.claimed_opt_bound == (Rational(1) + Rational(2) * config.epsilon) * Rational(groups));
}

TEST_CASE("flattening constructions") {
  PriceVector prices = {Rational(3), Rational(1), Rational(2)};

  std::vector<JobProfile> identical = flatten_prefix(prices, MachineModel::identical(3));
  CHECK(identical[0].size == Rational(2));
  CHECK(identical[1].size == Rational(1));
  CHECK(identical[2].size == Rational(0));

  std::vector<JobProfile> unrelated = flatten_prefix(prices, MachineModel::unrelated(3));
  CHECK(unrelated[0].times == std::vector<Rational>{Rational(0), Rational::inf(), Rational::inf()});
  CHECK(unrelated[1].times == std::vector<Rational>{Rational::inf(), Rational(2), Rational::inf()});
  CHECK(unrelated[2].times == std::vector<Rational>{Rational::inf(), Rational::inf(), Rational(1)});

  for (const JobProfile& job : flatten_prefix(PriceVector(3, Rational(7)),
                                              MachineModel::identical(3)))
    CHECK(job.size == Rational(0));

  CHECK_THROWS_AS(flatten_prefix({Rational(1), Rational::inf()}, MachineModel::identical(2)),
                  AdversaryError);
}

TEST_CASE("flattening equalizes load plus price in every model") {
  std::mt19937_64 rng(71);
  RandomInstanceConfig config;
  const ModelKind kinds[] = {ModelKind::Identical, ModelKind::Related, ModelKind::Restricted,
                             ModelKind::Unrelated};
  for (int trial = 0; trial < 200; ++trial) {
    Instance shape = random_instance(kinds[trial % 4], rng, config);
    PriceVector prices = random_finite_prices(rng, shape.m(), 16);
    Rational pi_max(0);
    for (const Rational& p : prices) pi_max = max(pi_max, p);

    Instance prefix;
    prefix.model = shape.model;
    prefix.jobs = flatten_prefix(prices, shape.model);
    StaticScheme scheme(shape.model, prices);
    auto ties = lowest_index_ties();
    Trace trace = run_scheme(scheme, prefix, *ties);
    REQUIRE(trace.steps.size() == static_cast<std::size_t>(shape.m()));
    for (int i = 0; i < shape.m(); ++i)
      CHECK(trace.steps.back().loads_after[i] + prices[i] == pi_max);
  }
}

TEST_CASE("after flattening the static run mirrors greedy") {
  std::mt19937_64 rng(73);
  RandomInstanceConfig config;
  config.min_machines = 2;
  const ModelKind kinds[] = {ModelKind::Identical, ModelKind::Related, ModelKind::Restricted,
                             ModelKind::Unrelated};
  for (int trial = 0; trial < 200; ++trial) {
    Instance suffix = random_instance(kinds[trial % 4], rng, config);
    PriceVector prices = random_finite_prices(rng, suffix.m(), 16);

    Instance combined;
    combined.model = suffix.model;
    combined.jobs = flatten_prefix(prices, suffix.model);
    const int prefix_len = combined.n();
    combined.jobs.insert(combined.jobs.end(), suffix.jobs.begin(), suffix.jobs.end());

    StaticScheme scheme(suffix.model, prices);
    auto static_ties = lowest_index_ties();
    Trace static_trace = run_scheme(scheme, combined, *static_ties);

    // Compare machine-for-machine until the first greedy tie.
    LoadState greedy_state(suffix.m());
    auto greedy_ties = lowest_index_ties();
    for (int j = 0; j < suffix.n(); ++j) {
      const JobProfile& job = suffix.jobs[j];
      std::vector<Rational> totals;
      int finite_minima = 0;
      Rational best = Rational::inf();
      for (int i = 0; i < suffix.m(); ++i) {
        Rational p = processing_time(suffix.model, job, i);
        Rational total = p.is_inf() ? Rational::inf() : greedy_state.loads()[i] + p;
        if (total < best) best = total;
        totals.push_back(std::move(total));
      }
      for (const Rational& t : totals) finite_minima += (t == best && !t.is_inf()) ? 1 : 0;
      if (finite_minima != 1) break;  // tie: the equivalence is only claimed for strict argmins
      int greedy_choice = greedy_step(greedy_state, job, suffix.model, *greedy_ties);
      CHECK(static_trace.steps[prefix_len + j].chosen == greedy_choice);
      greedy_state.apply(greedy_choice, processing_time(suffix.model, job, greedy_choice), false);
    }
  }
}

TEST_CASE("scaling makes prices negligible") {
  Instance instance;
  instance.model = MachineModel::unrelated(2);
  instance.jobs.push_back(JobProfile::unrelated({Rational(0), R("1/4")}));
  ScaleReport report = scale_instance(instance, Rational(10));
  CHECK(report.delta == R("1/4"));
  CHECK(report.factor == Rational(256));  // 128 * 1/4 = 32 <= 40 < 64 = 256 * 1/4
  CHECK(report.scaled.jobs[0].times[1] == Rational(64));
  CHECK(report.tie_steps.empty());

  CHECK(scale_instance(instance, Rational(0)).factor == Rational(1));
  CHECK(scale_instance(instance, R("1/100")).factor == Rational(1));  // already separated

  Instance degenerate;
  degenerate.model = MachineModel::identical(2);
  degenerate.jobs = {JobProfile::sized(Rational(0)), JobProfile::sized(Rational(0))};
  CHECK_THROWS_AS(scale_instance(degenerate, Rational(1)), AdversaryError);
  ScaleReport flagged = scale_instance(degenerate, Rational(0));
  CHECK(flagged.tie_steps == std::vector<int>{1, 2});
}

TEST_CASE("scaling preserves strict greedy choices") {
  std::mt19937_64 rng(79);
  RandomInstanceConfig config;
  config.min_machines = 2;
  for (int trial = 0; trial < 100; ++trial) {
    Instance instance = random_instance(ModelKind::Related, rng, config);
    ScaleReport report = [&]() -> ScaleReport {
      try {
        return scale_instance(instance, Rational(5));
      } catch (const AdversaryError&) {
        return scale_instance(instance, Rational(0));
      }
    }();
    if (!report.tie_steps.empty()) continue;
    auto tie_a = lowest_index_ties();
    auto tie_b = lowest_index_ties();
    Trace before = run_greedy(instance, *tie_a);
    Trace after = run_greedy(report.scaled, *tie_b);
    for (std::size_t s = 0; s < before.steps.size(); ++s)
      CHECK(before.steps[s].chosen == after.steps[s].chosen);
  }
}
