#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pricesched/model.hpp"
#include "pricesched/random_gen.hpp"

using namespace pricesched;
using pricesched::testing::R;
using pricesched::testing::three_speed_example;

TEST_CASE("processing_time per model") {
  Instance example = three_speed_example();
  CHECK(processing_time(example.model, JobProfile::sized(R("1/2")), 1) == R("100/101"));

  MachineModel identical = MachineModel::identical(3);
  CHECK(processing_time(identical, JobProfile::sized(Rational(7)), 2) == Rational(7));

  MachineModel restricted = MachineModel::restricted(2);
  JobProfile job = JobProfile::restricted(Rational(3), {1});
  CHECK(processing_time(restricted, job, 0).is_inf());
  CHECK(processing_time(restricted, job, 1) == Rational(3));
}

TEST_CASE("load bookkeeping") {
  LoadState state(2);
  state.apply(1, Rational(3), false);
  CHECK(state.loads() == std::vector<Rational>{Rational(0), Rational(3)});

  LoadState with_virtual(2);
  with_virtual.apply(0, Rational(1), false);
  with_virtual.apply(1, Rational(2), false);
  with_virtual.apply(0, Rational(1), true);
  CHECK(with_virtual.loads() == std::vector<Rational>{Rational(2), Rational(2)});
  CHECK(with_virtual.virtual_loads() == std::vector<Rational>{Rational(1), Rational(0)});
  CHECK(with_virtual.assignment() == std::vector<int>{0, 1, 0});

  CHECK_THROWS_AS(state.apply(0, Rational::inf(), false), ModelError);
}

TEST_CASE("representative resolution") {
  MachineModel model = MachineModel::related({Rational(1), Rational(1), Rational(2)});
  std::vector<Rational> virt = {Rational(5), Rational(3), Rational(0)};
  CHECK(representative(model, virt, 0) == 1);  // min virtual load in the speed-1 class
  MachineModel two = MachineModel::related({Rational(1), Rational(2)});
  CHECK(representative(two, {Rational(9), Rational(9)}, 1) == 1);  // unique speed
  MachineModel equal = MachineModel::related({Rational(1), Rational(1)});
  CHECK(representative(equal, {Rational(4), Rational(4)}, 1) == 0);  // lowest index tie-break
}

TEST_CASE("representative always has the same speed") {
  std::mt19937_64 rng(11);
  RandomInstanceConfig config;
  for (int trial = 0; trial < 200; ++trial) {
    Instance instance = random_instance(ModelKind::Related, rng, config);
    std::vector<Rational> virt;
    for (int i = 0; i < instance.m(); ++i) virt.push_back(random_rational(rng, 32, true));
    for (int i = 0; i < instance.m(); ++i) {
      int rep = representative(instance.model, virt, i);
      CHECK(instance.model.speed(rep) == instance.model.speed(i));
      CHECK(virt[rep] <= virt[i]);
    }
  }
}

TEST_CASE("validation rejects malformed inputs") {
  CHECK_THROWS_AS(MachineModel::related({Rational(2), Rational(1)}), ModelError);
  CHECK_THROWS_AS(MachineModel::identical(0), ModelError);
  CHECK_THROWS_AS(MachineModel::related({Rational(0)}), ModelError);

  Instance no_finite;
  no_finite.model = MachineModel::unrelated(2);
  no_finite.jobs.push_back(JobProfile::unrelated({Rational::inf(), Rational::inf()}));
  CHECK_THROWS_AS(no_finite.validate(), ModelError);

  Instance bad_eps = three_speed_example();
  bad_eps.epsilon = Rational(0);
  CHECK_THROWS_AS(bad_eps.validate(), ModelError);
}
