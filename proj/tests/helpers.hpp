#pragma once

#include "pricesched/model.hpp"

namespace pricesched::testing {

inline Rational R(const char* text) { return Rational::parse(text); }

// Three related machines with speeds 1/2, (1+eps)/2, 1+2eps and jobs of size
// (1+eps)/2, 1/2, 1+2eps: the optimum is exactly 1 (one job per machine at
// full speed) while greedy piles everything on the fastest machine.
inline Instance three_speed_example(const Rational& eps = Rational(1, 100)) {
  Rational one(1), two(2);
  std::vector<Rational> speeds = {Rational(1, 2), (one + eps) / two, one + two * eps};
  Instance instance;
  instance.model = MachineModel::related(speeds);
  instance.jobs = {JobProfile::sized(speeds[1]), JobProfile::sized(Rational(1, 2)),
                   JobProfile::sized(speeds[2])};
  instance.epsilon = eps;
  return instance;
}

}  // namespace pricesched::testing
