#pragma once

#include <random>

#include "pricesched/agent.hpp"
#include "pricesched/model.hpp"

namespace pricesched {

// Desk-scale random instances: sizes, speeds and prices are rationals with
// numerator/denominator bounded by max_numden so exact arithmetic stays small.
struct RandomInstanceConfig {
  int min_machines = 1;
  int max_machines = 4;
  int min_jobs = 1;
  int max_jobs = 10;
  long max_numden = 64;
  Rational epsilon{1, 10};
  int zero_size_percent = 5;  // chance of a zero-size job, in percent
};

Rational random_rational(std::mt19937_64& rng, long max_numden, bool allow_zero);

Instance random_instance(ModelKind kind, std::mt19937_64& rng,
                         const RandomInstanceConfig& config = {});

PriceVector random_finite_prices(std::mt19937_64& rng, int m, long max_numden);

}  // namespace pricesched
