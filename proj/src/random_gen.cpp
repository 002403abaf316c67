#include "pricesched/random_gen.hpp"

#include <algorithm>

namespace pricesched {

Rational random_rational(std::mt19937_64& rng, long max_numden, bool allow_zero) {
  std::uniform_int_distribution<long> num(allow_zero ? 0 : 1, max_numden);
  std::uniform_int_distribution<long> den(1, max_numden);
  return Rational(num(rng), den(rng));
}

Instance random_instance(ModelKind kind, std::mt19937_64& rng,
                         const RandomInstanceConfig& config) {
  std::uniform_int_distribution<int> machines(config.min_machines, config.max_machines);
  std::uniform_int_distribution<int> jobs(config.min_jobs, config.max_jobs);
  std::uniform_int_distribution<int> percent(0, 99);

  Instance instance;
  instance.epsilon = config.epsilon;
  const int m = machines(rng);
  const int n = jobs(rng);

  switch (kind) {
    case ModelKind::Identical: instance.model = MachineModel::identical(m); break;
    case ModelKind::Related: {
      std::vector<Rational> speeds;
      for (int i = 0; i < m; ++i) speeds.push_back(random_rational(rng, config.max_numden, false));
      std::sort(speeds.begin(), speeds.end());
      instance.model = MachineModel::related(std::move(speeds));
      break;
    }
    case ModelKind::Restricted: instance.model = MachineModel::restricted(m); break;
    case ModelKind::Unrelated: instance.model = MachineModel::unrelated(m); break;
  }

  auto random_size = [&]() {
    if (percent(rng) < config.zero_size_percent) return Rational(0);
    return random_rational(rng, config.max_numden, false);
  };

  for (int j = 0; j < n; ++j) {
    switch (kind) {
      case ModelKind::Identical:
      case ModelKind::Related:
        instance.jobs.push_back(JobProfile::sized(random_size()));
        break;
      case ModelKind::Restricted: {
        std::vector<int> allowed;
        for (int i = 0; i < m; ++i)
          if (percent(rng) < 50) allowed.push_back(i);
        if (allowed.empty()) allowed.push_back(std::uniform_int_distribution<int>(0, m - 1)(rng));
        instance.jobs.push_back(JobProfile::restricted(random_size(), std::move(allowed)));
        break;
      }
      case ModelKind::Unrelated: {
        std::vector<Rational> times(m);
        for (int i = 0; i < m; ++i)
          times[i] = percent(rng) < 30 ? Rational::inf()
                                       : random_rational(rng, config.max_numden, true);
        bool any_finite = false;
        for (const Rational& t : times) any_finite = any_finite || !t.is_inf();
        if (!any_finite)
          times[std::uniform_int_distribution<int>(0, m - 1)(rng)] =
              random_rational(rng, config.max_numden, true);
        instance.jobs.push_back(JobProfile::unrelated(std::move(times)));
        break;
      }
    }
  }
  instance.validate();
  return instance;
}

PriceVector random_finite_prices(std::mt19937_64& rng, int m, long max_numden) {
  PriceVector prices;
  prices.reserve(m);
  for (int i = 0; i < m; ++i) prices.push_back(random_rational(rng, max_numden, true));
  return prices;
}

}  // namespace pricesched
