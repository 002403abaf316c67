#pragma once

#include <string>

#include "pricesched/opt.hpp"
#include "pricesched/pricing.hpp"
#include "pricesched/schedulers.hpp"
#include "pricesched/trace.hpp"

namespace pricesched {

// Posted-price loop: the scheme posts, the selfish agent picks an argmin of
// load + processing + price, the scheme observes the resulting load increase.
Trace run_scheme(PricingScheme& scheme, const Instance& instance, TieBreaker& ties);

Trace run_greedy(const Instance& instance, TieBreaker& ties);
Trace run_flexfit(const Instance& instance, const FlexFitOptions& options = {});
Trace run_slowfit(const Instance& instance);

struct RunReport {
  std::string scheme_id;
  std::string instance_id;
  std::string tie_policy;
  Rational makespan;
  std::optional<OptResult> opt;          // exact optimum when within budget
  std::optional<Rational> opt_bound;     // lower bound otherwise
  std::optional<Rational> ratio;         // makespan / opt when exact and opt > 0
  int phase_count = 0;
  std::string trace_path;

  std::string ratio_str() const;
};

RunReport make_report(std::string scheme_id, std::string instance_id, std::string tie_policy,
                      const Trace& trace, const Instance& instance, bool with_opt,
                      std::uint64_t opt_budget = 16'000'000);

}  // namespace pricesched
