#pragma once

#include <cstdint>
#include <vector>

#include "pricesched/model.hpp"

namespace pricesched {

struct OptBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OptResult {
  enum class Method { BruteForce, BoundOnly };
  Rational makespan;
  std::vector<int> witness;  // job -> machine (0-based); empty when BoundOnly
  Method method = Method::BruteForce;
};

// Exact minimum makespan over all m^n assignments, branch-and-bound pruned.
// The witness is deterministic: lexicographically smallest (in arrival order)
// among all optimal assignments. Rejects instances with m^n beyond the budget.
OptResult opt_bruteforce(const Instance& instance, std::uint64_t budget = 16'000'000);

// max( max_j min_i p_ij , sum_j p_j / sum_i s_i for related/identical );
// always <= the brute-force optimum.
Rational opt_lower_bound(const Instance& instance);

// Makespan of a fixed job -> machine assignment (exact; inf entries rejected).
Rational assignment_makespan(const Instance& instance, const std::vector<int>& assignment);

}  // namespace pricesched
