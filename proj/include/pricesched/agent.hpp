#pragma once

#include <deque>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pricesched/model.hpp"

namespace pricesched {

struct TiePolicyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One price per machine, posted before the arrival. inf means "never choose".
using PriceVector = std::vector<Rational>;
// c_i = l_i(j-1) + p_ij + pi_ij, computed exactly.
using CostVector = std::vector<Rational>;

// Resolves exact cost ties. pick() receives the set of argmin machines
// (0-based, ascending, nonempty) and must return one of them. When every
// machine has cost inf the tie set is the full machine set.
class TieBreaker {
 public:
  virtual ~TieBreaker() = default;
  virtual int pick(const std::vector<int>& tied) = 0;
  virtual std::string name() const = 0;
};

std::unique_ptr<TieBreaker> lowest_index_ties();
std::unique_ptr<TieBreaker> highest_index_ties();
// Prefers machine 1 whenever it is tied (and in particular when all costs are inf).
std::unique_ptr<TieBreaker> prefer_machine_one_ties();
// Consumes one 0-based entry per genuine tie; throws when exhausted or when an
// entry is not in the tie set.
std::unique_ptr<TieBreaker> scripted_ties(std::deque<int> picks);
// Arbitrary tie-breaking for lower-bound experiments; the callback must return
// a member of the tie set (validated).
std::unique_ptr<TieBreaker> adversarial_ties(std::function<int(const std::vector<int>&)> fn,
                                             std::string label = "adversarial");

CostVector agent_costs(const std::vector<Rational>& loads, const PriceVector& prices,
                       const MachineModel& model, const JobProfile& job);

// The selfish choice: an argmin of the cost vector, ties resolved by policy.
int agent_choose(const CostVector& costs, TieBreaker& ties);

}  // namespace pricesched
