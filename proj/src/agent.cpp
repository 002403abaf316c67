#include "pricesched/agent.hpp"

#include <algorithm>

namespace pricesched {

namespace {

class LowestIndexTie : public TieBreaker {
 public:
  int pick(const std::vector<int>& tied) override { return tied.front(); }
  std::string name() const override { return "lowest"; }
};

class HighestIndexTie : public TieBreaker {
 public:
  int pick(const std::vector<int>& tied) override { return tied.back(); }
  std::string name() const override { return "highest"; }
};

class PreferMachineOneTie : public TieBreaker {
 public:
  int pick(const std::vector<int>& tied) override {
    // Tie set is sorted ascending, so machine 1 is the front whenever present.
    return tied.front();
  }
  std::string name() const override { return "prefer1"; }
};

class ScriptedTie : public TieBreaker {
 public:
  explicit ScriptedTie(std::deque<int> picks) : picks_(std::move(picks)) {}
  int pick(const std::vector<int>& tied) override {
    if (picks_.empty()) throw TiePolicyError("scripted tie policy exhausted");
    int choice = picks_.front();
    picks_.pop_front();
    if (!std::binary_search(tied.begin(), tied.end(), choice))
      throw TiePolicyError("scripted pick " + std::to_string(choice + 1) +
                           " is not among the tied machines");
    return choice;
  }
  std::string name() const override { return "scripted"; }

 private:
  std::deque<int> picks_;
};

class CallbackTie : public TieBreaker {
 public:
  CallbackTie(std::function<int(const std::vector<int>&)> fn, std::string label)
      : fn_(std::move(fn)), label_(std::move(label)) {}
  int pick(const std::vector<int>& tied) override {
    int choice = fn_(tied);
    if (!std::binary_search(tied.begin(), tied.end(), choice))
      throw TiePolicyError("adversarial callback returned a machine outside the tie set");
    return choice;
  }
  std::string name() const override { return label_; }

 private:
  std::function<int(const std::vector<int>&)> fn_;
  std::string label_;
};

}  // namespace

std::unique_ptr<TieBreaker> lowest_index_ties() { return std::make_unique<LowestIndexTie>(); }
std::unique_ptr<TieBreaker> highest_index_ties() { return std::make_unique<HighestIndexTie>(); }
std::unique_ptr<TieBreaker> prefer_machine_one_ties() {
  return std::make_unique<PreferMachineOneTie>();
}
std::unique_ptr<TieBreaker> scripted_ties(std::deque<int> picks) {
  return std::make_unique<ScriptedTie>(std::move(picks));
}
std::unique_ptr<TieBreaker> adversarial_ties(std::function<int(const std::vector<int>&)> fn,
                                             std::string label) {
  return std::make_unique<CallbackTie>(std::move(fn), std::move(label));
}

CostVector agent_costs(const std::vector<Rational>& loads, const PriceVector& prices,
                       const MachineModel& model, const JobProfile& job) {
  if (static_cast<int>(loads.size()) != model.m || static_cast<int>(prices.size()) != model.m)
    throw ModelError("cost vector dimension mismatch");
  CostVector costs;
  costs.reserve(model.m);
  for (int i = 0; i < model.m; ++i) {
    Rational p = processing_time(model, job, i);
    if (p.is_inf() || prices[i].is_inf()) {
      costs.push_back(Rational::inf());
    } else {
      costs.push_back(loads[i] + p + prices[i]);
    }
  }
  return costs;
}

int agent_choose(const CostVector& costs, TieBreaker& ties) {
  if (costs.empty()) throw ModelError("agent_choose on empty cost vector");
  const Rational* best = &costs[0];
  for (const Rational& c : costs)
    if (c < *best) best = &c;
  std::vector<int> tied;
  for (int i = 0; i < static_cast<int>(costs.size()); ++i)
    if (costs[i] == *best) tied.push_back(i);
  if (tied.size() == 1) return tied.front();
  return ties.pick(tied);
}

}  // namespace pricesched
