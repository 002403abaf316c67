#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pricesched/agent.hpp"
#include "pricesched/model.hpp"
#include "pricesched/schedulers.hpp"

namespace pricesched {

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Intermediate state of the dynamic price computation: mu_i = s_i(2*lambda -
// virt_i), machines sorted by ascending (mu, index), and the subsequence B of
// machines with strictly increasing speeds picked by the inner loop. B is
// indexed ascending (t_1 < t_2 < ...); its first member has the slowest speed
// and its last attains max_i mu_i.
struct PricingWorkspace {
  std::vector<Rational> mu;
  std::vector<int> order;  // machine ids, ascending by (mu, id)
  std::vector<int> B;
};

PricingWorkspace build_workspace(const MachineModel& model,
                                 const std::vector<Rational>& virtual_loads,
                                 const Rational& lambda);

// Posted prices for the next arrival, from state only (never from the job):
// price 0 on the representative of t_1, the difference recurrence along B, an
// extra price on r_m when s_m differs from the last speed in B, and inf
// elsewhere. threshold_factor scales lambda in the recurrence (2+eps normally).
PriceVector dynamic_related_prices(const MachineModel& model,
                                   const std::vector<Rational>& real_loads,
                                   const std::vector<Rational>& virtual_loads,
                                   const Rational& lambda, const Rational& threshold_factor);

// A posted-price mechanism: prices depend only on the past; the chosen machine
// and its load increase are observed after the fact.
class PricingScheme {
 public:
  virtual ~PricingScheme() = default;
  virtual std::string id() const = 0;
  virtual PriceVector post_prices() = 0;
  // machine: the agent's choice; processing: the observed load increase
  // (p_{machine,j}), which is the only channel through which job sizes reach
  // the scheme.
  virtual void observe_choice(int machine, const Rational& processing) = 0;

  virtual bool last_observe_started_phase() const { return false; }
  virtual std::optional<Rational> lambda() const { return std::nullopt; }
  virtual const std::vector<Rational>* virtual_loads() const { return nullptr; }
  virtual int phase_count() const { return 0; }
};

// Constant prices fixed before any arrival; all-zero reproduces greedy.
class StaticScheme : public PricingScheme {
 public:
  StaticScheme(const MachineModel& model, PriceVector prices, std::string label = "");
  static StaticScheme zero(const MachineModel& model);

  std::string id() const override { return label_; }
  PriceVector post_prices() override { return prices_; }
  void observe_choice(int, const Rational&) override {}

 private:
  PriceVector prices_;
  std::string label_;
};

// The dynamic pricing scheme for related machines. Standard mode follows the
// phase logic (initial all-inf-but-fastest prices, lambda from the first
// positive job, post-choice S-test and phase restarts). Known-lambda mode
// pins lambda and skips phase logic; with the half-eps threshold it prices
// against (2 + eps/2) * lambda instead of (2 + eps) * lambda.
class DynamicRelatedScheme : public PricingScheme {
 public:
  struct Options {
    std::optional<Rational> known_lambda;
    bool half_eps_threshold = false;
  };

  DynamicRelatedScheme(const MachineModel& model, Rational eps)
      : DynamicRelatedScheme(model, std::move(eps), Options{}) {}
  DynamicRelatedScheme(const MachineModel& model, Rational eps, Options options);

  std::string id() const override;
  PriceVector post_prices() override;
  void observe_choice(int machine, const Rational& processing) override;

  bool last_observe_started_phase() const override { return last_started_phase_; }
  std::optional<Rational> lambda() const override { return phase_.lambda; }
  const std::vector<Rational>* virtual_loads() const override { return &state_.virtual_loads(); }
  int phase_count() const override { return static_cast<int>(phase_.history.size()); }

  Rational threshold_factor() const;
  const LoadState& state() const { return state_; }

 private:
  MachineModel model_;
  Rational eps_;
  Options options_;
  LoadState state_;
  PhaseState phase_;
  PriceVector last_prices_;
  bool last_started_phase_ = false;
  int jobs_seen_ = 0;
};

}  // namespace pricesched
