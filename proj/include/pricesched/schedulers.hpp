#pragma once

#include <optional>
#include <vector>

#include "pricesched/agent.hpp"
#include "pricesched/model.hpp"

namespace pricesched {

// Phase bookkeeping shared by Flex-Fit and the dynamic pricing scheme. lambda
// is empty until the first positive-size job arrives; across phases it grows
// by powers of two (>= 2).
struct PhaseEvent {
  int phase_index;
  Rational lambda;
  int job;  // 0-based arrival index that opened the phase
};

struct PhaseState {
  std::optional<Rational> lambda;
  int phase_index = 0;
  std::vector<PhaseEvent> history;

  void begin(const Rational& initial_lambda, int job);
  // Applies the New-Phase estimate update for job size p on fastest speed s_m:
  // lambda *= max{2, smallest power of two >= p/(s_m * lambda)}.
  void advance(const Rational& p, const Rational& fastest_speed, int job);
};

// Smallest power of two >= x for x > 0, computed by exact doubling/halving.
Rational pow2_at_least(const Rational& x);
// The New-Phase multiplier max{2, 2^ceil(log2 p/(s_m lambda))}; p = inf is an error.
Rational new_phase_factor(const Rational& p, const Rational& fastest_speed,
                          const Rational& lambda);

// T: machines with virt_i + p/s_i <= threshold_factor * lambda (threshold_factor
// is 2+eps in Flex-Fit); S: same with threshold 2*lambda; k: minimum index in
// S, or m-1 when S is empty. S is always a subset of T.
struct FeasibilitySets {
  std::vector<int> T;
  std::vector<int> S;
  int k;
};

FeasibilitySets compute_sets(const MachineModel& model, const std::vector<Rational>& virtual_loads,
                             const Rational& lambda, const Rational& eps, const Rational& p);

struct FlexFitAction {
  int machine;
  bool new_phase;  // machine has speed s_m when set
};

struct FlexFitOptions {
  // Behavior of the optional New-Phase branch when T != empty but S = empty:
  // default keeps packing (assign within T); eager starts the phase instead.
  bool eager_phase = false;
};

// One Flex-Fit step: handles lambda initialization (first positive job to a
// fastest machine), phase starts, and the in-phase assignment to the slowest
// eligible representative. Updates loads, virtual loads and phase state.
FlexFitAction flexfit_step(LoadState& state, PhaseState& phase, const JobProfile& job,
                           const MachineModel& model, const Rational& eps,
                           const FlexFitOptions& options = {});

// argmin_i (l_i + p_ij) under the tie policy; equals the selfish choice under
// all-zero prices.
int greedy_step(const LoadState& state, const JobProfile& job, const MachineModel& model,
                TieBreaker& ties);

// Reference implementation for comparative experiments: assigns to the lowest
// indexed machine with l_i + p/s_i <= 2*lambda, doubling lambda until one exists.
class SlowFit {
 public:
  explicit SlowFit(const MachineModel& model);

  int step(const JobProfile& job);
  const LoadState& state() const { return state_; }
  const std::optional<Rational>& lambda() const { return lambda_; }

 private:
  MachineModel model_;
  LoadState state_;
  std::optional<Rational> lambda_;
};

}  // namespace pricesched
