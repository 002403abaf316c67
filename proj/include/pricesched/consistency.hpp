#pragma once

#include <string>
#include <vector>

#include "pricesched/model.hpp"
#include "pricesched/trace.hpp"

namespace pricesched {

// Per-step classification of a trace against the permissible actions of the
// flexible online algorithm: forced estimate initialization (ok_init), phase
// restarts with T empty (ok_t_empty) or merely S empty (ok_s_empty_phase),
// in-phase assignment while S is empty (ok_s_empty_in_t) or nonempty
// (ok_s_nonempty), and everything else (violation).
enum class StepVerdict {
  ok_init,
  ok_t_empty,
  ok_s_empty_phase,
  ok_s_empty_in_t,
  ok_s_nonempty,
  violation,
};

std::string to_string(StepVerdict verdict);

struct StepFinding {
  int step = 0;
  StepVerdict verdict = StepVerdict::violation;
  std::string detail;  // violations carry the full pre-state for replay
};

struct ConsistencyReport {
  std::vector<StepFinding> steps;

  bool ok() const;
  int violations() const;
  std::string summary() const;
};

struct ConsistencyOptions {
  // Set when the trace came from a pinned-estimate run: the checker seeds
  // lambda with this value and expects no phase restarts.
  std::optional<Rational> known_lambda;
};

// Replays the trace against the instance, recomputing (T, S, k) and the
// representative resolution from each step's pre-state, and classifies every
// choice. Structural trace/instance mismatches (wrong model, wrong load
// arithmetic) throw; protocol breaches become violation verdicts.
ConsistencyReport check_flexfit_consistency(const Trace& trace, const Instance& instance,
                                            const ConsistencyOptions& options = {});

}  // namespace pricesched
