#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pricesched/agent.hpp"
#include "pricesched/model.hpp"

namespace pricesched {

// One simulation step: the unit of verification and of file output. Pricing
// runs carry prices and the agent's cost vector; pure online algorithms leave
// them empty. lambda is the phase estimate after the step (empty for
// schedulers that have none).
struct StepRecord {
  int step = 0;  // 1-based
  int job = 0;   // 1-based arrival index
  std::optional<PriceVector> prices;
  std::optional<CostVector> costs;
  int chosen = 0;  // 0-based in memory; serialized 1-based
  bool new_phase = false;
  std::optional<Rational> lambda;
  std::vector<Rational> loads_after;
  std::optional<std::vector<Rational>> virtual_after;
};

struct Trace {
  ModelKind model = ModelKind::Identical;
  int m = 1;
  std::vector<StepRecord> steps;

  Rational makespan() const;
  int phase_events() const;
};

// CSV columns: step,job,model,prices,costs,chosen,new_phase,lambda,
// loads_after,virtual_after. Rational lists are semicolon-joined
// "num/den" | "inf"; optional fields serialize as empty cells.
void write_trace_csv(const Trace& trace, std::ostream& os);
void write_trace_csv(const Trace& trace, const std::string& path);
Trace read_trace_csv(std::istream& is);
Trace read_trace_csv_file(const std::string& path);

// Audit log for pricing runs: one row per step, one column per machine.
void write_prices_csv(const Trace& trace, std::ostream& os);

std::string join_rationals(const std::vector<Rational>& values);
std::vector<Rational> split_rationals(const std::string& cell);

}  // namespace pricesched
