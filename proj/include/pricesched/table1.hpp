#pragma once

#include <string>
#include <vector>

#include "pricesched/random_gen.hpp"
#include "pricesched/sweep.hpp"

namespace pricesched {

// Empirical competitive-ratio comparison across machine models: worst observed
// makespan / brute-force optimum per (model, scheme) over random trials, plus
// the deterministic adversary's exact ratios against the zero-price scheme on
// unrelated machines. Observed ratios only; no asymptotic constants asserted.
struct TableConfig {
  int trials = 200;
  std::uint64_t seed = 1;
  ExecMode mode = ExecMode::parallel;
  RandomInstanceConfig gen;
  int adversary_min_m = 2;
  int adversary_max_m = 6;
  int adversary_phases = 10;
};

struct TableRow {
  std::string model;
  std::string scheme;
  std::string params;
  Rational max_ratio;
};

std::vector<TableRow> ratio_table_experiment(const TableConfig& config);

std::string render_table(const std::vector<TableRow>& rows);

}  // namespace pricesched
