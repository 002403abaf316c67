#pragma once

#include <string>
#include <vector>

#include "pricesched/rational.hpp"

namespace pricesched {

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ModelKind { Identical, Related, Restricted, Unrelated };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

// Machine side of an instance. Related machines carry speeds sorted in
// increasing order (s_1 <= ... <= s_m); identical machines are stored with
// unit speeds so speed-aware code works on both. Restricted/unrelated carry
// only the machine count (processing lives on the jobs).
struct MachineModel {
  ModelKind kind = ModelKind::Identical;
  int m = 1;
  std::vector<Rational> speeds;  // size m for Identical/Related, empty otherwise

  static MachineModel identical(int m);
  static MachineModel related(std::vector<Rational> speeds);
  static MachineModel restricted(int m);
  static MachineModel unrelated(int m);

  bool has_speeds() const { return kind == ModelKind::Identical || kind == ModelKind::Related; }
  const Rational& speed(int machine) const { return speeds.at(machine); }
  const Rational& fastest_speed() const { return speeds.at(m - 1); }

  void validate() const;
};

// One arriving job. Which fields are meaningful depends on the model:
// Identical/Related use size; Restricted uses size + allowed (0-based machine
// ids); Unrelated uses times (length m, inf permitted, at least one finite).
struct JobProfile {
  Rational size;
  std::vector<int> allowed;
  std::vector<Rational> times;

  static JobProfile sized(Rational p);
  static JobProfile restricted(Rational p, std::vector<int> allowed_machines);
  static JobProfile unrelated(std::vector<Rational> processing_times);
};

struct Instance {
  MachineModel model;
  std::vector<JobProfile> jobs;  // arrival order
  Rational epsilon{1, 10};

  int m() const { return model.m; }
  int n() const { return static_cast<int>(jobs.size()); }
  void validate() const;
};

// p_{ij} expanded per the model variant; may be inf (restricted/unrelated).
Rational processing_time(const MachineModel& model, const JobProfile& job, int machine);

// Per-machine real and virtual loads plus the job -> machine assignment map.
// Real loads never decrease; virtual loads are reset at phase starts.
class LoadState {
 public:
  explicit LoadState(int m) : loads_(m), virtual_(m) {}

  int m() const { return static_cast<int>(loads_.size()); }
  const std::vector<Rational>& loads() const { return loads_; }
  const std::vector<Rational>& virtual_loads() const { return virtual_; }
  const std::vector<int>& assignment() const { return assignment_; }

  // Adds processing time p to machine's real load (and virtual load when
  // count_virtual is set) and appends to the assignment map. p = inf is an
  // error: an agent never takes an infinite-cost machine.
  void apply(int machine, const Rational& p, bool count_virtual);

  void reset_virtual();
  void set_virtual(int machine, Rational v) { virtual_.at(machine) = std::move(v); }

 private:
  std::vector<Rational> loads_;
  std::vector<Rational> virtual_;
  std::vector<int> assignment_;
};

// Representative of machine's speed class: the machine with minimal virtual
// load among {k : s_k = s_machine}, ties broken by lowest index. Requires a
// speed-carrying model (Related or Identical).
int representative(const MachineModel& model, const std::vector<Rational>& virtual_loads,
                   int machine);

}  // namespace pricesched
