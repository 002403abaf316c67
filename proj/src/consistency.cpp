#include "pricesched/consistency.hpp"

#include <sstream>

#include "pricesched/schedulers.hpp"

namespace pricesched {

std::string to_string(StepVerdict verdict) {
  switch (verdict) {
    case StepVerdict::ok_init: return "OK-init";
    case StepVerdict::ok_t_empty: return "OK-T-empty";
    case StepVerdict::ok_s_empty_phase: return "OK-S-empty-phase";
    case StepVerdict::ok_s_empty_in_t: return "OK-S-empty-in-T";
    case StepVerdict::ok_s_nonempty: return "OK-S-nonempty";
    case StepVerdict::violation: return "VIOLATION";
  }
  return "?";
}

bool ConsistencyReport::ok() const { return violations() == 0; }

int ConsistencyReport::violations() const {
  int count = 0;
  for (const StepFinding& f : steps)
    if (f.verdict == StepVerdict::violation) ++count;
  return count;
}

std::string ConsistencyReport::summary() const {
  int counts[6] = {0, 0, 0, 0, 0, 0};
  for (const StepFinding& f : steps) ++counts[static_cast<int>(f.verdict)];
  std::ostringstream os;
  os << steps.size() << " steps:";
  for (int v = 0; v < 6; ++v) {
    if (counts[v] == 0) continue;
    os << ' ' << to_string(static_cast<StepVerdict>(v)) << '=' << counts[v];
  }
  return os.str();
}

namespace {

struct Replay {
  const Instance& instance;
  std::vector<Rational> loads;
  std::vector<Rational> virt;
  std::optional<Rational> lambda;
  bool pinned_lambda = false;

  std::string state_dump(int step, const Rational& p, const FeasibilitySets* sets) const {
    std::ostringstream os;
    os << "step=" << step << " p=" << p.str() << " lambda=";
    os << (lambda ? lambda->str() : std::string("unset"));
    os << " loads=" << join_rationals(loads) << " virtual=" << join_rationals(virt);
    if (sets) {
      os << " T={";
      for (std::size_t i = 0; i < sets->T.size(); ++i) os << (i ? "," : "") << sets->T[i] + 1;
      os << "} S={";
      for (std::size_t i = 0; i < sets->S.size(); ++i) os << (i ? "," : "") << sets->S[i] + 1;
      os << "} k=" << sets->k + 1;
    }
    return os.str();
  }
};

}  // namespace

ConsistencyReport check_flexfit_consistency(const Trace& trace, const Instance& instance,
                                            const ConsistencyOptions& options) {
  instance.validate();
  if (!instance.model.has_speeds())
    throw ModelError("consistency check needs a related or identical model");
  if (trace.model != instance.model.kind || trace.m != instance.m())
    throw ModelError("trace/instance mismatch: model or machine count differs");
  if (static_cast<int>(trace.steps.size()) != instance.n())
    throw ModelError("trace/instance mismatch: step count differs from job count");

  const MachineModel& model = instance.model;
  Replay replay{instance, std::vector<Rational>(model.m), std::vector<Rational>(model.m),
                options.known_lambda, options.known_lambda.has_value()};

  ConsistencyReport report;
  for (int j = 0; j < instance.n(); ++j) {
    const StepRecord& rec = trace.steps[j];
    if (rec.job != j + 1) throw ModelError("trace/instance mismatch: job order");
    if (rec.chosen < 0 || rec.chosen >= model.m)
      throw ModelError("trace/instance mismatch: chosen machine out of range");
    const JobProfile& job = instance.jobs[j];
    const Rational& p = job.size;
    int chosen = rec.chosen;

    StepFinding finding;
    finding.step = rec.step;
    auto violate = [&](const std::string& why, const FeasibilitySets* sets) {
      finding.verdict = StepVerdict::violation;
      finding.detail = why + " [" + replay.state_dump(rec.step, p, sets) + "]";
    };

    if (!replay.lambda) {
      // Estimate not initialized yet: the job must go to a fastest machine.
      if (model.speed(chosen) != model.fastest_speed()) {
        violate("pre-estimate job not on a fastest machine", nullptr);
      } else {
        finding.verdict = StepVerdict::ok_init;
        if (p.sign() > 0) {
          replay.lambda = p / model.fastest_speed();
          if (!rec.new_phase) violate("estimate initialization not flagged as a phase", nullptr);
          if (rec.lambda != replay.lambda)
            violate("wrong initial estimate (expected p/s_m)", nullptr);
        } else if (rec.new_phase) {
          violate("zero-size prefix job flagged as a phase", nullptr);
        }
      }
      replay.loads[chosen] += processing_time(model, job, chosen);
    } else {
      FeasibilitySets sets = compute_sets(model, replay.virt, *replay.lambda, instance.epsilon, p);
      if (rec.new_phase) {
        if (replay.pinned_lambda) {
          violate("phase restart in pinned-estimate mode", &sets);
        } else if (!sets.S.empty()) {
          violate("phase restart although S is nonempty", &sets);
        } else if (model.speed(chosen) != model.fastest_speed()) {
          violate("phase job not on a fastest machine", &sets);
        } else {
          finding.verdict = sets.T.empty() ? StepVerdict::ok_t_empty : StepVerdict::ok_s_empty_phase;
          Rational next = *replay.lambda * new_phase_factor(p, model.fastest_speed(), *replay.lambda);
          if (rec.lambda != next) violate("wrong estimate after phase restart", &sets);
          replay.lambda = next;
        }
        replay.loads[chosen] += processing_time(model, job, chosen);
        std::fill(replay.virt.begin(), replay.virt.end(), Rational(0));
      } else {
        if (sets.T.empty()) {
          violate("T empty but no phase restart", &sets);
        } else if (chosen != representative(model, replay.virt, chosen)) {
          violate("chosen machine is not its speed class representative", &sets);
        } else if (replay.virt[chosen] + p / model.speed(chosen) >
                   (Rational(2) + instance.epsilon) * *replay.lambda) {
          violate("chosen speed class is outside T", &sets);
        } else if (!sets.S.empty() && model.speed(chosen) > model.speed(sets.k)) {
          violate("chosen machine faster than s_k while S is nonempty", &sets);
        } else {
          finding.verdict =
              sets.S.empty() ? StepVerdict::ok_s_empty_in_t : StepVerdict::ok_s_nonempty;
          if (rec.lambda != replay.lambda) violate("estimate changed without a phase", &sets);
        }
        Rational pij = processing_time(model, job, chosen);
        replay.loads[chosen] += pij;
        replay.virt[chosen] += pij;
      }
    }

    // Bookkeeping cross-checks against the recorded trail.
    if (rec.loads_after != replay.loads)
      throw ModelError("trace/instance mismatch: loads do not replay at step " +
                       std::to_string(rec.step));
    if (rec.virtual_after && finding.verdict != StepVerdict::violation &&
        *rec.virtual_after != replay.virt)
      violate("virtual loads do not replay", nullptr);

    report.steps.push_back(std::move(finding));
  }
  return report;
}

}  // namespace pricesched
