#include "pricesched/model.hpp"

#include <algorithm>

namespace pricesched {

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Identical: return "identical";
    case ModelKind::Related: return "related";
    case ModelKind::Restricted: return "restricted";
    case ModelKind::Unrelated: return "unrelated";
  }
  throw ModelError("unknown model kind");
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "identical") return ModelKind::Identical;
  if (s == "related") return ModelKind::Related;
  if (s == "restricted") return ModelKind::Restricted;
  if (s == "unrelated") return ModelKind::Unrelated;
  throw ModelError("unknown model '" + s + "'");
}

MachineModel MachineModel::identical(int m) {
  MachineModel model;
  model.kind = ModelKind::Identical;
  model.m = m;
  model.speeds.assign(m, Rational(1));
  model.validate();
  return model;
}

MachineModel MachineModel::related(std::vector<Rational> speeds) {
  MachineModel model;
  model.kind = ModelKind::Related;
  model.m = static_cast<int>(speeds.size());
  model.speeds = std::move(speeds);
  model.validate();
  return model;
}

MachineModel MachineModel::restricted(int m) {
  MachineModel model;
  model.kind = ModelKind::Restricted;
  model.m = m;
  model.validate();
  return model;
}

MachineModel MachineModel::unrelated(int m) {
  MachineModel model;
  model.kind = ModelKind::Unrelated;
  model.m = m;
  model.validate();
  return model;
}

void MachineModel::validate() const {
  if (m < 1) throw ModelError("need at least one machine");
  if (has_speeds()) {
    if (static_cast<int>(speeds.size()) != m) throw ModelError("speeds/m mismatch");
    for (int i = 0; i < m; ++i) {
      if (speeds[i].is_inf() || speeds[i].sign() <= 0)
        throw ModelError("speeds must be finite and positive");
      if (i > 0 && speeds[i] < speeds[i - 1])
        throw ModelError("machines must be sorted in increasing order of speed");
    }
  } else if (!speeds.empty()) {
    throw ModelError("speeds only apply to identical/related machines");
  }
}

JobProfile JobProfile::sized(Rational p) {
  JobProfile job;
  job.size = std::move(p);
  return job;
}

JobProfile JobProfile::restricted(Rational p, std::vector<int> allowed_machines) {
  JobProfile job;
  job.size = std::move(p);
  job.allowed = std::move(allowed_machines);
  std::sort(job.allowed.begin(), job.allowed.end());
  return job;
}

JobProfile JobProfile::unrelated(std::vector<Rational> processing_times) {
  JobProfile job;
  job.times = std::move(processing_times);
  return job;
}

void Instance::validate() const {
  model.validate();
  for (int j = 0; j < n(); ++j) {
    const JobProfile& job = jobs[j];
    switch (model.kind) {
      case ModelKind::Identical:
      case ModelKind::Related:
        if (job.size.is_inf() || job.size.sign() < 0)
          throw ModelError("job sizes must be finite and nonnegative");
        break;
      case ModelKind::Restricted: {
        if (job.size.is_inf() || job.size.sign() < 0)
          throw ModelError("job sizes must be finite and nonnegative");
        if (job.allowed.empty())
          throw ModelError("restricted job needs at least one allowed machine");
        for (int i : job.allowed)
          if (i < 0 || i >= model.m) throw ModelError("allowed machine out of range");
        break;
      }
      case ModelKind::Unrelated: {
        if (static_cast<int>(job.times.size()) != model.m)
          throw ModelError("unrelated job needs one processing time per machine");
        bool any_finite = false;
        for (const Rational& t : job.times) {
          if (!t.is_inf() && t.sign() < 0) throw ModelError("processing times must be >= 0");
          any_finite = any_finite || !t.is_inf();
        }
        if (!any_finite) throw ModelError("job has no finite processing time on any machine");
        break;
      }
    }
  }
  if (epsilon.is_inf() || epsilon.sign() <= 0) throw ModelError("epsilon must be finite and positive");
}

Rational processing_time(const MachineModel& model, const JobProfile& job, int machine) {
  switch (model.kind) {
    case ModelKind::Identical:
      return job.size;
    case ModelKind::Related:
      return job.size / model.speed(machine);
    case ModelKind::Restricted:
      return std::binary_search(job.allowed.begin(), job.allowed.end(), machine)
                 ? job.size
                 : Rational::inf();
    case ModelKind::Unrelated:
      return job.times.at(machine);
  }
  throw ModelError("unknown model kind");
}

void LoadState::apply(int machine, const Rational& p, bool count_virtual) {
  if (p.is_inf()) throw ModelError("cannot assign a job with infinite processing time");
  loads_.at(machine) += p;
  if (count_virtual) virtual_.at(machine) += p;
  assignment_.push_back(machine);
}

void LoadState::reset_virtual() {
  std::fill(virtual_.begin(), virtual_.end(), Rational(0));
}

int representative(const MachineModel& model, const std::vector<Rational>& virtual_loads,
                   int machine) {
  if (!model.has_speeds()) throw ModelError("representatives need a speed-carrying model");
  const Rational& s = model.speed(machine);
  int best = -1;
  for (int i = 0; i < model.m; ++i) {
    if (model.speed(i) != s) continue;
    if (best < 0 || virtual_loads.at(i) < virtual_loads.at(best)) best = i;
  }
  return best;
}

}  // namespace pricesched
