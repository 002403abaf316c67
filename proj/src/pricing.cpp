#include "pricesched/pricing.hpp"

#include <algorithm>
#include <numeric>

namespace pricesched {

PricingWorkspace build_workspace(const MachineModel& model,
                                 const std::vector<Rational>& virtual_loads,
                                 const Rational& lambda) {
  if (!model.has_speeds()) throw ModelError("pricing workspace needs a speed-carrying model");
  PricingWorkspace ws;
  ws.mu.reserve(model.m);
  for (int i = 0; i < model.m; ++i)
    ws.mu.push_back(model.speed(i) * (Rational(2) * lambda - virtual_loads.at(i)));

  ws.order.resize(model.m);
  std::iota(ws.order.begin(), ws.order.end(), 0);
  std::sort(ws.order.begin(), ws.order.end(), [&ws](int a, int b) {
    if (ws.mu[a] != ws.mu[b]) return ws.mu[a] < ws.mu[b];
    return a < b;  // sort ties by ascending machine index
  });

  // Pick, for each speed class from slowest up, the class member sitting at
  // the rightmost position in the mu order, then drop every earlier position.
  std::size_t begin = 0;
  while (begin < ws.order.size()) {
    Rational slowest = model.speed(ws.order[begin]);
    for (std::size_t a = begin + 1; a < ws.order.size(); ++a)
      if (model.speed(ws.order[a]) < slowest) slowest = model.speed(ws.order[a]);
    std::size_t w = begin;
    for (std::size_t a = begin; a < ws.order.size(); ++a)
      if (model.speed(ws.order[a]) == slowest) w = a;
    ws.B.push_back(ws.order[w]);
    begin = w + 1;
  }
  std::sort(ws.B.begin(), ws.B.end());
  return ws;
}

PriceVector dynamic_related_prices(const MachineModel& model,
                                   const std::vector<Rational>& real_loads,
                                   const std::vector<Rational>& virtual_loads,
                                   const Rational& lambda, const Rational& threshold_factor) {
  PricingWorkspace ws = build_workspace(model, virtual_loads, lambda);
  PriceVector prices(model.m, Rational::inf());
  Rational threshold = threshold_factor * lambda;

  int prev = ws.B.front();
  int prev_rep = representative(model, virtual_loads, prev);
  prices[prev_rep] = Rational(0);
  for (std::size_t b = 1; b < ws.B.size(); ++b) {
    int cur = ws.B[b];
    int cur_rep = representative(model, virtual_loads, cur);
    // Real loads of the representatives, virtual loads of the t-machines.
    prices[cur_rep] = real_loads.at(prev_rep) - real_loads.at(cur_rep) +
                      (Rational(1) - model.speed(prev) / model.speed(cur)) *
                          (threshold - virtual_loads.at(prev)) +
                      prices[prev_rep];
    prev = cur;
    prev_rep = cur_rep;
  }
  if (model.speed(ws.B.back()) != model.fastest_speed()) {
    int m_rep = representative(model, virtual_loads, model.m - 1);
    prices[m_rep] = real_loads.at(prev_rep) - real_loads.at(m_rep) +
                    (Rational(1) - model.speed(prev) / model.fastest_speed()) *
                        (threshold - virtual_loads.at(prev)) +
                    prices[prev_rep];
  }
  return prices;
}

StaticScheme::StaticScheme(const MachineModel& model, PriceVector prices, std::string label)
    : prices_(std::move(prices)), label_(std::move(label)) {
  if (static_cast<int>(prices_.size()) != model.m)
    throw ModelError("static price vector dimension mismatch");
  if (label_.empty()) {
    bool all_zero = true;
    for (const Rational& p : prices_) all_zero = all_zero && p.is_zero();
    label_ = all_zero ? "zero-static" : "static";
  }
}

StaticScheme StaticScheme::zero(const MachineModel& model) {
  return StaticScheme(model, PriceVector(model.m, Rational(0)), "zero-static");
}

DynamicRelatedScheme::DynamicRelatedScheme(const MachineModel& model, Rational eps,
                                           Options options)
    : model_(model), eps_(std::move(eps)), options_(std::move(options)), state_(model.m) {
  if (!model.has_speeds())
    throw ModelError("Dynamic-Related requires related or identical machines");
  if (eps_.is_inf() || eps_.sign() <= 0) throw ModelError("epsilon must be finite and positive");
  if (options_.known_lambda) {
    if (options_.known_lambda->is_inf() || options_.known_lambda->sign() <= 0)
      throw ModelError("known lambda must be finite and positive");
    phase_.begin(*options_.known_lambda, 0);
  }
}

std::string DynamicRelatedScheme::id() const {
  return options_.known_lambda ? "dynrel-known-lambda" : "dynrel";
}

Rational DynamicRelatedScheme::threshold_factor() const {
  if (options_.half_eps_threshold) return Rational(2) + eps_ / Rational(2);
  return Rational(2) + eps_;
}

PriceVector DynamicRelatedScheme::post_prices() {
  if (!phase_.lambda) {
    // Before the first positive job: free fastest machine, everything else inf.
    last_prices_.assign(model_.m, Rational::inf());
    last_prices_[model_.m - 1] = Rational(0);
    return last_prices_;
  }
  last_prices_ = dynamic_related_prices(model_, state_.loads(), state_.virtual_loads(),
                                        *phase_.lambda, threshold_factor());
  return last_prices_;
}

void DynamicRelatedScheme::observe_choice(int machine, const Rational& processing) {
  if (static_cast<int>(last_prices_.size()) != model_.m)
    throw ProtocolError("observe_choice before any prices were posted");
  if (last_prices_.at(machine).is_inf())
    throw ProtocolError("agent chose a machine with price inf");
  last_started_phase_ = false;

  // The job size is only visible through the load increase on the chosen machine.
  Rational p = processing * model_.speed(machine);
  int job_index = jobs_seen_++;
  state_.apply(machine, processing, false);

  if (options_.known_lambda) {
    state_.set_virtual(machine, state_.virtual_loads()[machine] + processing);
    return;
  }

  if (!phase_.lambda) {
    if (p.sign() > 0) {
      phase_.begin(p / model_.speed(machine), job_index);
      state_.reset_virtual();
      last_started_phase_ = true;
    }
    return;
  }

  bool fastest = model_.speed(machine) == model_.fastest_speed();
  if (fastest) {
    // Virtual loads were not yet bumped, so this is S as of the arrival.
    Rational cap = Rational(2) * *phase_.lambda;
    bool s_empty = true;
    for (int i = 0; i < model_.m && s_empty; ++i)
      s_empty = state_.virtual_loads()[i] + p / model_.speed(i) > cap;
    if (s_empty) {
      phase_.advance(p, model_.fastest_speed(), job_index);
      state_.reset_virtual();
      last_started_phase_ = true;
      return;
    }
  }
  state_.set_virtual(machine, state_.virtual_loads()[machine] + processing);
}

}  // namespace pricesched
