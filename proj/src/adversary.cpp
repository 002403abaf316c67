#include "pricesched/adversary.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "pricesched/engine.hpp"
#include "pricesched/instance_io.hpp"
#include "pricesched/opt.hpp"

namespace pricesched {

Rational CertifiedInstance::witness_makespan() const {
  return assignment_makespan(instance, witness);
}

std::string certified_to_json_text(const CertifiedInstance& certified) {
  nlohmann::json doc = nlohmann::json::parse(instance_to_json_text(certified.instance));
  nlohmann::json witness = nlohmann::json::array();
  for (int i : certified.witness) witness.push_back(i + 1);
  doc["witness"] = witness;
  doc["claimed_opt_bound"] = certified.claimed_opt_bound.str();
  return doc.dump(2) + "\n";
}

CertifiedInstance parse_certified(const std::string& text) {
  CertifiedInstance certified;
  certified.instance = parse_instance(text);
  nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.contains("witness") || !doc.contains("claimed_opt_bound"))
    throw ParseError("certified instance needs 'witness' and 'claimed_opt_bound'");
  for (const nlohmann::json& i : doc.at("witness")) certified.witness.push_back(i.get<int>() - 1);
  if (static_cast<int>(certified.witness.size()) != certified.instance.n())
    throw ParseError("witness length disagrees with job count");
  certified.claimed_opt_bound = Rational::parse(doc.at("claimed_opt_bound").get<std::string>());
  return certified;
}

CertifiedInstance load_certified_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open certified instance file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_certified(buf.str());
}

void save_certified_file(const CertifiedInstance& certified, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open certified instance file for writing: " + path);
  os << certified_to_json_text(certified);
}

AdversaryJob det_unrelated_next(const std::vector<Rational>& loads, const PriceVector& prices,
                                const Rational& eps) {
  const int m = static_cast<int>(loads.size());
  if (static_cast<int>(prices.size()) != m)
    throw AdversaryError("malformed prices: dimension disagrees with machine count");

  for (int i = 0; i < m; ++i) {
    if (prices[i].is_inf()) continue;  // left side must be finite to beat anything
    Rational lhs = loads[i] + prices[i] + eps;
    for (int ip = 0; ip < m; ++ip) {
      if (ip == i) continue;
      Rational rhs = prices[ip].is_inf() ? Rational::inf() : loads[ip] + prices[ip];
      if (lhs < rhs) {
        AdversaryJob adv;
        adv.tag = AdversaryCase::pair;
        adv.pair_target = i;
        adv.pair_free = ip;
        std::vector<Rational> times(m, Rational::inf());
        times[i] = eps;
        times[ip] = Rational(0);
        adv.job = JobProfile::unrelated(std::move(times));
        return adv;
      }
    }
  }

  AdversaryJob adv;
  adv.tag = AdversaryCase::uniform;
  std::vector<Rational> times(m, Rational(1) + Rational(2) * eps);
  times[0] = Rational(1);
  adv.job = JobProfile::unrelated(std::move(times));
  return adv;
}

LowerBoundReport run_det_lower_bound(PricingScheme& scheme, const AdversaryConfig& config) {
  if (config.m < 1 || config.phases < 1 || config.epsilon.sign() <= 0)
    throw AdversaryError("need m >= 1, phases >= 1, eps > 0");
  MachineModel model = MachineModel::unrelated(config.m);
  std::vector<Rational> loads(config.m);
  auto prefer1 = prefer_machine_one_ties();

  LowerBoundReport report;
  report.certified.instance.model = model;
  report.certified.instance.epsilon = config.epsilon;
  const int target_uniform = config.phases * config.m;
  std::uint64_t steps = 0;

  while (report.uniform_jobs < target_uniform) {
    if (++steps > config.max_steps)
      throw AdversaryError("scheme did not reach the requested phases within max_steps");
    PriceVector prices = scheme.post_prices();
    AdversaryJob adv = det_unrelated_next(loads, prices, config.epsilon);
    CostVector costs = agent_costs(loads, prices, model, adv.job);
    int chosen = agent_choose(costs, *prefer1);
    Rational p = processing_time(model, adv.job, chosen);
    if (p.is_inf()) throw AdversaryError("agent landed on an infinite processing time");
    loads[chosen] += p;
    scheme.observe_choice(chosen, p);

    if (adv.tag == AdversaryCase::pair) {
      ++report.pair_jobs;
      report.certified.witness.push_back(adv.pair_free);
    } else {
      if (chosen != 0)
        throw AdversaryError("uniform job not on machine 1; scheme prices are inconsistent");
      report.certified.witness.push_back(report.uniform_jobs % config.m);
      ++report.uniform_jobs;
    }
    report.certified.instance.jobs.push_back(std::move(adv.job));
  }

  report.scheme_makespan = Rational(0);
  for (const Rational& l : loads) report.scheme_makespan = max(report.scheme_makespan, l);
  report.claimed_opt_bound = (Rational(1) + Rational(2) * config.epsilon) * Rational(config.phases);
  report.certified.claimed_opt_bound = report.claimed_opt_bound;
  report.witness_makespan = report.certified.witness_makespan();
  if (report.witness_makespan.sign() > 0)
    report.ratio = report.scheme_makespan / report.witness_makespan;
  return report;
}

namespace {

struct CaseSample {
  bool ok = false;
  bool pair = false;
  int target = -1;
  int free_machine = -1;
};

}  // namespace

CertifiedInstance randomized_oblivious_instance(const SchemeFactory& factory,
                                                const AdversaryConfig& config, ExecMode mode) {
  if (config.m < 1 || config.jobs < 1 || config.samples < 1)
    throw AdversaryError("need m >= 1, jobs >= 1, samples >= 1");
  MachineModel model = MachineModel::unrelated(config.m);

  CertifiedInstance certified;
  certified.instance.model = model;
  certified.instance.epsilon = config.epsilon;
  int uniform_jobs = 0;

  for (int j = 0; j < config.jobs; ++j) {
    const std::vector<JobProfile>& prefix = certified.instance.jobs;
    auto sample = [&](std::size_t s) -> CaseSample {
      CaseSample result;
      try {
        std::uint64_t seed = mix_seed(config.seed, static_cast<std::uint64_t>(j) *
                                                           static_cast<std::uint64_t>(config.samples) +
                                                       s);
        std::unique_ptr<PricingScheme> scheme = factory(seed);
        auto prefer1 = prefer_machine_one_ties();
        std::vector<Rational> loads(config.m);
        for (const JobProfile& job : prefix) {
          PriceVector prices = scheme->post_prices();
          CostVector costs = agent_costs(loads, prices, model, job);
          int chosen = agent_choose(costs, *prefer1);
          Rational p = processing_time(model, job, chosen);
          if (p.is_inf()) return result;
          loads[chosen] += p;
          scheme->observe_choice(chosen, p);
        }
        PriceVector prices = scheme->post_prices();
        AdversaryJob next = det_unrelated_next(loads, prices, config.epsilon);
        result.ok = true;
        result.pair = next.tag == AdversaryCase::pair;
        result.target = next.pair_target;
        result.free_machine = next.pair_free;
      } catch (...) {
        result.ok = false;
      }
      return result;
    };
    std::vector<CaseSample> samples =
        run_trials<CaseSample>(static_cast<std::size_t>(config.samples), mode, sample);

    int pair_votes = 0;
    std::map<std::pair<int, int>, int> pair_counts;
    for (const CaseSample& s : samples) {
      if (!s.ok) throw AdversaryError("a Monte-Carlo simulation of the scheme failed");
      if (s.pair) {
        ++pair_votes;
        ++pair_counts[{s.target, s.free_machine}];
      }
    }

    if (2 * pair_votes > config.samples) {
      auto best = pair_counts.begin();
      for (auto it = pair_counts.begin(); it != pair_counts.end(); ++it)
        if (it->second > best->second) best = it;  // ties: map order is lexicographic
      std::vector<Rational> times(config.m, Rational::inf());
      times[best->first.first] = config.epsilon;
      times[best->first.second] = Rational(0);
      certified.instance.jobs.push_back(JobProfile::unrelated(std::move(times)));
      certified.witness.push_back(best->first.second);
    } else {
      std::vector<Rational> times(config.m, Rational(1) + Rational(2) * config.epsilon);
      times[0] = Rational(1);
      certified.instance.jobs.push_back(JobProfile::unrelated(std::move(times)));
      certified.witness.push_back(uniform_jobs % config.m);
      ++uniform_jobs;
    }
  }

  int groups = (uniform_jobs + config.m - 1) / config.m;  // ceil(n2 / m)
  certified.claimed_opt_bound =
      (Rational(1) + Rational(2) * config.epsilon) * Rational(groups);
  return certified;
}

std::vector<JobProfile> flatten_prefix(const PriceVector& prices, const MachineModel& model) {
  const int m = model.m;
  if (static_cast<int>(prices.size()) != m)
    throw AdversaryError("price vector dimension disagrees with machine count");
  for (const Rational& p : prices)
    if (p.is_inf()) throw AdversaryError("flattening is impossible with an infinite price");
  Rational pi_max(0);
  bool first = true;
  for (const Rational& p : prices) {
    if (first || pi_max < p) pi_max = p;
    first = false;
  }

  std::vector<JobProfile> jobs;
  jobs.reserve(m);
  switch (model.kind) {
    case ModelKind::Identical: {
      std::vector<int> order(m);
      for (int i = 0; i < m; ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&prices](int a, int b) { return prices[a] < prices[b]; });
      for (int i : order) jobs.push_back(JobProfile::sized(pi_max - prices[i]));
      break;
    }
    case ModelKind::Restricted:
      for (int i = 0; i < m; ++i)
        jobs.push_back(JobProfile::restricted(pi_max - prices[i], {i}));
      break;
    case ModelKind::Unrelated:
      for (int i = 0; i < m; ++i) {
        std::vector<Rational> times(m, Rational::inf());
        times[i] = pi_max - prices[i];
        jobs.push_back(JobProfile::unrelated(std::move(times)));
      }
      break;
    case ModelKind::Related: {
      // Closed form of the continuous increase: the next job is the largest
      // p with min_i (l_i + p/s_i + pi_i) = pi_max, i.e. max_i s_i(pi_max -
      // l_i - pi_i). Tied maximizers have equal gaps, so the emitted sizes do
      // not depend on how the agent breaks those ties.
      std::vector<Rational> loads(m);
      auto ties = lowest_index_ties();
      for (int j = 0; j < m; ++j) {
        Rational p(0);
        for (int i = 0; i < m; ++i)
          p = max(p, model.speed(i) * (pi_max - loads[i] - prices[i]));
        JobProfile job = JobProfile::sized(p);
        CostVector costs = agent_costs(loads, prices, model, job);
        int chosen = agent_choose(costs, *ties);
        loads[chosen] += processing_time(model, job, chosen);
        jobs.push_back(std::move(job));
      }
      break;
    }
  }
  return jobs;
}

ScaleReport scale_instance(const Instance& instance, const Rational& price_bound) {
  instance.validate();
  if (price_bound.is_inf()) throw AdversaryError("price bound must be finite");

  // Canonical greedy run; delta is the smallest nonzero gap between the
  // selectable totals l_i + p_ij, and exact ties are flagged.
  ScaleReport report;
  report.delta = Rational(0);
  bool have_delta = false;
  {
    LoadState state(instance.m());
    auto ties = lowest_index_ties();
    for (int j = 0; j < instance.n(); ++j) {
      const JobProfile& job = instance.jobs[j];
      std::vector<Rational> totals;
      for (int i = 0; i < instance.m(); ++i) {
        Rational p = processing_time(instance.model, job, i);
        totals.push_back(p.is_inf() ? Rational::inf() : state.loads()[i] + p);
      }
      bool tied = false;
      for (std::size_t a = 0; a < totals.size(); ++a) {
        if (totals[a].is_inf()) continue;
        for (std::size_t b = a + 1; b < totals.size(); ++b) {
          if (totals[b].is_inf()) continue;
          Rational gap = totals[a] < totals[b] ? totals[b] - totals[a] : totals[a] - totals[b];
          if (gap.is_zero()) {
            tied = true;
          } else if (!have_delta || gap < report.delta) {
            report.delta = gap;
            have_delta = true;
          }
        }
      }
      if (tied) report.tie_steps.push_back(j + 1);
      int chosen = greedy_step(state, job, instance.model, *ties);
      state.apply(chosen, processing_time(instance.model, job, chosen), false);
    }
  }

  Rational threshold = Rational(2) * Rational(instance.m()) * price_bound;
  report.factor = Rational(1);
  if (threshold.sign() > 0) {
    if (!have_delta)
      throw AdversaryError(
          "every selectable pair is tied on every step (fully degenerate instance); "
          "no scaling can separate the greedy choices");
    while (report.factor * report.delta <= threshold) report.factor *= Rational(2);
  }

  report.scaled = instance;
  for (JobProfile& job : report.scaled.jobs) {
    if (instance.model.kind == ModelKind::Unrelated) {
      for (Rational& t : job.times)
        if (!t.is_inf()) t *= report.factor;
    } else {
      job.size *= report.factor;
    }
  }
  return report;
}

}  // namespace pricesched
