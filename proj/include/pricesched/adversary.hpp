#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pricesched/pricing.hpp"
#include "pricesched/sweep.hpp"

namespace pricesched {

struct AdversaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AdversaryConfig {
  int m = 2;
  Rational epsilon{1, 10};
  int phases = 1;           // deterministic adversary: stop after this many phases
  int jobs = 0;             // randomized adversary: total sequence length
  int samples = 200;        // Monte-Carlo simulations per constructed job
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1'000'000;  // guard against schemes that never leave case 1
};

// An adversarial instance together with an assignment certifying the claimed
// optimum upper bound.
struct CertifiedInstance {
  Instance instance;
  std::vector<int> witness;  // job -> machine, 0-based
  Rational claimed_opt_bound;

  Rational witness_makespan() const;
};

std::string certified_to_json_text(const CertifiedInstance& certified);
CertifiedInstance parse_certified(const std::string& text);
CertifiedInstance load_certified_file(const std::string& path);
void save_certified_file(const CertifiedInstance& certified, const std::string& path);

// The two job types of the unrelated-machines lower bound: a pair job that
// forces the scheme to waste eps of load somewhere (an optimum absorbs it for
// free), and a uniform job that a rational agent always puts on machine 1.
enum class AdversaryCase { pair, uniform };

struct AdversaryJob {
  JobProfile job;
  AdversaryCase tag = AdversaryCase::uniform;
  int pair_target = -1;  // machine with processing eps (case pair)
  int pair_free = -1;    // machine with processing 0 (case pair)
};

// Next lower-bound job given the observed loads and the prices posted for the
// upcoming arrival. Case pair applies when some machines i != i' satisfy
// l_i + pi_i + eps < l_i' + pi_i' (lexicographically smallest such pair);
// otherwise the uniform job (1, 1+2eps, ..., 1+2eps).
AdversaryJob det_unrelated_next(const std::vector<Rational>& loads, const PriceVector& prices,
                                const Rational& eps);

struct LowerBoundReport {
  Rational scheme_makespan;
  Rational witness_makespan;
  Rational claimed_opt_bound;  // (1+2eps) * phases
  std::optional<Rational> ratio;
  int pair_jobs = 0;
  int uniform_jobs = 0;
  CertifiedInstance certified;
};

// Drives a deterministic scheme with det_unrelated_next until `phases` groups
// of m uniform jobs have been played; ties break in favor of machine 1.
LowerBoundReport run_det_lower_bound(PricingScheme& scheme, const AdversaryConfig& config);

using SchemeFactory = std::function<std::unique_ptr<PricingScheme>(std::uint64_t seed)>;

// Oblivious construction against a randomized scheme: each of config.jobs jobs
// is chosen by Monte-Carlo estimation (config.samples fresh-seeded simulations
// of the prefix) of which case holds with empirical probability >= 1/2 (ties
// favor the uniform case) and, within the pair case, of the most frequent
// machine pair. The finished instance is fixed before any evaluation run.
CertifiedInstance randomized_oblivious_instance(const SchemeFactory& factory,
                                                const AdversaryConfig& config,
                                                ExecMode mode = ExecMode::serial);

// The m-job prefix that equalizes load + price to max_i pi_i on every machine
// under the given static prices. All prices must be finite.
std::vector<JobProfile> flatten_prefix(const PriceVector& prices, const MachineModel& model);

struct ScaleReport {
  Instance scaled;
  Rational factor;       // power of two >= 1
  Rational delta;        // smallest nonzero greedy gap of the canonical run
  std::vector<int> tie_steps;  // 1-based steps of the canonical run with exact ties
};

// Scales all processing times by the smallest power of two that makes the
// canonical greedy run's smallest nonzero gap exceed 2*m*price_bound, so static
// prices below price_bound cannot change any strict greedy choice.
ScaleReport scale_instance(const Instance& instance, const Rational& price_bound);

}  // namespace pricesched
