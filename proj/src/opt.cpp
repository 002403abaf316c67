#include "pricesched/opt.hpp"

#include <algorithm>
#include <numeric>

namespace pricesched {

namespace {

// Expanded processing matrix in search order plus pruning data.
struct SearchData {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rational>> p;  // p[pos][i]
  std::vector<Rational> min_time;        // min_i p[pos][i]
  bool volume_bound = false;             // related/identical only
  Rational total_speed;
  std::vector<Rational> speeds;
  std::vector<Rational> suffix_size;  // sum of job sizes from pos on
};

SearchData make_search_data(const Instance& instance, const std::vector<int>& job_order) {
  SearchData d;
  d.m = instance.m();
  d.n = static_cast<int>(job_order.size());
  d.p.reserve(d.n);
  for (int j : job_order) {
    std::vector<Rational> row;
    row.reserve(d.m);
    for (int i = 0; i < d.m; ++i)
      row.push_back(processing_time(instance.model, instance.jobs[j], i));
    d.p.push_back(std::move(row));
  }
  for (const auto& row : d.p) {
    Rational mn = Rational::inf();
    for (const Rational& t : row) mn = min(mn, t);
    d.min_time.push_back(mn);
  }
  d.volume_bound = instance.model.has_speeds();
  d.suffix_size.assign(d.n + 1, Rational(0));
  if (d.volume_bound) {
    d.speeds = instance.model.speeds;
    d.total_speed = Rational(0);
    for (const Rational& s : d.speeds) d.total_speed += s;
    for (int pos = d.n - 1; pos >= 0; --pos)
      d.suffix_size[pos] = d.suffix_size[pos + 1] + instance.jobs[job_order[pos]].size;
  }
  return d;
}

struct Search {
  const SearchData& data;
  std::vector<Rational> loads;
  Rational best{0};
  bool have_best = false;

  explicit Search(const SearchData& d) : data(d), loads(d.m) {}

  Rational node_lower_bound(int depth, const Rational& current_max) const {
    Rational lb = current_max;
    if (depth < data.n && lb < data.min_time[depth]) lb = data.min_time[depth];
    if (data.volume_bound) {
      // Work = remaining sizes + size-equivalent of what is already placed.
      Rational work = data.suffix_size[depth];
      for (int i = 0; i < data.m; ++i) work += loads[i] * data.speeds[i];
      Rational avg = work / data.total_speed;
      if (lb < avg) lb = avg;
    }
    return lb;
  }

  void dfs(int depth, const Rational& current_max) {
    if (depth == data.n) {
      if (!have_best || current_max < best) {
        best = current_max;
        have_best = true;
      }
      return;
    }
    if (have_best && node_lower_bound(depth, current_max) >= best) return;
    for (int i = 0; i < data.m; ++i) {
      const Rational& pij = data.p[depth][i];
      if (pij.is_inf()) continue;
      loads[i] += pij;
      Rational next_max = max(current_max, loads[i]);
      if (!have_best || next_max < best) dfs(depth + 1, next_max);
      loads[i] -= pij;
    }
  }

  // First assignment (machines tried in ascending order) completing under cap;
  // with jobs in arrival order this is the lexicographically smallest witness.
  bool lex_witness(int depth, const Rational& current_max, const Rational& cap,
                   std::vector<int>& out) {
    if (node_lower_bound(depth, current_max) > cap) return false;
    if (depth == data.n) return true;
    for (int i = 0; i < data.m; ++i) {
      const Rational& pij = data.p[depth][i];
      if (pij.is_inf()) continue;
      loads[i] += pij;
      Rational next_max = max(current_max, loads[i]);
      bool ok = next_max <= cap && lex_witness(depth + 1, next_max, cap, out);
      loads[i] -= pij;
      if (ok) {
        out[depth] = i;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

OptResult opt_bruteforce(const Instance& instance, std::uint64_t budget) {
  instance.validate();
  const int m = instance.m();
  const int n = instance.n();

  std::uint64_t states = 1;
  for (int j = 0; j < n; ++j) {
    if (states > budget / static_cast<std::uint64_t>(m))
      throw OptBudgetExceeded("m^n exceeds the search budget; use opt_lower_bound instead");
    states *= static_cast<std::uint64_t>(m);
  }

  OptResult result;
  if (n == 0) {
    result.makespan = Rational(0);
    return result;
  }

  // Value search with hardest jobs first (prunes best).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> min_times(n, Rational::inf());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      min_times[j] = min(min_times[j], processing_time(instance.model, instance.jobs[j], i));
  std::stable_sort(order.begin(), order.end(),
                   [&min_times](int a, int b) { return min_times[b] < min_times[a]; });

  SearchData data = make_search_data(instance, order);
  Search search(data);

  // Seed the bound with a list-scheduling pass over the search order.
  {
    std::vector<Rational> loads(m);
    Rational seed_max(0);
    for (int pos = 0; pos < n; ++pos) {
      int best_i = -1;
      Rational best_total;
      for (int i = 0; i < m; ++i) {
        if (data.p[pos][i].is_inf()) continue;
        Rational total = loads[i] + data.p[pos][i];
        if (best_i < 0 || total < best_total) {
          best_i = i;
          best_total = total;
        }
      }
      loads[best_i] = best_total;
      seed_max = max(seed_max, best_total);
    }
    search.best = seed_max;
    search.have_best = true;
  }
  search.dfs(0, Rational(0));
  result.makespan = search.best;

  // Deterministic witness: lexicographic DFS in arrival order at the optimum.
  std::vector<int> arrival(n);
  std::iota(arrival.begin(), arrival.end(), 0);
  SearchData arrival_data = make_search_data(instance, arrival);
  Search witness_search(arrival_data);
  result.witness.assign(n, -1);
  if (!witness_search.lex_witness(0, Rational(0), result.makespan, result.witness))
    throw ModelError("witness reconstruction failed");
  return result;
}

Rational opt_lower_bound(const Instance& instance) {
  instance.validate();
  Rational bound(0);
  for (const JobProfile& job : instance.jobs) {
    Rational mn = Rational::inf();
    for (int i = 0; i < instance.m(); ++i)
      mn = min(mn, processing_time(instance.model, job, i));
    bound = max(bound, mn);
  }
  if (instance.model.has_speeds()) {
    Rational work(0), speed(0);
    for (const JobProfile& job : instance.jobs) work += job.size;
    for (int i = 0; i < instance.m(); ++i) speed += instance.model.speed(i);
    bound = max(bound, work / speed);
  }
  return bound;
}

Rational assignment_makespan(const Instance& instance, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != instance.n())
    throw ModelError("assignment length mismatch");
  std::vector<Rational> loads(instance.m());
  for (int j = 0; j < instance.n(); ++j) {
    if (assignment[j] < 0 || assignment[j] >= instance.m())
      throw ModelError("assignment machine out of range");
    Rational p = processing_time(instance.model, instance.jobs[j], assignment[j]);
    if (p.is_inf()) throw ModelError("assignment places a job on a forbidden machine");
    loads[assignment[j]] += p;
  }
  Rational mk(0);
  for (const Rational& l : loads) mk = max(mk, l);
  return mk;
}

}  // namespace pricesched
