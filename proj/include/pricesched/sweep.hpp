#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pricesched {

// Trial sweeps are the data-parallel kernels of this project: every trial is
// an independent simulation seeded by its own index. The OpenMP path and the
// serial path must produce identical result vectors (asserted in tests and
// compared by the sweep benchmark). Trial functions must not throw; report
// failures through the result type.
enum class ExecMode { serial, parallel };

template <typename Result, typename Fn>
std::vector<Result> run_trials(std::size_t count, ExecMode mode, Fn&& fn) {
  std::vector<Result> results(count);
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      results[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
  }
  return results;
}

// splitmix64: decorrelates per-trial seeds derived from (base_seed, index).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace pricesched
