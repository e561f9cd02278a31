#include "dispset/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "dispset/equivalence.hpp"
#include "dispset/generate.hpp"

namespace dispset {

std::pair<Network, Network> bench_pair(std::size_t n_leaves, std::uint64_t seed) {
  Rng rng(seed);
  Network first =
      random_network({n_leaves, n_leaves / 8, rng.next(), NetworkClass::Normal});
  Network second = first;
  const std::size_t shortcuts = std::max<std::size_t>(1, n_leaves / 16);
  for (std::size_t i = 0; i < shortcuts; ++i) second = insert_trivial_shortcut(second, rng.next());
  return {std::move(first), std::move(second)};
}

std::optional<double> fit_exponent(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) return std::nullopt;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& r : rows) {
    const double x = std::log(static_cast<double>(r.n_leaves));
    const double y = std::log(std::max(r.mean_ms, 1e-6));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(rows.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

BenchResult run_benchmark(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                          std::size_t reps) {
  if (sizes.empty() || reps == 0)
    throw Error(ErrorCode::InvalidSpec, "bench needs at least one size and one repetition");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 2) throw Error(ErrorCode::InvalidSpec, "bench sizes must be >= 2");
    if (i && sizes[i] <= sizes[i - 1])
      throw Error(ErrorCode::InvalidSpec, "bench sizes must be strictly increasing");
  }
  BenchResult result;
  Rng rng(seed);
  for (std::size_t n : sizes) {
    BenchRow row;
    row.n_leaves = n;
    row.reps = reps;
    double total = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      auto [first, second] = bench_pair(n, rng.next());
      const auto start = std::chrono::steady_clock::now();
      const Decision d = same_display_set(first, second);
      const auto stop = std::chrono::steady_clock::now();
      if (!d.equivalent) throw std::logic_error("bench pair judged inequivalent: " + d.reason);
      const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      total += ms;
      row.max_ms = std::max(row.max_ms, ms);
    }
    row.mean_ms = total / static_cast<double>(reps);
    result.rows.push_back(row);
  }
  result.exponent = fit_exponent(result.rows);
  return result;
}

}  // namespace dispset
