#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dispset/network.hpp"

namespace dispset {

struct BenchRow {
  std::size_t n_leaves = 0;
  std::size_t reps = 0;
  double mean_ms = 0;
  double max_ms = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  // Least-squares slope of log(mean_ms) against log(n); needs two sizes.
  std::optional<double> exponent;
};

// Equivalent pair on n leaves: a random normal network with n/8
// reticulations, and a copy carrying max(1, n/16) extra trivial shortcuts.
std::pair<Network, Network> bench_pair(std::size_t n_leaves, std::uint64_t seed);

// Times same_display_set on bench pairs. Sizes must be strictly increasing
// and at least 2, else Error{InvalidSpec}.
BenchResult run_benchmark(const std::vector<std::size_t>& sizes, std::uint64_t seed,
                          std::size_t reps);

std::optional<double> fit_exponent(const std::vector<BenchRow>& rows);

}  // namespace dispset
