#pragma once

// Randomized agreement check between the closed-form COGs and the geometric
// oracle over a grid of overlap percentages and base lengths.

#include "cogassess/geometry_oracle.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace cogassess {

struct SweepOptions {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;
  std::vector<int> grade_counts{5};  // cycled across samples
  std::vector<double> ks{10, 20, 30, 40, 49};
  std::vector<double> bases{1, 10};
  bool inject_uniform = false;  // first sample is the uniform distribution
  double tolerance = 1e-9;
};

struct SweepSummary {
  std::uint64_t distributions = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double max_dx = 0.0;
  double max_dy = 0.0;
};

/// RM is checked once per base length, GRM once per (k, base) pair. Each
/// record is handed to `sink` in a deterministic order.
SweepSummary run_sweep(const SweepOptions& options,
                       const std::function<void(const ValidationRecord&)>& sink = {});

}  // namespace cogassess
