#pragma once

// Seeded random distributions for sweeps and property checks. Uses only the
// raw 64-bit engine output so streams are identical across standard libraries.

#include "cogassess/distributions.hpp"

#include <cstdint>
#include <random>

namespace cogassess {

class DistributionSampler {
 public:
  explicit DistributionSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit();
  /// Uniform integer on [0, bound).
  std::uint64_t below(std::uint64_t bound);

  /// Flat Dirichlet draw over n grades.
  Distribution dirichlet(int n);
  /// Frequencies of a random integer cohort with up to `max_total` students.
  Distribution cohort(int n, int max_total = 60);
  /// Counts of a random integer cohort, total >= 1.
  Cohort cohort_counts(int n, int max_total = 60);
  /// Mixture: mostly Dirichlet and integer cohorts, occasionally sparse,
  /// point-mass or uniform.
  Distribution any(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace cogassess
