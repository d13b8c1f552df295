#include "cogassess/sampling.hpp"

#include <cmath>

namespace cogassess {

double DistributionSampler::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t DistributionSampler::below(std::uint64_t bound) {
  // Modulo bias is irrelevant for the small bounds used here.
  return engine_() % bound;
}

Distribution DistributionSampler::dirichlet(int n) {
  Vector<double> g(n);
  for (int i = 0; i < n; ++i) g(i) = -std::log1p(-unit());
  if (!(g.sum() > 0.0)) g(0) = 1.0;
  return normalize_membership(g);
}

Cohort DistributionSampler::cohort_counts(int n, int max_total) {
  Cohort::Counts counts = Cohort::Counts::Zero(n);
  const auto total = 1 + below(static_cast<std::uint64_t>(max_total));
  // Random per-grade propensities make lopsided cohorts as likely as flat ones.
  Vector<double> p = dirichlet(n).y();
  for (std::uint64_t s = 0; s < total; ++s) {
    double u = unit();
    int g = 0;
    while (g + 1 < n && u >= p(g)) u -= p(g++);
    ++counts(g);
  }
  return Cohort("sample", std::move(counts));
}

Distribution DistributionSampler::cohort(int n, int max_total) {
  return to_distribution(cohort_counts(n, max_total));
}

Distribution DistributionSampler::any(int n) {
  const auto kind = below(20);
  if (kind < 9) return dirichlet(n);
  if (kind < 17) return cohort(n);
  if (kind == 17) return Distribution::uniform(n);
  if (kind == 18) return Distribution::point(n, static_cast<Eigen::Index>(below(n)));
  Vector<double> m = Vector<double>::Zero(n);
  m(static_cast<Eigen::Index>(below(n))) = unit() + 0.1;
  m(static_cast<Eigen::Index>(below(n))) += unit() + 0.1;
  return normalize_membership(m);
}

}  // namespace cogassess
