#include "cogassess/sweep.hpp"

#include "cogassess/sampling.hpp"

#include <algorithm>

namespace cogassess {

SweepSummary run_sweep(const SweepOptions& options,
                       const std::function<void(const ValidationRecord&)>& sink) {
  if (options.samples == 0) throw InputError("sweep needs at least one sample");
  if (options.grade_counts.empty() || options.bases.empty()) {
    throw InputError("sweep needs grade counts and base lengths");
  }
  DistributionSampler sampler(options.seed);
  SweepSummary summary;

  auto check = [&](const Distribution& d, const ModelConfig& cfg) {
    const ValidationRecord r = cross_validate(d, cfg, options.tolerance);
    ++summary.checks;
    if (!r.pass) ++summary.failures;
    summary.max_dx = std::max(summary.max_dx, r.dx);
    summary.max_dy = std::max(summary.max_dy, r.dy);
    if (sink) sink(r);
  };

  for (std::uint64_t s = 0; s < options.samples; ++s) {
    const int n = options.grade_counts[s % options.grade_counts.size()];
    const Distribution d =
        (options.inject_uniform && s == 0) ? Distribution::uniform(n) : sampler.any(n);
    ++summary.distributions;
    for (double b : options.bases) {
      ModelConfig rm = ModelConfig::defaults(Variant::Rm, n);
      rm.b = b;
      check(d, rm);
      for (double k : options.ks) {
        ModelConfig grm = ModelConfig::defaults(Variant::Grm, n);
        grm.k = k;
        grm.b = b;
        check(d, grm);
      }
    }
  }
  return summary;
}

}  // namespace cogassess
