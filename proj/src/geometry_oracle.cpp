#include "cogassess/geometry_oracle.hpp"

#include <cmath>
#include <random>

namespace cogassess {

CogPoint<double> monte_carlo_cog(const WeightedRegion<double>& region, std::uint64_t samples,
                                 std::uint64_t seed) {
  if (region.segments.empty() || samples == 0) throw DegenerateFigureError();
  const double x_lo = region.segments.front().lo;
  const double x_hi = region.segments.back().hi;
  double y_hi = 0.0;
  for (const auto& s : region.segments) {
    for (const auto& l : s.layers) y_hi = std::max(y_hi, l.height);
  }

  std::mt19937_64 engine(seed);
  auto unit = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  double weight = 0.0, wx = 0.0, wy = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = x_lo + (x_hi - x_lo) * unit();
    const double y = y_hi * unit();
    auto seg = region.segments.begin();
    while (seg != region.segments.end() && seg->hi <= x) ++seg;
    if (seg == region.segments.end() || x < seg->lo) continue;
    int w = 0;
    for (const auto& l : seg->layers) {
      if (y < l.height) w += l.multiplicity;
    }
    weight += w;
    wx += w * x;
    wy += w * y;
  }
  if (weight == 0.0) throw DegenerateFigureError();
  return {wx / weight, wy / weight};
}

ValidationRecord cross_validate(const Distribution& d, const ModelConfig& cfg, double tolerance) {
  ValidationRecord r;
  r.y = d.y();
  r.variant = cfg.variant;
  r.n = cfg.n;
  r.k = cfg.overlapping() ? cfg.k : 0.0;
  r.b = cfg.b;
  r.closed = cog(d, cfg);
  r.oracle = oracle_cog(d, cfg);
  r.dx = std::abs(r.closed.xc - r.oracle.xc);
  r.dy = std::abs(r.closed.yc - r.oracle.yc);
  r.pass = r.dx <= tolerance && r.dy <= tolerance;
  return r;
}

}  // namespace cogassess
