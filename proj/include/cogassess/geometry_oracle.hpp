#pragma once

// Independent COG computation by building the bar figure itself and
// integrating over it. Figures are unions of axis-aligned rectangles standing
// on the x axis, so each elementary x-interval carries a few constant layers
// and every moment has a closed form per layer.

#include "cogassess/distributions.hpp"
#include "cogassess/errors.hpp"
#include "cogassess/models.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cogassess {

/// Bar [lo, hi] x [0, height].
template <typename Scalar = double>
struct Bar {
  Scalar lo{};
  Scalar hi{};
  Scalar height{};
};

/// Constant density over one elementary x-interval. `multiplicity` counts
/// how many bars of this height cover the interval.
template <typename Scalar = double>
struct Layer {
  Scalar height{};
  int multiplicity = 1;
};

template <typename Scalar = double>
struct Segment {
  Scalar lo{};
  Scalar hi{};
  std::vector<Layer<Scalar>> layers;
};

/// Piecewise-constant weighted region; segments are disjoint and ascending.
template <typename Scalar = double>
struct WeightedRegion {
  std::vector<Segment<Scalar>> segments;

  Scalar mass() const {
    Scalar total(0);
    for (const auto& s : segments) {
      for (const auto& l : s.layers) total += Scalar(l.multiplicity) * l.height * (s.hi - s.lo);
    }
    return total;
  }
};

/// Splits overlapping bars at every edge. Inside a shared interval each bar
/// keeps its own layer, so the shared ground is counted once per bar.
template <typename Scalar>
WeightedRegion<Scalar> decompose(const std::vector<Bar<Scalar>>& bars) {
  std::vector<Scalar> edges;
  for (const auto& bar : bars) {
    if (bar.height > Scalar(0)) {
      edges.push_back(bar.lo);
      edges.push_back(bar.hi);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  WeightedRegion<Scalar> region;
  for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
    Segment<Scalar> seg{edges[j], edges[j + 1], {}};
    for (const auto& bar : bars) {
      if (!(bar.height > Scalar(0)) || bar.lo > seg.lo || bar.hi < seg.hi) continue;
      auto same = std::find_if(seg.layers.begin(), seg.layers.end(),
                               [&](const Layer<Scalar>& l) { return l.height == bar.height; });
      if (same != seg.layers.end()) {
        ++same->multiplicity;
      } else {
        seg.layers.push_back({bar.height, 1});
      }
    }
    if (!seg.layers.empty()) region.segments.push_back(std::move(seg));
  }
  return region;
}

/// Bar i on [b(i-1), b i] with height y_i.
template <typename Scalar>
std::vector<Bar<Scalar>> rm_bars(const BasicDistribution<Scalar>& d, const Scalar& b) {
  std::vector<Bar<Scalar>> bars;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const Scalar lo = b * Scalar(static_cast<std::int64_t>(i));
    bars.push_back({lo, lo + b, d[i]});
  }
  return bars;
}

/// Bar i on [s_i, s_i + b] with s_i = b (1 - k/100)(i - 1), height y_i.
template <typename Scalar>
std::vector<Bar<Scalar>> grm_bars(const BasicDistribution<Scalar>& d,
                                  const BasicModelConfig<Scalar>& cfg) {
  if (cfg.variant != Variant::Grm) {
    throw ModelMisuseError("only the rectangular overlapping model has a bar figure");
  }
  cfg.validate();
  detail::require_size(d.size(), cfg.n);
  const Scalar step = cfg.b * (Scalar(1) - cfg.k / Scalar(100));
  std::vector<Bar<Scalar>> bars;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const Scalar lo = step * Scalar(static_cast<std::int64_t>(i));
    bars.push_back({lo, lo + cfg.b, d[i]});
  }
  return bars;
}

template <typename Scalar>
WeightedRegion<Scalar> build_rm_figure(const BasicDistribution<Scalar>& d, const Scalar& b) {
  if (!(b > Scalar(0))) throw InputError("base length must be positive");
  return decompose(rm_bars(d, b));
}

template <typename Scalar>
WeightedRegion<Scalar> build_grm_figure(const BasicDistribution<Scalar>& d,
                                        const BasicModelConfig<Scalar>& cfg) {
  return decompose(grm_bars(d, cfg));
}

/// Centroid of the region: x-moment from segment midpoints, y-moment from
/// half of each layer's height.
template <typename Scalar>
CogPoint<Scalar> integrate_cog(const WeightedRegion<Scalar>& region) {
  Scalar mass(0), x_moment(0), y_moment(0);
  for (const auto& s : region.segments) {
    const Scalar width = s.hi - s.lo;
    const Scalar mid = (s.lo + s.hi) / Scalar(2);
    for (const auto& l : s.layers) {
      const Scalar m = Scalar(l.multiplicity) * l.height * width;
      mass += m;
      x_moment += m * mid;
      y_moment += m * l.height / Scalar(2);
    }
  }
  if (!(mass > Scalar(0))) throw DegenerateFigureError();
  return {x_moment / mass, y_moment / mass};
}

/// Oracle COG for RM or GRM configs; other variants have no figure here.
template <typename Scalar>
CogPoint<Scalar> oracle_cog(const BasicDistribution<Scalar>& d,
                            const BasicModelConfig<Scalar>& cfg) {
  if (cfg.variant == Variant::Rm) {
    cfg.validate();
    detail::require_size(d.size(), cfg.n);
    return integrate_cog(build_rm_figure(d, cfg.b));
  }
  return integrate_cog(build_grm_figure(d, cfg));
}

/// Density-weighted Monte Carlo estimate over the bounding box. Demonstration
/// only; its error is O(samples^-1/2).
CogPoint<double> monte_carlo_cog(const WeightedRegion<double>& region, std::uint64_t samples,
                                 std::uint64_t seed);

/// Closed form and oracle COG for one distribution and model.
struct ValidationRecord {
  Vector<double> y;
  Variant variant = Variant::Grm;
  int n = 0;
  double k = 0.0;
  double b = 0.0;
  CogPoint<double> closed;
  CogPoint<double> oracle;
  double dx = 0.0;
  double dy = 0.0;
  bool pass = false;
};

ValidationRecord cross_validate(const Distribution& d, const ModelConfig& cfg,
                                double tolerance = 1e-9);

}  // namespace cogassess
