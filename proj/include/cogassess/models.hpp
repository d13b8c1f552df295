#pragma once

// Assessment quantities over a grade distribution: classical statistics, the
// GPA index, the rectangular COG model and the overlapping-figure COG family.
// Every quantity is an inner product against a per-grade weight vector, so the
// functions are written once over the scalar type.

#include "cogassess/distributions.hpp"
#include "cogassess/errors.hpp"
#include "cogassess/scalar.hpp"

#include <string>
#include <string_view>

namespace cogassess {

enum class Variant { Rm, Grm, Tfam, Tpfam };

std::string_view to_string(Variant v);
/// Accepts rm, grm, tfam, tpfam (case-insensitive); throws InputError.
Variant parse_variant(std::string_view name);

/// Y_c coefficient a of each variant: RM and GRM 1/2, TFAM 1/5, TpFAM 3/7.
template <typename Scalar = double>
Scalar default_coefficient(Variant v) {
  switch (v) {
    case Variant::Tfam:
      return Scalar(1) / Scalar(5);
    case Variant::Tpfam:
      return Scalar(3) / Scalar(7);
    case Variant::Rm:
    case Variant::Grm:
      break;
  }
  return Scalar(1) / Scalar(2);
}

/// Model selection plus its geometry. `k` is the overlap percentage of adjacent
/// bases, `a` scales Y_c, `b` is the base length of one figure.
template <typename Scalar = double>
struct BasicModelConfig {
  Variant variant = Variant::Grm;
  int n = 5;
  Scalar k = Scalar(30);
  Scalar a = Scalar(1) / Scalar(2);
  Scalar b = Scalar(1);

  static BasicModelConfig defaults(Variant v, int grades = 5) {
    BasicModelConfig cfg;
    cfg.variant = v;
    cfg.n = grades;
    cfg.a = default_coefficient<Scalar>(v);
    return cfg;
  }

  bool overlapping() const noexcept { return variant != Variant::Rm; }

  /// Throws InputError unless n >= 2, b > 0 and, for overlapping variants,
  /// 0 < k < 50 and a > 0.
  void validate() const {
    if (n < 2) throw InputError("model needs at least 2 grades");
    if (!(b > Scalar(0))) throw InputError("base length must be positive");
    if (overlapping()) {
      if (!(k > Scalar(0) && k < Scalar(50))) throw InputError("overlap k must lie in (0, 50)");
      if (!(a > Scalar(0))) throw InputError("coefficient a must be positive");
    }
  }
};

using ModelConfig = BasicModelConfig<double>;

template <typename Scalar = double>
struct CogPoint {
  Scalar xc{};
  Scalar yc{};

  friend bool operator==(const CogPoint&, const CogPoint&) = default;
};

/// Worst, balanced and ideal COGs; every reachable overlapping-model COG lies
/// in this triangle.
template <typename Scalar = double>
struct TriangleFrame {
  CogPoint<Scalar> worst;
  CogPoint<Scalar> balanced;
  CogPoint<Scalar> ideal;
};

namespace detail {

inline void require_size(Eigen::Index got, int want) {
  if (got != want) {
    throw InputError("distribution has " + std::to_string(got) + " grades, model expects " +
                     std::to_string(want));
  }
}

}  // namespace detail

/// Grade values 1..n, worst grade first.
template <typename Scalar = double>
Vector<Scalar> grade_values(Eigen::Index n) {
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Scalar(static_cast<std::int64_t>(i + 1));
  return v;
}

/// Key expression driving X_c: sum of i * y_i.
template <typename Scalar>
Scalar grade_moment(const BasicDistribution<Scalar>& d) {
  return grade_values<Scalar>(d.size()).dot(d.y());
}

/// Key expression driving Y_c: sum of y_i^2.
template <typename Scalar>
Scalar square_sum(const BasicDistribution<Scalar>& d) {
  return d.y().dot(d.y());
}

template <typename Scalar>
Scalar mean_value(const BasicDistribution<Scalar>& d) {
  return grade_moment(d);
}

template <typename Scalar>
Scalar variance(const BasicDistribution<Scalar>& d) {
  const Vector<Scalar> values = grade_values<Scalar>(d.size());
  const Scalar mean = values.dot(d.y());
  return values.cwiseProduct(values).dot(d.y()) - mean * mean;
}

/// Share of the group at grade `threshold` (1-based) or better.
template <typename Scalar>
Scalar quality_of_knowledge(const BasicDistribution<Scalar>& d, Eigen::Index threshold) {
  if (threshold < 1 || threshold > d.size()) {
    throw InputError("quality threshold " + std::to_string(threshold) + " outside 1.." +
                     std::to_string(d.size()));
  }
  return d.y().tail(d.size() - threshold + 1).sum();
}

/// Threshold defaults to the second-best grade.
template <typename Scalar>
Scalar quality_of_knowledge(const BasicDistribution<Scalar>& d) {
  return quality_of_knowledge(d, d.size() - 1);
}

template <typename Scalar = double>
Vector<Scalar> gpa_weights(Eigen::Index n) {
  return grade_values<Scalar>(n) - Vector<Scalar>::Constant(n, Scalar(1));
}

template <typename Scalar>
Scalar gpa_index(const BasicDistribution<Scalar>& d) {
  return gpa_weights<Scalar>(d.size()).dot(d.y());
}

/// Midpoints of juxtaposed bases: b * (2i - 1) / 2.
template <typename Scalar = double>
Vector<Scalar> rm_weights(Eigen::Index n, const Scalar& b) {
  Vector<Scalar> w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    w(i) = b * Scalar(static_cast<std::int64_t>(2 * i + 1)) / Scalar(2);
  }
  return w;
}

/// Midpoints of overlapped bases: b * ((1 - k/100)(i - 1) + 1/2).
template <typename Scalar>
Vector<Scalar> overlap_weights(const BasicModelConfig<Scalar>& cfg) {
  const Scalar step = Scalar(1) - cfg.k / Scalar(100);
  Vector<Scalar> w(cfg.n);
  for (int i = 0; i < cfg.n; ++i) {
    w(i) = cfg.b * (step * Scalar(i) + Scalar(1) / Scalar(2));
  }
  return w;
}

/// Coefficient of each y_i in X_c for the configured model.
template <typename Scalar>
Vector<Scalar> grade_weights(const BasicModelConfig<Scalar>& cfg) {
  return cfg.overlapping() ? overlap_weights(cfg) : rm_weights<Scalar>(cfg.n, cfg.b);
}

template <typename Scalar>
CogPoint<Scalar> rm_cog(const BasicDistribution<Scalar>& d, const Scalar& b) {
  if (!(b > Scalar(0))) throw InputError("base length must be positive");
  return {rm_weights<Scalar>(d.size(), b).dot(d.y()), square_sum(d) / Scalar(2)};
}

template <typename Scalar>
CogPoint<Scalar> rm_cog(const BasicDistribution<Scalar>& d) {
  return rm_cog(d, Scalar(1));
}

template <typename Scalar>
CogPoint<Scalar> overlapping_cog(const BasicDistribution<Scalar>& d,
                                 const BasicModelConfig<Scalar>& cfg) {
  if (!cfg.overlapping()) throw ModelMisuseError("rm_cog computes the rectangular model");
  cfg.validate();
  detail::require_size(d.size(), cfg.n);
  return {overlap_weights(cfg).dot(d.y()), cfg.a * square_sum(d)};
}

/// COG under whichever variant `cfg` selects.
template <typename Scalar>
CogPoint<Scalar> cog(const BasicDistribution<Scalar>& d, const BasicModelConfig<Scalar>& cfg) {
  if (cfg.overlapping()) return overlapping_cog(d, cfg);
  cfg.validate();
  detail::require_size(d.size(), cfg.n);
  return rm_cog(d, cfg.b);
}

/// Horizontal span m = b * (n - (n - 1) k / 100) of the overlapped figure.
/// Only requires n >= 2, b > 0 and 0 <= k < 50, so k = 0 gives the RM extent.
template <typename Scalar>
Scalar figure_extent(const BasicModelConfig<Scalar>& cfg) {
  if (cfg.n < 2) throw InputError("model needs at least 2 grades");
  if (!(cfg.b > Scalar(0))) throw InputError("base length must be positive");
  if (cfg.k < Scalar(0) || !(cfg.k < Scalar(50))) throw InputError("overlap k must lie in [0, 50)");
  const Scalar n(cfg.n);
  return cfg.b * (n - (n - Scalar(1)) * cfg.k / Scalar(100));
}

template <typename Scalar>
TriangleFrame<Scalar> triangle_frame(const BasicModelConfig<Scalar>& cfg) {
  using D = BasicDistribution<Scalar>;
  return {overlapping_cog(D::point(cfg.n, 0), cfg), overlapping_cog(D::uniform(cfg.n), cfg),
          overlapping_cog(D::point(cfg.n, cfg.n - 1), cfg)};
}

/// X_c of the ideal group (all mass on the best grade) under `cfg`.
template <typename Scalar>
Scalar ideal_xc(const BasicModelConfig<Scalar>& cfg) {
  cfg.validate();
  return grade_weights(cfg)(cfg.n - 1);
}

}  // namespace cogassess
