#pragma once

// Pairwise group comparison by COG (greater X_c wins; equal X_c falls back to
// Y_c, whose preferred direction flips at half the figure extent) and
// characterization against the ideal group.

#include "cogassess/distributions.hpp"
#include "cogassess/models.hpp"

#include <string>
#include <string_view>

namespace cogassess {

enum class Winner { First, Second, Tie };
enum class Basis { PrimaryXc, SecondaryYcHigh, SecondaryYcLow, ExactTie };

std::string_view to_string(Winner w);
std::string_view to_string(Basis b);

template <typename Scalar = double>
struct ComparisonVerdict {
  Winner winner = Winner::Tie;
  Basis basis = Basis::ExactTie;
  CogPoint<Scalar> first;
  CogPoint<Scalar> second;
  Scalar moment_first{};   // sum i * y_i
  Scalar moment_second{};
  Scalar square_first{};   // sum y_i^2
  Scalar square_second{};
  std::string note;
};

template <typename Scalar = double>
Scalar default_eps() {
  if constexpr (is_exact_v<Scalar>) {
    return Scalar(0);
  } else {
    return Scalar(1e-9);
  }
}

/// X_c at which the Y_c tie-break changes direction: half the figure extent for
/// overlapping models, half the ideal X_c for RM.
template <typename Scalar>
Scalar secondary_threshold(const BasicModelConfig<Scalar>& cfg) {
  return cfg.overlapping() ? figure_extent(cfg) / Scalar(2) : ideal_xc(cfg) / Scalar(2);
}

template <typename Scalar>
ComparisonVerdict<Scalar> compare(const BasicDistribution<Scalar>& d1,
                                  const BasicDistribution<Scalar>& d2,
                                  const BasicModelConfig<Scalar>& cfg,
                                  const Scalar& eps = default_eps<Scalar>()) {
  if (d1.size() != d2.size()) {
    throw InputError("cannot compare distributions over different grade counts");
  }
  if (eps < Scalar(0)) throw InputError("tolerance must be nonnegative");

  ComparisonVerdict<Scalar> v;
  v.first = cog(d1, cfg);
  v.second = cog(d2, cfg);
  v.moment_first = grade_moment(d1);
  v.moment_second = grade_moment(d2);
  v.square_first = square_sum(d1);
  v.square_second = square_sum(d2);

  const Scalar& x1 = v.first.xc;
  const Scalar& x2 = v.second.xc;
  if (abs_diff(x1, x2) > eps) {
    v.basis = Basis::PrimaryXc;
    v.winner = x1 > x2 ? Winner::First : Winner::Second;
    return v;
  }

  const Scalar& y1 = v.first.yc;
  const Scalar& y2 = v.second.yc;
  if (abs_diff(y1, y2) <= eps) {
    v.basis = Basis::ExactTie;
    v.winner = Winner::Tie;
    if (!(d1 == d2)) v.note = "different distributions with equal COG; the criterion does not separate them";
    return v;
  }

  // A shared X_c exactly on the threshold takes the high branch.
  const Scalar shared = (x1 + x2) / Scalar(2);
  if (shared >= secondary_threshold(cfg) - eps) {
    v.basis = Basis::SecondaryYcHigh;
    v.winner = y1 > y2 ? Winner::First : Winner::Second;
  } else {
    v.basis = Basis::SecondaryYcLow;
    v.winner = y1 < y2 ? Winner::First : Winner::Second;
  }
  return v;
}

enum class Label { Satisfactory, Unsatisfactory };
std::string_view to_string(Label l);

/// Score of a group relative to the ideal group: satisfactory iff the score
/// reaches half of the ideal score.
template <typename Scalar = double>
struct Characterization {
  Label label = Label::Unsatisfactory;
  Scalar ratio{};      // score / ideal score
  Scalar score{};
  Scalar threshold{};  // half the ideal score
  bool extension = false;  // midpoint heuristic rather than an ideal-case rule
};

namespace detail {

template <typename Scalar>
Characterization<Scalar> characterize_score(const Scalar& score, const Scalar& ideal,
                                            bool extension) {
  Characterization<Scalar> c;
  c.score = score;
  c.threshold = ideal / Scalar(2);
  c.ratio = score / ideal;
  c.label = score >= c.threshold ? Label::Satisfactory : Label::Unsatisfactory;
  c.extension = extension;
  return c;
}

}  // namespace detail

/// Judges X_c under `cfg` against half of the ideal X_c.
template <typename Scalar>
Characterization<Scalar> characterize(const BasicDistribution<Scalar>& d,
                                      const BasicModelConfig<Scalar>& cfg) {
  return detail::characterize_score(cog(d, cfg).xc, ideal_xc(cfg), false);
}

/// Judges the GPA index against half of its maximum n - 1.
template <typename Scalar>
Characterization<Scalar> characterize_gpa(const BasicDistribution<Scalar>& d) {
  return detail::characterize_score(gpa_index(d), Scalar(static_cast<std::int64_t>(d.size() - 1)),
                                    false);
}

/// Judges the mean grade value against n / 2. Flagged as an extension.
template <typename Scalar>
Characterization<Scalar> characterize_mean(const BasicDistribution<Scalar>& d) {
  return detail::characterize_score(mean_value(d), Scalar(static_cast<std::int64_t>(d.size())),
                                    true);
}

}  // namespace cogassess
