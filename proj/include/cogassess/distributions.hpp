#pragma once

#include "cogassess/errors.hpp"
#include "cogassess/scalar.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cogassess {

/// Percent-score interval of one grade. Half-open [lo, hi); the top grade of a
/// scale is closed at 100.
struct ScoreInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Ordered linguistic grades, worst first, with the score interval of each.
class GradeScale {
 public:
  struct Grade {
    std::string label;
    ScoreInterval interval;
  };

  /// Grades may be given in any order; they are sorted by interval start.
  /// Throws InputError unless the intervals tile [0, 100] and labels are unique.
  explicit GradeScale(std::vector<Grade> grades);

  /// F=[0,50) D=[50,60) C=[60,75) B=[75,85) A=[85,100].
  static GradeScale standard();
  /// F=[0,55) D=[55,65) C=[65,80) B=[80,90) A=[90,100].
  static GradeScale strict();

  std::size_t size() const noexcept { return grades_.size(); }
  const std::vector<Grade>& grades() const noexcept { return grades_; }
  const std::string& label(std::size_t index) const { return grades_.at(index).label; }
  std::vector<std::string> labels() const;

  /// Zero-based index of the grade whose interval contains `score`.
  std::size_t grade_of(double score) const;
  /// Zero-based index of `label`; throws UnknownGradeError.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const GradeScale& a, const GradeScale& b);

 private:
  std::vector<Grade> grades_;
};

/// Per-grade student tallies of one group, indexed worst grade first.
class Cohort {
 public:
  using Counts = Vector<std::int64_t>;

  Cohort(std::string name, Counts counts);

  const std::string& name() const noexcept { return name_; }
  const Counts& counts() const noexcept { return counts_; }
  std::size_t grade_count() const noexcept { return static_cast<std::size_t>(counts_.size()); }
  std::int64_t total() const { return counts_.sum(); }

 private:
  std::string name_;
  Counts counts_;
};

/// Normalized frequency vector y_1..y_n (worst grade first) summing to one.
template <typename Scalar>
class BasicDistribution {
 public:
  using VectorType = Vector<Scalar>;

  /// Throws InputError unless every entry is in [0, 1] and the entries sum to
  /// one within invariant_tolerance<Scalar>().
  explicit BasicDistribution(VectorType y) : y_(std::move(y)) {
    if (y_.size() < 2) throw InputError("distribution needs at least 2 grades");
    Scalar sum(0);
    for (Eigen::Index i = 0; i < y_.size(); ++i) {
      if (y_(i) < Scalar(0) || y_(i) > Scalar(1)) {
        throw InputError("distribution entry out of [0, 1]");
      }
      sum += y_(i);
    }
    if (abs_diff(sum, Scalar(1)) > invariant_tolerance<Scalar>()) {
      throw InputError("distribution does not sum to 1");
    }
  }

  static BasicDistribution uniform(Eigen::Index n) {
    return BasicDistribution(VectorType::Constant(n, Scalar(1) / Scalar(static_cast<std::int64_t>(n))));
  }

  /// All mass on the zero-based grade `index`.
  static BasicDistribution point(Eigen::Index n, Eigen::Index index) {
    VectorType y = VectorType::Zero(n);
    y(index) = Scalar(1);
    return BasicDistribution(std::move(y));
  }

  const VectorType& y() const noexcept { return y_; }
  Eigen::Index size() const noexcept { return y_.size(); }
  const Scalar& operator[](Eigen::Index i) const { return y_(i); }

  friend bool operator==(const BasicDistribution& a, const BasicDistribution& b) {
    return a.y_ == b.y_;
  }

 private:
  VectorType y_;
};

using Distribution = BasicDistribution<double>;
using ExactDistribution = BasicDistribution<Rational>;

/// Tallies scores against `scale`; throws InputError naming any score outside [0, 100].
Cohort classify_scores(std::span<const double> scores, const GradeScale& scale,
                       std::string name = "scores");

/// y_i = counts_i / total. Throws EmptyCohortError when the cohort is empty.
template <typename Scalar = double>
BasicDistribution<Scalar> to_distribution(const Cohort& cohort) {
  const std::int64_t total = cohort.total();
  if (total <= 0) throw EmptyCohortError(cohort.name());
  Vector<Scalar> y(cohort.counts().size());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y(i) = Scalar(cohort.counts()(i)) / Scalar(total);
  }
  return BasicDistribution<Scalar>(std::move(y));
}

/// Divides a nonnegative membership vector by its sum.
template <typename Derived>
BasicDistribution<typename Derived::Scalar> normalize_membership(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Scalar sum(0);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i) < Scalar(0)) throw InputError("membership entries must be nonnegative");
    sum += m(i);
  }
  if (!(sum > Scalar(0))) throw DegenerateMembershipError();
  Vector<Scalar> y = m / sum;
  return BasicDistribution<Scalar>(std::move(y));
}

}  // namespace cogassess
