#include "cogassess/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace cogassess {

GradeScale::GradeScale(std::vector<Grade> grades) : grades_(std::move(grades)) {
  if (grades_.size() < 2) throw InputError("grade scale needs at least 2 grades");
  std::set<std::string> seen;
  for (const auto& g : grades_) {
    if (g.label.empty()) throw InputError("grade label must not be empty");
    if (!seen.insert(g.label).second) throw InputError("duplicate grade label '" + g.label + "'");
    if (!(g.interval.lo < g.interval.hi)) {
      throw InputError("grade '" + g.label + "' has an empty score interval");
    }
  }
  std::sort(grades_.begin(), grades_.end(),
            [](const Grade& a, const Grade& b) { return a.interval.lo < b.interval.lo; });
  if (grades_.front().interval.lo != 0.0 || grades_.back().interval.hi != 100.0) {
    throw InputError("grade intervals must cover [0, 100]");
  }
  for (std::size_t i = 0; i + 1 < grades_.size(); ++i) {
    if (grades_[i].interval.hi != grades_[i + 1].interval.lo) {
      throw InputError("grade intervals of '" + grades_[i].label + "' and '" +
                       grades_[i + 1].label + "' overlap or leave a gap");
    }
  }
}

GradeScale GradeScale::standard() {
  return GradeScale({{"F", {0, 50}}, {"D", {50, 60}}, {"C", {60, 75}}, {"B", {75, 85}}, {"A", {85, 100}}});
}

GradeScale GradeScale::strict() {
  return GradeScale({{"F", {0, 55}}, {"D", {55, 65}}, {"C", {65, 80}}, {"B", {80, 90}}, {"A", {90, 100}}});
}

std::vector<std::string> GradeScale::labels() const {
  std::vector<std::string> out;
  out.reserve(grades_.size());
  for (const auto& g : grades_) out.push_back(g.label);
  return out;
}

std::size_t GradeScale::grade_of(double score) const {
  if (!(score >= 0.0 && score <= 100.0)) {
    std::ostringstream msg;
    msg << "score " << score << " outside [0, 100]";
    throw InputError(msg.str());
  }
  for (std::size_t i = 0; i + 1 < grades_.size(); ++i) {
    if (score < grades_[i].interval.hi) return i;
  }
  return grades_.size() - 1;
}

std::size_t GradeScale::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (grades_[i].label == label) return i;
  }
  throw UnknownGradeError(label);
}

bool operator==(const GradeScale& a, const GradeScale& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.grades_[i];
    const auto& y = b.grades_[i];
    if (x.label != y.label || x.interval.lo != y.interval.lo || x.interval.hi != y.interval.hi) {
      return false;
    }
  }
  return true;
}

Cohort::Cohort(std::string name, Counts counts) : name_(std::move(name)), counts_(std::move(counts)) {
  if (counts_.size() < 2) throw InputError("cohort needs at least 2 grades");
  if ((counts_.array() < 0).any()) throw InputError("cohort '" + name_ + "' has a negative count");
}

Cohort classify_scores(std::span<const double> scores, const GradeScale& scale, std::string name) {
  Cohort::Counts counts = Cohort::Counts::Zero(static_cast<Eigen::Index>(scale.size()));
  for (double s : scores) ++counts(static_cast<Eigen::Index>(scale.grade_of(s)));
  return Cohort(std::move(name), std::move(counts));
}

}  // namespace cogassess
