#include "cogassess/comparison.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace cogassess {
namespace {

using testing::counts;
using testing::dist;

const ModelConfig kGrm = ModelConfig::defaults(Variant::Grm);
const ModelConfig kRm = ModelConfig::defaults(Variant::Rm);

Distribution shelter() { return to_distribution(counts("shelter", {18, 9, 6, 5, 0})); }
Distribution regular() { return to_distribution(counts("regular", {20, 3, 5, 1, 0})); }

TEST(Compare, ShelterBeatsRegularOnXc) {
  const auto v = compare(shelter(), regular(), kGrm);
  EXPECT_EQ(v.winner, Winner::First);
  EXPECT_EQ(v.basis, Basis::PrimaryXc);
  EXPECT_GT(v.first.xc, v.second.xc);
  for (Variant m : {Variant::Rm, Variant::Tfam, Variant::Tpfam}) {
    EXPECT_EQ(compare(shelter(), regular(), ModelConfig::defaults(m)).winner, Winner::First);
  }
}

TEST(Compare, ClassOneWinsOnHighBranch) {
  const auto one = to_distribution(counts("one", {0, 0, 10, 0, 50}));
  const auto two = to_distribution(counts("two", {0, 0, 0, 20, 40}));
  const auto v = compare(one, two, kGrm);
  EXPECT_EQ(v.winner, Winner::First);
  EXPECT_EQ(v.basis, Basis::SecondaryYcHigh);
  EXPECT_NEAR(v.square_first, 26.0 / 36, 1e-12);
  EXPECT_NEAR(v.square_second, 20.0 / 36, 1e-12);
  EXPECT_EQ(compare(two, one, kGrm).winner, Winner::Second);
}

TEST(Compare, ExactRationalClassVerdict) {
  const auto one = to_distribution<Rational>(counts("one", {0, 0, 10, 0, 50}));
  const auto two = to_distribution<Rational>(counts("two", {0, 0, 0, 20, 40}));
  const auto v = compare(one, two, BasicModelConfig<Rational>::defaults(Variant::Grm));
  EXPECT_EQ(v.first.xc, v.second.xc);
  EXPECT_EQ(v.square_first, Rational(26, 36));
  EXPECT_EQ(v.square_second, Rational(20, 36));
  EXPECT_EQ(v.winner, Winner::First);
  EXPECT_EQ(v.basis, Basis::SecondaryYcHigh);
}

TEST(Compare, LowBranchPrefersLowerYc) {
  // Equal sum i*y_i = 2 (< 3): the flatter group wins.
  const auto flat = dist({0.5, 0.25, 0.0, 0.25, 0.0});
  const auto peaked = Distribution::point(5, 1);
  const auto v = compare(flat, peaked, kGrm);
  EXPECT_EQ(v.basis, Basis::SecondaryYcLow);
  EXPECT_EQ(v.winner, Winner::First);
  EXPECT_LT(v.first.yc, v.second.yc);
}

TEST(Compare, SelfIsTie) {
  const auto v = compare(shelter(), shelter(), kGrm);
  EXPECT_EQ(v.winner, Winner::Tie);
  EXPECT_EQ(v.basis, Basis::ExactTie);
  EXPECT_TRUE(v.note.empty());
}

TEST(Compare, DifferentDistributionsWithEqualCogTieWithNote) {
  // Both cohorts have sum(i c_i) = 25 and sum(c_i^2) = 14 over 6 students.
  const auto a = to_distribution<Rational>(counts("a", {0, 0, 1, 3, 2}));
  const auto b = to_distribution<Rational>(counts("b", {0, 0, 2, 1, 3}));
  const auto v = compare(a, b, BasicModelConfig<Rational>::defaults(Variant::Grm));
  EXPECT_EQ(v.winner, Winner::Tie);
  EXPECT_EQ(v.basis, Basis::ExactTie);
  EXPECT_FALSE(v.note.empty());

  const auto fa = to_distribution(counts("a", {0, 0, 1, 3, 2}));
  const auto fb = to_distribution(counts("b", {0, 0, 2, 1, 3}));
  EXPECT_EQ(compare(fa, fb, kGrm).winner, Winner::Tie);
}

TEST(Compare, MismatchedGradeCounts) {
  EXPECT_THROW(compare(Distribution::uniform(5), Distribution::uniform(4), kGrm), InputError);
  EXPECT_THROW(compare(shelter(), regular(), kGrm, -1.0), InputError);
}

TEST(Compare, RmUsesHalfIdealThreshold) {
  EXPECT_DOUBLE_EQ(secondary_threshold(kRm), 2.25);
  EXPECT_NEAR(secondary_threshold(kGrm), 1.9, 1e-12);
}

TEST(Characterize, FixtureClasses) {
  const auto grm = characterize(shelter(), kGrm);
  EXPECT_EQ(grm.label, Label::Unsatisfactory);
  EXPECT_NEAR(grm.threshold, 1.65, 1e-12);
  const auto rm = characterize(shelter(), kRm);
  EXPECT_EQ(rm.label, Label::Unsatisfactory);
  EXPECT_DOUBLE_EQ(rm.threshold, 2.25);
  const auto gpa = characterize_gpa(shelter());
  EXPECT_EQ(gpa.label, Label::Unsatisfactory);
  EXPECT_DOUBLE_EQ(gpa.threshold, 2.0);
  EXPECT_FALSE(gpa.extension);
  const auto mean = characterize_mean(shelter());
  EXPECT_TRUE(mean.extension);
  EXPECT_DOUBLE_EQ(mean.threshold, 2.5);
}

TEST(Characterize, IdealIsSatisfactoryWithRatioOne) {
  const auto c = characterize(Distribution::point(5, 4), kGrm);
  EXPECT_EQ(c.label, Label::Satisfactory);
  EXPECT_NEAR(c.ratio, 1.0, 1e-15);
}

TEST(Characterize, DivergenceBetweenGrmAndRm) {
  // sum i*y_i = 0.3 + 0.2 + 0.6 + 1.6 = 2.7: GRM xc = 1.69 >= 1.65, RM xc = 2.2 < 2.25.
  const auto d = dist({0.3, 0.1, 0.2, 0.4, 0.0});
  ASSERT_NEAR(grade_moment(d), 2.7, 1e-12);
  const auto grm = characterize(d, kGrm);
  const auto rm = characterize(d, kRm);
  EXPECT_NEAR(grm.score, 1.69, 1e-12);
  EXPECT_NEAR(rm.score, 2.2, 1e-12);
  EXPECT_EQ(grm.label, Label::Satisfactory);
  EXPECT_EQ(rm.label, Label::Unsatisfactory);
}

TEST(Characterize, LabelMatchesHalfIdealRule) {
  for (double s : {1.0, 2.5, 2.6, 2.642857, 2.65, 2.75, 2.8, 4.0}) {
    // Two-point distributions on grades 1 and 5 with the requested moment.
    const double top = (s - 1.0) / 4.0;
    const auto d = dist({1.0 - top, 0, 0, 0, top});
    for (const auto& cfg : {kGrm, kRm}) {
      const auto c = characterize(d, cfg);
      EXPECT_EQ(c.label == Label::Satisfactory, cog(d, cfg).xc >= ideal_xc(cfg) / 2) << s;
    }
  }
}

}  // namespace
}  // namespace cogassess
