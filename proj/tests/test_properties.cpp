// Randomized invariants over seeded samples.

#include "cogassess/comparison.hpp"
#include "cogassess/geometry_oracle.hpp"
#include "cogassess/sampling.hpp"
#include "cogassess/sweep.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace cogassess {
namespace {

const std::vector<double> kKs{10, 20, 30, 40, 49};
const std::vector<double> kBases{1, 10};

int sign(double v, double eps) { return v > eps ? 1 : v < -eps ? -1 : 0; }

TEST(Properties, OracleAgreesWithClosedFormsForAllGradeCounts) {
  DistributionSampler sampler(11);
  for (int n : {3, 4, 5, 6, 7}) {
    for (int s = 0; s < 2000; ++s) {
      const Distribution d = sampler.any(n);
      for (double b : kBases) {
        ModelConfig rm = ModelConfig::defaults(Variant::Rm, n);
        rm.b = b;
        ASSERT_TRUE(cross_validate(d, rm).pass);
        for (double k : kKs) {
          ModelConfig grm = ModelConfig::defaults(Variant::Grm, n);
          grm.k = k;
          grm.b = b;
          const auto r = cross_validate(d, grm);
          ASSERT_TRUE(r.pass) << "n=" << n << " k=" << k << " b=" << b << " dx=" << r.dx;
        }
      }
    }
  }
}

TEST(Properties, MeanIsOnePlusGpa) {
  DistributionSampler sampler(12);
  for (int s = 0; s < 5000; ++s) {
    const Distribution d = sampler.any(5 + s % 3);
    ASSERT_NEAR(mean_value(d), 1.0 + gpa_index(d), 1e-12);
  }
}

TEST(Properties, SquareSumAtLeastOneOverN) {
  DistributionSampler sampler(13);
  for (int n : {2, 3, 5, 8}) {
    EXPECT_NEAR(square_sum(Distribution::uniform(n)), 1.0 / n, 1e-15);
    EXPECT_EQ(square_sum(ExactDistribution::uniform(n)), Rational(1, n));
    for (int s = 0; s < 2000; ++s) {
      const Distribution d = sampler.any(n);
      const bool is_uniform = (d.y().array() - 1.0 / n).abs().maxCoeff() < 1e-12;
      if (is_uniform) {
        EXPECT_NEAR(square_sum(d), 1.0 / n, 1e-12);
      } else {
        ASSERT_GT(square_sum(d), 1.0 / n);
      }
    }
  }
}

TEST(Properties, CogRangesAndEndpoints) {
  DistributionSampler sampler(14);
  for (int s = 0; s < 3000; ++s) {
    const int n = 3 + s % 5;
    const Distribution d = sampler.any(n);
    for (Variant v : {Variant::Grm, Variant::Tfam, Variant::Tpfam}) {
      for (double k : kKs) {
        for (double b : kBases) {
          ModelConfig cfg = ModelConfig::defaults(v, n);
          cfg.k = k;
          cfg.b = b;
          const auto c = overlapping_cog(d, cfg);
          const double m = figure_extent(cfg);
          ASSERT_GE(c.xc, b / 2 - 1e-12);
          ASSERT_LE(c.xc, m - b / 2 + 1e-12);
          ASSERT_GE(c.yc, cfg.a / n - 1e-12);
          ASSERT_LE(c.yc, cfg.a + 1e-12);
        }
      }
    }
  }
  ModelConfig cfg = ModelConfig::defaults(Variant::Grm, 6);
  cfg.k = 20;
  cfg.b = 10;
  EXPECT_NEAR(overlapping_cog(Distribution::point(6, 0), cfg).xc, 5.0, 1e-12);
  EXPECT_NEAR(overlapping_cog(Distribution::point(6, 5), cfg).xc, figure_extent(cfg) - 5.0, 1e-12);
  EXPECT_NEAR(overlapping_cog(Distribution::uniform(6), cfg).yc, cfg.a / 6, 1e-12);
}

TEST(Properties, AllScoresInduceTheSameOrdering) {
  DistributionSampler sampler(15);
  for (int s = 0; s < 5000; ++s) {
    const Distribution a = sampler.any(5), b = sampler.any(5);
    const int want = sign(grade_moment(a) - grade_moment(b), 1e-9);
    if (want == 0) continue;
    ASSERT_EQ(sign(gpa_index(a) - gpa_index(b), 0), want);
    ASSERT_EQ(sign(rm_cog(a).xc - rm_cog(b).xc, 0), want);
    for (double k : kKs) {
      ModelConfig cfg = ModelConfig::defaults(Variant::Grm);
      cfg.k = k;
      ASSERT_EQ(sign(overlapping_cog(a, cfg).xc - overlapping_cog(b, cfg).xc, 0), want);
    }
  }
}

TEST(Properties, HalfExtentThresholdMatchesMidGrade) {
  DistributionSampler sampler(16);
  for (int s = 0; s < 5000; ++s) {
    const int n = 3 + s % 5;
    const Distribution d = sampler.any(n);
    const double moment = grade_moment(d);
    if (std::abs(moment - (n + 1) / 2.0) < 1e-9) continue;
    for (double k : kKs) {
      for (double b : kBases) {
        ModelConfig cfg = ModelConfig::defaults(Variant::Grm, n);
        cfg.k = k;
        cfg.b = b;
        ASSERT_EQ(overlapping_cog(d, cfg).xc >= figure_extent(cfg) / 2, moment >= (n + 1) / 2.0);
      }
    }
  }
}

TEST(Properties, RmUniformIsFigureCentre) {
  for (int n = 2; n <= 9; ++n) {
    for (double b : kBases) {
      EXPECT_NEAR(rm_cog(Distribution::uniform(n), b).xc, n * b / 2, 1e-12);
    }
  }
}

TEST(Properties, VerdictsAgreeAcrossVariantsAndGeometry) {
  DistributionSampler sampler(17);
  auto verdict_everywhere = [&](const Distribution& a, const Distribution& b) {
    const auto ref = compare(a, b, ModelConfig::defaults(Variant::Grm));
    for (Variant v : {Variant::Grm, Variant::Tfam, Variant::Tpfam}) {
      for (double k : kKs) {
        for (double base : kBases) {
          ModelConfig cfg = ModelConfig::defaults(v);
          cfg.k = k;
          cfg.b = base;
          const auto got = compare(a, b, cfg);
          if (got.winner != ref.winner || got.basis != ref.basis) return false;
        }
      }
    }
    return true;
  };
  for (int s = 0; s < 2000; ++s) {
    ASSERT_TRUE(verdict_everywhere(sampler.any(5), sampler.any(5)));
  }
  for (int s = 0; s < 500; ++s) {
    const auto [c1, c2] = testing::equal_moment_pair(sampler, 5);
    const auto d1 = to_distribution(c1), d2 = to_distribution(c2);
    ASSERT_NE(compare(d1, d2, ModelConfig::defaults(Variant::Grm)).basis, Basis::PrimaryXc);
    ASSERT_TRUE(verdict_everywhere(d1, d2));
  }
}

TEST(Properties, GpaAgreementAndAntisymmetry) {
  DistributionSampler sampler(18);
  const ModelConfig grm = ModelConfig::defaults(Variant::Grm);
  for (int s = 0; s < 5000; ++s) {
    const Distribution a = sampler.any(5), b = sampler.any(5);
    const auto ab = compare(a, b, grm);
    const auto ba = compare(b, a, grm);
    const int gpa = sign(gpa_index(a) - gpa_index(b), 1e-9);
    if (gpa > 0) ASSERT_EQ(ab.winner, Winner::First);
    if (gpa < 0) ASSERT_EQ(ab.winner, Winner::Second);
    ASSERT_EQ(ab.basis, ba.basis);
    if (ab.winner == Winner::Tie) {
      ASSERT_EQ(ba.winner, Winner::Tie);
    } else {
      ASSERT_EQ(ba.winner, ab.winner == Winner::First ? Winner::Second : Winner::First);
    }
  }
}

// The COG region is bounded by y = a above, but its lower boundary (least
// sum y_i^2 for a given sum i*y_i) is convex and dips below the F_m F_i and
// F_w F_m chords, so the triangle does not contain every COG.
TEST(Properties, TriangleDoesNotContainEveryCog) {
  using R = Rational;
  const auto cfg = BasicModelConfig<R>::defaults(Variant::Grm);
  const auto t = triangle_frame(cfg);
  Vector<R> y(5);
  y << R(0), R(0), R(0), R(1, 2), R(1, 2);
  const auto c = overlapping_cog(ExactDistribution(y), cfg);
  EXPECT_EQ(c, (CogPoint<R>{R(59, 20), R(1, 4)}));
  const R chord = t.balanced.yc + (c.xc - t.balanced.xc) * (t.ideal.yc - t.balanced.yc) /
                                      (t.ideal.xc - t.balanced.xc);
  EXPECT_EQ(chord, R(2, 5));
  EXPECT_LT(c.yc, chord);
}

TEST(Properties, GrmCogInsideBoundingBoxOfTriangle) {
  DistributionSampler sampler(19);
  const ModelConfig grm = ModelConfig::defaults(Variant::Grm);
  const auto t = triangle_frame(grm);
  for (int s = 0; s < 5000; ++s) {
    const auto c = overlapping_cog(sampler.any(5), grm);
    ASSERT_GE(c.xc, t.worst.xc - 1e-12);
    ASSERT_LE(c.xc, t.ideal.xc + 1e-12);
    ASSERT_GE(c.yc, t.balanced.yc - 1e-12);
    ASSERT_LE(c.yc, t.worst.yc + 1e-12);
  }
}

TEST(Properties, SweepIsDeterministic) {
  SweepOptions o;
  o.samples = 200;
  o.seed = 99;
  std::vector<double> first, second;
  run_sweep(o, [&](const ValidationRecord& r) { first.push_back(r.closed.xc); });
  run_sweep(o, [&](const ValidationRecord& r) { second.push_back(r.closed.xc); });
  EXPECT_EQ(first, second);
}

}  // namespace
}  // namespace cogassess
