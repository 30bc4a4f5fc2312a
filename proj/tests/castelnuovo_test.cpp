#include <gtest/gtest.h>

#include "gonseq/castelnuovo.hpp"
#include "gonseq/errors.hpp"

using namespace gonseq;

namespace {

// Castelnuovo's count: the bound is the sum of max(0, d - 1 - k(r-1)) over k >= 1.
Int castelnuovo_sum(Int d, Int r) {
  Int sum = 0;
  for (Int k = 1; d - 1 - k * (r - 1) > 0; ++k) sum += d - 1 - k * (r - 1);
  return sum;
}

} // namespace

TEST(Profile, Examples) {
  EXPECT_EQ(profile(10, 4), (CurveProfile{10, 4, 3, 0, 9}));
  EXPECT_EQ(profile(13, 5), (CurveProfile{13, 5, 3, 0, 12}));
  EXPECT_EQ(profile(16, 6), (CurveProfile{16, 6, 3, 0, 15}));
  EXPECT_EQ(profile(14, 5).pi, 15);
}

TEST(Profile, DivisionAndBoundAgainstOracles) {
  for (Int r = 3; r <= 25; ++r) {
    for (Int d = 2 * r + 1; d <= 12 * r; ++d) {
      const CurveProfile p = profile(d, r);
      Int m = 0;
      while ((m + 1) * (r - 1) <= d - 1) ++m;
      ASSERT_EQ(p.m, m);
      ASSERT_EQ(p.eps, d - 1 - m * (r - 1));
      ASSERT_GE(p.eps, 0);
      ASSERT_LE(p.eps, r - 2);
      ASSERT_EQ(p.pi, castelnuovo_sum(d, r)) << "d=" << d << " r=" << r;
      ASSERT_GE(p.pi, 0);
    }
  }
}

TEST(Profile, DegreeModes) {
  EXPECT_THROW(profile(8, 4), InvalidInput);
  EXPECT_EQ(profile(8, 4, DegreeMode::Lenient).m, 2);
  EXPECT_EQ(profile(5, 4, DegreeMode::Lenient).m, 1);
  EXPECT_THROW(profile(4, 4, DegreeMode::Lenient), InvalidInput);
  EXPECT_THROW(profile(10, 2), InvalidInput);
}

TEST(Profile, LenientRangeMatchesOracle) {
  for (Int r = 3; r <= 15; ++r) {
    for (Int d = r + 1; d <= 2 * r; ++d) {
      EXPECT_EQ(castelnuovo_bound(d, r), castelnuovo_sum(d, r));
    }
  }
}

TEST(BrillNoether, Examples) {
  EXPECT_EQ(brill_noether(14, 5, 12), -6);
  EXPECT_EQ(brill_noether(14, 5, 15), -21);
  EXPECT_EQ(brill_noether(13, 5, 12), -12);
  EXPECT_EQ(brill_noether(10, 4, 9), -6);
  EXPECT_EQ(brill_noether(4, 1, 6), 0);
  EXPECT_THROW(brill_noether(4, 1, -1), InvalidInput);
}

TEST(BrillNoether, Expansion) {
  for (Int g = 0; g <= 30; ++g) {
    for (Int r = 1; r <= 8; ++r) {
      for (Int d = r; d <= 3 * g + 5; ++d) {
        // rho = g - h0(K - D) h0(D) with h0(D) = r+1, h1 = g - d + r.
        EXPECT_EQ(brill_noether(d, r, g), g - (r + 1) * (g - d + r));
      }
    }
  }
}

TEST(LowDegree, Verdicts) {
  const SlopeVerdict nonspecial = low_degree_verdict(5, 4);
  EXPECT_EQ(nonspecial.status, SlopeStatus::Holds);
  EXPECT_EQ(nonspecial.tag, "nonspecial");
  const SlopeVerdict twice = low_degree_verdict(8, 4);
  EXPECT_EQ(twice.tag, "d=2r");
  EXPECT_THROW(low_degree_verdict(9, 4), InvalidInput);
  EXPECT_THROW(low_degree_verdict(4, 4), InvalidInput);
}

TEST(SlopeStatus, Names) {
  EXPECT_EQ(to_string(SlopeStatus::Holds), "holds");
  EXPECT_EQ(to_string(SlopeStatus::Violated), "violated");
  EXPECT_EQ(to_string(SlopeStatus::Undetermined), "undetermined");
}
