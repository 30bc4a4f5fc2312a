#include <gtest/gtest.h>

#include "gonseq/errors.hpp"
#include "gonseq/lattice.hpp"

using namespace gonseq;

namespace {

// Intersection through the Gram matrix [[-n, 1], [1, 0]] of (C0, L).
Int gram(Int n, Int a1, Int b1, Int a2, Int b2) {
  const Int g[2][2] = {{-n, 1}, {1, 0}};
  const Int u[2] = {a1, b1};
  const Int v[2] = {a2, b2};
  Int sum = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) sum += u[i] * g[i][j] * v[j];
  }
  return sum;
}

} // namespace

TEST(DivisorClass, RejectsNegativeSurfaceIndex) {
  EXPECT_THROW(DivisorClass(-1, 1, 0), InvalidInput);
  EXPECT_THROW(canonical_class(-2), InvalidInput);
}

TEST(DivisorClass, ArithmeticAndPrinting) {
  const DivisorClass x(3, 4, 12);
  EXPECT_EQ(x.to_string(), "4C0+12L");
  EXPECT_EQ((x + DivisorClass::section(3)).to_string(), "5C0+12L");
  EXPECT_EQ((x - DivisorClass::fiber(3)), DivisorClass(3, 4, 11));
  EXPECT_EQ(3 * DivisorClass(3, 1, 2), DivisorClass(3, 3, 6));
  EXPECT_EQ(DivisorClass(2, -2, -5).to_string(), "-2C0-5L");
  EXPECT_EQ(DivisorClass(2, 0, 0).to_string(), "0");
}

TEST(DivisorClass, NormalizationOnlyTouchesF0) {
  EXPECT_EQ(DivisorClass(0, 7, 2).normalized(), DivisorClass(0, 2, 7));
  EXPECT_EQ(DivisorClass(0, 2, 7).normalized(), DivisorClass(0, 2, 7));
  EXPECT_EQ(DivisorClass(1, 7, 2).normalized(), DivisorClass(1, 7, 2));
}

TEST(Intersection, MatchesGramMatrix) {
  for (Int n = 0; n <= 6; ++n) {
    for (Int a1 = -3; a1 <= 3; ++a1) {
      for (Int b1 = -4; b1 <= 4; ++b1) {
        for (Int a2 = -3; a2 <= 3; ++a2) {
          for (Int b2 = -4; b2 <= 4; ++b2) {
            ASSERT_EQ(intersect({n, a1, b1}, {n, a2, b2}), gram(n, a1, b1, a2, b2));
          }
        }
      }
    }
  }
}

TEST(Intersection, GeneratorsAndMismatchedSurfaces) {
  EXPECT_EQ(intersect(DivisorClass::section(4), DivisorClass::section(4)), -4);
  EXPECT_EQ(intersect(DivisorClass::section(4), DivisorClass::fiber(4)), 1);
  EXPECT_EQ(intersect(DivisorClass::fiber(4), DivisorClass::fiber(4)), 0);
  EXPECT_THROW(intersect(DivisorClass(1, 1, 0), DivisorClass(2, 1, 0)), InvalidInput);
}

TEST(Canonical, ClassAndSelfIntersection) {
  for (Int n = 0; n <= 10; ++n) {
    const DivisorClass k = canonical_class(n);
    EXPECT_EQ(k, DivisorClass(n, -2, -(n + 2)));
    // K^2 = 8 on every Hirzebruch surface.
    EXPECT_EQ(intersect(k, k), 8);
    // A fiber is a smooth rational curve: K.L = -2.
    EXPECT_EQ(intersect(k, DivisorClass::fiber(n)), -2);
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(adjunction_genus({3, 4, 12}), 15);
  EXPECT_EQ(adjunction_genus({2, 5, 13}), 28);
  EXPECT_EQ(adjunction_genus({0, 1, 0}), 0);
  EXPECT_EQ(adjunction_genus({1, 1, 1}), 0);
  EXPECT_EQ(adjunction_genus({0, 2, 7}), 6);
}

TEST(Genus, ClosedFormOnSmoothableClasses) {
  for (Int n = 0; n <= 8; ++n) {
    for (Int a = 1; a <= 8; ++a) {
      for (Int b = 0; b <= 60; ++b) {
        const DivisorClass x(n, a, b);
        if (!is_irreducible_smoothable(x)) continue;
        const Int closed = (b - 1) * (a - 1) - n * a * (a - 1) / 2;
        ASSERT_EQ(adjunction_genus(x), closed) << x.to_string() << " on F_" << n;
      }
    }
  }
}

TEST(Genus, FormalGenusIsAlwaysIntegral) {
  for (Int n = 0; n <= 5; ++n) {
    for (Int a = -5; a <= 5; ++a) {
      for (Int b = -5; b <= 5; ++b) {
        const DivisorClass x(n, a, b);
        EXPECT_EQ(2 * formal_genus(x) - 2, intersect(canonical_class(n) + x, x));
      }
    }
  }
}

TEST(Genus, RejectsNonSmoothable) {
  EXPECT_THROW(adjunction_genus({2, 3, 5}), DomainError);
  EXPECT_THROW(adjunction_genus({0, 0, 0}), DomainError);
}

TEST(Smoothable, CriterionTable) {
  EXPECT_TRUE(is_irreducible_smoothable({3, 0, 1}));
  EXPECT_TRUE(is_irreducible_smoothable({3, 1, 0}));
  EXPECT_TRUE(is_irreducible_smoothable({3, 4, 12}));
  EXPECT_TRUE(is_irreducible_smoothable({3, 4, 13}));
  EXPECT_FALSE(is_irreducible_smoothable({3, 4, 11}));
  EXPECT_FALSE(is_irreducible_smoothable({0, 3, 0}));
  EXPECT_TRUE(is_irreducible_smoothable({0, 3, 1}));
  EXPECT_FALSE(is_irreducible_smoothable({3, 0, 2}));
  EXPECT_FALSE(is_irreducible_smoothable({3, -1, 5}));
}

TEST(Smoothable, SmoothableCurvesMeetEveryCurveNonNegatively) {
  // An irreducible curve other than C0 meets C0 and L non-negatively.
  for (Int n = 1; n <= 6; ++n) {
    for (Int a = 0; a <= 6; ++a) {
      for (Int b = 0; b <= 40; ++b) {
        const DivisorClass x(n, a, b);
        if (!is_irreducible_smoothable(x) || x == DivisorClass::section(n)) continue;
        EXPECT_GE(intersect(x, DivisorClass::section(n)), 0);
        EXPECT_GE(intersect(x, DivisorClass::fiber(n)), 0);
      }
    }
  }
}

TEST(VeryAmple, Criterion) {
  EXPECT_TRUE(is_very_ample({0, 1, 1}));
  EXPECT_FALSE(is_very_ample({0, 1, 0}));
  EXPECT_TRUE(is_very_ample({2, 1, 3}));
  EXPECT_FALSE(is_very_ample({2, 1, 2}));
  EXPECT_FALSE(is_very_ample({2, 0, 3}));
}

TEST(Sections, UnisecantDimension) {
  // h0(O(C0 + beta L)) = h0(O(beta)) + h0(O(beta - n)) on P^1.
  for (Int n = 0; n <= 8; ++n) {
    for (Int beta = n; beta <= n + 10; ++beta) {
      EXPECT_EQ(h0_unisecant(beta, n), (beta + 1) + (beta - n + 1));
    }
  }
  EXPECT_THROW(h0_unisecant(1, 2), InvalidInput);
}

TEST(Scroll, FromRAndN) {
  const ScrollEmbedding s = scroll_from_rn(6, 3);
  EXPECT_EQ(s.beta(), 4);
  EXPECT_EQ(s.degree(), 5);
  EXPECT_FALSE(s.is_cone());
  const DivisorClass h = s.hyperplane();
  EXPECT_EQ(intersect(h, h), s.degree());
  EXPECT_THROW(scroll_from_rn(6, 2), InvalidInput); // parity
  EXPECT_THROW(scroll_from_rn(2, 1), InvalidInput);
  EXPECT_TRUE(scroll_from_beta(3, 3).is_cone());
}

TEST(Scroll, DegreeIsHSquaredForAllScrolls) {
  for (Int n = 0; n <= 8; ++n) {
    for (Int beta = std::max<Int>(n, 1); beta <= n + 8; ++beta) {
      const Int r = 2 * beta + 1 - n;
      if (r < 3) continue;
      const ScrollEmbedding s = scroll_from_beta(beta, n);
      EXPECT_EQ(s.r(), r);
      EXPECT_EQ(intersect(s.hyperplane(), s.hyperplane()), r - 1);
      EXPECT_EQ(scroll_from_rn(r, n), s);
    }
  }
}

TEST(Scroll, StandardScrollParity) {
  EXPECT_EQ(standard_scroll(5).n(), 0);
  EXPECT_EQ(standard_scroll(6).n(), 1);
}

TEST(HLBasis, RoundTripAndIntersection) {
  for (Int n = 0; n <= 5; ++n) {
    for (Int beta = std::max<Int>(n, 1); beta <= n + 5; ++beta) {
      if (2 * beta + 1 - n < 3) continue;
      const ScrollEmbedding s = scroll_from_beta(beta, n);
      for (Int a = -3; a <= 5; ++a) {
        for (Int b = -4; b <= 12; ++b) {
          const DivisorClass x(n, a, b);
          const HLClass c = class_in_HL(x, s);
          ASSERT_EQ(class_from_HL(c, s), x);
          for (Int a2 = 0; a2 <= 3; ++a2) {
            const DivisorClass y(n, a2, 2);
            ASSERT_EQ(intersect_HL(c, class_in_HL(y, s), s.r()), intersect(x, y));
          }
          ASSERT_EQ(degree_HL(c, s.r()), intersect(x, s.hyperplane()));
        }
      }
    }
  }
}

TEST(HLBasis, CanonicalClassAgreesWithSurface) {
  for (Int n = 0; n <= 6; ++n) {
    for (Int beta = std::max<Int>(n, 1); beta <= n + 6; ++beta) {
      if (2 * beta + 1 - n < 3) continue;
      const ScrollEmbedding s = scroll_from_beta(beta, n);
      EXPECT_EQ(class_in_HL(canonical_class(n), s), scroll_canonical_class(s.r()));
    }
  }
  EXPECT_EQ(scroll_canonical_class(6).to_string(), "-2H+3L");
}

TEST(HLBasis, Printing) {
  EXPECT_EQ((HLClass{4, -4}).to_string(), "4H-4L");
  EXPECT_EQ((HLClass{4, 1}).to_string(), "4H+L");
}
