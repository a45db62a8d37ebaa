#include <gtest/gtest.h>

#include <random>

#include "indseq/error.hpp"
#include "indseq/poly.hpp"
#include "indseq/sturm.hpp"
#include "oracles.hpp"

using namespace indseq;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_len, long range) {
  std::vector<BigInt> c(1 + rng() % max_len);
  for (auto& x : c) x = static_cast<long>(rng() % (2 * range + 1)) - range;
  return IntPoly(c);
}

}  // namespace

TEST(Poly, Basics) {
  const IntPoly p{1, 4, 3};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(IntPoly{}.degree(), -1);
  EXPECT_EQ(IntPoly({1, 0, 0}).degree(), 0);
  EXPECT_EQ(to_string(p), "1 + 4x + 3x^2");
  EXPECT_EQ(one_plus_x_pow(3), IntPoly({1, 3, 3, 1}));
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 3), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
}

TEST(Poly, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const IntPoly f = random_poly(rng, 8, 20), g = random_poly(rng, 8, 20), h = random_poly(rng, 8, 20);
    EXPECT_EQ((f + g) * h, f * h + g * h);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f * g) * h, f * (g * h));
  }
}

TEST(Poly, KroneckerMatchesSchoolbook) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const IntPoly a = random_poly(rng, 90, 1000000) * IntPoly::constant(BigInt("123456789012345678901234567890"));
    const IntPoly b = random_poly(rng, 90, 1000);
    std::vector<BigInt> ref(std::max<int>(0, a.degree() + b.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) {
      for (int j = 0; j <= b.degree(); ++j) ref[i + j] += a[i] * b[j];
    }
    EXPECT_EQ(a * b, IntPoly(ref));
  }
}

TEST(Poly, ExactDivisionAndContent) {
  const IntPoly a{2, 4, 6};
  EXPECT_EQ(content(a), 2);
  EXPECT_EQ(primitive_part(a), IntPoly({1, 2, 3}));
  EXPECT_EQ(exact_div(IntPoly({1, 2, 1}), IntPoly({1, 1})), IntPoly({1, 1}));
  EXPECT_THROW(exact_div(IntPoly({1, 0, 1}), IntPoly({1, 1})), PolyError);
}

TEST(Poly, SubstituteIsMultiplicative) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<QCoeff> fc, gc;
    for (int i = 0; i < 4; ++i) fc.push_back(random_poly(rng, 3, 9));
    for (int i = 0; i < 3; ++i) gc.push_back(random_poly(rng, 3, 9));
    const ParamPoly f(fc), g(gc);
    Rational r(static_cast<long>(rng() % 200) - 100, 37);
    r.canonicalize();
    EXPECT_EQ(substitute_q(param_mul(f, g), r), substitute_q(f, r) * substitute_q(g, r));
  }
}

TEST(Poly, ParamPolyText) {
  const ParamPoly f{QCoeff{1}, QCoeff{8}, QCoeff{22, -4}};
  EXPECT_EQ(to_string(f), "1 + 8x + (22 - 4q)x^2");
}

TEST(Sturm, CountsRootsOfSplitPolynomials) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    std::vector<long> roots;
    const int deg = 1 + static_cast<int>(rng() % 7);
    for (int i = 0; i < deg; ++i) roots.push_back(static_cast<long>(rng() % 9) - 4);
    const IntPoly p(oracle::from_roots(roots));
    if (p.degree() < 1) continue;
    const auto count = count_real_roots_with_multiplicity(p);
    EXPECT_EQ(count.with_multiplicity, p.degree());
    EXPECT_TRUE(has_real_roots_property(p));
  }
}

TEST(Sturm, DetectsComplexPairs) {
  // (1 + x + x^2) times linear factors: a complex pair remains.
  for (long r = -3; r <= 3; ++r) {
    const IntPoly p = IntPoly({1, 1, 1}) * IntPoly(oracle::from_roots({r, 2}));
    const auto count = count_real_roots_with_multiplicity(p);
    EXPECT_LT(count.with_multiplicity, p.degree());
    EXPECT_FALSE(has_real_roots_property(p));
  }
  EXPECT_EQ(sturm_count_real_roots(IntPoly{-2, 0, 1}), 2);
  EXPECT_EQ(sturm_count_real_roots(IntPoly{-2, 0, 1}, {Rational(0), Rational(2)}), 1);
  EXPECT_THROW(sturm_count_real_roots(IntPoly{}), PolyError);
}

TEST(Sturm, SignAt) {
  const IntPoly p{-2, 0, 1};
  EXPECT_EQ(sign_at(p, Rational(3, 2)), 1);
  EXPECT_EQ(sign_at(p, Rational(7, 5)), -1);
  EXPECT_EQ(sign_at(IntPoly{-1, 2}, Rational(1, 2)), 0);
}
