#include <gtest/gtest.h>

#include <random>

#include "indseq/error.hpp"
#include "indseq/sequence.hpp"
#include "oracles.hpp"

using namespace indseq;

namespace {

std::vector<BigInt> seq(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Nonnegative, no internal zeros, a_k^2 >= a_{k-1} a_{k+1}.
bool lc_definition(const std::vector<BigInt>& a) {
  for (const auto& x : a) {
    if (x < 0) return false;
  }
  std::size_t first = a.size(), last = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) {
      first = std::min(first, i);
      last = i;
    }
  }
  for (std::size_t i = first; i < last; ++i) {
    if (a[i] == 0) return false;
  }
  for (std::size_t k = 1; k + 1 < a.size(); ++k) {
    if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
  }
  return true;
}

std::vector<BigInt> random_seq(std::mt19937_64& rng) {
  const int len = 1 + static_cast<int>(rng() % 8);
  std::vector<BigInt> a;
  for (int i = 0; i < len; ++i) a.emplace_back(static_cast<long>(rng() % 6) - (rng() % 15 == 0 ? 2 : 0));
  return a;
}

}  // namespace

TEST(Sequence, Examples) {
  auto v = analyze(seq({1, 4, 3}));
  EXPECT_TRUE(v.unimodal && v.log_concave && v.lc_plus);
  EXPECT_EQ(v.mode_index, 1);

  v = analyze(seq({1, 3, 3, 1}));
  EXPECT_EQ(v.mode_index, 1);

  v = analyze(seq({2, 1, 2}));
  EXPECT_FALSE(v.unimodal);
  ASSERT_TRUE(v.first_violation);
  EXPECT_EQ(v.first_violation->kind, ViolationKind::kUnimodality);
  EXPECT_EQ(v.first_violation->index, 1);

  v = analyze(seq({1, 2, 5}));
  EXPECT_TRUE(v.unimodal);
  EXPECT_FALSE(v.log_concave);
  EXPECT_EQ(v.first_violation->kind, ViolationKind::kLogConcavity);
  EXPECT_EQ(v.first_violation->index, 1);

  v = analyze(seq({1, 0, 0, 1}));
  EXPECT_FALSE(v.log_concave);
  EXPECT_FALSE(v.unimodal);

  v = analyze(seq({0, 1, 1}));
  EXPECT_TRUE(v.log_concave);
  EXPECT_FALSE(v.lc_plus);

  v = analyze(seq({1, -1}));
  EXPECT_FALSE(v.log_concave);
  EXPECT_EQ(v.first_violation->kind, ViolationKind::kNegative);

  EXPECT_THROW(analyze(std::vector<BigInt>{}), PolyError);
}

TEST(Sequence, AgreesWithDefinitions) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20000; ++t) {
    const auto a = random_seq(rng);
    const auto v = analyze(a);
    EXPECT_EQ(v.unimodal, oracle::unimodal(a));
    EXPECT_EQ(v.lc_plus, oracle::log_concave_positive(a));
    EXPECT_EQ(v.log_concave, lc_definition(a));
    if (v.log_concave) EXPECT_TRUE(v.unimodal);
    if (v.lc_plus) EXPECT_TRUE(v.log_concave);
  }
}

TEST(Sequence, HugeEntriesUseExactFallback) {
  // Equality cases and near misses far beyond double range.
  BigInt big = BigInt(1) << 900;
  std::vector<BigInt> geometric{big, big * 3, big * 9};
  EXPECT_TRUE(analyze(geometric).lc_plus);
  std::vector<BigInt> off{big, big * 3, big * 9 + 1};
  EXPECT_FALSE(analyze(off).log_concave);
  std::vector<BigInt> under{big, big * 3, big * 9 - 1};
  EXPECT_TRUE(analyze(under).lc_plus);
}

TEST(Sequence, ReversalInvariance) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 5000; ++t) {
    auto a = random_seq(rng);
    const auto f = analyze(a);
    std::reverse(a.begin(), a.end());
    const auto r = analyze(a);
    EXPECT_EQ(f.unimodal, r.unimodal);
    EXPECT_EQ(f.log_concave, r.log_concave);
    EXPECT_EQ(f.lc_plus, r.lc_plus);
  }
}

TEST(Sequence, ProductsOfLcPlusStayLcPlus) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 300; ++t) {
    std::vector<long> r1, r2;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) r1.push_back(1 + static_cast<long>(rng() % 9));
    for (int i = 0; i < 1 + static_cast<int>(rng() % 5); ++i) r2.push_back(1 + static_cast<long>(rng() % 9));
    const IntPoly a(oracle::from_roots(r1));
    const IntPoly b(oracle::from_roots(r2));
    ASSERT_TRUE(analyze(a).lc_plus);
    EXPECT_TRUE(analyze(a * b).lc_plus);
  }
}

TEST(Sequence, RealRoots) {
  EXPECT_TRUE(check_real_roots(IntPoly(oracle::from_roots({1, 2, 2, 7}))));
  EXPECT_FALSE(check_real_roots(IntPoly{1, 0, 1}));
  EXPECT_TRUE(check_real_roots(IntPoly{1, 4, 3}));
  EXPECT_THROW(check_real_roots(IntPoly{}), PolyError);
  EXPECT_EQ(analyze(IntPoly{1, 4, 3}, true).real_roots, true);
  EXPECT_FALSE(analyze(IntPoly{1, 4, 3}).real_roots.has_value());
}

TEST(Sequence, RationalSequences) {
  const auto v = analyze(std::vector<Rational>{Rational(1, 2), Rational(1), Rational(1, 3)});
  EXPECT_TRUE(v.lc_plus);
  EXPECT_FALSE(analyze(std::vector<Rational>{Rational(1), Rational(1, 3), Rational(1)}).unimodal);
}

TEST(FinalThird, Examples) {
  auto r = final_third_decreasing(IntPoly{1, 4, 3});
  EXPECT_EQ(r.alpha, 2);
  EXPECT_EQ(r.start_index, 1);
  EXPECT_TRUE(r.holds);

  r = final_third_decreasing(IntPoly{1, 1, 1, 5});
  EXPECT_EQ(r.start_index, 2);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.violation_index, 2);
}

TEST(FinalThird, StartIndexFormula) {
  for (int alpha = 1; alpha <= 30; ++alpha) {
    std::vector<BigInt> c(alpha + 1, 1);
    const auto r = final_third_decreasing(IntPoly(c));
    EXPECT_EQ(r.start_index, (2 * alpha - 1 + 2) / 3) << alpha;
  }
}

TEST(Sequence, ReferenceExamples) {
  auto v = analyze(seq({1, 2, 1, 2}));
  EXPECT_FALSE(v.unimodal);
  ASSERT_TRUE(v.first_violation);
  EXPECT_EQ(v.first_violation->index, 2);
  v = analyze(seq({1, 1, 1}));
  EXPECT_TRUE(v.unimodal && v.log_concave && v.lc_plus);
  EXPECT_EQ(v.mode_index, 0);
  EXPECT_TRUE(check_real_roots(IntPoly{1, 2}));
  EXPECT_TRUE(check_real_roots(IntPoly{1, 3, 1}));
  EXPECT_FALSE(check_real_roots(IntPoly{1, 1, 1}));
}

TEST(FinalThird, Graphs) {
  auto r = final_third_decreasing(star(3));
  EXPECT_EQ(r.alpha, 3);
  EXPECT_EQ(r.start_index, 2);
  EXPECT_TRUE(r.holds);
  r = final_third_decreasing(path(4));
  EXPECT_EQ(r.start_index, 1);
  EXPECT_TRUE(r.holds);
}
