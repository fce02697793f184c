#include <map>

#include <gtest/gtest.h>

#include "dynmono/splitting.hpp"
#include "oracles.hpp"

using namespace dynmono;

namespace {

std::map<std::pair<int, int>, std::uint64_t> as_map(const SplittingShape& s) {
  std::map<std::pair<int, int>, std::uint64_t> m;
  for (const auto& e : s.entries()) m[{e.e, e.f}] += e.count;
  return m;
}

}  // namespace

TEST(Predict, WorkedExamples) {
  EXPECT_EQ(predict_split2({-1, 2}, 5), SplittingShape({{1, 1, 2}, {1, 2, 1}, {1, 4, 3}, {1, 8, 2}}));
  EXPECT_EQ(predict_split2({-1, 1}, 5), SplittingShape({{1, 8, 4}}));
  EXPECT_EQ(predict_split2({0, -2}, 3), SplittingShape({{8, 1, 1}}));
  EXPECT_EQ(predict_split2({-1, 2}, 1), SplittingShape({{1, 1, 2}}));
  EXPECT_EQ(predict_split2({1, 1}, 1), SplittingShape({{1, 2, 1}}));
  EXPECT_EQ(predict_split2({-1, 2}, 5).to_string(), "{(e=1, f=1)x2, (e=1, f=2), (e=1, f=4)x3, (e=1, f=8)x2}");
}

TEST(Predict, Errors) {
  EXPECT_THROW(predict_split2({0, 3}, 2), not_2_maximal_input);
  EXPECT_THROW(predict_split2({1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(predict_split2({1, 1}, kSplitMaxLevel + 1), std::invalid_argument);
}

TEST(Predict, TotalDegreeIsTwoToTheN) {
  for (long b = -5; b <= 5; ++b) {
    for (long c = -5; c <= 5; ++c) {
      const QuadParams q{b, c};
      if (!classify_2(q).maximal()) continue;
      for (int n = 1; n <= 10; ++n) {
        const auto s = predict_split2(q, n);
        EXPECT_EQ(s.total_degree(), std::uint64_t{1} << n);
        if (b % 2 == 0) {
          ASSERT_EQ(s.entries().size(), 1u);
          EXPECT_EQ(s.entries()[0], (PrimeSplit{1 << n, 1, 1}));
        }
      }
    }
  }
}

TEST(Predict, MiddleCountsAreIrreducibleCounts) {
  // for c even, every irreducible of degree 2^r (r < m) shows up once
  for (int n = 3; n <= 16; ++n) {
    const auto s = as_map(predict_split2({1, 0}, n));
    const int m = ceil_log2(n);
    for (int r = 1; r <= m - 1; ++r) EXPECT_EQ((s.at({1, 1 << r})), oracle::irreducible_count(2, 1 << r)) << n;
  }
}

TEST(Predict, EvenConstantTelescopes) {
  // G^n = x (x+1) F F^2 ... F^(n-1): the c even shape at n is two linear
  // primes plus the c odd shapes at levels 1..n-1.
  for (int n = 2; n <= 20; ++n) {
    SplittingShape want({{1, 1, 2}});
    for (int k = 1; k < n; ++k) {
      const auto lower = predict_split2({1, 1}, k);
      for (const auto& e : lower.entries()) want.add(e.e, e.f, e.count);
    }
    EXPECT_EQ(predict_split2({1, 0}, n), want) << n;
  }
}

TEST(Verify, WorkedExamples) {
  auto v = verify_split2({-1, 2}, 5);
  EXPECT_TRUE(v.match);
  EXPECT_TRUE(v.squarefree_mod_2);
  EXPECT_EQ(v.factors.size(), 8u);
  EXPECT_EQ(v.ideals(5).front(), "(2, alpha_5)");
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(verify_split2({-1, 1}, n).match) << n;
  EXPECT_TRUE(verify_split2({1, 1}, 4).match);
}

TEST(Verify, RamifiedClassesFactorAsOnePower) {
  for (const QuadParams q : {QuadParams{0, -2}, QuadParams{2, -1}, QuadParams{0, 2}}) {
    for (int n = 1; n <= 6; ++n) {
      const auto v = verify_split2(q, n);
      EXPECT_TRUE(v.match);
      ASSERT_EQ(v.factors.size(), 1u);
      EXPECT_EQ(v.factors[0].exponent, 1 << n);
      EXPECT_FALSE(v.squarefree_mod_2);
    }
  }
}

TEST(Verify, OddBGridMatchesAndIsSquarefree) {
  for (long b = -9; b <= 9; b += 2) {
    for (long c = -9; c <= 9; ++c) {
      for (int n = 1; n <= 7; ++n) {
        const auto v = verify_split2({b, c}, n);
        EXPECT_TRUE(v.match) << b << " " << c << " n=" << n << " " << v.actual.to_string();
        EXPECT_TRUE(v.squarefree_mod_2);
        for (const auto& f : v.factors) EXPECT_TRUE(is_irreducible(f.poly));
      }
    }
  }
}

TEST(Verify, ShapeDependsOnlyOnParities) {
  for (int n = 1; n <= 7; ++n) {
    const auto odd = verify_split2({1, 1}, n).actual;
    const auto even = verify_split2({1, 0}, n).actual;
    for (long b = -7; b <= 7; b += 2) {
      for (long c = -7; c <= 7; ++c) {
        EXPECT_EQ(verify_split2({b, c}, n).actual, c % 2 == 0 ? even : odd);
      }
    }
  }
}

TEST(Verify, DegreeCap) {
  EXPECT_THROW(verify_split2({1, 1}, 17), degree_cap_exceeded);
}

TEST(Identities, LemmaSuitesPass) {
  for (const auto& item : lemma41_checks(10)) EXPECT_TRUE(item.passed) << item.name;
  const auto l42 = lemma42_checks(8, 4);
  for (const auto& item : l42) EXPECT_TRUE(item.passed) << item.name << " " << item.detail;
  EXPECT_EQ(l42.size(), 8u + 1u + 4u);
  EXPECT_THROW(lemma41_checks(11), std::invalid_argument);
  EXPECT_THROW(lemma42_checks(9, 4), std::invalid_argument);
}

TEST(Identities, SmallIterateFactorizations) {
  const GF2Poly F = gf2_F();
  EXPECT_EQ(gf2_iterate(F, 2), GF2Poly::from_exponents({4, 1, 0}));
  EXPECT_TRUE(is_irreducible(gf2_iterate(F, 2)));
  const auto f3 = factor(gf2_iterate(F, 3));
  ASSERT_EQ(f3.size(), 2u);
  EXPECT_EQ(f3[0].poly, GF2Poly::from_exponents({4, 3, 0}));
  EXPECT_EQ(f3[1].poly, GF2Poly::from_exponents({4, 3, 2, 1, 0}));
  EXPECT_EQ(gf2_iterate(gf2_G(), 2), gf2_G() * F);
}

TEST(OpenQuestion, PatternOnHandPolys) {
  // degree 4: needs a_3 = 0, a_2 = 1, a_1 = 1
  EXPECT_TRUE(open_question_pattern(GF2Poly::from_exponents({4, 2, 1, 0}), 2));
  EXPECT_FALSE(open_question_pattern(GF2Poly::from_exponents({4, 1, 0}), 2));
  EXPECT_FALSE(open_question_pattern(GF2Poly::from_exponents({4, 3, 2, 1, 0}), 2));
}

TEST(OpenQuestion, RecordedEvidence) {
  const auto rows = open_question_experiment(4);
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    std::uint64_t total = 0;
    for (const auto& g : r.factors) total += static_cast<std::uint64_t>(g.degree());
    EXPECT_EQ(total, std::uint64_t{1} << (std::size_t{1} << (r.m - 1)));
    for (const auto& g : r.pattern_irreducibles) {
      EXPECT_TRUE(open_question_pattern(g, r.m));
      EXPECT_TRUE(is_irreducible(g));
    }
  }
  EXPECT_FALSE(rows[0].pattern_holds_for_all);
  EXPECT_FALSE(rows[1].pattern_holds_for_all);
  EXPECT_TRUE(rows[2].pattern_holds_for_all);
  EXPECT_TRUE(rows[2].sets_equal);
  EXPECT_EQ(rows[2].factors.size(), 2u);
  EXPECT_TRUE(rows[3].pattern_holds_for_all);
  EXPECT_EQ(rows[3].factors.size(), 16u);
  EXPECT_FALSE(rows[3].sets_equal);
}
