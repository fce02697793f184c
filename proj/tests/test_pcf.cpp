#include <random>

#include <gtest/gtest.h>

#include "dynmono/arith.hpp"
#include "dynmono/intfactor.hpp"
#include "dynmono/pcf.hpp"
#include "oracles.hpp"

using namespace dynmono;

namespace {

Integer reassemble(const IntegerFactorization& f) {
  Integer r = 1;
  for (const auto& pp : f.factors) {
    for (unsigned k = 0; k < pp.exponent; ++k) r *= pp.prime;
  }
  for (const auto& u : f.unresolved) r *= u;
  return r;
}

Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace

TEST(Primality, MatchesDeterministic64BitTest) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20000; ++t) {
    std::uint64_t n = rng() >> (rng() % 60);
    EXPECT_EQ(is_probable_prime(from_u64(n)), is_prime_u64(n)) << n;
  }
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_probable_prime(Integer(static_cast<unsigned long>(n))), is_prime_u64(n));
}

TEST(Primality, CarmichaelAndStrongPseudoprimes) {
  for (unsigned long n : {561ul, 1105ul, 1729ul, 2047ul, 3215031751ul, 3825123056546413051ul}) {
    EXPECT_FALSE(is_probable_prime(Integer(n))) << n;
    EXPECT_FALSE(is_prime_u64(n)) << n;
  }
  // 2^89 - 1 and 2^127 - 1 are Mersenne primes
  Integer m89 = (Integer(1) << 89) - 1, m127 = (Integer(1) << 127) - 1;
  EXPECT_TRUE(is_probable_prime(m89));
  EXPECT_TRUE(is_probable_prime(m127));
  EXPECT_FALSE(is_probable_prime(m89 * m127));
}

TEST(IntFactor, ReassemblesRandomProducts) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    Integer n = 1;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) n *= from_u64((rng() >> (32 + rng() % 28)) | 1);
    if (rng() % 2) n = -n;
    const auto f = factor_integer(n);
    EXPECT_EQ(reassemble(f), abs(n));
    EXPECT_TRUE(f.complete());
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      EXPECT_TRUE(is_probable_prime(f.factors[i].prime));
      if (i) EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
    }
  }
}

TEST(IntFactor, LargePrimePowersAndSemiprimes) {
  const Integer p = (Integer(1) << 61) - 1, q = (Integer(1) << 31) - 1;
  auto f = factor_integer(p * p * q);
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].prime, q);
  EXPECT_EQ(f.factors[1].prime, p);
  EXPECT_EQ(f.factors[1].exponent, 2u);
  // past the rho size cap the cofactor is kept, not guessed
  f = factor_integer(p * p * p * q);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(reassemble(f), p * p * p * q);
  // two 34-bit primes: past trial division, within the rho budget
  const Integer a = Integer("8589934609"), b = Integer("12884901893");
  ASSERT_TRUE(is_probable_prime(a) && is_probable_prime(b));
  f = factor_integer(a * b);
  EXPECT_TRUE(f.complete());
  EXPECT_EQ(reassemble(f), a * b);
  EXPECT_EQ(f.factors.size(), 2u);
}

TEST(IntFactor, BudgetExhaustionIsReported) {
  const Integer p = (Integer(1) << 89) - 1, q = (Integer(1) << 107) - 1;
  FactorBudget tiny;
  tiny.rho_iterations = 50;
  const auto f = factor_integer(p * q, tiny);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(reassemble(f), p * q);
  const auto sf = squarefree(p * q * 9, tiny);
  // the 3^2 is found by trial division even when the cofactor is not split
  ASSERT_TRUE(sf.squarefree.has_value());
  EXPECT_FALSE(*sf.squarefree);
  const auto unknown = squarefree(p * q, tiny);
  EXPECT_FALSE(unknown.squarefree.has_value());
  EXPECT_FALSE(unknown.note.empty());
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(*squarefree(Integer(1)).squarefree);
  EXPECT_FALSE(*squarefree(Integer(12)).squarefree);
  EXPECT_EQ(squarefree(Integer(12)).repeated_primes(), std::vector<Integer>{2});
  EXPECT_TRUE(*squarefree(Integer(2)).squarefree);
  EXPECT_TRUE(*squarefree(Integer(-6)).squarefree);
  EXPECT_THROW(squarefree(Integer(0)), zero_input);
}

TEST(Squarefree, MatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto v = squarefree(Integer(static_cast<unsigned long>(n)));
    ASSERT_TRUE(v.squarefree.has_value());
    EXPECT_EQ(*v.squarefree, oracle::squarefree_trial(n)) << n;
    EXPECT_EQ(reassemble(v.certificate), Integer(static_cast<unsigned long>(n)));
  }
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t n = (rng() >> 28) + 1;
    EXPECT_EQ(*squarefree(from_u64(n)).squarefree, oracle::squarefree_trial(n)) << n;
  }
}

TEST(Squarefree, LargeSquareFactors) {
  const Integer p = (Integer(1) << 61) - 1;
  EXPECT_FALSE(*squarefree(p * p * 3).squarefree);
  EXPECT_TRUE(*squarefree(p * 3).squarefree);
  EXPECT_EQ(squarefree(p * p * 3).repeated_primes(), std::vector<Integer>{p});
}

TEST(Family, Basics) {
  EXPECT_EQ(parse_family("f"), Family::f);
  EXPECT_EQ(parse_family("H_A"), Family::h);
  EXPECT_FALSE(parse_family("q"));
  const FamilyParam g{Family::g, Integer(3)};
  EXPECT_EQ(g.params().b, 6);
  EXPECT_EQ(g.params().c, 9 - 3 - 1);
  for (long a = -10; a <= 10; ++a) {
    for (Family fam : {Family::f, Family::g, Family::h}) {
      const FamilyParam fp{fam, Integer(a)};
      EXPECT_EQ(fp.params().disc(), 4 * fp.quarter_disc());
      EXPECT_EQ(fp.quarter_disc(), a + fp.shift());
    }
  }
}

TEST(Family, VerdictExamples) {
  EXPECT_EQ(family_verdict({Family::h, Integer(0)}).monogenic_all_n, true);
  EXPECT_EQ(family_verdict({Family::f, Integer(1)}).monogenic_all_n, false);
  EXPECT_EQ(family_verdict({Family::f, Integer(2)}).monogenic_all_n, true);
  EXPECT_EQ(family_verdict({Family::h, Integer(2)}).monogenic_all_n, false);
  EXPECT_EQ(family_verdict({Family::h, Integer(-4)}).monogenic_all_n, true);
  for (long a = 1; a <= 4; ++a) {
    EXPECT_EQ(*family_verdict({Family::f, Integer(a)}).monogenic_all_n, a == 2 || a == 3) << a;
  }
  EXPECT_EQ(report(FamilyParam{Family::f, Integer(2)}.params()).verdict.kind, VerdictKind::dynamically_monogenic_all_n);
}

TEST(Family, OrbitsAreShortAndMatch) {
  for (long a = -30; a <= 30; ++a) {
    for (Family fam : {Family::f, Family::g, Family::h}) {
      const FamilyParam fp{fam, Integer(a)};
      const auto orb = critical_orbit(fp.params(), 8);
      ASSERT_TRUE(orb.is_finite());
      EXPECT_LE(*orb.period, 2);
      EXPECT_LE(*orb.preperiod, 2);
      EXPECT_TRUE(family_orbit_matches(fp, orb));
    }
  }
}

TEST(Family, ScansAreConsistentWithOracles) {
  for (Family fam : {Family::f, Family::g, Family::h}) {
    const auto rows = family_scan(fam, -50, 50, {}, 4);
    ASSERT_EQ(rows.size(), 101u);
    int positives = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(rows[i].param.a, -50 + static_cast<long>(i));
      EXPECT_TRUE(rows[i].consistent) << to_string(fam) << " a=" << rows[i].param.a << " " << rows[i].oracle_detail;
      EXPECT_TRUE(rows[i].verdict.monogenic_all_n.has_value());
      if (rows[i].verdict.monogenic_all_n.value_or(false)) ++positives;
    }
    EXPECT_GT(positives, 10);
  }
}

TEST(Family, ScanIsDeterministicAcrossJobCounts) {
  const auto a = family_scan(Family::h, -20, 20, {}, 1);
  const auto b = family_scan(Family::h, -20, 20, {}, 7);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].param.a, b[i].param.a);
    EXPECT_EQ(a[i].verdict.monogenic_all_n, b[i].verdict.monogenic_all_n);
    EXPECT_EQ(a[i].analyzer_verdict, b[i].analyzer_verdict);
    EXPECT_EQ(a[i].oracle_detail, b[i].oracle_detail);
  }
  const auto one = family_scan(Family::f, 1, 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].verdict.monogenic_all_n, false);
  EXPECT_THROW(family_scan(Family::f, 2, 1), std::invalid_argument);
}

TEST(Family, SpecializationToPowerMaps) {
  for (long a = -10; a <= 10; ++a) {
    for (Family fam : {Family::f, Family::g, Family::h}) {
      for (int n = 1; n <= 4; ++n) {
        const auto s = specialization_map({fam, Integer(a)}, n);
        EXPECT_TRUE(s.equal) << to_string(fam) << " a=" << a << " n=" << n;
        EXPECT_EQ(s.lhs, s.rhs);
      }
    }
  }
  EXPECT_EQ(specialization_map({Family::f, Integer(1)}, 2).rhs.to_string(), "x^4 - 1");
  EXPECT_EQ(specialization_map({Family::h, Integer(0)}, 3).lhs, iterate({0, -2}, 3));
}
