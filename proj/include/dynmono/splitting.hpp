#pragma once

// Splitting of 2 in K_n = Q(alpha_n), alpha_n a root of f^n: predictions from
// the 2-class and f mod 2, and checks against factorizations over GF(2).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dynmono/analyzer.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/gf2poly.hpp"
#include "dynmono/shape.hpp"

namespace dynmono {

inline constexpr int kSplitMaxLevel = 62;

// Smallest m with 2^m > n (so 2^(m-1) <= n < 2^m).
inline int floor_log2_plus1(int n) {
  int m = 0;
  while ((1LL << m) <= n) ++m;
  return m;
}

// Smallest m with 2^m >= n (so 2^(m-1) < n <= 2^m).
inline int ceil_log2(int n) {
  int m = 0;
  while ((1LL << m) < n) ++m;
  return m;
}

inline SplittingShape predict_split2(const QuadParams& q, int n) {
  if (n < 1 || n > kSplitMaxLevel) throw std::invalid_argument("predict_split2: need 1 <= n <= 62");
  const TwoClass cls = classify_2(q);
  if (!cls.maximal()) {
    throw not_2_maximal_input("predict_split2: Z[alpha] is not 2-maximal (" + cls.detail +
                              "); f mod 2 does not describe the splitting of 2");
  }
  SplittingShape s;
  s.set_level(n);
  if (mod_ui(q.b, 2) == 0) {
    s.add(static_cast<int>(std::uint64_t{1} << n), 1);
    return s;
  }
  if (mod_ui(q.c, 2) == 1) {
    const int m = floor_log2_plus1(n);
    s.add(1, 1 << m, std::uint64_t{1} << (n - m));
    return s;
  }
  if (n == 1) {
    s.add(1, 1, 2);
    return s;
  }
  const int m = ceil_log2(n);
  s.add(1, 1, 2);
  for (int r = 1; r <= m - 1; ++r) {
    const std::uint64_t count = (std::uint64_t{1} << ((1 << r) - r)) - (std::uint64_t{1} << ((1 << (r - 1)) - r));
    s.add(1, 1 << r, count);
  }
  std::uint64_t top = 0;
  for (int j = 1 << (m - 1); j <= n - 1; ++j) top += std::uint64_t{1} << (j - m);
  s.add(1, 1 << m, top);
  return s;
}

struct Split2Verification {
  SplittingShape predicted;
  SplittingShape actual;
  std::vector<GF2Factor> factors;  // of f^n mod 2, canonical order
  bool squarefree_mod_2 = true;
  bool match = false;

  // Two-generator presentations (2, g(alpha_n)), with ^e for repeated factors.
  std::vector<std::string> ideals(int n) const {
    std::vector<std::string> out;
    const std::string var = "alpha_" + std::to_string(n);
    for (const auto& f : factors) {
      std::string s = "(2, " + f.poly.to_string(var) + ")";
      if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
      out.push_back(s);
    }
    return out;
  }
};

// Factors f^n mod 2 by iterating f mod 2; exponents become ramification indices.
inline Split2Verification verify_split2(const QuadParams& q, int n, std::uint64_t seed = kDefaultSeed) {
  Split2Verification v;
  v.predicted = predict_split2(q, n);
  const GF2Poly fn = gf2_iterate(GF2Poly::reduce(q.poly().poly()), n);
  v.factors = factor(fn, seed);
  v.actual.set_level(n);
  for (const auto& f : v.factors) {
    v.actual.add(f.exponent, f.poly.degree());
    if (f.exponent != 1) v.squarefree_mod_2 = false;
  }
  v.match = v.predicted == v.actual;
  return v;
}

// F = x^2 + x + 1 and G = x^2 + x over GF(2).
inline GF2Poly gf2_F() { return GF2Poly::from_exponents({2, 1, 0}); }
inline GF2Poly gf2_G() { return GF2Poly::from_exponents({2, 1}); }

struct CheckItem {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  bool informational = false;  // recorded observation; never fails a suite
};

inline std::vector<CheckItem> lemma41_checks(int n_max) {
  std::vector<CheckItem> out;
  if (n_max > 10) throw std::invalid_argument("lemma41_checks: n_max <= 10");
  const GF2Poly F = gf2_F(), G = gf2_G();
  for (int n = 1; n <= n_max; ++n) {
    const GF2Poly Gn = gf2_iterate(G, n), Fn = gf2_iterate(F, n), Gn1 = gf2_iterate(G, n + 1);
    out.push_back({"lemma41", "G^" + std::to_string(n + 1) + " = G^" + std::to_string(n) + " F^" + std::to_string(n),
                   Gn1 == Gn * Fn, "degree " + std::to_string(Gn1.degree())});
    out.push_back({"lemma41", "F^" + std::to_string(n) + " + 1 = G^" + std::to_string(n), Fn + GF2Poly::one() == Gn,
                   {}});
  }
  return out;
}

inline std::vector<CheckItem> lemma42_checks(int n_max, int m_max, std::uint64_t seed = kDefaultSeed) {
  std::vector<CheckItem> out;
  if (n_max > 8 || m_max > 4) throw std::invalid_argument("lemma42_checks: n_max <= 8, m_max <= 4");
  const GF2Poly F = gf2_F(), G = gf2_G();
  std::vector<GF2Poly> iterates;
  for (int n = 1; n <= n_max; ++n) {
    const GF2Poly Fn = gf2_iterate(F, n);
    iterates.push_back(Fn);
    const int m = floor_log2_plus1(n);
    const auto facs = factor(Fn, seed);
    bool ok = facs.size() == (std::size_t{1} << (n - m));
    for (const auto& f : facs) ok = ok && f.exponent == 1 && f.poly.degree() == (1 << m);
    out.push_back({"lemma42",
                   "F^" + std::to_string(n) + " = product of " + std::to_string(1 << (n - m)) +
                       " distinct irreducibles of degree " + std::to_string(1 << m),
                   ok, std::to_string(facs.size()) + " factors found"});
  }
  bool coprime = true;
  std::string bad;
  for (std::size_t i = 0; i < iterates.size(); ++i) {
    for (std::size_t j = i + 1; j < iterates.size(); ++j) {
      if (!gcd(iterates[i], iterates[j]).is_one()) {
        coprime = false;
        bad = "F^" + std::to_string(i + 1) + ", F^" + std::to_string(j + 1);
      }
    }
  }
  out.push_back({"lemma42", "F^i, F^j pairwise coprime for i < j <= " + std::to_string(n_max), coprime, bad});
  for (int m = 1; m <= m_max; ++m) {
    const int k = 1 << m;
    const GF2Poly lhs = gf2_iterate(G, k);
    const GF2Poly rhs = GF2Poly::monomial(std::size_t{1} << k) + GF2Poly::x();
    out.push_back({"lemma42", "G^" + std::to_string(k) + " = x^(2^" + std::to_string(k) + ") - x", lhs == rhs,
                   "degree " + std::to_string(lhs.degree())});
  }
  return out;
}

struct OpenQuestionRow {
  int m = 0;
  std::vector<GF2Poly> factors;               // irreducible factors of F^(2^(m-1))
  std::vector<bool> factor_matches;           // per factor: pattern holds
  bool pattern_holds_for_all = false;
  std::vector<GF2Poly> pattern_irreducibles;  // all degree 2^m irreducibles with the pattern
  bool sets_equal = false;
  std::vector<std::pair<int, int>> shared_coefficients;  // (index, value) common to every factor
};

// Pattern for degree 2^m: a_(2^m - 1) = 0 and a_(2^m - 1 - 2^i) = 1 for 0 <= i < m.
inline bool open_question_pattern(const GF2Poly& g, int m) {
  const std::size_t top = (std::size_t{1} << m) - 1;
  if (g.coeff(top)) return false;
  for (int i = 0; i < m; ++i) {
    if (!g.coeff(top - (std::size_t{1} << i))) return false;
  }
  return true;
}

inline std::vector<OpenQuestionRow> open_question_experiment(int m_max, std::uint64_t seed = kDefaultSeed) {
  if (m_max < 1 || m_max > 4) throw std::invalid_argument("open_question_experiment: 1 <= m_max <= 4");
  std::vector<OpenQuestionRow> rows;
  const GF2Poly F = gf2_F();
  for (int m = 1; m <= m_max; ++m) {
    OpenQuestionRow row;
    row.m = m;
    const int d = 1 << m;
    for (const auto& f : factor(gf2_iterate(F, 1 << (m - 1)), seed)) row.factors.push_back(f.poly);
    row.pattern_holds_for_all = true;
    for (const auto& g : row.factors) {
      row.factor_matches.push_back(open_question_pattern(g, m));
      row.pattern_holds_for_all = row.pattern_holds_for_all && row.factor_matches.back();
    }
    // Enumerate monic degree-d polynomials with nonzero constant term.
    for (std::uint64_t low = 1; low < (std::uint64_t{1} << d); low += 2) {
      GF2Poly g(std::vector<std::uint64_t>{low});
      g.flip(static_cast<std::size_t>(d));
      if (open_question_pattern(g, m) && is_irreducible(g)) row.pattern_irreducibles.push_back(g);
    }
    std::vector<GF2Poly> sorted = row.factors;
    std::sort(sorted.begin(), sorted.end());
    std::sort(row.pattern_irreducibles.begin(), row.pattern_irreducibles.end());
    row.sets_equal = sorted == row.pattern_irreducibles;
    for (int i = 0; i < d; ++i) {
      const bool v = row.factors.front().coeff(static_cast<std::size_t>(i));
      bool shared = true;
      for (const auto& g : row.factors) shared = shared && g.coeff(static_cast<std::size_t>(i)) == v;
      if (shared) row.shared_coefficients.emplace_back(i, v ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dynmono
