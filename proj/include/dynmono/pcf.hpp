#pragma once

// The three post-critically finite families (x + a)^2 - a - s, s = 0, 1, 2.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "dynmono/analyzer.hpp"
#include "dynmono/dedekind.hpp"
#include "dynmono/intfactor.hpp"
#include "dynmono/intpoly.hpp"

namespace dynmono {

enum class Family { f, g, h };

inline std::string_view to_string(Family fam) {
  switch (fam) {
    case Family::f: return "F_A";
    case Family::g: return "G_A";
    case Family::h: return "H_A";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "f" || s == "F_A" || s == "F") return Family::f;
  if (s == "g" || s == "G_A" || s == "G") return Family::g;
  if (s == "h" || s == "H_A" || s == "H") return Family::h;
  return std::nullopt;
}

struct FamilyParam {
  Family family = Family::f;
  Integer a;

  long shift() const { return static_cast<long>(family); }
  // x^2 + 2a x + a^2 - a - shift
  QuadParams params() const { return {2 * a, a * a - a - shift()}; }
  // D / 4 = a + shift
  Integer quarter_disc() const { return a + shift(); }
  MonicIntPoly base_map() const { return MonicIntPoly::from_lower({Integer(-shift()), Integer(0)}); }
};

struct FamilyVerdict {
  std::optional<bool> monogenic_all_n;
  std::vector<std::string> reasons;
};

namespace detail {

// Zero is never squarefree.
inline std::optional<bool> squarefree_or_zero(const Integer& v, const FactorBudget& budget) {
  if (v == 0) return false;
  return squarefree(v, budget).squarefree;
}

}  // namespace detail

inline FamilyVerdict family_verdict(const FamilyParam& fp, const FactorBudget& budget = {}) {
  FamilyVerdict out;
  const Integer d4 = fp.quarter_disc();
  const Integer other = fp.family == Family::h ? Integer(fp.a - 2) : fp.a;
  const std::string other_name = fp.family == Family::h ? "a-2" : "a";
  const std::string d4_name = "D/4";
  bool ok = true;
  bool unknown = false;

  const unsigned long r = mod_ui(d4, 4);
  if (r == 2 || r == 3) {
    out.reasons.push_back(d4_name + " = " + d4.get_str() + " = " + std::to_string(r) + " mod 4");
  } else {
    ok = false;
    out.reasons.push_back(d4_name + " = " + d4.get_str() + " = " + std::to_string(r) + " mod 4, not 2 or 3");
  }
  auto check = [&](const std::string& name, const Integer& v) {
    auto sf = detail::squarefree_or_zero(v, budget);
    if (!sf) {
      unknown = true;
      out.reasons.push_back(name + " = " + v.get_str() + ": squarefree test undecided");
    } else if (*sf) {
      out.reasons.push_back(name + " = " + v.get_str() + " squarefree");
    } else {
      ok = false;
      out.reasons.push_back(name + " = " + v.get_str() + " not squarefree");
    }
  };
  check(other_name, other);
  check(d4_name, d4);
  if (!ok) {
    out.monogenic_all_n = false;
  } else if (!unknown) {
    out.monogenic_all_n = true;
  }
  return out;
}

// Critical orbit predicted by the family: f fixes -a; g swaps -a-1, -a;
// h sends -a-2 to the fixed point -a+2.
inline bool family_orbit_matches(const FamilyParam& fp, const CriticalOrbit& orb) {
  const Integer& a = fp.a;
  std::vector<Dyadic> expect;
  int pre = 0, per = 1;
  switch (fp.family) {
    case Family::f: expect = {Dyadic(Integer(-a))}; break;
    case Family::g: expect = {Dyadic(Integer(-a - 1)), Dyadic(Integer(-a))}; per = 2; break;
    case Family::h: expect = {Dyadic(Integer(-a - 2)), Dyadic(Integer(-a + 2))}; pre = 1; break;
  }
  return orb.is_finite() && orb.values == expect && *orb.preperiod == pre && *orb.period == per;
}

inline constexpr std::uint64_t kScanPrimes[] = {2, 3, 5, 7, 11, 13};

struct FamilyScanRow {
  FamilyParam param;
  FamilyVerdict verdict;
  bool reducible = false;
  std::string analyzer_verdict;  // report at depth 4; "REDUCIBLE" when f is reducible
  std::string oracle_detail;
  bool orbit_matches = false;
  bool consistent = false;
};

inline FamilyScanRow scan_one(const FamilyParam& fp, const FactorBudget& budget = {}) {
  FamilyScanRow row;
  row.param = fp;
  row.verdict = family_verdict(fp, budget);
  const QuadParams q = fp.params();
  CriticalOrbit orb = critical_orbit(q, 8);
  row.orbit_matches = family_orbit_matches(fp, orb);
  if (q.is_reducible()) {
    // A reducible quadratic has no monogenic tower, so only a negative verdict is consistent.
    row.reducible = true;
    row.analyzer_verdict = "REDUCIBLE";
    row.consistent = row.verdict.monogenic_all_n == false;
    return row;
  }
  ReportBudgets rb;
  rb.depth = 4;
  rb.factor = budget;
  const MonogenicityReport rep = report(q, rb);
  row.analyzer_verdict = rep.verdict.to_string();
  if (!row.verdict.monogenic_all_n) {
    row.consistent = false;
    return row;
  }
  if (*row.verdict.monogenic_all_n) {
    bool all_ok = rep.verdict.kind == VerdictKind::dynamically_monogenic_all_n;
    for (int n = 1; n <= 3 && all_ok; ++n) {
      const MonicIntPoly fn = iterate(q, n);
      for (std::uint64_t p : kScanPrimes) {
        if (!dedekind(fn, p).p_maximal) {
          all_ok = false;
          row.oracle_detail = "oracle rejects n=" + std::to_string(n) + " p=" + std::to_string(p);
          break;
        }
      }
    }
    if (all_ok) row.oracle_detail = "oracle accepts n<=3, p<=13";
    row.consistent = all_ok;
  } else {
    bool found = false;
    if (rep.verdict.kind == VerdictKind::not_monogenic_at && rep.verdict.n <= 3 && rep.verdict.p.fits_ulong_p()) {
      const std::uint64_t p = rep.verdict.p.get_ui();
      found = !dedekind(iterate(q, rep.verdict.n), p).p_maximal;
      row.oracle_detail = "oracle at n=" + std::to_string(rep.verdict.n) + " p=" + std::to_string(p) +
                          (found ? " confirms failure" : " does not confirm");
    }
    row.consistent = found;
  }
  return row;
}

// Rows come back in order of a regardless of jobs.
inline std::vector<FamilyScanRow> family_scan(Family fam, long a_min, long a_max, const FactorBudget& budget = {},
                                              unsigned jobs = 1) {
  if (a_min > a_max) throw std::invalid_argument("family_scan: a_min > a_max");
  const std::size_t count = static_cast<std::size_t>(a_max - a_min + 1);
  std::vector<FamilyScanRow> rows(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) rows[i] = scan_one({fam, Integer(a_min + static_cast<long>(i))}, budget);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

struct SpecializationCheck {
  MonicIntPoly lhs;  // family^n(x - a)
  MonicIntPoly rhs;  // base^n(x) - a
  bool equal = false;
};

inline SpecializationCheck specialization_map(const FamilyParam& fp, int n) {
  const MonicIntPoly fn = iterate(fp.params(), n);
  const IntPoly lhs = taylor_shift(fn.poly(), Integer(-fp.a));
  const QuadParams base{0, Integer(-fp.shift())};
  const IntPoly rhs = iterate(base, n).poly() - IntPoly::constant(fp.a);
  SpecializationCheck out{MonicIntPoly(lhs), MonicIntPoly(rhs), lhs == rhs};
  return out;
}

}  // namespace dynmono
