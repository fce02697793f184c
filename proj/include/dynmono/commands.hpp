#pragma once

// Command implementations behind the dynmono CLI. Each returns a document and
// an exit code: 0 success, 1 usage, 2 honest unknown, 3 internal failure.

#include <functional>
#include <regex>
#include <string>
#include <vector>

#include "dynmono/report.hpp"

namespace dynmono {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitUnknown = 2, kExitInternal = 3 };

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CommandOptions {
  std::uint64_t seed = kDefaultSeed;
  double budget_factor = 1.0;
  int depth = 12;
  std::size_t max_bits = kDefaultMaxBits;
  unsigned jobs = 1;

  FactorBudget factor_budget() const { return FactorBudget{}.scaled(budget_factor); }
};

struct CommandOutcome {
  ReportDocument doc;
  int exit_code = kExitOk;
};

inline Integer parse_integer(const std::string& s) {
  static const std::regex re("[+-]?[0-9]+");
  if (!std::regex_match(s, re)) throw usage_error("malformed integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

namespace detail {

inline Json provenance(const CommandOptions& o) {
  return Json{{"tool", kToolName},
              {"version", kToolVersion},
              {"seed", o.seed},
              {"budgets",
               {{"budget_factor", o.budget_factor},
                {"depth", o.depth},
                {"max_bits", o.max_bits},
                {"factor", to_json(o.factor_budget())}}}};
}

inline Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"kind", kind}, {"message", message}};
}

// Runs body, translating library errors into documents and exit codes.
inline CommandOutcome guarded(const std::string& command, Json args, const CommandOptions& o,
                              const std::function<int(Json&)>& body) {
  CommandOutcome out;
  out.doc.command = command;
  out.doc.args = std::move(args);
  out.doc.provenance = provenance(o);
  try {
    out.exit_code = body(out.doc.result);
  } catch (const usage_error& e) {
    out.doc.error = error_json("UsageError", e.what());
    out.exit_code = kExitUsage;
  } catch (const reducible_input& e) {
    out.doc.error = error_json("ReducibleInput", e.what());
    out.exit_code = kExitUsage;
  } catch (const not_2_maximal_input& e) {
    out.doc.error = error_json("Not2MaximalInput", e.what());
    out.exit_code = kExitUnknown;
  } catch (const degree_cap_exceeded& e) {
    out.doc.error = error_json("DegreeCapExceeded", e.what());
    out.exit_code = kExitUnknown;
  } catch (const coefficient_blowup& e) {
    out.doc.error = error_json("CoefficientBlowup", e.what());
    out.exit_code = kExitUnknown;
  } catch (const std::exception& e) {
    out.doc.error = error_json("InternalError", e.what());
    out.exit_code = kExitInternal;
  }
  return out;
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw usage_error(msg);
}

inline Json degree_multiset(const std::vector<GF2Factor>& facs) {
  std::vector<int> degs;
  for (const auto& f : facs) {
    for (int k = 0; k < f.exponent; ++k) degs.push_back(f.poly.degree());
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace detail

inline CommandOutcome cmd_analyze(const std::string& b, const std::string& c, const CommandOptions& o) {
  Json args{{"b", b}, {"c", c}, {"depth", o.depth}, {"max_bits", o.max_bits}};
  return detail::guarded("analyze", args, o, [&](Json& result) {
    detail::require(o.depth >= 1, "--depth must be >= 1");
    const QuadParams q{parse_integer(b), parse_integer(c)};
    ReportBudgets rb;
    rb.depth = o.depth;
    rb.max_bits = o.max_bits;
    rb.factor = o.factor_budget();
    const MonogenicityReport rep = report(q, rb);
    result = to_json(rep);
    return rep.verdict.kind == VerdictKind::unknown ? kExitUnknown : kExitOk;
  });
}

inline CommandOutcome cmd_split2(const std::string& b, const std::string& c, int n, bool verify,
                                 const CommandOptions& o) {
  Json args{{"b", b}, {"c", c}, {"n", n}, {"verify", verify}};
  return detail::guarded("split2", args, o, [&](Json& result) {
    detail::require(n >= 1 && n <= kSplitMaxLevel, "n must be in [1, 62]");
    const QuadParams q{parse_integer(b), parse_integer(c)};
    const TwoClass cls = classify_2(q);
    const SplittingShape shape = predict_split2(q, n);
    result["params"] = to_json(q);
    result["two_class"] = to_json(cls);
    result["predicted"] = to_json(shape);
    if (verify) {
      detail::require(mod_ui(q.b, 2) == 1, "--verify needs b odd (2 unramified)");
      const Split2Verification v = verify_split2(q, n, o.seed);
      Json facs = Json::array();
      for (const auto& f : v.factors) facs.push_back(to_json(f));
      result["actual"] = to_json(v.actual);
      result["factors"] = facs;
      result["ideals"] = v.ideals(n);
      result["squarefree_mod_2"] = v.squarefree_mod_2;
      result["match"] = v.match;
      return v.match ? kExitOk : kExitInternal;
    }
    return kExitOk;
  });
}

inline CommandOutcome cmd_oracle(const std::string& b, const std::string& c, int n, std::uint64_t p,
                                 const CommandOptions& o) {
  Json args{{"b", b}, {"c", c}, {"n", n}, {"p", p}};
  return detail::guarded("oracle", args, o, [&](Json& result) {
    detail::require(n >= 1 && n <= kWitnessMaxLevel, "n must be in [1, 6]");
    detail::require(is_prime_u64(p), "p must be prime");
    const QuadParams q{parse_integer(b), parse_integer(c)};
    if (q.is_reducible()) throw reducible_input("x^2 + bx + c is reducible: discriminant is a square");
    const MonicIntPoly fn = iterate(q, n);
    const DedekindVerdict dk = dedekind(fn, p, o.seed);
    const OreReport ore = ore_analyze(fn, p, o.seed);
    const CriticalOrbit orb = critical_orbit(q, n, o.max_bits);
    const bool closed = closed_form_p_maximal(q, orb, n, p);
    const auto witness = irreducibility_witness(q, n);
    result["params"] = to_json(q);
    result["iterate"] = fn.to_string();
    result["irreducibility_witness"] = witness ? Json(*witness) : Json(nullptr);
    result["dedekind"] = {{"p_maximal", dk.p_maximal}, {"witness", dk.witness.to_string()}};
    result["ore"] = to_json(ore);
    result["closed_form"] = {{"p_maximal", closed}};
    const bool agree = dk.p_maximal == ore.p_maximal && dk.p_maximal == closed;
    result["banner"] = agree ? "AGREE" : "DISAGREE";
    return agree ? kExitOk : kExitInternal;
  });
}

inline CommandOutcome cmd_pcf_scan(const std::string& family, long a_min, long a_max, const CommandOptions& o) {
  Json args{{"family", family}, {"a_min", a_min}, {"a_max", a_max}, {"jobs", o.jobs}};
  return detail::guarded("pcf-scan", args, o, [&](Json& result) {
    const auto fam = parse_family(family);
    detail::require(fam.has_value(), "family must be one of f, g, h");
    detail::require(a_min <= a_max, "a_min must not exceed a_max");
    const auto rows = family_scan(*fam, a_min, a_max, o.factor_budget(), o.jobs);
    Json table = Json::array();
    int yes = 0, no = 0, unknown = 0, inconsistent = 0;
    for (const auto& r : rows) {
      table.push_back(to_json(r));
      if (!r.verdict.monogenic_all_n) {
        ++unknown;
      } else if (*r.verdict.monogenic_all_n) {
        ++yes;
      } else {
        ++no;
      }
      if (!r.consistent || !r.orbit_matches) ++inconsistent;
    }
    result["family"] = std::string(to_string(*fam));
    result["rows"] = table;
    result["summary"] = {{"true", yes}, {"false", no}, {"unknown", unknown}, {"inconsistent", inconsistent}};
    if (inconsistent) return kExitInternal;
    return unknown ? kExitUnknown : kExitOk;
  });
}

inline CommandOutcome cmd_factor2(const std::string& b, const std::string& c, int n, const CommandOptions& o) {
  Json args{{"b", b}, {"c", c}, {"n", n}};
  return detail::guarded("factor2", args, o, [&](Json& result) {
    detail::require(n >= 1, "n must be >= 1");
    const QuadParams q{parse_integer(b), parse_integer(c)};
    const GF2Poly fn = gf2_iterate(GF2Poly::reduce(q.poly().poly()), n);
    const auto facs = factor(fn, o.seed);
    Json list = Json::array();
    std::vector<std::string> ideals;
    for (const auto& f : facs) {
      list.push_back(to_json(f));
      std::string s = "(2, " + f.poly.to_string("alpha_" + std::to_string(n)) + ")";
      if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
      ideals.push_back(s);
    }
    result["params"] = to_json(q);
    result["degree"] = fn.degree();
    result["factors"] = list;
    result["degrees"] = detail::degree_multiset(facs);
    result["ideals"] = ideals;
    return kExitOk;
  });
}

// Identity suites.

inline std::vector<QuadParams> irreducible_grid(long bound) {
  std::vector<QuadParams> out;
  for (long b = -bound; b <= bound; ++b) {
    for (long c = -bound; c <= bound; ++c) {
      QuadParams q{b, c};
      if (!q.is_reducible()) out.push_back(q);
    }
  }
  return out;
}

inline std::vector<CheckItem> orbit_checks(long bound = 12) {
  std::size_t cases = 0, crit_fail = 0, a1_fail = 0, rec_fail = 0, eval_fail = 0;
  for (const auto& q : irreducible_grid(bound)) {
    ++cases;
    const Dyadic c1 = q.apply(q.critical_point());
    if (!(c1 == Dyadic(Integer(-q.disc()), 2))) ++crit_fail;
    if (abs(odd_part(c1.num())) != abs(odd_part(q.disc()))) ++a1_fail;
    const CriticalOrbit orb = critical_orbit(q, 6);
    for (int n = 1; n + 1 <= 6; ++n) {
      const Dyadic* a = orb.value_at(n);
      const Dyadic* b = orb.value_at(n + 1);
      if (a && b && !(q.apply(*a) == *b)) ++rec_fail;
    }
    for (int n = 1; n <= 3; ++n) {
      const Dyadic* a = orb.value_at(n);
      if (a && !(eval_dyadic(iterate(q, n), q.critical_point()) == *a)) ++eval_fail;
    }
  }
  const std::string grid = std::to_string(cases) + " irreducible (b, c) with |b|, |c| <= " + std::to_string(bound);
  return {
      {"orbit", "f(-b/2) = -Disc(f)/4", crit_fail == 0, grid + ", " + std::to_string(crit_fail) + " failures"},
      {"orbit", "A_1 = +-odd part of Disc(f)", a1_fail == 0, grid + ", " + std::to_string(a1_fail) + " failures"},
      {"orbit", "c_(n+1) = f(c_n) for n < 6", rec_fail == 0, grid + ", " + std::to_string(rec_fail) + " failures"},
      {"orbit", "c_n = f^n(-b/2) evaluated on the expanded iterate, n <= 3", eval_fail == 0,
       grid + ", " + std::to_string(eval_fail) + " failures"},
  };
}

struct ChainObservation {
  std::size_t cases = 0;
  std::size_t odd_parts_equal = 0;
  std::size_t literal_equal = 0;
  std::size_t ratio_is_4_pow = 0;  // L = 4^(2^(n-1)) R
};

// L = 4^(2^n) f^n(-b/2) against R = 4^(2^(n-1)) f^(n-1)(-Disc/4), n = 1..n_max.
inline ChainObservation chain_observation(long bound = 12, int n_max = 4) {
  ChainObservation obs;
  for (const auto& q : irreducible_grid(bound)) {
    const Dyadic start(Integer(-q.disc()), 2);
    Dyadic lhs_val = q.critical_point();
    Dyadic rhs_val = start;
    for (int n = 1; n <= n_max; ++n) {
      lhs_val = q.apply(lhs_val);
      if (n > 1) rhs_val = q.apply(rhs_val);
      const Dyadic L = Dyadic(pow_int(4, 1ul << n)) * lhs_val;
      const Dyadic R = Dyadic(pow_int(4, 1ul << (n - 1))) * rhs_val;
      ++obs.cases;
      if (odd_part(L.num()) == odd_part(R.num())) ++obs.odd_parts_equal;
      if (L == R) ++obs.literal_equal;
      if (L == Dyadic(pow_int(4, 1ul << (n - 1))) * R) ++obs.ratio_is_4_pow;
    }
  }
  return obs;
}

inline std::vector<CheckItem> chain_checks(long bound = 12, int n_max = 4) {
  const ChainObservation obs = chain_observation(bound, n_max);
  const std::string of = " of " + std::to_string(obs.cases) + " (b, c, n) cases, n <= " + std::to_string(n_max);
  std::vector<CheckItem> out;
  out.push_back({"chain", "odd parts of 4^(2^n) f^n(-b/2) and 4^(2^(n-1)) f^(n-1)(-Disc/4) agree",
                 obs.odd_parts_equal == obs.cases, std::to_string(obs.odd_parts_equal) + of});
  CheckItem literal{"chain", "literal equality of the two scaled values", obs.literal_equal == obs.cases,
                    std::to_string(obs.literal_equal) + of + " equal; observed ratio is 4^(2^(n-1)) in " +
                        std::to_string(obs.ratio_is_4_pow) + " cases",
                    true};
  out.push_back(literal);
  return out;
}

inline std::vector<CheckItem> open_question_checks(Json* table, std::uint64_t seed) {
  std::vector<CheckItem> out;
  Json rows = Json::array();
  for (const auto& r : open_question_experiment(4, seed)) {
    Json facs = Json::array();
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      facs.push_back({{"poly", r.factors[i].to_string()}, {"pattern", static_cast<bool>(r.factor_matches[i])}});
    }
    Json shared = Json::array();
    for (auto [i, v] : r.shared_coefficients) shared.push_back({{"index", i}, {"value", v}});
    rows.push_back({{"m", r.m},
                    {"factors", facs},
                    {"pattern_holds_for_all", r.pattern_holds_for_all},
                    {"pattern_irreducible_count", r.pattern_irreducibles.size()},
                    {"sets_equal", r.sets_equal},
                    {"shared_coefficients", shared}});
    out.push_back({"open-question",
                   "m = " + std::to_string(r.m) + ": factors of F^" + std::to_string(1 << (r.m - 1)) +
                       " have a_(2^m-1) = 0 and a_(2^m-1-2^i) = 1",
                   r.pattern_holds_for_all,
                   std::to_string(r.factors.size()) + " factors, " + std::to_string(r.pattern_irreducibles.size()) +
                       " irreducibles of degree " + std::to_string(1 << r.m) + " match the pattern; sets " +
                       (r.sets_equal ? "equal" : "differ"),
                   true});
  }
  if (table) *table = rows;
  return out;
}

inline CommandOutcome cmd_check_identities(const std::string& suite, const CommandOptions& o) {
  Json args{{"suite", suite}};
  return detail::guarded("check-identities", args, o, [&](Json& result) {
    static const std::vector<std::string> kSuites{"lemma41", "lemma42", "orbit", "chain", "open-question"};
    detail::require(suite == "all" || std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end(),
                    "unknown suite '" + suite + "'");
    auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
    std::vector<CheckItem> items;
    auto append = [&](std::vector<CheckItem> v) { items.insert(items.end(), v.begin(), v.end()); };
    if (want("lemma41")) append(lemma41_checks(10));
    if (want("lemma42")) append(lemma42_checks(8, 4, o.seed));
    if (want("orbit")) append(orbit_checks());
    if (want("chain")) append(chain_checks());
    if (want("open-question")) {
      Json table;
      append(open_question_checks(&table, o.seed));
      result["open_question"] = table;
    }
    Json list = Json::array();
    int passed = 0, failed = 0, info = 0;
    for (const auto& it : items) {
      list.push_back(to_json(it));
      if (it.informational) {
        ++info;
      } else if (it.passed) {
        ++passed;
      } else {
        ++failed;
      }
    }
    result["items"] = list;
    result["summary"] = {{"pass", passed}, {"fail", failed}, {"info", info}};
    return failed ? kExitInternal : kExitOk;
  });
}

// Worked examples: each row recomputes a published value and compares.
struct ReproRow {
  std::string id;
  std::string expected;
  std::string observed;
  bool pass = false;
};

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

inline std::string degrees_text(const std::vector<GF2Factor>& facs) {
  std::vector<std::string> s;
  for (int d : detail::degree_multiset(facs)) s.push_back(std::to_string(d));
  return "{" + join(s, ",") + "}";
}

inline std::vector<ReproRow> repro_rows(std::uint64_t seed = kDefaultSeed) {
  std::vector<ReproRow> rows;
  auto add = [&](std::string id, std::string expected, std::string observed) {
    const bool ok = expected == observed;
    rows.push_back({std::move(id), std::move(expected), std::move(observed), ok});
  };
  const QuadParams x2m2{0, -2};
  add("x^2 - 2 composed with itself", "x^4 - 4x^2 + 2", iterate(x2m2, 2).to_string());
  add("third iterate of x^2 - 2", "x^8 - 8x^6 + 20x^4 - 16x^2 + 2", iterate(x2m2, 3).to_string());
  add("fourth iterate of x^2 - 2", "x^16 - 16x^14 + 104x^12 - 352x^10 + 660x^8 - 672x^6 + 336x^4 - 64x^2 + 2",
      iterate(x2m2, 4).to_string());
  {
    const std::string f5 = iterate(x2m2, 5).to_string();
    const std::string tail = "5440x^4 - 256x^2 + 2";
    add("fifth iterate of x^2 - 2 ends with 5440x^4 - 256x^2 + 2", tail,
        f5.size() >= tail.size() ? f5.substr(f5.size() - tail.size()) : f5);
  }
  add("Disc(x^2 - 2)", "8", discriminant(x2m2.poly()).get_str());
  add("f(-b/2) for x^2 + x + 1", "3/2^2", QuadParams{1, 1}.apply(QuadParams{1, 1}.critical_point()).to_string());
  {
    const auto v = verify_split2({-1, 2}, 5, seed);
    add("degrees of x^2 - x + 2 iterated 5 times, mod 2", "{1,1,2,4,4,4,8,8}", degrees_text(v.factors));
    add("splitting of 2 for x^2 - x + 2 at n = 5",
        "(2, alpha_5)(2, alpha_5 + 1)(2, alpha_5^2 + alpha_5 + 1)(2, alpha_5^4 + alpha_5 + 1)"
        "(2, alpha_5^4 + alpha_5^3 + 1)(2, alpha_5^4 + alpha_5^3 + alpha_5^2 + alpha_5 + 1)"
        "(2, alpha_5^8 + alpha_5^6 + alpha_5^5 + alpha_5^3 + 1)"
        "(2, alpha_5^8 + alpha_5^6 + alpha_5^5 + alpha_5^4 + alpha_5^3 + alpha_5 + 1)",
        join(v.ideals(5), ""));
    add("prediction matches GF(2) factorization for x^2 - x + 2, n = 5", "true", v.match ? "true" : "false");
  }
  add("x^8 + x^6 + x^5 + x^3 + 1 irreducible over GF(2)", "true",
      is_irreducible(GF2Poly::from_exponents({8, 6, 5, 3, 0})) ? "true" : "false");
  add("G^2 = G F over GF(2)", "true", gf2_iterate(gf2_G(), 2) == gf2_G() * gf2_F() ? "true" : "false");
  {
    // x^2 + bx + c around phi = x + bt, 2t = 1 mod p^2.
    const QuadParams q{3, 9};
    const Integer t = 5;
    const IntPoly phi{Integer(q.b * t).get_si(), 1};
    const PhiDevelopment dev = develop(q.poly().poly(), phi, 3);
    const IntPoly expect0 = IntPoly::constant(q.b * q.b * t * t - q.b * q.b * t + q.c);
    const IntPoly expect1 = IntPoly::constant(q.b - 2 * q.b * t);
    const bool terms_ok = dev.terms.size() == 3 && dev.terms[0] == expect0 && dev.terms[1] == expect1 &&
                          dev.terms[2] == IntPoly{1};
    add("x^2 + 3x + 9 developed around x + 3t", "true", terms_ok ? "true" : "false");
    add("index bound from that development is positive", "true",
        ind_phi(principal_polygon(dev)) >= 1 ? "true" : "false");
  }
  {
    const OreReport r = ore_analyze(x2m2.poly(), 2, seed);
    add("x^2 - 2 at 2: p-maximal, one prime with e = 2", "true {(e=2, f=1)}",
        std::string(r.p_maximal ? "true " : "false ") + (r.shape ? r.shape->to_string() : "none"));
    add("Dedekind criterion on x^2 - 2 at 2", "true", dedekind(x2m2.poly(), 2, seed).p_maximal ? "true" : "false");
  }
  add("2-class of x^2 - x + 2", "B_ODD_UNRAMIFIED", std::string(to_string(classify_2({-1, 2}).tag)));
  add("2-class of x^2 - 2", "EISENSTEIN_RAMIFIED", std::string(to_string(classify_2(x2m2).tag)));
  {
    const CriticalOrbit orb = critical_orbit(x2m2, 8);
    std::string vals;
    for (const auto& v : orb.values) vals += (vals.empty() ? "" : ",") + v.to_string();
    add("critical orbit of x^2 - 2", "(-2,2) preperiod 1 period 1",
        "(" + vals + ") preperiod " + (orb.preperiod ? std::to_string(*orb.preperiod) : "none") + " period " +
            (orb.period ? std::to_string(*orb.period) : "none"));
    std::string odd;
    for (const auto& ob : odd_p_obstructions(orb, -1)) {
      odd += (odd.empty() ? "" : ",") + ob.odd_part.get_str() + (ob.has_obstruction() ? "!" : "");
    }
    add("odd parts along the orbit of x^2 - 2", "-1,1", odd);
  }
  add("stability of x^2 - x + 2 (Disc = -7)", "CERTIFIED_STABLE", std::string(to_string(stability_check({-1, 2}))));
  add("stability of x^2 - 2 (Disc = 8)", "CERTIFIED_STABLE", std::string(to_string(stability_check(x2m2))));
  add("analyze 0 -2", "DYNAMICALLY_MONOGENIC_ALL_N", report(x2m2).verdict.to_string());
  add("predicted splitting, x^2 - x + 2, n = 5", "{(e=1, f=1)x2, (e=1, f=2), (e=1, f=4)x3, (e=1, f=8)x2}",
      predict_split2({-1, 2}, 5).to_string());
  add("predicted splitting, x^2 - x + 1, n = 5", "{(e=1, f=8)x4}", predict_split2({-1, 1}, 5).to_string());
  add("predicted splitting, x^2 - 2, n = 3", "{(e=8, f=1)}", predict_split2(x2m2, 3).to_string());
  add("predicted splitting, x^2 - 2, n = 4", "{(e=16, f=1)}", predict_split2(x2m2, 4).to_string());
  {
    const GF2Poly f5 = gf2_iterate(GF2Poly::reduce(QuadParams{-1, 1}.poly().poly()), 5);
    std::vector<std::string> gens;
    for (const auto& f : factor(f5, seed)) gens.push_back("(2, " + f.poly.to_string("alpha_5") + ")");
    add("splitting of 2 for x^2 - x + 1 at n = 5",
        "(2, alpha_5^8 + alpha_5^5 + alpha_5^3 + alpha_5 + 1)"
        "(2, alpha_5^8 + alpha_5^5 + alpha_5^4 + alpha_5^3 + alpha_5^2 + alpha_5 + 1)"
        "(2, alpha_5^8 + alpha_5^6 + alpha_5^5 + alpha_5 + 1)"
        "(2, alpha_5^8 + alpha_5^6 + alpha_5^5 + alpha_5^2 + 1)",
        join(gens, ""));
  }
  add("2 is squarefree", "true", squarefree(2).squarefree.value_or(false) ? "true" : "false");
  add("h-family, a = 0 (x^2 - 2)", "true", family_verdict({Family::h, 0}).monogenic_all_n == true ? "true" : "false");
  add("f-family, a = 1", "false", family_verdict({Family::f, 1}).monogenic_all_n == false ? "false" : "true");
  {
    const auto rows = family_scan(Family::h, -5, 5);
    bool ok = false;
    for (const auto& r : rows) ok = ok || (r.param.a == 0 && r.verdict.monogenic_all_n == true);
    add("pcf-scan h -5 5 lists a = 0 as monogenic", "true", ok ? "true" : "false");
  }
  return rows;
}

inline CommandOutcome cmd_repro(const CommandOptions& o) {
  return detail::guarded("repro", Json::object(), o, [&](Json& result) {
    Json table = Json::array();
    int pass = 0, fail = 0;
    for (const auto& r : repro_rows(o.seed)) {
      table.push_back({{"id", r.id}, {"expected", r.expected}, {"observed", r.observed}, {"pass", r.pass}});
      (r.pass ? pass : fail)++;
    }
    result["rows"] = table;
    result["summary"] = {{"pass", pass}, {"fail", fail}};
    return fail ? kExitInternal : kExitOk;
  });
}

}  // namespace dynmono
