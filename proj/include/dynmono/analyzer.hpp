#pragma once

// Monogenicity of iterates of x^2 + bx + c: 2-adic classification, the
// critical orbit criterion at odd primes, and stability certificates.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynmono/arith.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/ffpoly.hpp"
#include "dynmono/intfactor.hpp"
#include "dynmono/intpoly.hpp"

namespace dynmono {

enum class TwoClassTag { b_odd_unramified, eisenstein_ramified, unit_ramified, not_2_maximal };

inline std::string_view to_string(TwoClassTag t) {
  switch (t) {
    case TwoClassTag::b_odd_unramified: return "B_ODD_UNRAMIFIED";
    case TwoClassTag::eisenstein_ramified: return "EISENSTEIN_RAMIFIED";
    case TwoClassTag::unit_ramified: return "UNIT_RAMIFIED";
    case TwoClassTag::not_2_maximal: return "NOT_2_MAXIMAL";
  }
  return "?";
}

struct TwoClass {
  TwoClassTag tag = TwoClassTag::not_2_maximal;
  std::string detail;

  bool maximal() const { return tag != TwoClassTag::not_2_maximal; }
  std::string ramification() const {
    switch (tag) {
      case TwoClassTag::b_odd_unramified: return "2 unramified in every K_n";
      case TwoClassTag::eisenstein_ramified:
      case TwoClassTag::unit_ramified: return "2 totally ramified in every K_n";
      case TwoClassTag::not_2_maximal: return "Z[alpha] not 2-maximal; splitting of 2 not read off f mod 2";
    }
    return {};
  }
};

inline TwoClass classify_2(const QuadParams& q) {
  if (mod_ui(q.b, 2) == 1) return {TwoClassTag::b_odd_unramified, "b odd"};
  if (mod_ui(q.c, 4) == 2) return {TwoClassTag::eisenstein_ramified, "b even, c = 2 mod 4"};
  if (mod_ui(q.b + q.c, 4) == 1) return {TwoClassTag::unit_ramified, "b even, b + c = 1 mod 4"};
  return {TwoClassTag::not_2_maximal,
          "b even, c = " + std::to_string(mod_ui(q.c, 4)) + " mod 4, b + c = " + std::to_string(mod_ui(q.b + q.c, 4)) +
              " mod 4"};
}

struct CriticalOrbit {
  QuadParams params;
  std::vector<Dyadic> values;  // c_1, c_2, ...; for finite orbits exactly the distinct values
  std::optional<int> preperiod;
  std::optional<int> period;
  bool truncated = false;
  bool escaping = false;  // certified infinite: |c_n + b/2| grows without bound
  std::string stop_reason;

  bool is_finite() const { return period.has_value(); }

  // c_n for n >= 1, or nullptr when not computed.
  const Dyadic* value_at(int n) const {
    if (n < 1) return nullptr;
    if (static_cast<std::size_t>(n) <= values.size()) return &values[static_cast<std::size_t>(n - 1)];
    if (!period) return nullptr;
    const int idx = *preperiod + (n - 1 - *preperiod) % *period;
    return &values[static_cast<std::size_t>(idx)];
  }
  // Largest n with c_1..c_n known; -1 for "all n".
  int known_levels() const { return period ? -1 : static_cast<int>(values.size()); }
};

inline CriticalOrbit critical_orbit(const QuadParams& q, int max_n, std::size_t max_bits = kDefaultMaxBits) {
  if (max_n < 1) throw std::invalid_argument("critical_orbit: max_n must be >= 1");
  CriticalOrbit orb;
  orb.params = q;
  // With X = x + b/2 the map is X -> X^2 + k, k = c - b^2/4 + b/2; once |X| > |k| + 1 it escapes.
  const Dyadic half_b(q.b, 1);
  const Dyadic k = Dyadic(q.c) - half_b * half_b + half_b;
  Integer bound;
  mpz_cdiv_q_2exp(bound.get_mpz_t(), Integer(abs(k.num())).get_mpz_t(), k.exp2());
  bound += 1;

  auto less = [](const Dyadic& a, const Dyadic& b) { return structural_less(a, b); };
  std::map<Dyadic, int, decltype(less)> seen(less);
  Dyadic cur = q.critical_point();
  for (int n = 1; n <= max_n; ++n) {
    cur = q.apply(cur);
    if (bit_length(cur.num()) > max_bits) {
      orb.truncated = true;
      orb.stop_reason = "value c_" + std::to_string(n) + " exceeds " + std::to_string(max_bits) + " bits";
      return orb;
    }
    auto it = seen.find(cur);
    if (it != seen.end()) {
      orb.preperiod = it->second - 1;
      orb.period = n - it->second;
      return orb;
    }
    seen.emplace(cur, n);
    orb.values.push_back(cur);
    if (!orb.escaping && (cur + half_b).abs_greater(bound)) orb.escaping = true;
  }
  orb.truncated = true;
  orb.stop_reason = "no cycle within " + std::to_string(max_n) + " steps";
  return orb;
}

enum class Stability { certified_stable, unknown };

inline std::string_view to_string(Stability s) {
  return s == Stability::certified_stable ? "CERTIFIED_STABLE" : "UNKNOWN";
}

// Stable when Disc = 1 mod 4, or Disc = 0 mod 4 with Disc != 0 mod 16.
inline Stability stability_check(const QuadParams& q) {
  const Integer d = q.disc();
  if (is_perfect_square(d)) {
    throw reducible_input(q.poly().to_string() + " is reducible: discriminant " + d.get_str() + " is a square");
  }
  const unsigned long r = mod_ui(d, 16);
  if (r % 4 == 1) return Stability::certified_stable;
  if (r % 4 == 0 && r != 0) return Stability::certified_stable;
  return Stability::unknown;
}

struct OddObstruction {
  int n = 0;
  Integer odd_part;                       // odd part of the numerator of c_n, sign kept
  std::vector<Integer> offending_primes;  // p with p^2 | odd_part found so far
  bool complete = true;                   // factorization of |odd_part| finished
  std::string note;

  bool has_obstruction() const { return !offending_primes.empty(); }
  bool certified_squarefree() const { return complete && offending_primes.empty() && odd_part != 0; }
};

inline OddObstruction odd_obstruction_at(int n, const Dyadic& value, const FactorBudget& budget) {
  OddObstruction ob;
  ob.n = n;
  ob.odd_part = odd_part(value.num());
  if (ob.odd_part == 0) {
    ob.complete = true;
    ob.note = "critical value vanishes: f^" + std::to_string(n) + " has a rational root";
    return ob;
  }
  SquarefreeVerdict sf = squarefree(ob.odd_part, budget);
  ob.offending_primes = sf.repeated_primes();
  ob.complete = sf.certificate.complete();
  ob.note = sf.note;
  return ob;
}

// Levels 1..levels, or every distinct orbit value when levels < 0 and the orbit is finite.
inline std::vector<OddObstruction> odd_p_obstructions(const CriticalOrbit& orbit, int levels,
                                                      const FactorBudget& budget = {}) {
  std::vector<OddObstruction> out;
  const int top = levels < 0 ? static_cast<int>(orbit.values.size()) : levels;
  for (int n = 1; n <= top; ++n) {
    const Dyadic* v = orbit.value_at(n);
    if (!v) break;
    out.push_back(odd_obstruction_at(n, *v, budget));
  }
  return out;
}

// Closed-form p-maximality of f^n: 2-class at p = 2, p^2 not dividing any
// A_1..A_n at odd p.
inline bool closed_form_p_maximal(const QuadParams& q, const CriticalOrbit& orbit, int n, std::uint64_t p) {
  if (p == 2) return classify_2(q).maximal();
  const Integer p2 = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
  for (int k = 1; k <= n; ++k) {
    const Dyadic* v = orbit.value_at(k);
    if (!v) throw std::out_of_range("closed_form_p_maximal: orbit level " + std::to_string(k) + " not computed");
    if (mpz_divisible_p(v->num().get_mpz_t(), p2.get_mpz_t())) return false;
  }
  return true;
}

// f^n mod p by iterating f mod p; monic, so the degree is 2^n.
inline ff::PolyOf<ff::PrimeField> iterate_mod_p(const QuadParams& q, int n, std::uint64_t p) {
  ff::PolyRing<ff::PrimeField> R{ff::PrimeField(p)};
  const auto b = R.field().from_integer(q.b);
  const auto c = R.field().from_integer(q.c);
  auto cur = R.x();
  for (int k = 0; k < n; ++k) cur = R.add(R.add(R.mul(cur, cur), R.scale(cur, b)), R.constant(c));
  return cur;
}

inline constexpr int kWitnessMaxLevel = 6;

// Smallest p <= max_prime with f^n irreducible mod p (which certifies f^n
// irreducible over Q).
inline std::optional<std::uint64_t> irreducibility_witness(const QuadParams& q, int n, std::uint64_t max_prime = 200) {
  if (n > kWitnessMaxLevel) return std::nullopt;
  for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(max_prime))) {
    ff::PolyRing<ff::PrimeField> R{ff::PrimeField(p)};
    if (ff::is_irreducible(R, iterate_mod_p(q, n, p))) return p;
  }
  return std::nullopt;
}

enum class Irreducibility { certified_stable, certified_to_n, unknown };

inline std::string_view to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::certified_stable: return "CERTIFIED_STABLE";
    case Irreducibility::certified_to_n: return "CERTIFIED_TO_N";
    case Irreducibility::unknown: return "UNKNOWN";
  }
  return "?";
}

enum class VerdictKind { dynamically_monogenic_all_n, monogenic_to_n, not_monogenic_at, unknown };

inline std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::dynamically_monogenic_all_n: return "DYNAMICALLY_MONOGENIC_ALL_N";
    case VerdictKind::monogenic_to_n: return "MONOGENIC_TO_N";
    case VerdictKind::not_monogenic_at: return "NOT_MONOGENIC_AT";
    case VerdictKind::unknown: return "UNKNOWN";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  int n = 0;             // not_monogenic_at: level; monogenic_to_n: N
  Integer p;             // not_monogenic_at
  std::string reason;    // unknown

  std::string to_string() const {
    switch (kind) {
      case VerdictKind::not_monogenic_at: return "NOT_MONOGENIC_AT(" + std::to_string(n) + ", " + p.get_str() + ")";
      case VerdictKind::monogenic_to_n: return "MONOGENIC_TO_N(" + std::to_string(n) + ")";
      case VerdictKind::unknown: return "UNKNOWN(" + reason + ")";
      default: return std::string(dynmono::to_string(kind));
    }
  }
};

struct ReportBudgets {
  int depth = 12;
  std::size_t max_bits = kDefaultMaxBits;
  FactorBudget factor;
  std::uint64_t witness_max_prime = 200;
};

struct MonogenicityReport {
  QuadParams params;
  int depth = 12;
  bool all_levels = false;  // obstructions cover every n (finite orbit)
  Stability stability = Stability::unknown;
  Irreducibility irreducibility = Irreducibility::unknown;
  std::optional<std::uint64_t> witness_prime;
  TwoClass two_class;
  CriticalOrbit orbit;
  std::vector<OddObstruction> obstructions;
  Verdict verdict;
  std::vector<std::string> notes;
};

inline MonogenicityReport report(const QuadParams& q, const ReportBudgets& budgets = {}) {
  MonogenicityReport r;
  r.params = q;
  r.depth = budgets.depth;
  r.stability = stability_check(q);
  r.two_class = classify_2(q);
  if (r.stability == Stability::certified_stable) {
    r.irreducibility = Irreducibility::certified_stable;
  } else if ((r.witness_prime = irreducibility_witness(q, budgets.depth, budgets.witness_max_prime))) {
    r.irreducibility = Irreducibility::certified_to_n;
  }
  r.orbit = critical_orbit(q, std::max(budgets.depth, 8), budgets.max_bits);
  r.all_levels = r.orbit.is_finite();
  r.obstructions = odd_p_obstructions(r.orbit, r.all_levels ? -1 : budgets.depth, budgets.factor);

  if (!r.two_class.maximal()) {
    r.verdict = {VerdictKind::not_monogenic_at, 1, Integer(2), {}};
    return r;
  }
  std::optional<int> undecided;
  for (const auto& ob : r.obstructions) {
    if (ob.odd_part == 0) {
      r.verdict = {VerdictKind::unknown, ob.n, 0, "f^" + std::to_string(ob.n) + " is reducible"};
      return r;
    }
    if (ob.has_obstruction()) {
      r.verdict = {VerdictKind::not_monogenic_at, ob.n, ob.offending_primes.front(), {}};
      if (undecided) {
        r.notes.push_back("squarefreeness undecided at level " + std::to_string(*undecided) +
                          "; the first failing level may be lower");
      } else if (!ob.complete) {
        r.notes.push_back("factorization at level " + std::to_string(ob.n) +
                          " incomplete; a smaller offending prime may exist");
      }
      return r;
    }
    if (!ob.complete && !undecided) undecided = ob.n;
  }
  if (undecided) {
    r.verdict = {VerdictKind::unknown, *undecided, 0,
                 "squarefree test of the odd part at level " + std::to_string(*undecided) + " exceeded the budget"};
    return r;
  }
  const int covered = r.all_levels ? budgets.depth : static_cast<int>(r.obstructions.size());
  if (covered < budgets.depth) {
    r.verdict = {VerdictKind::unknown, covered, 0, r.orbit.stop_reason};
    return r;
  }
  if (r.all_levels && r.irreducibility == Irreducibility::certified_stable) {
    r.verdict = {VerdictKind::dynamically_monogenic_all_n, 0, 0, {}};
    return r;
  }
  if (r.irreducibility != Irreducibility::unknown) {
    r.verdict = {VerdictKind::monogenic_to_n, budgets.depth, 0, {}};
    if (r.all_levels) r.notes.push_back("orbit is finite and squarefree; stability not certified");
    return r;
  }
  r.verdict = {VerdictKind::unknown, budgets.depth, 0,
               "irreducibility of f^" + std::to_string(budgets.depth) + " not certified"};
  return r;
}

}  // namespace dynmono
