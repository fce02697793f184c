#pragma once

// Integer factorization for squarefree certificates: trial division, perfect
// power detection, Miller-Rabin and Pollard-Brent rho under an explicit budget.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dynmono/arith.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/intpoly.hpp"

namespace dynmono {

struct FactorBudget {
  std::uint32_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = 200'000;  // per composite cofactor
  std::size_t max_rho_bits = 192;          // larger cofactors are left unresolved

  FactorBudget scaled(double factor) const {
    FactorBudget b = *this;
    b.rho_iterations = static_cast<std::uint64_t>(static_cast<double>(rho_iterations) * factor);
    b.max_rho_bits = static_cast<std::size_t>(static_cast<double>(max_rho_bits) * std::max(1.0, factor));
    return b;
  }
};

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

struct IntegerFactorization {
  Integer n;                        // |input|
  std::vector<PrimePower> factors;  // ascending primes
  std::vector<Integer> unresolved;  // composite cofactors (not perfect powers) left unsplit

  bool complete() const { return unresolved.empty(); }
};

namespace detail {

inline const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(1'000'000);
  return primes;
}

inline bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, const Integer& a) {
  Integer x;
  const Integer n1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic below 3.3e24 (first twelve prime bases); above that eight more
// bases drawn from a fixed-seed generator are added.
inline bool is_probable_prime(const Integer& n_in) {
  const Integer n = abs(n_in);
  if (n < 2) return false;
  static constexpr unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (unsigned long p : kBases) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
  }
  Integer d = n - 1;
  const unsigned long s = v2(d);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned long a : kBases) {
    if (!detail::miller_rabin_round(n, d, s, Integer(a))) return false;
  }
  static const Integer kDeterministicLimit("3317044064679887385961981");
  if (n < kDeterministicLimit) return true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  const Integer span = n - 3;
  for (int i = 0; i < 8; ++i) {
    const std::uint64_t word = rng();
    Integer a;
    mpz_import(a.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
    a = a % span + 2;
    if (!detail::miller_rabin_round(n, d, s, a)) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; nullopt when the budget runs out.
inline std::optional<Integer> pollard_brent(const Integer& n, std::uint64_t budget, std::uint64_t seed = 1) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  std::mt19937_64 rng(seed);
  std::uint64_t spent = 0;
  while (spent < budget) {
    const Integer c = Integer(static_cast<unsigned long>(rng() % 1000003 + 1));
    Integer y = Integer(static_cast<unsigned long>(rng() % 1000003 + 2)), x, ys, q = 1, g = 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          Integer diff = abs(x - y);
          q = q * diff % n;
        }
        spent += lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1 && spent < budget);
      r *= 2;
    } while (g == 1 && spent < budget);
    if (g == n) {
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        ++spent;
      } while (g == 1 && spent < budget);
    }
    if (g != 1 && g != n) return g;
  }
  return std::nullopt;
}

inline IntegerFactorization factor_integer(const Integer& n_in, const FactorBudget& budget = {}) {
  if (n_in == 0) throw zero_input("factor_integer: zero has no factorization");
  IntegerFactorization out;
  out.n = abs(n_in);
  std::map<Integer, unsigned> found;
  Integer m = out.n;

  const auto& primes = detail::trial_primes();
  for (std::uint32_t p : primes) {
    if (p > budget.trial_bound) break;
    if (m == 1) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      found[Integer(p)] += e;
    }
    // Once p^2 > m the remaining cofactor is 1 or prime.
    if (Integer(p) * p > m) break;
  }

  const Integer bound = Integer(budget.trial_bound);
  std::vector<std::pair<Integer, unsigned>> stack;
  if (m > 1) {
    if (m < bound * bound) {
      found[m] += 1;
    } else {
      stack.emplace_back(m, 1);
    }
  }
  while (!stack.empty()) {
    auto [v, mult] = stack.back();
    stack.pop_back();
    if (v == 1) continue;
    if (is_probable_prime(v)) {
      found[v] += mult;
      continue;
    }
    if (mpz_perfect_power_p(v.get_mpz_t())) {
      const std::size_t bits = bit_length(v);
      bool split = false;
      for (unsigned long k = 2; k <= bits && !split; ++k) {
        Integer root;
        if (mpz_root(root.get_mpz_t(), v.get_mpz_t(), k) != 0) {
          stack.emplace_back(root, mult * static_cast<unsigned>(k));
          split = true;
        }
      }
      if (split) continue;
    }
    std::optional<Integer> d;
    if (bit_length(v) <= budget.max_rho_bits) d = pollard_brent(v, budget.rho_iterations);
    if (!d) {
      for (unsigned i = 0; i < mult; ++i) out.unresolved.push_back(v);
      continue;
    }
    Integer other = v / *d;
    stack.emplace_back(*d, mult);
    stack.emplace_back(other, mult);
  }
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  std::sort(out.unresolved.begin(), out.unresolved.end());
  return out;
}

struct SquarefreeVerdict {
  Integer n;
  std::optional<bool> squarefree;  // nullopt: undecided within budget
  IntegerFactorization certificate;
  std::string note;

  std::vector<Integer> repeated_primes() const {
    std::vector<Integer> out;
    for (const auto& f : certificate.factors) {
      if (f.exponent >= 2) out.push_back(f.prime);
    }
    return out;
  }
};

// Sign is ignored: squarefree(n) == squarefree(|n|).
inline SquarefreeVerdict squarefree(const Integer& n, const FactorBudget& budget = {}) {
  if (n == 0) throw zero_input("squarefree: zero input");
  SquarefreeVerdict v;
  v.n = n;
  v.certificate = factor_integer(n, budget);
  if (!v.repeated_primes().empty()) {
    v.squarefree = false;
  } else if (v.certificate.complete()) {
    v.squarefree = true;
  } else {
    std::size_t bits = 0;
    for (const auto& u : v.certificate.unresolved) bits = std::max(bits, bit_length(u));
    v.note = "unfactored composite cofactor of " + std::to_string(bits) + " bits";
  }
  return v;
}

}  // namespace dynmono
