#pragma once

#include <cstdint>
#include <string>

#include "dynmono/arith.hpp"
#include "dynmono/ffpoly.hpp"
#include "dynmono/intpoly.hpp"

namespace dynmono {

inline constexpr int kDedekindMaxDegree = 64;

struct DedekindVerdict {
  std::uint64_t p = 2;
  bool p_maximal = false;
  GFpPoly witness;  // gcd(T, g*, h*) mod p; constant 1 iff p-maximal
};

// f mod p = prod g_i^e_i; g* = prod of lifts of g_i, h* = lift of f mod p / g*,
// T = (g* h* - f) / p.
inline DedekindVerdict dedekind(const MonicIntPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed) {
  if (!is_prime_u64(p)) throw std::invalid_argument("dedekind: p must be prime");
  if (f.degree() > kDedekindMaxDegree) {
    throw degree_cap_exceeded("dedekind: degree " + std::to_string(f.degree()) + " exceeds " +
                              std::to_string(kDedekindMaxDegree));
  }
  const GFpPoly fbar = GFpPoly::reduce(f.poly(), p);
  GFpPoly gbar(p, {1});
  GFpPoly hbar(p, {1});
  for (const auto& fac : factor(fbar, seed)) {
    gbar = gbar * fac.poly;
    for (int k = 1; k < fac.exponent; ++k) hbar = hbar * fac.poly;
  }
  const IntPoly diff = gbar.lift() * hbar.lift() - f.poly();
  const IntPoly T = diff.divexact(Integer(static_cast<unsigned long>(p)));
  const GFpPoly Tbar = GFpPoly::reduce(T, p);
  GFpPoly w = gcd(gcd(Tbar, gbar), hbar);
  return {p, w.is_one(), w};
}

}  // namespace dynmono
