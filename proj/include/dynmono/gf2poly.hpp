#pragma once

// Bit-packed polynomials over GF(2): bit i of the word array is the
// coefficient of x^i.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynmono/errors.hpp"
#include "dynmono/ffpoly.hpp"
#include "dynmono/intpoly.hpp"

namespace dynmono {

inline constexpr std::size_t kGf2DegreeCap = std::size_t{1} << 16;

namespace detail {

inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
  lo = 0;
  hi = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    lo ^= a << i;
    if (i != 0) hi ^= a >> (64 - i);
    b &= b - 1;
  }
}

inline constexpr std::array<std::uint16_t, 256> make_spread_table() {
  std::array<std::uint16_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    std::uint16_t r = 0;
    for (unsigned b = 0; b < 8; ++b) {
      if (v & (1u << b)) r |= static_cast<std::uint16_t>(1u << (2 * b));
    }
    t[v] = r;
  }
  return t;
}

inline constexpr auto kSpread = make_spread_table();

inline std::uint64_t spread32(std::uint32_t v) {
  std::uint64_t r = 0;
  for (int byte = 0; byte < 4; ++byte) {
    r |= static_cast<std::uint64_t>(kSpread[(v >> (8 * byte)) & 0xffu]) << (16 * byte);
  }
  return r;
}

}  // namespace detail

class GF2Poly {
 public:
  GF2Poly() = default;
  explicit GF2Poly(std::vector<std::uint64_t> words) : w_(std::move(words)) { trim(); }

  static GF2Poly from_exponents(std::initializer_list<unsigned> exps) {
    GF2Poly r;
    for (unsigned e : exps) r.flip(e);
    return r;
  }
  static GF2Poly monomial(std::size_t k) {
    GF2Poly r;
    r.flip(k);
    return r;
  }
  static GF2Poly one() { return monomial(0); }
  static GF2Poly x() { return monomial(1); }
  static GF2Poly reduce(const IntPoly& f) {
    GF2Poly r;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      if (mpz_odd_p(f.coeffs()[i].get_mpz_t())) r.flip(i);
    }
    return r;
  }
  static GF2Poly from_gfp(const GFpPoly& g) {
    if (g.modulus() != 2) throw std::invalid_argument("GF2Poly::from_gfp: modulus is not 2");
    GF2Poly r;
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) {
      if (g.coeffs()[i]) r.flip(i);
    }
    return r;
  }

  int degree() const {
    if (w_.empty()) return -1;
    return static_cast<int>(64 * (w_.size() - 1)) + 63 - std::countl_zero(w_.back());
  }
  bool is_zero() const { return w_.empty(); }
  bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
  bool coeff(std::size_t i) const { return i / 64 < w_.size() && ((w_[i / 64] >> (i % 64)) & 1u); }
  const std::vector<std::uint64_t>& words() const { return w_; }
  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto v : w_) n += static_cast<std::size_t>(std::popcount(v));
    return n;
  }

  void flip(std::size_t i) {
    if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
    w_[i / 64] ^= std::uint64_t{1} << (i % 64);
    trim();
  }

  GFpPoly to_gfp() const {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(degree() + 1));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) ? 1 : 0;
    return GFpPoly(2, std::move(c));
  }

  std::string to_string(std::string_view var = "x") const {
    if (w_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (!coeff(static_cast<std::size_t>(i))) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += "1";
      } else {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend bool operator==(const GF2Poly&, const GF2Poly&) = default;

  // Degree first, then the coefficient vector read as a binary number.
  friend bool operator<(const GF2Poly& a, const GF2Poly& b) {
    if (a.w_.size() != b.w_.size()) return a.w_.size() < b.w_.size();
    for (std::size_t i = a.w_.size(); i-- > 0;) {
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    }
    return false;
  }

  friend GF2Poly operator+(const GF2Poly& a, const GF2Poly& b) {
    std::vector<std::uint64_t> r(std::max(a.w_.size(), b.w_.size()), 0);
    for (std::size_t i = 0; i < a.w_.size(); ++i) r[i] ^= a.w_[i];
    for (std::size_t i = 0; i < b.w_.size(); ++i) r[i] ^= b.w_[i];
    return GF2Poly(std::move(r));
  }

  friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::uint64_t> r(a.w_.size() + b.w_.size(), 0);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      if (a.w_[i] == 0) continue;
      for (std::size_t j = 0; j < b.w_.size(); ++j) {
        std::uint64_t lo, hi;
        detail::clmul64(a.w_[i], b.w_[j], lo, hi);
        r[i + j] ^= lo;
        r[i + j + 1] ^= hi;
      }
    }
    return GF2Poly(std::move(r));
  }

  // Squaring is additive in characteristic 2: spread the bits.
  friend GF2Poly square(const GF2Poly& a) {
    std::vector<std::uint64_t> r(2 * a.w_.size(), 0);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      r[2 * i] = detail::spread32(static_cast<std::uint32_t>(a.w_[i]));
      r[2 * i + 1] = detail::spread32(static_cast<std::uint32_t>(a.w_[i] >> 32));
    }
    return GF2Poly(std::move(r));
  }

  friend std::pair<GF2Poly, GF2Poly> divrem(const GF2Poly& a, const GF2Poly& m) {
    if (m.is_zero()) throw division_by_zero("GF2Poly::divrem: zero divisor");
    const int dm = m.degree();
    GF2Poly r = a;
    GF2Poly q;
    for (int i = r.degree(); i >= dm; --i) {
      if (!r.coeff(static_cast<std::size_t>(i))) continue;
      const auto shift = static_cast<std::size_t>(i - dm);
      r.xor_shifted(m, shift);
      q.set_bit_unchecked(shift);
    }
    r.trim();
    q.trim();
    return {std::move(q), std::move(r)};
  }

  friend GF2Poly rem(const GF2Poly& a, const GF2Poly& m) {
    if (m.is_zero()) throw division_by_zero("GF2Poly::rem: zero divisor");
    const int dm = m.degree();
    GF2Poly r = a;
    for (int i = r.degree(); i >= dm; --i) {
      if (r.coeff(static_cast<std::size_t>(i))) r.xor_shifted(m, static_cast<std::size_t>(i - dm));
    }
    r.trim();
    return r;
  }

  friend GF2Poly gcd(GF2Poly a, GF2Poly b) {
    while (!b.is_zero()) {
      GF2Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a;
  }

  friend GF2Poly derivative(const GF2Poly& a) {
    GF2Poly r;
    for (int i = 1; i <= a.degree(); i += 2) {
      if (a.coeff(static_cast<std::size_t>(i))) r.set_bit_unchecked(static_cast<std::size_t>(i - 1));
    }
    r.trim();
    return r;
  }

  // Square root of a polynomial whose odd coefficients vanish.
  friend GF2Poly sqrt_even(const GF2Poly& a) {
    GF2Poly r;
    for (int i = 0; i <= a.degree(); i += 2) {
      if (a.coeff(static_cast<std::size_t>(i))) r.set_bit_unchecked(static_cast<std::size_t>(i / 2));
    }
    r.trim();
    return r;
  }

  template <class Rng>
  static GF2Poly random_below(int deg_bound, Rng& rng) {
    if (deg_bound <= 0) return {};
    const auto n = static_cast<std::size_t>(deg_bound);
    std::vector<std::uint64_t> w((n + 63) / 64);
    for (auto& v : w) v = rng();
    if (n % 64 != 0) w.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    return GF2Poly(std::move(w));
  }

 private:
  void trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
  }
  void set_bit_unchecked(std::size_t i) {
    if (i / 64 >= w_.size()) w_.resize(i / 64 + 1, 0);
    w_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  // this ^= m * x^shift, without trimming.
  void xor_shifted(const GF2Poly& m, std::size_t shift) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    const std::size_t need = ws + m.w_.size() + 1;
    if (w_.size() < need) w_.resize(need, 0);
    for (std::size_t j = 0; j < m.w_.size(); ++j) {
      w_[ws + j] ^= m.w_[j] << bs;
      if (bs != 0) w_[ws + j + 1] ^= m.w_[j] >> (64 - bs);
    }
  }

  std::vector<std::uint64_t> w_;
};

inline GF2Poly mulmod(const GF2Poly& a, const GF2Poly& b, const GF2Poly& m) { return rem(a * b, m); }

// outer(inner(x)) by Horner.
inline GF2Poly compose(const GF2Poly& outer, const GF2Poly& inner) {
  GF2Poly acc;
  for (int i = outer.degree(); i >= 0; --i) {
    acc = acc * inner;
    if (outer.coeff(static_cast<std::size_t>(i))) acc = acc + GF2Poly::one();
  }
  return acc;
}

// n-fold self-composition. Quadratic maps use linearity of squaring, so each
// step is linear in the current degree.
inline GF2Poly gf2_iterate(const GF2Poly& p, int n, std::size_t degree_cap = kGf2DegreeCap) {
  if (n < 1) throw std::invalid_argument("gf2_iterate: n must be >= 1");
  const int d = std::max(p.degree(), 0);
  std::size_t deg = 1;
  for (int k = 0; k < n && d > 1; ++k) {
    deg *= static_cast<std::size_t>(d);
    if (deg > degree_cap) {
      throw degree_cap_exceeded("gf2_iterate: degree " + std::to_string(d) + "^" + std::to_string(n) +
                                " exceeds cap " + std::to_string(degree_cap));
    }
  }
  GF2Poly cur = p;
  for (int k = 1; k < n; ++k) {
    if (p.degree() == 2) {
      GF2Poly next = square(cur);
      if (p.coeff(1)) next = next + cur;
      if (p.coeff(0)) next = next + GF2Poly::one();
      cur = std::move(next);
    } else {
      cur = compose(p, cur);
    }
  }
  return cur;
}

struct GF2Factor {
  GF2Poly poly;
  int exponent;
};

namespace detail {

inline std::vector<std::pair<GF2Poly, int>> gf2_squarefree(const GF2Poly& f) {
  std::vector<std::pair<GF2Poly, int>> out;
  GF2Poly g = derivative(f);
  if (!g.is_zero()) {
    GF2Poly c = gcd(f, g);
    GF2Poly w = divrem(f, c).first;
    int i = 1;
    while (!w.is_one()) {
      GF2Poly y = gcd(w, c);
      GF2Poly fac = divrem(w, y).first;
      if (fac.degree() > 0) out.emplace_back(std::move(fac), i);
      ++i;
      w = std::move(y);
      c = divrem(c, w).first;
    }
    if (c.degree() > 0) {
      for (auto& [h, e] : gf2_squarefree(sqrt_even(c))) out.emplace_back(std::move(h), 2 * e);
    }
  } else {
    for (auto& [h, e] : gf2_squarefree(sqrt_even(f))) out.emplace_back(std::move(h), 2 * e);
  }
  return out;
}

inline std::vector<std::pair<GF2Poly, int>> gf2_distinct_degree(GF2Poly f) {
  std::vector<std::pair<GF2Poly, int>> out;
  GF2Poly h = rem(GF2Poly::x(), f);
  int k = 0;
  while (f.degree() >= 2 * (k + 1)) {
    ++k;
    h = rem(square(h), f);
    GF2Poly d = gcd(h + GF2Poly::x(), f);
    if (d.degree() > 0) {
      f = divrem(f, d).first;
      h = rem(h, f);
      out.emplace_back(std::move(d), k);
    }
  }
  if (f.degree() > 0) {
    const int deg = f.degree();
    out.emplace_back(std::move(f), deg);
  }
  return out;
}

template <class Rng>
std::vector<GF2Poly> gf2_equal_degree(const GF2Poly& g, int k, Rng& rng) {
  if (g.degree() <= k) return {g};
  for (;;) {
    GF2Poly a = GF2Poly::random_below(g.degree(), rng);
    if (a.degree() < 1) continue;
    GF2Poly t = a;
    GF2Poly trace = a;
    for (int i = 1; i < k; ++i) {
      t = rem(square(t), g);
      trace = trace + t;
    }
    GF2Poly d = gcd(trace, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      auto left = gf2_equal_degree(d, k, rng);
      auto right = gf2_equal_degree(divrem(g, d).first, k, rng);
      left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
      return left;
    }
  }
}

}  // namespace detail

inline std::vector<GF2Factor> factor(const GF2Poly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  std::vector<GF2Factor> out;
  if (f.degree() == 0) return out;
  for (auto& [sqf, e] : detail::gf2_squarefree(f)) {
    for (auto& [block, k] : detail::gf2_distinct_degree(sqf)) {
      for (auto& irr : detail::gf2_equal_degree(block, k, rng)) out.push_back({std::move(irr), e});
    }
  }
  std::sort(out.begin(), out.end(), [](const GF2Factor& a, const GF2Factor& b) { return a.poly < b.poly; });
  return out;
}

inline std::vector<GF2Factor> factor(const GF2Poly& f, std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  return factor(f, rng);
}

inline bool is_irreducible(const GF2Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  std::vector<GF2Poly> powers{rem(GF2Poly::x(), f)};
  for (int k = 1; k <= n; ++k) powers.push_back(rem(square(powers.back()), f));
  if (!(powers[static_cast<std::size_t>(n)] == rem(GF2Poly::x(), f))) return false;
  for (int r = 2, m = n; m > 1; ++r) {
    if (m % r != 0) continue;
    while (m % r == 0) m /= r;
    if (gcd(powers[static_cast<std::size_t>(n / r)] + GF2Poly::x(), f).degree() != 0) return false;
  }
  return true;
}

}  // namespace dynmono
