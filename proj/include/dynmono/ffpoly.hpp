#pragma once

// Polynomials over finite fields: GF(p), residue extensions GF(p)[t]/(phi),
// squarefree / distinct-degree / equal-degree factorization.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynmono/arith.hpp"
#include "dynmono/errors.hpp"
#include "dynmono/intpoly.hpp"

namespace dynmono {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

namespace ff {

// Z/pZ for a word-sized prime p < 2^63.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
      throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not a word-sized prime");
    }
  }

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return 1; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Element>(r < 0 ? r + m : r);
  }
  Element from_integer(const Integer& v) const {
    return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return mulmod_u64(a, b, p_); }
  Element inv(Element a) const {
    if (a == 0) throw division_by_zero("PrimeField: inverse of zero");
    return powmod_u64(a, p_ - 2, p_);
  }
  Element pth_root(Element a) const { return a; }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  bool less(Element a, Element b) const { return a < b; }

  template <class Rng>
  Element random(Rng& rng) const {
    return static_cast<Element>(rng() % p_);
  }

  std::string to_string(Element a, std::string_view = "t") const { return std::to_string(a); }

 private:
  std::uint64_t p_;
};

// Dense univariate polynomials over a field, lowest degree first, trimmed.
template <class Field>
class PolyRing {
 public:
  using E = typename Field::Element;
  using Poly = std::vector<E>;

  explicit PolyRing(Field f) : f_(std::move(f)) {}

  const Field& field() const { return f_; }

  void trim(Poly& a) const {
    while (!a.empty() && f_.is_zero(a.back())) a.pop_back();
  }
  Poly normalized(Poly a) const {
    trim(a);
    return a;
  }
  static int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
  bool is_one(const Poly& a) const { return a.size() == 1 && f_.is_one(a[0]); }
  Poly one() const { return {f_.one()}; }
  Poly x() const { return {f_.zero(), f_.one()}; }
  Poly constant(E c) const { return normalized(Poly{std::move(c)}); }

  bool equal(const Poly& a, const Poly& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!f_.equal(a[i], b[i])) return false;
    }
    return true;
  }

  // Canonical order: degree, then coefficients from the top down.
  bool less(const Poly& a, const Poly& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (f_.less(a[i], b[i])) return true;
      if (f_.less(b[i], a[i])) return false;
    }
    return false;
  }

  Poly add(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f_.add(r[i], b[i]);
    trim(r);
    return r;
  }
  Poly sub(const Poly& a, const Poly& b) const {
    Poly r(std::max(a.size(), b.size()), f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f_.sub(r[i], b[i]);
    trim(r);
    return r;
  }
  Poly neg(const Poly& a) const {
    Poly r(a);
    for (auto& v : r) v = f_.neg(v);
    return r;
  }
  Poly scale(const Poly& a, const E& s) const {
    Poly r(a);
    for (auto& v : r) v = f_.mul(v, s);
    trim(r);
    return r;
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (f_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) const {
    if (b.empty()) throw division_by_zero("PolyRing::divrem: zero divisor");
    const int db = degree(b);
    if (degree(a) < db) return {Poly{}, a};
    const E inv_lb = f_.inv(b.back());
    Poly r(a);
    Poly q(static_cast<std::size_t>(degree(a) - db + 1), f_.zero());
    for (int i = degree(a); i >= db; --i) {
      const E t = f_.mul(r[static_cast<std::size_t>(i)], inv_lb);
      q[static_cast<std::size_t>(i - db)] = t;
      if (f_.is_zero(t)) continue;
      for (int j = 0; j <= db; ++j) {
        auto& slot = r[static_cast<std::size_t>(i - db + j)];
        slot = f_.sub(slot, f_.mul(t, b[static_cast<std::size_t>(j)]));
      }
    }
    r.resize(static_cast<std::size_t>(db));
    trim(r);
    trim(q);
    return {std::move(q), std::move(r)};
  }
  Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
  Poly quo(const Poly& a, const Poly& b) const { return divrem(a, b).first; }

  Poly monic(Poly a) const {
    if (a.empty()) return a;
    const E inv = f_.inv(a.back());
    for (auto& v : a) v = f_.mul(v, inv);
    return a;
  }

  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(std::move(a));
  }

  struct Bezout {
    Poly g, s, t;  // s*a + t*b = g, g monic
  };
  Bezout ext_gcd(Poly a, Poly b) const {
    Poly s0 = one(), s1{}, t0{}, t1 = one();
    while (!b.empty()) {
      auto [q, r] = divrem(a, b);
      a = std::move(b);
      b = std::move(r);
      Poly s2 = sub(s0, mul(q, s1));
      Poly t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (a.empty()) return {a, s0, t0};
    const E inv = f_.inv(a.back());
    return {scale(a, inv), scale(s0, inv), scale(t0, inv)};
  }

  Poly derivative(const Poly& a) const {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, f_.zero());
    for (std::size_t i = 1; i < a.size(); ++i) {
      r[i - 1] = f_.mul(a[i], f_.from_int(static_cast<std::int64_t>(i % f_.characteristic())));
    }
    trim(r);
    return r;
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& m) const { return rem(mul(a, b), m); }

  Poly powmod(Poly base, std::uint64_t e, const Poly& m) const {
    Poly r = rem(one(), m);
    base = rem(base, m);
    while (e > 0) {
      if (e & 1) r = mulmod(r, base, m);
      e >>= 1;
      if (e > 0) base = mulmod(base, base, m);
    }
    return r;
  }

  // a^q mod m, q = |Field|.
  Poly frobenius(const Poly& a, const Poly& m) const {
    Poly r = rem(a, m);
    for (unsigned i = 0; i < f_.degree(); ++i) r = powmod(std::move(r), f_.characteristic(), m);
    return r;
  }

  // Inverse of the Frobenius on a polynomial whose derivative vanishes.
  Poly pth_root(const Poly& a) const {
    const std::uint64_t p = f_.characteristic();
    if (a.empty()) return {};
    Poly r(static_cast<std::size_t>(degree(a)) / p + 1, f_.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.pth_root(a[i * p]);
    trim(r);
    return r;
  }

  template <class Rng>
  Poly random_below(int deg_bound, Rng& rng) const {
    Poly r(static_cast<std::size_t>(std::max(deg_bound, 0)), f_.zero());
    for (auto& v : r) v = f_.random(rng);
    trim(r);
    return r;
  }

  std::string to_string(const Poly& a, std::string_view var = "y") const {
    if (a.empty()) return "0";
    std::string out;
    for (int i = degree(a); i >= 0; --i) {
      const E& c = a[static_cast<std::size_t>(i)];
      if (f_.is_zero(c)) continue;
      if (!out.empty()) out += " + ";
      const bool unit = f_.is_one(c);
      std::string cs = f_.to_string(c);
      if (i == 0 || !unit) out += (i > 0 && cs.find(' ') != std::string::npos) ? "(" + cs + ")" : cs;
      if (i >= 1) {
        if (!unit) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  Field f_;
};

template <class F>
using PolyOf = typename PolyRing<F>::Poly;

template <class F>
bool is_squarefree(const PolyRing<F>& R, const PolyOf<F>& f) {
  return R.degree(R.gcd(f, R.derivative(f))) == 0;
}

// Squarefree decomposition in characteristic p; f monic, deg >= 1.
template <class F>
std::vector<std::pair<PolyOf<F>, int>> squarefree_decomposition(const PolyRing<F>& R, const PolyOf<F>& f) {
  using Poly = PolyOf<F>;
  std::vector<std::pair<Poly, int>> out;
  const int p = static_cast<int>(std::min<std::uint64_t>(R.field().characteristic(), 1u << 30));
  Poly g = R.derivative(f);
  if (!g.empty()) {
    Poly c = R.gcd(f, g);
    Poly w = R.quo(f, c);
    int i = 1;
    while (!R.is_one(w)) {
      Poly y = R.gcd(w, c);
      Poly fac = R.quo(w, y);
      if (R.degree(fac) > 0) out.emplace_back(R.monic(std::move(fac)), i);
      ++i;
      w = std::move(y);
      c = R.quo(c, w);
    }
    if (R.degree(c) > 0) {
      for (auto& [h, e] : squarefree_decomposition(R, R.monic(R.pth_root(c)))) out.emplace_back(std::move(h), e * p);
    }
  } else {
    for (auto& [h, e] : squarefree_decomposition(R, R.monic(R.pth_root(f)))) out.emplace_back(std::move(h), e * p);
  }
  return out;
}

// Distinct-degree factorization of a monic squarefree f: pairs (product of all
// irreducible factors of degree k, k).
template <class F>
std::vector<std::pair<PolyOf<F>, int>> distinct_degree(const PolyRing<F>& R, PolyOf<F> f) {
  using Poly = PolyOf<F>;
  std::vector<std::pair<Poly, int>> out;
  Poly h = R.rem(R.x(), f);
  int k = 0;
  while (R.degree(f) >= 2 * (k + 1)) {
    ++k;
    h = R.frobenius(h, f);
    Poly d = R.gcd(R.sub(h, R.x()), f);
    if (R.degree(d) > 0) {
      f = R.quo(f, d);
      h = R.rem(h, f);
      out.emplace_back(std::move(d), k);
    }
  }
  if (R.degree(f) > 0) {
    const int deg = R.degree(f);
    out.emplace_back(std::move(f), deg);
  }
  return out;
}

// Splits a monic product of distinct degree-k irreducibles (Cantor-Zassenhaus;
// trace map in characteristic 2).
template <class F, class Rng>
std::vector<PolyOf<F>> equal_degree(const PolyRing<F>& R, const PolyOf<F>& g, int k, Rng& rng) {
  using Poly = PolyOf<F>;
  if (R.degree(g) <= k) return {g};
  const std::uint64_t p = R.field().characteristic();
  const unsigned steps = static_cast<unsigned>(k) * R.field().degree();
  for (;;) {
    Poly a = R.random_below(R.degree(g), rng);
    if (R.degree(a) < 1) continue;
    Poly probe;
    if (p == 2) {
      Poly t = a;
      probe = a;
      for (unsigned i = 1; i < steps; ++i) {
        t = R.mulmod(t, t, g);
        probe = R.add(probe, t);
      }
    } else {
      Poly t = a;
      Poly prod = a;
      for (unsigned i = 1; i < steps; ++i) {
        t = R.powmod(t, p, g);
        prod = R.mulmod(prod, t, g);
      }
      probe = R.sub(R.powmod(prod, (p - 1) / 2, g), R.one());
    }
    Poly d = R.gcd(probe, g);
    if (R.degree(d) > 0 && R.degree(d) < R.degree(g)) {
      auto left = equal_degree(R, d, k, rng);
      auto right = equal_degree(R, R.monic(R.quo(g, d)), k, rng);
      left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
      return left;
    }
  }
}

// Complete factorization into monic irreducibles with exponents, sorted canonically.
template <class F, class Rng>
std::vector<std::pair<PolyOf<F>, int>> factor(const PolyRing<F>& R, const PolyOf<F>& f, Rng& rng) {
  using Poly = PolyOf<F>;
  if (f.empty()) throw std::invalid_argument("factor: zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (R.degree(f) == 0) return out;
  for (auto& [sqf, e] : squarefree_decomposition(R, R.monic(f))) {
    for (auto& [block, k] : distinct_degree(R, sqf)) {
      for (auto& irr : equal_degree(R, block, k, rng)) out.emplace_back(R.monic(std::move(irr)), e);
    }
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return R.less(a.first, b.first); });
  return out;
}

// Rabin's test.
template <class F>
bool is_irreducible(const PolyRing<F>& R, const PolyOf<F>& f_in) {
  using Poly = PolyOf<F>;
  const int n = R.degree(f_in);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly f = R.monic(f_in);
  std::vector<int> prime_divisors;
  for (int r = 2, m = n; m > 1; ++r) {
    if (m % r == 0) {
      prime_divisors.push_back(r);
      while (m % r == 0) m /= r;
    }
  }
  std::vector<Poly> powers{R.rem(R.x(), f)};  // powers[k] = x^(q^k) mod f
  for (int k = 1; k <= n; ++k) powers.push_back(R.frobenius(powers.back(), f));
  if (!R.equal(powers[static_cast<std::size_t>(n)], R.rem(R.x(), f))) return false;
  for (int r : prime_divisors) {
    Poly d = R.gcd(R.sub(powers[static_cast<std::size_t>(n / r)], R.x()), f);
    if (R.degree(d) != 0) return false;
  }
  return true;
}

// Degrees of the irreducible factors of a squarefree polynomial, ascending.
template <class F>
std::vector<int> factor_degrees_squarefree(const PolyRing<F>& R, const PolyOf<F>& f) {
  std::vector<int> out;
  for (auto& [block, k] : distinct_degree(R, R.monic(f))) {
    for (int i = 0; i < R.degree(block) / k; ++i) out.push_back(k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// GF(p)[t]/(modulus) for a monic irreducible modulus.
class ExtField {
 public:
  using Element = std::vector<std::uint64_t>;

  ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus) : ring_(PrimeField(p)), modulus_(std::move(modulus)) {
    for (auto& v : modulus_) v %= p;
    ring_.trim(modulus_);
    if (modulus_.empty() || modulus_.back() != 1 || !is_irreducible(ring_, modulus_)) {
      throw std::invalid_argument("ExtField: modulus must be monic irreducible over GF(" + std::to_string(p) + ")");
    }
  }

  std::uint64_t characteristic() const { return ring_.field().characteristic(); }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const Element& modulus() const { return modulus_; }
  const PolyRing<PrimeField>& base_ring() const { return ring_; }

  Element zero() const { return {}; }
  Element one() const { return {1}; }
  Element from_int(std::int64_t v) const { return ring_.constant(ring_.field().from_int(v)); }
  Element reduce(Element a) const {
    for (auto& v : a) v %= characteristic();
    ring_.trim(a);
    return ring_.rem(a, modulus_);
  }

  Element add(const Element& a, const Element& b) const { return ring_.add(a, b); }
  Element sub(const Element& a, const Element& b) const { return ring_.sub(a, b); }
  Element neg(const Element& a) const { return ring_.neg(a); }
  Element mul(const Element& a, const Element& b) const { return ring_.mulmod(a, b, modulus_); }
  Element inv(const Element& a) const {
    if (a.empty()) throw division_by_zero("ExtField: inverse of zero");
    auto bz = ring_.ext_gcd(a, modulus_);
    return ring_.rem(bz.s, modulus_);
  }
  Element pth_root(const Element& a) const {
    Element r = a;
    for (unsigned i = 1; i < degree(); ++i) r = ring_.powmod(r, characteristic(), modulus_);
    return r;
  }

  bool is_zero(const Element& a) const { return a.empty(); }
  bool is_one(const Element& a) const { return a.size() == 1 && a[0] == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool less(const Element& a, const Element& b) const { return ring_.less(a, b); }

  template <class Rng>
  Element random(Rng& rng) const {
    return ring_.random_below(static_cast<int>(degree()), rng);
  }

  std::string to_string(const Element& a, std::string_view var = "t") const { return ring_.to_string(a, var); }

 private:
  PolyRing<PrimeField> ring_;
  Element modulus_;
};

}  // namespace ff

// Polynomial over GF(p), p a word-sized prime.
class GFpPoly {
 public:
  GFpPoly() : p_(2) {}
  GFpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) v %= p_;
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  static GFpPoly reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c;
    c.reserve(f.coeffs().size());
    for (const auto& v : f.coeffs()) c.push_back(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)));
    return GFpPoly(p, std::move(c));
  }

  std::uint64_t modulus() const { return p_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  // Representative with coefficients in [0, p).
  IntPoly lift() const {
    std::vector<Integer> c;
    c.reserve(c_.size());
    for (auto v : c_) c.emplace_back(static_cast<unsigned long>(v));
    return IntPoly(std::move(c));
  }

  ff::PolyRing<ff::PrimeField> ring() const { return ff::PolyRing<ff::PrimeField>(ff::PrimeField(p_)); }

  std::string to_string(std::string_view var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || a != 1) out += std::to_string(a);
      if (i >= 1) {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

  friend bool operator==(const GFpPoly& a, const GFpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const GFpPoly& a, const GFpPoly& b) { return a.ring().less(a.c_, b.c_); }

  friend GFpPoly operator+(const GFpPoly& a, const GFpPoly& b) {
    check_same(a, b);
    return GFpPoly(a.p_, a.ring().add(a.c_, b.c_));
  }
  friend GFpPoly operator-(const GFpPoly& a, const GFpPoly& b) {
    check_same(a, b);
    return GFpPoly(a.p_, a.ring().sub(a.c_, b.c_));
  }
  friend GFpPoly operator*(const GFpPoly& a, const GFpPoly& b) {
    check_same(a, b);
    return GFpPoly(a.p_, a.ring().mul(a.c_, b.c_));
  }
  friend std::pair<GFpPoly, GFpPoly> divrem(const GFpPoly& a, const GFpPoly& b) {
    check_same(a, b);
    auto [q, r] = a.ring().divrem(a.c_, b.c_);
    return {GFpPoly(a.p_, std::move(q)), GFpPoly(a.p_, std::move(r))};
  }
  friend GFpPoly gcd(const GFpPoly& a, const GFpPoly& b) {
    check_same(a, b);
    return GFpPoly(a.p_, a.ring().gcd(a.c_, b.c_));
  }
  friend GFpPoly derivative(const GFpPoly& a) { return GFpPoly(a.p_, a.ring().derivative(a.c_)); }

 private:
  static void check_same(const GFpPoly& a, const GFpPoly& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("GFpPoly: mismatched moduli");
  }

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

struct GFpFactor {
  GFpPoly poly;
  int exponent;
};

inline std::vector<GFpFactor> factor(const GFpPoly& g, std::mt19937_64& rng) {
  if (g.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  auto R = g.ring();
  std::vector<GFpFactor> out;
  for (auto& [poly, e] : ff::factor(R, g.coeffs(), rng)) out.push_back({GFpPoly(g.modulus(), std::move(poly)), e});
  return out;
}

inline std::vector<GFpFactor> factor(const GFpPoly& g, std::uint64_t seed = kDefaultSeed) {
  std::mt19937_64 rng(seed);
  return factor(g, rng);
}

inline bool is_irreducible(const GFpPoly& g) { return ff::is_irreducible(g.ring(), g.coeffs()); }

// Element of GF(p)[t]/(phi).
class FqElem {
 public:
  FqElem(std::shared_ptr<const ff::ExtField> field, ff::ExtField::Element rep)
      : field_(std::move(field)), rep_(field_->reduce(std::move(rep))) {}

  const ff::ExtField& field() const { return *field_; }
  const std::shared_ptr<const ff::ExtField>& field_ptr() const { return field_; }
  const ff::ExtField::Element& rep() const { return rep_; }
  bool is_zero() const { return rep_.empty(); }

  FqElem inverse() const { return {field_, field_->inv(rep_)}; }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return same_field(a, b) && a.rep_ == b.rep_;
  }
  friend FqElem operator+(const FqElem& a, const FqElem& b) {
    check(a, b);
    return {a.field_, a.field_->add(a.rep_, b.rep_)};
  }
  friend FqElem operator-(const FqElem& a, const FqElem& b) {
    check(a, b);
    return {a.field_, a.field_->sub(a.rep_, b.rep_)};
  }
  friend FqElem operator*(const FqElem& a, const FqElem& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.rep_, b.rep_)};
  }
  friend FqElem operator/(const FqElem& a, const FqElem& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.rep_, a.field_->inv(b.rep_))};
  }

  std::string to_string(std::string_view var = "t") const { return field_->to_string(rep_, var); }

 private:
  static bool same_field(const FqElem& a, const FqElem& b) {
    return a.field_ == b.field_ || (a.field_->characteristic() == b.field_->characteristic() &&
                                    a.field_->modulus() == b.field_->modulus());
  }
  static void check(const FqElem& a, const FqElem& b) {
    if (!same_field(a, b)) throw std::invalid_argument("FqElem: operands live in different fields");
  }

  std::shared_ptr<const ff::ExtField> field_;
  ff::ExtField::Element rep_;
};

}  // namespace dynmono
