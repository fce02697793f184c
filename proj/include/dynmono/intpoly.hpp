#pragma once

// Exact polynomials over Z, monic iterates of quadratics, dyadic rationals.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynmono/errors.hpp"

namespace dynmono {

using Integer = mpz_class;

inline constexpr std::size_t kDefaultMaxBits = 1'000'000;

inline std::size_t bit_length(const Integer& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Largest k with 2^k | v; v must be nonzero.
inline unsigned long v2(const Integer& v) {
  return mpz_scan1(v.get_mpz_t(), 0);
}

// v / 2^v2(v), sign kept. odd_part(0) == 0.
inline Integer odd_part(const Integer& v) {
  if (v == 0) return 0;
  Integer r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), v2(v));
  return r;
}

// Non-negative residue of v modulo m (m > 0).
inline unsigned long mod_ui(const Integer& v, unsigned long m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

inline Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_perfect_square(const Integer& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

// Dense polynomial over Z, lowest degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPoly constant(const Integer& v) { return IntPoly(std::vector<Integer>{v}); }
  static IntPoly x() { return IntPoly{0, 1}; }
  static IntPoly monomial(std::size_t k, const Integer& coeff = 1) {
    std::vector<Integer> c(k + 1);
    c[k] = coeff;
    return IntPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  std::size_t max_coeff_bits() const {
    std::size_t m = 0;
    for (const auto& v : c_) m = std::max(m, bit_length(v));
    return m;
  }

  Integer eval(const Integer& t) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
  }
  friend IntPoly operator-(const IntPoly& a) {
    std::vector<Integer> r(a.c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return IntPoly(std::move(r));
  }
  friend IntPoly operator*(const Integer& s, const IntPoly& a) {
    if (s == 0) return {};
    std::vector<Integer> r(a.c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
  }

  // Exact division of every coefficient; throws if some coefficient is not divisible.
  IntPoly divexact(const Integer& d) const {
    std::vector<Integer> r(c_);
    for (auto& v : r) {
      if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
        throw std::domain_error("IntPoly::divexact: coefficient not divisible");
      }
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }
    return IntPoly(std::move(r));
  }

  std::string to_string(std::string_view var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      Integer mag = abs(a);
      if (out.empty()) {
        if (a < 0) out += "-";
      } else {
        out += a < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.get_str();
      if (i >= 1) {
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Integer> c_;
};

inline IntPoly derivative(const IntPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> r(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) r[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& v : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

// Division by a monic divisor: a = q*m + r with deg r < deg m.
inline std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& m) {
  if (!m.is_monic()) throw std::invalid_argument("divrem_monic: divisor must be monic");
  const int dm = m.degree();
  if (a.degree() < dm) return {IntPoly{}, a};
  std::vector<Integer> r(a.coeffs());
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - dm + 1));
  for (int i = a.degree(); i >= dm; --i) {
    const Integer t = r[static_cast<std::size_t>(i)];
    if (t == 0) continue;
    q[static_cast<std::size_t>(i - dm)] = t;
    for (int j = 0; j <= dm; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - dm + j)].get_mpz_t(), t.get_mpz_t(),
                 m.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(dm));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

// lc(b)^(deg a - deg b + 1) * a mod b.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder: zero divisor");
  const int db = b.degree();
  if (a.degree() < db) return a;
  int slack = a.degree() - db + 1;
  std::vector<Integer> r(a.coeffs());
  const Integer& lb = b.leading();
  int dr = a.degree();
  while (dr >= db) {
    const Integer t = r[static_cast<std::size_t>(dr)];
    for (auto& v : r) v *= lb;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(r[static_cast<std::size_t>(dr - db + j)].get_mpz_t(), t.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    --slack;
    r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) {
      r.pop_back();
      --dr;
    }
  }
  IntPoly rem(std::move(r));
  if (slack > 0) rem = pow_int(lb, static_cast<unsigned long>(slack)) * rem;
  return rem;
}

// Resultant by the subresultant PRS (Collins/Brown, Cohen Alg. 3.3.7).
inline Integer resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Integer ca = content(a), cb = content(b);
  a = a.divexact(ca);
  b = b.divexact(cb);
  Integer g = 1, h = 1;
  int s = 1;
  Integer t = pow_int(ca, static_cast<unsigned long>(b.degree())) *
              pow_int(cb, static_cast<unsigned long>(a.degree()));
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  while (b.degree() > 0) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    b = r.divexact(g * pow_int(h, static_cast<unsigned long>(delta)));
    g = a.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = pow_int(g, static_cast<unsigned long>(delta));
      Integer den = pow_int(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  // b is a nonzero constant here
  const int da = a.degree();
  Integer num = pow_int(b.leading(), static_cast<unsigned long>(da));
  if (da >= 1) {
    Integer den = pow_int(h, static_cast<unsigned long>(da - 1));
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    h = num;
  }
  return s * t * h;
}

// Monic polynomial over Z. The leading 1 is part of the stored polynomial but
// lower_coeffs() exposes exactly deg f coefficients.
class MonicIntPoly {
 public:
  MonicIntPoly() : p_(IntPoly{1}) {}
  explicit MonicIntPoly(IntPoly p) : p_(std::move(p)) {
    if (!p_.is_monic()) throw std::invalid_argument("MonicIntPoly: polynomial is not monic");
  }
  static MonicIntPoly from_lower(std::vector<Integer> lower) {
    lower.emplace_back(1);
    return MonicIntPoly(IntPoly(std::move(lower)));
  }
  static MonicIntPoly x() { return MonicIntPoly(IntPoly::x()); }

  int degree() const { return p_.degree(); }
  std::span<const Integer> lower_coeffs() const {
    return {p_.coeffs().data(), static_cast<std::size_t>(p_.degree())};
  }
  const IntPoly& poly() const { return p_; }
  Integer coeff(std::size_t i) const { return p_.coeff(i); }
  std::string to_string(std::string_view var = "x") const { return p_.to_string(var); }

  friend bool operator==(const MonicIntPoly& a, const MonicIntPoly& b) { return a.p_ == b.p_; }

 private:
  IntPoly p_;
};

// f(g(x)) by Horner.
inline IntPoly compose(const IntPoly& f, const IntPoly& g) {
  IntPoly acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    acc = acc * g + IntPoly::constant(*it);
  }
  return acc;
}

inline MonicIntPoly compose(const MonicIntPoly& f, const MonicIntPoly& g) {
  return MonicIntPoly(compose(f.poly(), g.poly()));
}

// f(x + s)
inline IntPoly taylor_shift(const IntPoly& f, const Integer& s) {
  return compose(f, IntPoly(std::vector<Integer>{s, 1}));
}

inline Integer discriminant(const MonicIntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  const long d = f.degree();
  Integer r = resultant(f.poly(), derivative(f.poly()));
  return (d * (d - 1) / 2) % 2 == 0 ? r : Integer(-r);
}

// Exact rational num / 2^exp2 kept canonical: exp2 == 0 or num odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(const Integer& num, unsigned long exp2 = 0) : num_(num), exp2_(exp2) { canonicalize(); }
  Dyadic(long v) : num_(v) {}

  const Integer& num() const { return num_; }
  unsigned long exp2() const { return exp2_; }
  bool is_integer() const { return exp2_ == 0; }
  bool is_zero() const { return num_ == 0; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp2_ == b.exp2_ && a.num_ == b.num_;
  }
  // Structural order; only used for containers.
  friend bool structural_less(const Dyadic& a, const Dyadic& b) {
    if (a.exp2_ != b.exp2_) return a.exp2_ < b.exp2_;
    return a.num_ < b.num_;
  }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const unsigned long e = std::max(a.exp2_, b.exp2_);
    Integer x, y;
    mpz_mul_2exp(x.get_mpz_t(), a.num_.get_mpz_t(), e - a.exp2_);
    mpz_mul_2exp(y.get_mpz_t(), b.num_.get_mpz_t(), e - b.exp2_);
    return Dyadic(x + y, e);
  }
  friend Dyadic operator-(const Dyadic& a) {
    Dyadic r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.num_ * b.num_, a.exp2_ + b.exp2_);
  }

  // |value| > bound
  bool abs_greater(const Integer& bound) const {
    Integer scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), bound.get_mpz_t(), exp2_);
    return abs(num_) > scaled;
  }

  std::string to_string() const {
    if (exp2_ == 0) return num_.get_str();
    return num_.get_str() + "/2^" + std::to_string(exp2_);
  }

 private:
  void canonicalize() {
    if (num_ == 0) {
      exp2_ = 0;
      return;
    }
    if (exp2_ == 0) return;
    const unsigned long k = std::min(exp2_, v2(num_));
    if (k > 0) {
      mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), k);
      exp2_ -= k;
    }
  }

  Integer num_ = 0;
  unsigned long exp2_ = 0;
};

inline Dyadic eval_dyadic(const IntPoly& f, const Dyadic& t) {
  Dyadic acc;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = acc * t + Dyadic(*it);
  return acc;
}

inline Dyadic eval_dyadic(const MonicIntPoly& f, const Dyadic& t) { return eval_dyadic(f.poly(), t); }

// f(x) = x^2 + b x + c.
struct QuadParams {
  Integer b;
  Integer c;

  Integer disc() const { return b * b - 4 * c; }
  MonicIntPoly poly() const { return MonicIntPoly::from_lower({c, b}); }
  Dyadic critical_point() const { return Dyadic(-b, 1); }
  Dyadic apply(const Dyadic& t) const { return t * t + Dyadic(b) * t + Dyadic(c); }
  bool is_reducible() const { return is_perfect_square(disc()); }

  friend bool operator==(const QuadParams&, const QuadParams&) = default;
};

// n-fold self-composition of x^2 + b x + c; n == 0 gives x.
inline MonicIntPoly iterate(const QuadParams& q, int n, std::size_t max_bits = kDefaultMaxBits) {
  if (n < 0) throw std::invalid_argument("iterate: n must be non-negative");
  IntPoly cur = IntPoly::x();
  const IntPoly bc = IntPoly::constant(q.c);
  for (int k = 0; k < n; ++k) {
    cur = cur * cur + q.b * cur + bc;
    if (cur.max_coeff_bits() > max_bits) {
      throw coefficient_blowup("iterate: coefficient of f^" + std::to_string(k + 1) + " exceeds " +
                               std::to_string(max_bits) + " bits");
    }
  }
  return MonicIntPoly(std::move(cur));
}

}  // namespace dynmono
