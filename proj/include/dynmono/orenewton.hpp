#pragma once

// First-order Newton polygon machinery: phi-adic developments, principal
// polygons, residual polynomials and the resulting index bound / splitting.

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dynmono/errors.hpp"
#include "dynmono/ffpoly.hpp"
#include "dynmono/intpoly.hpp"
#include "dynmono/shape.hpp"

namespace dynmono {

using Valuation = std::optional<unsigned long>;  // nullopt stands for +infinity

inline Valuation valuation(const Integer& v, std::uint64_t p) {
  if (v == 0) return std::nullopt;
  Integer rest;
  const Integer pz = static_cast<unsigned long>(p);
  return mpz_remove(rest.get_mpz_t(), v.get_mpz_t(), pz.get_mpz_t());
}

inline Valuation valuation(const IntPoly& a, std::uint64_t p) {
  Valuation best;
  for (const auto& c : a.coeffs()) {
    Valuation v = valuation(c, p);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

struct PhiDevelopment {
  IntPoly phi;
  std::uint64_t p = 2;
  std::vector<IntPoly> terms;       // f = sum terms[i] * phi^i, deg terms[i] < deg phi
  std::vector<Valuation> valuations;

  IntPoly reconstruct() const {
    IntPoly acc;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) acc = acc * phi + *it;
    return acc;
  }
};

inline PhiDevelopment develop(const IntPoly& f, const IntPoly& phi, std::uint64_t p) {
  if (!phi.is_monic() || phi.degree() < 1) throw std::invalid_argument("develop: phi must be monic of positive degree");
  if (!f.is_monic()) throw std::invalid_argument("develop: f must be monic");
  if (!is_irreducible(GFpPoly::reduce(phi, p))) {
    throw phi_not_irreducible_mod_p("develop: phi = " + phi.to_string() + " is not irreducible mod " + std::to_string(p));
  }
  PhiDevelopment d;
  d.phi = phi;
  d.p = p;
  IntPoly q = f;
  while (!q.is_zero()) {
    auto [quot, r] = divrem_monic(q, phi);
    d.terms.push_back(std::move(r));
    q = std::move(quot);
  }
  for (const auto& t : d.terms) d.valuations.push_back(valuation(t, p));
  return d;
}

struct LatticePoint {
  long i = 0;
  long y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct PolygonSide {
  LatticePoint start;
  LatticePoint end;

  long length() const { return end.i - start.i; }
  long rise() const { return start.y - end.y; }
  long degree() const { return std::gcd(length(), rise()); }
  long h() const { return rise() / degree(); }  // slope is -h/e
  long e() const { return length() / degree(); }
};

struct NewtonPolygon {
  std::vector<LatticePoint> points;  // cloud of (i, v(a_i)) with finite valuation
  std::vector<PolygonSide> sides;    // principal part only (negative slopes)

  long terminal_abscissa() const {
    if (!sides.empty()) return sides.back().end.i;
    return points.empty() ? 0 : points.front().i;
  }
};

inline NewtonPolygon principal_polygon(const PhiDevelopment& dev) {
  NewtonPolygon poly;
  for (std::size_t i = 0; i < dev.valuations.size(); ++i) {
    if (dev.valuations[i]) poly.points.push_back({static_cast<long>(i), static_cast<long>(*dev.valuations[i])});
  }
  std::vector<LatticePoint> hull;
  auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.i - o.i) * (b.y - o.y) - (a.y - o.y) * (b.i - o.i);
  };
  for (const auto& pt : poly.points) {
    // Collinear points are dropped so each side is a maximal segment.
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    if (hull[k + 1].y >= hull[k].y) break;
    poly.sides.push_back({hull[k], hull[k + 1]});
  }
  return poly;
}

// Lattice points (i, y) with 1 <= i < r, 1 <= y, on or below the principal polygon.
inline std::uint64_t ind_phi(const NewtonPolygon& poly) {
  if (poly.sides.empty()) return 0;
  const long r = poly.terminal_abscissa();
  std::uint64_t total = 0;
  const auto& first = poly.sides.front().start;
  if (first.i >= 1 && first.i < r) total += static_cast<std::uint64_t>(first.y);
  for (const auto& s : poly.sides) {
    for (long i = std::max(s.start.i + 1, 1L); i <= s.end.i && i < r; ++i) {
      const long num = s.end.y * s.length() + s.rise() * (s.end.i - i);
      total += static_cast<std::uint64_t>(num / s.length());
    }
  }
  return total;
}

struct ResidualPolynomial {
  PolygonSide side;
  std::shared_ptr<const ff::ExtField> field;  // F_p[t]/(phi mod p)
  std::vector<ff::ExtField::Element> coeffs;  // ascending powers of y; coeffs[0], coeffs[d] nonzero

  ff::PolyRing<ff::ExtField> ring() const { return ff::PolyRing<ff::ExtField>(*field); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_separable() const {
    auto R = ring();
    return ff::is_squarefree(R, coeffs);
  }
  std::vector<int> factor_degrees() const {
    auto R = ring();
    return ff::factor_degrees_squarefree(R, coeffs);
  }
  std::string to_string() const { return ring().to_string(coeffs, "y"); }
};

inline ResidualPolynomial residual_polynomial(const PhiDevelopment& dev, const PolygonSide& side) {
  std::vector<std::uint64_t> modulus = GFpPoly::reduce(dev.phi, dev.p).coeffs();
  ResidualPolynomial R{side, std::make_shared<const ff::ExtField>(dev.p, std::move(modulus)), {}};
  const long d = side.degree();
  Integer pz = static_cast<unsigned long>(dev.p);
  for (long j = 0; j <= d; ++j) {
    const long i = side.start.i + j * side.e();
    const long height = side.start.y - j * side.h();
    const auto& v = dev.valuations[static_cast<std::size_t>(i)];
    if (v && static_cast<long>(*v) == height) {
      IntPoly unit = dev.terms[static_cast<std::size_t>(i)].divexact(pow_int(pz, *v));
      R.coeffs.push_back(R.field->reduce(GFpPoly::reduce(unit, dev.p).coeffs()));
    } else {
      R.coeffs.push_back(R.field->zero());
    }
  }
  return R;
}

struct PhiAnalysis {
  GFpPoly phi_bar;
  int multiplicity = 1;
  IntPoly phi;
  PhiDevelopment development;
  NewtonPolygon polygon;
  std::vector<ResidualPolynomial> residuals;
  std::uint64_t lattice_count = 0;
  bool regular = true;
};

struct OreReport {
  std::uint64_t p = 2;
  std::vector<PhiAnalysis> factors;
  std::uint64_t index_lower_bound = 0;  // lower bound on v_p of the index
  bool exact = true;                    // true when f is p-regular: the bound is v_p(index)
  bool p_maximal = false;
  std::optional<SplittingShape> shape;
  std::string reason;  // set when !exact
};

inline OreReport ore_analyze(const MonicIntPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed) {
  if (f.degree() < 1) throw std::invalid_argument("ore_analyze: degree must be positive");
  if (!is_prime_u64(p)) throw std::invalid_argument("ore_analyze: p must be prime");
  OreReport rep;
  rep.p = p;
  SplittingShape shape;
  for (auto& fac : factor(GFpPoly::reduce(f.poly(), p), seed)) {
    PhiAnalysis a;
    a.phi_bar = fac.poly;
    a.multiplicity = fac.exponent;
    a.phi = fac.poly.lift();
    a.development = develop(f.poly(), a.phi, p);
    a.polygon = principal_polygon(a.development);
    a.lattice_count = ind_phi(a.polygon);
    const int deg_phi = a.phi.degree();
    // Leading zero terms mean phi^k divides f over Z: a side of slope -inf,
    // one unramified prime of degree deg phi per power.
    if (!a.polygon.points.empty() && a.polygon.points.front().i > 0) {
      shape.add(1, deg_phi, static_cast<std::uint64_t>(a.polygon.points.front().i));
    }
    for (const auto& side : a.polygon.sides) {
      ResidualPolynomial res = residual_polynomial(a.development, side);
      if (!res.is_separable()) {
        a.regular = false;
        if (rep.reason.empty()) {
          rep.reason = "residual polynomial " + res.to_string() + " for phi = " + a.phi.to_string() +
                       " is inseparable; a higher-order polygon is needed";
        }
      } else {
        for (int k : res.factor_degrees()) shape.add(static_cast<int>(side.e()), k * deg_phi);
      }
      a.residuals.push_back(std::move(res));
    }
    rep.index_lower_bound += static_cast<std::uint64_t>(deg_phi) * a.lattice_count;
    rep.exact = rep.exact && a.regular;
    rep.factors.push_back(std::move(a));
  }
  rep.p_maximal = rep.index_lower_bound == 0;
  if (rep.exact) rep.shape = shape;
  return rep;
}

}  // namespace dynmono
