#include "mgb/poly_ops.hpp"

namespace mgb {

Integer den(const QPoly& f) {
  Integer d = 1;
  for (const auto& t : f.terms) d = lcm(d, t.coeff.get_den());
  return d;
}

Integer den(const std::vector<QPoly>& fs) {
  Integer d = 1;
  for (const auto& f : fs) d = lcm(d, den(f));
  return d;
}

Integer content(const ZPoly& f) {
  Integer c = 0;
  for (const auto& t : f.terms) {
    c = gcd(c, t.coeff);
    if (c == 1) break;
  }
  return c;
}

ZPoly prim(const QPoly& f) {
  if (f.is_zero()) throw DomainError("prim of the zero polynomial");
  Integer d = den(f);
  ZPoly g;
  g.terms.reserve(f.size());
  for (const auto& t : f.terms) {
    Integer v = t.coeff.get_num() * (d / t.coeff.get_den());
    g.terms.push_back({t.pp, std::move(v)});
  }
  Integer c = content(g);
  if (sgn(g.lc()) < 0) c = -c;
  for (auto& t : g.terms) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return g;
}

QPoly to_rational(const ZPoly& f) {
  QPoly g;
  g.terms.reserve(f.size());
  for (const auto& t : f.terms) g.terms.push_back({t.pp, Rational(t.coeff)});
  return g;
}

FpPoly reduce_mod_p(const QPoly& f, const PrimeField& fp) {
  FpPoly g;
  for (const auto& t : f.terms) {
    auto v = fp.from_rational(t.coeff);
    if (v != 0) g.terms.push_back({t.pp, v});
  }
  return g;
}

FpPoly reduce_mod_p(const ZPoly& f, const PrimeField& fp) {
  FpPoly g;
  for (const auto& t : f.terms) {
    auto v = fp.from_integer(t.coeff);
    if (v != 0) g.terms.push_back({t.pp, v});
  }
  return g;
}

}  // namespace mgb
