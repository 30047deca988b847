#pragma once

#include <vector>

#include "mgb/polynomial.hpp"

namespace mgb {

/// Positive lcm of the coefficient denominators; den(0) = 1.
Integer den(const QPoly& f);
Integer den(const std::vector<QPoly>& fs);

/// Positive gcd of the coefficients; content(0) = 0.
Integer content(const ZPoly& f);

/// Primitive integral part: den(f) * f divided by its content, with positive
/// leading coefficient. Throws DomainError on zero.
ZPoly prim(const QPoly& f);

QPoly to_rational(const ZPoly& f);

/// Coefficientwise image modulo p. Throws BadPrimeError if p | den(f).
FpPoly reduce_mod_p(const QPoly& f, const PrimeField& fp);
FpPoly reduce_mod_p(const ZPoly& f, const PrimeField& fp);

/// LT and LC of a nonzero polynomial; throws DomainError on zero.
template <class V>
std::pair<PowerProduct, V> leading(const Polynomial<V>& f) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  return {f.lt(), f.lc()};
}

}  // namespace mgb
