#pragma once

// Minimal strong Groebner bases over ZZ and the leading coefficient lcm.

#include <vector>

#include "mgb/gb_field.hpp"

namespace mgb {

/// Minimal strong basis: leading coefficients positive, no leading monomial
/// divides another, sorted by increasing leading term.
struct StrongGB {
  ZRing ring;
  std::vector<ZPoly> elements;
};

struct LeadingMonomial {
  PowerProduct pp;
  Integer coeff;
  friend bool operator==(const LeadingMonomial&, const LeadingMonomial&) = default;
};

/// Buchberger over ZZ with S- and G-polynomials, then minimalized.
/// Zero generators are ignored; the zero ideal gives an empty basis.
StrongGB strong_gb(const ZRing& ring, const std::vector<ZPoly>& gens, const GbOptions& options = {},
                   GbStats* stats = nullptr);

/// Reduction by leading monomials: a term c*t is rewritten by g when LT(g)
/// divides t and LC(g) divides c.
ZPoly strong_normal_form(const ZRing& ring, const ZPoly& f, const std::vector<ZPoly>& G);

/// lcm of the leading coefficients, positive. Throws on a zero polynomial.
Integer lcm_sigma(const ZRing& ring, const std::vector<ZPoly>& fs);
Integer lcm_sigma(const StrongGB& B);

/// Leading monomials sorted by increasing term, coefficients positive.
std::vector<LeadingMonomial> leading_monomial_set(const StrongGB& B);

}  // namespace mgb
