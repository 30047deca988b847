#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mgb/polynomial.hpp"

namespace mgb {

enum class CoefficientKind { Rational, Integer, Modular };

/// Ambient ring: coefficient domain, indeterminate names and default ordering.
struct RingSpec {
  CoefficientKind kind = CoefficientKind::Rational;
  std::uint64_t modulus = 0;  // only for Modular
  std::vector<std::string> names;
  TermOrdering order;

  std::size_t arity() const { return names.size(); }
  QRing qring() const { return QRing(RationalField{}, order); }
  QRing qring(const TermOrdering& o) const { return QRing(RationalField{}, o); }
  std::string coefficient_name() const;
};

/// Generators are nonzero and sorted under ring.order. Integer and modular
/// rings store their coefficients as rationals with denominator 1; modular
/// coefficients are already reduced to [0, p).
struct Ideal {
  RingSpec ring;
  std::vector<QPoly> gens;

  bool is_zero() const { return gens.empty(); }
  /// Generators re-sorted under another ordering.
  std::vector<QPoly> gens_under(const TermOrdering& o) const;
};

}  // namespace mgb
