#pragma once

// Groebner fan traversal by facet flips, the universal denominator and the
// ordering-free reduction modulo p.

#include <optional>
#include <string>
#include <vector>

#include "mgb/errors.hpp"
#include "mgb/ideal.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

struct FanOptions {
  std::size_t max_cones = 2000;
  std::uint64_t max_reductions = 1000000;
  unsigned threads = 1;

  /// Defaults overridden by MGB_BUDGET="cones[,reductions]" when set.
  static FanOptions from_env();
};

/// One cone: a reduced basis whose elements are sorted under `order`, so
/// each element's first term is its marked leading term.
struct MarkedGB {
  TermOrdering order;
  std::vector<QPoly> elements;
  /// exp(LT) - exp(t) for every non-leading term t; the cone is
  /// {w >= 0 : v . w >= 0 for all v}.
  std::vector<std::vector<std::int64_t>> inequalities;
  /// A strictly positive weight vector in the cone's interior.
  std::vector<Rational> interior;
  std::string key;
  Integer den;
};

struct FanEdge {
  std::size_t from;
  std::size_t to;
  std::vector<std::int64_t> facet;  // normal of the shared facet, pointing into `from`
};

struct Fan {
  std::vector<MarkedGB> cones;
  std::vector<FanEdge> edges;
  std::uint64_t reductions = 0;

  Integer universal_denominator() const;
};

class FanBudgetExceeded : public BudgetExceeded {
 public:
  FanBudgetExceeded(const std::string& what, std::size_t cones_found)
      : BudgetExceeded(what), cones_found_(cones_found) {}
  std::size_t cones_found() const { return cones_found_; }

 private:
  std::size_t cones_found_;
};

/// Canonical serialization of a marked basis, independent of the ordering
/// used to compute it.
std::string marked_key(const std::vector<QPoly>& elements);

/// Cone of a marked reduced basis, with its facet normals (deduplicated,
/// primitive, excluding coordinate hyperplanes).
std::vector<std::vector<std::int64_t>> cone_inequalities(const std::vector<QPoly>& elements, std::size_t n);
std::vector<std::vector<std::int64_t>> cone_facets(const std::vector<std::vector<std::int64_t>>& ineqs,
                                                   std::size_t n);

/// All marked reduced bases of a nonzero ideal over QQ, seeded from degrevlex.
Fan enumerate_fan(const Ideal& I, const FanOptions& options = FanOptions::from_env());

/// Delta(I): lcm of the denominators over the whole fan.
Integer universal_denominator(const Ideal& I, const FanOptions& options = FanOptions::from_env());

/// I_p as the reduced degrevlex basis of the images of the seed cone's basis.
/// Throws BadPrimeError when p divides Delta(I). With verify set, checks that
/// the images of every cone generate the same ideal.
std::vector<FpPoly> reduction_universal(const Fan& fan, std::uint64_t p, bool verify = false);

}  // namespace mgb
