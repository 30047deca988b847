#pragma once

// Ordered tuples of leading terms and the "precedes" comparison used to
// rank primes against each other.

#include <optional>
#include <string>
#include <vector>

#include "mgb/gb_field.hpp"
#include "mgb/ideal.hpp"

namespace mgb {

/// Interreduced power products, strictly increasing under `order`.
struct LtTuple {
  TermOrdering order;
  std::vector<PowerProduct> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  friend bool operator==(const LtTuple&, const LtTuple&) = default;
};

enum class TupleCmp { Precedes, Equal, Follows };

/// Minimal elements under divisibility, duplicates removed. Output order is
/// unspecified; use sorted_tuple for a sorted result.
std::vector<PowerProduct> interreduce(std::vector<PowerProduct> ts);

/// Interreduces and sorts.
LtTuple sorted_tuple(const TermOrdering& order, std::vector<PowerProduct> ts);

/// O_sigma(F): tuple of the interreduced leading terms. Throws DomainError on
/// a zero polynomial. Polynomials are re-sorted under `order` first.
template <class D>
LtTuple os_of_polys(const PolyRing<D>& ring, const std::vector<Polynomial<typename D::value_type>>& fs) {
  std::vector<PowerProduct> lts;
  for (const auto& f : fs) {
    if (f.is_zero()) throw DomainError("os_of_polys: zero polynomial");
    lts.push_back(ring.resort(f).lt());
  }
  return sorted_tuple(ring.order(), std::move(lts));
}

/// Tuple of a reduced basis.
template <class D>
LtTuple tuple_of(const ReducedGB<D>& G) {
  return {G.ring.order(), min_lt(G)};
}

/// O_sigma(I) via the reduced basis over QQ; empty for the zero ideal.
LtTuple os_of_ideal(const Ideal& I, const TermOrdering& order, const GbOptions& options = {});

/// Precedes when a < b: a has b as a proper prefix, or at the first
/// difference a's entry is smaller. Throws OrderingError when the orderings differ.
TupleCmp precedes(const LtTuple& a, const LtTuple& b);

/// Hypotheses of the "less than" lemma, realized with the smallest t' in T'
/// not divisible by any entry of T. j is the first index with t_j > t', k the
/// largest index for which t_1..t_{k-1} all lie in T'. Both are 1-based.
struct LessThanWitness {
  PowerProduct t;
  std::size_t j;
  std::size_t k;
};

std::optional<LessThanWitness> lessthan_witness(const LtTuple& T, const std::vector<PowerProduct>& Tprime);

std::string to_string(TupleCmp c);

}  // namespace mgb
