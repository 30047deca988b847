#pragma once

// Canonical text forms: polynomials are printed in their stored
// (descending) term order with explicit '*' and '^'.

#include <string>
#include <vector>

#include "mgb/ideal.hpp"
#include "mgb/polynomial.hpp"

namespace mgb {

using Names = std::vector<std::string>;

std::string format_pp(const PowerProduct& t, const Names& names);

std::string format_poly(const QPoly& f, const Names& names);
std::string format_poly(const ZPoly& f, const Names& names);
std::string format_poly(const FpPoly& f, const Names& names);

/// "[t1, t2, ...]".
std::string format_tuple(const std::vector<PowerProduct>& ts, const Names& names);

template <class V>
std::string format_list(const std::vector<Polynomial<V>>& fs, const Names& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_poly(fs[i], names);
  }
  return out + "]";
}

/// The ordering as it is written in input files.
std::string format_order(const TermOrdering& o, const Names& names);

/// A complete input file describing the ideal.
std::string format_ideal_file(const Ideal& I);

}  // namespace mgb
