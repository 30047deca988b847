#pragma once

#include <string>

#include "mgb/errors.hpp"
#include "mgb/io/format.hpp"
#include "mgb/io/parser.hpp"

namespace mgb::test {

inline Ideal ideal_of(const std::string& text) { return parse_input(text).ideals.at(0); }

inline QPoly poly_of(const RingSpec& ring, const std::string& text) { return parse_poly(text, ring); }

/// Parses over QQ and converts; every coefficient must be integral.
inline ZPoly zpoly_of(const RingSpec& ring, const std::string& text) {
  ZPoly out;
  for (const auto& t : parse_poly(text, ring).terms) {
    if (t.coeff.get_den() != 1) throw DomainError("zpoly_of: non-integral coefficient");
    out.terms.push_back({t.pp, t.coeff.get_num()});
  }
  return out;
}

inline RingSpec ring_of(const std::string& header) {
  return parse_input(header + "; ideal();").ring;
}

}  // namespace mgb::test
