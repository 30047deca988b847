#include "mgb/ideal.hpp"

namespace mgb {

std::string RingSpec::coefficient_name() const {
  switch (kind) {
    case CoefficientKind::Rational: return "QQ";
    case CoefficientKind::Integer: return "ZZ";
    case CoefficientKind::Modular: return "ZZ/(" + std::to_string(modulus) + ")";
  }
  return "QQ";
}

std::vector<QPoly> Ideal::gens_under(const TermOrdering& o) const {
  QRing r(RationalField{}, o);
  std::vector<QPoly> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(r.resort(g));
  return out;
}

}  // namespace mgb
