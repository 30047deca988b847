#pragma once

// Buchberger's algorithm over a field (QQ or ZZ/(p)): normal forms, reduced
// Groebner bases, leading-term sets and generator representations.

#include <cstdint>
#include <vector>

#include "mgb/polynomial.hpp"

namespace mgb {

enum class PairStrategy { Normal, Fifo };

struct GbOptions {
  PairStrategy strategy = PairStrategy::Normal;
  /// Maximum number of S-polynomial reductions; 0 means unlimited.
  std::uint64_t max_reductions = 0;
};

struct GbStats {
  std::uint64_t reductions = 0;
  std::uint64_t pairs_skipped = 0;
};

/// Reduced Groebner basis: monic elements sorted by increasing leading term.
template <class D>
struct ReducedGB {
  PolyRing<D> ring;
  std::vector<Polynomial<typename D::value_type>> elements;

  bool is_zero_ideal() const { return elements.empty(); }
  bool is_unit_ideal() const { return elements.size() == 1 && elements[0].lt().is_one(); }
};

/// Full reduction of f. Among the elements whose leading term divides the
/// current term, the one with the smallest leading term is used (first in
/// list order on ties). Elements of G need not be monic; zero entries are
/// ignored.
template <class D>
Polynomial<typename D::value_type> normal_form(
    const PolyRing<D>& ring, const Polynomial<typename D::value_type>& f,
    const std::vector<Polynomial<typename D::value_type>>& G);

template <class D>
Polynomial<typename D::value_type> spoly(const PolyRing<D>& ring,
                                         const Polynomial<typename D::value_type>& f,
                                         const Polynomial<typename D::value_type>& g);

/// Throws BudgetExceeded when options.max_reductions is exhausted.
template <class D>
ReducedGB<D> buchberger_reduced(const PolyRing<D>& ring,
                                const std::vector<Polynomial<typename D::value_type>>& gens,
                                const GbOptions& options = {}, GbStats* stats = nullptr);

/// Reduces an arbitrary Groebner basis (or any generating set whose leading
/// terms already generate the leading term ideal) to the reduced basis.
template <class D>
ReducedGB<D> interreduce_basis(const PolyRing<D>& ring,
                               std::vector<Polynomial<typename D::value_type>> basis);

/// True when every S-polynomial of G reduces to zero modulo G.
template <class D>
bool is_groebner_basis(const PolyRing<D>& ring,
                       const std::vector<Polynomial<typename D::value_type>>& G);

/// True when G is a reduced basis: monic, and no term of any element is
/// divisible by the leading term of another element.
template <class D>
bool is_reduced(const PolyRing<D>& ring,
                const std::vector<Polynomial<typename D::value_type>>& G);

/// MinLT: leading terms of a reduced basis, increasing.
template <class D>
std::vector<PowerProduct> min_lt(const ReducedGB<D>& G) {
  std::vector<PowerProduct> out;
  out.reserve(G.elements.size());
  for (const auto& g : G.elements) out.push_back(g.lt());
  return out;
}

/// Columns indexed by the reduced basis, rows by the generators:
/// G[j] = sum_i F[i] * matrix[i][j].
struct Representation {
  std::vector<std::vector<QPoly>> matrix;
};

/// Expresses each element of G in terms of F. Throws DomainError if some
/// element of G is not in the ideal generated by F.
Representation represent(const QRing& ring, const std::vector<QPoly>& G,
                         const std::vector<QPoly>& F);

extern template QPoly normal_form(const QRing&, const QPoly&, const std::vector<QPoly>&);
extern template FpPoly normal_form(const FpRing&, const FpPoly&, const std::vector<FpPoly>&);
extern template ReducedGB<RationalField> buchberger_reduced(const QRing&, const std::vector<QPoly>&,
                                                            const GbOptions&, GbStats*);
extern template ReducedGB<PrimeField> buchberger_reduced(const FpRing&, const std::vector<FpPoly>&,
                                                         const GbOptions&, GbStats*);

}  // namespace mgb
