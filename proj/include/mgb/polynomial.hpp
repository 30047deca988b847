#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "mgb/domains.hpp"
#include "mgb/errors.hpp"
#include "mgb/power_product.hpp"
#include "mgb/term_order.hpp"

namespace mgb {

template <class V>
struct Term {
  PowerProduct pp;
  V coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms sorted strictly decreasing under the ordering of the ring that built
/// the polynomial; no zero coefficients, no repeated power products.
template <class V>
struct Polynomial {
  std::vector<Term<V>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  const PowerProduct& lt() const { return terms.front().pp; }
  const V& lc() const { return terms.front().coeff; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Arithmetic context: coefficient domain, arity and active term ordering.
template <class D>
class PolyRing {
 public:
  using Domain = D;
  using V = typename D::value_type;
  using Poly = Polynomial<V>;

  PolyRing(D domain, TermOrdering order) : dom_(std::move(domain)), ord_(std::move(order)) {}

  const D& domain() const { return dom_; }
  const TermOrdering& order() const { return ord_; }
  std::size_t arity() const { return ord_.arity(); }

  /// Same domain, different ordering.
  PolyRing with_order(TermOrdering order) const { return PolyRing(dom_, std::move(order)); }

  int cmp(const PowerProduct& a, const PowerProduct& b) const { return ord_.compare(a, b); }

  Poly zero() const { return {}; }
  Poly constant(const V& c) const {
    Poly f;
    if (!dom_.is_zero(c)) f.terms.push_back({PowerProduct(arity()), c});
    return f;
  }
  Poly one() const { return constant(dom_.one()); }
  Poly monomial(PowerProduct t, const V& c) const {
    check(t);
    Poly f;
    if (!dom_.is_zero(c)) f.terms.push_back({std::move(t), c});
    return f;
  }
  Poly variable(std::size_t i) const {
    return monomial(PowerProduct::variable(arity(), i), dom_.one());
  }

  /// Sorts under the active ordering and combines repeated power products.
  Poly make(std::vector<Term<V>> terms) const {
    for (const auto& t : terms) check(t.pp);
    std::sort(terms.begin(), terms.end(),
              [&](const Term<V>& a, const Term<V>& b) { return cmp(a.pp, b.pp) > 0; });
    Poly f;
    for (auto& t : terms) {
      if (!f.terms.empty() && f.terms.back().pp == t.pp) {
        f.terms.back().coeff = dom_.add(f.terms.back().coeff, t.coeff);
        if (dom_.is_zero(f.terms.back().coeff)) f.terms.pop_back();
      } else if (!dom_.is_zero(t.coeff)) {
        f.terms.push_back(std::move(t));
      }
    }
    return f;
  }

  /// Re-establishes sortedness after a change of ordering.
  Poly resort(Poly f) const { return make(std::move(f.terms)); }

  Poly neg(Poly f) const {
    for (auto& t : f.terms) t.coeff = dom_.neg(t.coeff);
    return f;
  }

  Poly add(const Poly& f, const Poly& g) const { return add_scaled(f, dom_.one(), PowerProduct(arity()), g); }
  Poly sub(const Poly& f, const Poly& g) const {
    return add_scaled(f, dom_.neg(dom_.one()), PowerProduct(arity()), g);
  }

  Poly scale(Poly f, const V& c) const {
    if (dom_.is_zero(c)) return {};
    for (auto& t : f.terms) t.coeff = dom_.mul(t.coeff, c);
    if constexpr (!D::is_field) {
      std::erase_if(f.terms, [&](const Term<V>& t) { return dom_.is_zero(t.coeff); });
    }
    return f;
  }

  /// c * t * f; multiplication by a power product preserves term order.
  Poly mul_term(const Poly& f, const V& c, const PowerProduct& t) const {
    Poly r;
    if (dom_.is_zero(c)) return r;
    r.terms.reserve(f.terms.size());
    for (const auto& s : f.terms) {
      V v = dom_.mul(s.coeff, c);
      if (!dom_.is_zero(v)) r.terms.push_back({s.pp * t, std::move(v)});
    }
    return r;
  }

  /// f + c * t * g by a single merge.
  Poly add_scaled(const Poly& f, const V& c, const PowerProduct& t, const Poly& g,
                  std::size_t f_from = 0) const {
    Poly r;
    if (dom_.is_zero(c) || g.is_zero()) {
      r.terms.assign(f.terms.begin() + static_cast<std::ptrdiff_t>(f_from), f.terms.end());
      return r;
    }
    r.terms.reserve(f.terms.size() - f_from + g.terms.size());
    std::size_t i = f_from, j = 0;
    const bool unit = t.is_one();
    PowerProduct u;
    while (i < f.terms.size() || j < g.terms.size()) {
      if (j == g.terms.size()) {
        r.terms.push_back(f.terms[i++]);
        continue;
      }
      u = unit ? g.terms[j].pp : g.terms[j].pp * t;
      int c_ij = i == f.terms.size() ? -1 : cmp(f.terms[i].pp, u);
      if (c_ij > 0) {
        r.terms.push_back(f.terms[i++]);
      } else if (c_ij < 0) {
        V v = dom_.mul(g.terms[j].coeff, c);
        if (!dom_.is_zero(v)) r.terms.push_back({std::move(u), std::move(v)});
        ++j;
      } else {
        V v = dom_.add(f.terms[i].coeff, dom_.mul(g.terms[j].coeff, c));
        if (!dom_.is_zero(v)) r.terms.push_back({std::move(u), std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Poly mul(const Poly& f, const Poly& g) const {
    if (f.is_zero() || g.is_zero()) return {};
    const Poly& small = f.size() <= g.size() ? f : g;
    const Poly& large = f.size() <= g.size() ? g : f;
    Poly r;
    for (const auto& s : small.terms) r = add_scaled(r, s.coeff, s.pp, large);
    return r;
  }

  Poly pow(const Poly& f, unsigned e) const {
    Poly result = one();
    Poly base = f;
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  /// Divides by the leading coefficient (fields only).
  Poly monic(Poly f) const {
    static_assert(D::is_field, "monic requires a field");
    if (f.is_zero() || dom_.is_one(f.lc())) return f;
    V inv = dom_.inv(f.lc());
    for (auto& t : f.terms) t.coeff = dom_.mul(t.coeff, inv);
    return f;
  }

 private:
  void check(const PowerProduct& t) const {
    if (t.arity() != arity()) throw ArityError("power product arity does not match the ring");
  }

  D dom_;
  TermOrdering ord_;
};

using QPoly = Polynomial<Rational>;
using ZPoly = Polynomial<Integer>;
using FpPoly = Polynomial<std::uint64_t>;
using QRing = PolyRing<RationalField>;
using ZRing = PolyRing<IntegerRing>;
using FpRing = PolyRing<PrimeField>;

}  // namespace mgb
