#include "mgb/gb_field.hpp"

#include <algorithm>
#include <limits>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

/// Index of the element with the smallest leading term dividing t, or -1.
template <class D>
std::ptrdiff_t pick_reducer(const PolyRing<D>& ring, const PowerProduct& t,
                            const std::vector<Polynomial<typename D::value_type>>& G,
                            const std::vector<bool>* active = nullptr) {
  std::ptrdiff_t best = -1;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (G[k].is_zero() || (active != nullptr && !(*active)[k])) continue;
    if (!G[k].lt().divides(t)) continue;
    if (best < 0 || ring.cmp(G[k].lt(), G[static_cast<std::size_t>(best)].lt()) < 0) {
      best = static_cast<std::ptrdiff_t>(k);
    }
  }
  return best;
}

template <class D>
Polynomial<typename D::value_type> reduce_with(
    const PolyRing<D>& ring, const Polynomial<typename D::value_type>& f,
    const std::vector<Polynomial<typename D::value_type>>& G, const std::vector<bool>* active) {
  using Poly = Polynomial<typename D::value_type>;
  const auto& dom = ring.domain();
  Poly rem;
  Poly cur = f;
  std::size_t pos = 0;
  while (pos < cur.terms.size()) {
    const auto& t = cur.terms[pos];
    std::ptrdiff_t k = pick_reducer(ring, t.pp, G, active);
    if (k < 0) {
      rem.terms.push_back(t);
      ++pos;
      continue;
    }
    const Poly& g = G[static_cast<std::size_t>(k)];
    auto c = dom.neg(dom.div(t.coeff, g.lc()));
    cur = ring.add_scaled(cur, c, t.pp.quotient(g.lt()), g, pos);
    pos = 0;
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  PowerProduct lcm;
  std::uint64_t seq;
};

}  // namespace

template <class D>
Polynomial<typename D::value_type> normal_form(
    const PolyRing<D>& ring, const Polynomial<typename D::value_type>& f,
    const std::vector<Polynomial<typename D::value_type>>& G) {
  return reduce_with(ring, f, G, nullptr);
}

template <class D>
Polynomial<typename D::value_type> spoly(const PolyRing<D>& ring,
                                         const Polynomial<typename D::value_type>& f,
                                         const Polynomial<typename D::value_type>& g) {
  const auto& dom = ring.domain();
  PowerProduct l = lcm(f.lt(), g.lt());
  auto a = ring.mul_term(f, dom.inv(f.lc()), l.quotient(f.lt()));
  return ring.add_scaled(a, dom.neg(dom.inv(g.lc())), l.quotient(g.lt()), g);
}

template <class D>
ReducedGB<D> interreduce_basis(const PolyRing<D>& ring,
                               std::vector<Polynomial<typename D::value_type>> basis) {
  using Poly = Polynomial<typename D::value_type>;
  std::erase_if(basis, [](const Poly& g) { return g.is_zero(); });
  for (const auto& g : basis) {
    if (g.lt().is_one()) return {ring, {ring.one()}};
  }
  // Keep one element per minimal leading term.
  std::sort(basis.begin(), basis.end(),
            [&](const Poly& a, const Poly& b) { return ring.cmp(a.lt(), b.lt()) < 0; });
  std::vector<Poly> minimal;
  for (auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.lt().divides(g.lt())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(g));
  }
  // Tail reduction against the other elements.
  std::vector<Poly> reduced(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<bool> active(minimal.size(), true);
    active[k] = false;
    Poly tail;
    tail.terms.assign(minimal[k].terms.begin() + 1, minimal[k].terms.end());
    Poly r = reduce_with(ring, tail, minimal, &active);
    Poly g;
    g.terms.push_back(minimal[k].terms.front());
    g.terms.insert(g.terms.end(), r.terms.begin(), r.terms.end());
    reduced[k] = ring.monic(std::move(g));
  }
  return {ring, std::move(reduced)};
}

template <class D>
ReducedGB<D> buchberger_reduced(const PolyRing<D>& ring,
                                const std::vector<Polynomial<typename D::value_type>>& gens,
                                const GbOptions& options, GbStats* stats) {
  using Poly = Polynomial<typename D::value_type>;
  GbStats local;
  GbStats& st = stats != nullptr ? *stats : local;

  std::vector<Poly> G;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::uint64_t seq = 0;

  // Gebauer-Moeller update for a newly added element h = G[k].
  auto update = [&](std::size_t k) {
    const PowerProduct& lt_h = G[k].lt();
    std::vector<Pair> C;
    for (std::size_t i = 0; i < k; ++i) {
      if (active[i]) C.push_back({i, k, lcm(G[i].lt(), lt_h), 0});
    }
    std::vector<Pair> D1;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(G[p.i].lt(), lt_h);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b) {
          if (C[b].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t b = 0; b < D1.size() && keep; ++b) {
          if (D1[b].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) D1.push_back(p);
    }
    std::vector<Pair> E;
    for (auto& p : D1) {
      if (coprime(G[p.i].lt(), lt_h)) {
        ++st.pairs_skipped;
      } else {
        E.push_back(std::move(p));
      }
    }
    std::vector<Pair> kept;
    kept.reserve(pairs.size() + E.size());
    for (auto& p : pairs) {
      bool drop = lt_h.divides(p.lcm) && !(lcm(G[p.i].lt(), lt_h) == p.lcm) &&
                  !(lcm(G[p.j].lt(), lt_h) == p.lcm);
      if (drop) {
        ++st.pairs_skipped;
      } else {
        kept.push_back(std::move(p));
      }
    }
    for (auto& p : E) {
      p.seq = seq++;
      kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (std::size_t i = 0; i < k; ++i) {
      if (active[i] && lt_h.divides(G[i].lt())) active[i] = false;
    }
  };

  auto insert = [&](Poly h) -> bool {
    h = ring.monic(std::move(h));
    bool unit = h.lt().is_one();
    G.push_back(std::move(h));
    active.push_back(true);
    if (unit) return true;
    update(G.size() - 1);
    return false;
  };

  // Generators enter unreduced, smallest leading term first. Reducing each
  // one against the earlier ones can blow up under lex.
  std::vector<Poly> input;
  for (const auto& f : gens) {
    if (!f.is_zero()) input.push_back(f);
  }
  std::stable_sort(input.begin(), input.end(),
                   [&](const Poly& a, const Poly& b) { return ring.cmp(a.lt(), b.lt()) < 0; });
  for (auto& f : input) {
    if (insert(std::move(f))) return {ring, {ring.one()}};
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      if (options.strategy == PairStrategy::Fifo) {
        if (pairs[a].seq < pairs[best].seq) best = a;
      } else {
        int c = ring.cmp(pairs[a].lcm, pairs[best].lcm);
        if (c < 0 || (c == 0 && pairs[a].seq < pairs[best].seq)) best = a;
      }
    }
    Pair p = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();

    if (options.max_reductions != 0 && st.reductions >= options.max_reductions) {
      throw BudgetExceeded("S-pair reduction budget of " + std::to_string(options.max_reductions) +
                           " exhausted");
    }
    ++st.reductions;
    Poly h = reduce_with(ring, spoly(ring, G[p.i], G[p.j]), G, &active);
    if (h.is_zero()) continue;
    if (insert(std::move(h))) return {ring, {ring.one()}};
  }

  std::vector<Poly> basis;
  for (std::size_t k = 0; k < G.size(); ++k) {
    if (active[k]) basis.push_back(std::move(G[k]));
  }
  return interreduce_basis(ring, std::move(basis));
}

template <class D>
bool is_groebner_basis(const PolyRing<D>& ring,
                       const std::vector<Polynomial<typename D::value_type>>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (G[j].is_zero() || coprime(G[i].lt(), G[j].lt())) continue;
      if (!normal_form(ring, spoly(ring, G[i], G[j]), G).is_zero()) return false;
    }
  }
  return true;
}

template <class D>
bool is_reduced(const PolyRing<D>& ring,
                const std::vector<Polynomial<typename D::value_type>>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero() || !ring.domain().is_one(G[i].lc())) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : G[i].terms) {
        if (G[j].lt().divides(t.pp)) return false;
      }
    }
  }
  return true;
}

namespace {

/// Basis element with cofactors: poly = sum_i cof[i] * F[i].
struct Tracked {
  QPoly poly;
  std::vector<QPoly> cof;
};

/// Reduces f (with cofactors) against the tracked basis H; the cofactors of
/// the result are updated accordingly.
Tracked reduce_tracked(const QRing& ring, Tracked f, const std::vector<Tracked>& H) {
  const auto& dom = ring.domain();
  Tracked rem{QPoly{}, f.cof};
  std::vector<QPoly> polys;
  polys.reserve(H.size());
  for (const auto& h : H) polys.push_back(h.poly);
  QPoly cur = std::move(f.poly);
  std::size_t pos = 0;
  while (pos < cur.terms.size()) {
    const auto& t = cur.terms[pos];
    std::ptrdiff_t k = pick_reducer(ring, t.pp, polys);
    if (k < 0) {
      rem.poly.terms.push_back(t);
      ++pos;
      continue;
    }
    const Tracked& h = H[static_cast<std::size_t>(k)];
    Rational c = dom.neg(dom.div(t.coeff, h.poly.lc()));
    PowerProduct q = t.pp.quotient(h.poly.lt());
    for (std::size_t i = 0; i < rem.cof.size(); ++i) {
      rem.cof[i] = ring.add_scaled(rem.cof[i], c, q, h.cof[i]);
    }
    cur = ring.add_scaled(cur, c, q, h.poly, pos);
    pos = 0;
  }
  return rem;
}

}  // namespace

Representation represent(const QRing& ring, const std::vector<QPoly>& G,
                         const std::vector<QPoly>& F) {
  const std::size_t m = F.size();
  // Plain Buchberger over the generators, carrying cofactors.
  std::vector<Tracked> H;
  for (std::size_t i = 0; i < m; ++i) {
    if (F[i].is_zero()) continue;
    Tracked t{F[i], std::vector<QPoly>(m)};
    t.cof[i] = ring.one();
    H.push_back(std::move(t));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < H.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      auto la = lcm(H[pairs[a].first].poly.lt(), H[pairs[a].second].poly.lt());
      auto lb = lcm(H[pairs[best].first].poly.lt(), H[pairs[best].second].poly.lt());
      if (ring.cmp(la, lb) < 0) best = a;
    }
    auto [i, j] = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    const QPoly& fi = H[i].poly;
    const QPoly& fj = H[j].poly;
    if (coprime(fi.lt(), fj.lt())) continue;
    PowerProduct l = lcm(fi.lt(), fj.lt());
    Rational ci = 1 / fi.lc();
    Rational cj = -1 / fj.lc();
    PowerProduct qi = l.quotient(fi.lt());
    PowerProduct qj = l.quotient(fj.lt());
    Tracked s{ring.add_scaled(ring.mul_term(fi, ci, qi), cj, qj, fj), std::vector<QPoly>(m)};
    for (std::size_t k = 0; k < m; ++k) {
      s.cof[k] = ring.add_scaled(ring.mul_term(H[i].cof[k], ci, qi), cj, qj, H[j].cof[k]);
    }
    Tracked r = reduce_tracked(ring, std::move(s), H);
    if (r.poly.is_zero()) continue;
    Rational inv = 1 / r.poly.lc();
    r.poly = ring.scale(std::move(r.poly), inv);
    for (auto& c : r.cof) c = ring.scale(std::move(c), inv);
    for (std::size_t k = 0; k < H.size(); ++k) pairs.emplace_back(k, H.size());
    H.push_back(std::move(r));
  }

  Representation rep;
  rep.matrix.assign(m, std::vector<QPoly>(G.size()));
  for (std::size_t j = 0; j < G.size(); ++j) {
    Tracked g{G[j], std::vector<QPoly>(m)};
    Tracked r = reduce_tracked(ring, std::move(g), H);
    if (!r.poly.is_zero()) {
      throw DomainError("basis element " + std::to_string(j + 1) +
                        " is not in the ideal of the generators");
    }
    // g - sum cof_i F_i = 0 after reduction, so g = -sum(cof_i) F_i.
    for (std::size_t i = 0; i < m; ++i) rep.matrix[i][j] = ring.neg(std::move(r.cof[i]));
  }
  return rep;
}

template QPoly normal_form(const QRing&, const QPoly&, const std::vector<QPoly>&);
template FpPoly normal_form(const FpRing&, const FpPoly&, const std::vector<FpPoly>&);
template QPoly spoly(const QRing&, const QPoly&, const QPoly&);
template FpPoly spoly(const FpRing&, const FpPoly&, const FpPoly&);
template ReducedGB<RationalField> buchberger_reduced(const QRing&, const std::vector<QPoly>&,
                                                     const GbOptions&, GbStats*);
template ReducedGB<PrimeField> buchberger_reduced(const FpRing&, const std::vector<FpPoly>&,
                                                  const GbOptions&, GbStats*);
template ReducedGB<RationalField> interreduce_basis(const QRing&, std::vector<QPoly>);
template ReducedGB<PrimeField> interreduce_basis(const FpRing&, std::vector<FpPoly>);
template bool is_groebner_basis(const QRing&, const std::vector<QPoly>&);
template bool is_groebner_basis(const FpRing&, const std::vector<FpPoly>&);
template bool is_reduced(const QRing&, const std::vector<QPoly>&);
template bool is_reduced(const FpRing&, const std::vector<FpPoly>&);

}  // namespace mgb
