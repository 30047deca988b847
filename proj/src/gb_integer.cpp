#include "mgb/gb_integer.hpp"

#include <algorithm>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

bool lm_divides(const ZPoly& g, const PowerProduct& t, const Integer& c) {
  return g.lt().divides(t) && mpz_divisible_p(c.get_mpz_t(), g.lc().get_mpz_t()) != 0;
}

ZPoly positive(const ZRing& ring, ZPoly f) {
  if (!f.is_zero() && f.lc() < 0) f = ring.neg(std::move(f));
  return f;
}

// Reduces the terms of f from position `from` on; `skip` is excluded.
ZPoly reduce_from(const ZRing& ring, ZPoly cur, const std::vector<ZPoly>& G, std::size_t from,
                  std::size_t skip) {
  std::size_t pos = from;
  while (pos < cur.terms.size()) {
    const auto& t = cur.terms[pos];
    std::ptrdiff_t k = -1;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (i == skip || G[i].is_zero() || !lm_divides(G[i], t.pp, t.coeff)) continue;
      if (k < 0 || ring.cmp(G[i].lt(), G[static_cast<std::size_t>(k)].lt()) < 0) {
        k = static_cast<std::ptrdiff_t>(i);
      }
    }
    if (k < 0) {
      ++pos;
      continue;
    }
    const ZPoly& g = G[static_cast<std::size_t>(k)];
    Integer c;
    mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), g.lc().get_mpz_t());
    // add_scaled keeps the prefix [from, pos) untouched, so restart at pos.
    std::size_t keep = pos;
    ZPoly head;
    head.terms.assign(cur.terms.begin(), cur.terms.begin() + static_cast<std::ptrdiff_t>(keep));
    ZPoly rest = ring.add_scaled(cur, -c, t.pp.quotient(g.lt()), g, keep);
    head.terms.insert(head.terms.end(), rest.terms.begin(), rest.terms.end());
    cur = std::move(head);
  }
  return cur;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  PowerProduct lcm;
  std::uint64_t seq;
};

}  // namespace

ZPoly strong_normal_form(const ZRing& ring, const ZPoly& f, const std::vector<ZPoly>& G) {
  return reduce_from(ring, f, G, 0, G.size());
}

StrongGB strong_gb(const ZRing& ring, const std::vector<ZPoly>& gens, const GbOptions& options,
                   GbStats* stats) {
  GbStats local;
  GbStats& st = stats != nullptr ? *stats : local;
  std::vector<ZPoly> G;
  std::vector<Pair> pairs;
  std::uint64_t seq = 0;

  auto insert = [&](ZPoly h) {
    h = positive(ring, reduce_from(ring, std::move(h), G, 0, G.size()));
    if (h.is_zero()) return;
    std::size_t k = G.size();
    for (std::size_t i = 0; i < k; ++i) {
      pairs.push_back({i, k, lcm(G[i].lt(), h.lt()), seq++});
    }
    G.push_back(std::move(h));
  };

  for (const auto& f : gens) {
    if (!f.is_zero()) insert(ring.resort(f));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t a = 1; a < pairs.size(); ++a) {
      int c = ring.cmp(pairs[a].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && pairs[a].seq < pairs[best].seq)) best = a;
    }
    Pair p = std::move(pairs[best]);
    pairs[best] = std::move(pairs.back());
    pairs.pop_back();

    if (options.max_reductions != 0 && st.reductions >= options.max_reductions) {
      throw BudgetExceeded("S-pair reduction budget of " + std::to_string(options.max_reductions) +
                           " exhausted");
    }
    ++st.reductions;
    // Copies: insert() may grow G.
    ZPoly f = G[p.i], g = G[p.j];
    const Integer& a = f.lc();
    const Integer& b = g.lc();
    PowerProduct qf = p.lcm.quotient(f.lt()), qg = p.lcm.quotient(g.lt());
    Integer d = gcd(a, b);

    bool a_div_b = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
    bool b_div_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
    if (!a_div_b && !b_div_a) {
      // G-polynomial: u*a + v*b = gcd(a, b).
      Integer gg, u, v;
      mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      insert(ring.add_scaled(ring.mul_term(f, u, qf), v, qg, g));
    }
    if (coprime(f.lt(), g.lt()) && d == 1) {
      ++st.pairs_skipped;
      continue;
    }
    Integer l = lcm(a, b);
    insert(ring.add_scaled(ring.mul_term(f, l / a, qf), -(l / b), qg, g));
  }

  // Minimalize: keep one element per minimal leading monomial.
  std::sort(G.begin(), G.end(), [&](const ZPoly& x, const ZPoly& y) {
    int c = ring.cmp(x.lt(), y.lt());
    return c != 0 ? c < 0 : x.lc() < y.lc();
  });
  std::vector<ZPoly> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& h : G) {
      if (&h == &g || h.is_zero()) continue;
      if (!lm_divides(h, g.lt(), g.lc())) continue;
      // Equal leading monomials: keep the first.
      if (h.lt() == g.lt() && h.lc() == g.lc() && &h > &g) continue;
      redundant = true;
      break;
    }
    if (!redundant) minimal.push_back(g);
  }
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    minimal[k] = reduce_from(ring, std::move(minimal[k]), minimal, 1, k);
  }
  return {ring, std::move(minimal)};
}

Integer lcm_sigma(const ZRing& ring, const std::vector<ZPoly>& fs) {
  Integer l = 1;
  for (const auto& f : fs) {
    if (f.is_zero()) throw DomainError("lcm_sigma: zero polynomial");
    l = lcm(l, ring.resort(f).lc());
  }
  return abs(l);
}

Integer lcm_sigma(const StrongGB& B) { return lcm_sigma(B.ring, B.elements); }

std::vector<LeadingMonomial> leading_monomial_set(const StrongGB& B) {
  std::vector<LeadingMonomial> out;
  for (const auto& g : B.elements) out.push_back({g.lt(), abs(g.lc())});
  std::sort(out.begin(), out.end(), [&](const LeadingMonomial& x, const LeadingMonomial& y) {
    int c = B.ring.cmp(x.pp, y.pp);
    return c != 0 ? c < 0 : x.coeff < y.coeff;
  });
  return out;
}

}  // namespace mgb
