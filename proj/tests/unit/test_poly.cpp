#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mgb/errors.hpp"
#include "mgb/poly_ops.hpp"

using namespace mgb;
using mgb::test::poly_of;
using mgb::test::ring_of;

namespace {

// Definitional degrevlex: t > s iff deg t > deg s, or equal degrees and the
// last nonzero entry of exp(t) - exp(s) is negative.
int drl_oracle(const std::vector<int>& t, const std::vector<int>& s) {
  int dt = 0, ds = 0;
  for (int v : t) dt += v;
  for (int v : s) ds += v;
  if (dt != ds) return dt > ds ? 1 : -1;
  for (std::size_t i = t.size(); i-- > 0;) {
    int d = t[i] - s[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

PowerProduct pp(const std::vector<int>& e) {
  PowerProduct t(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) t.set(i, static_cast<unsigned>(e[i]));
  return t;
}

std::vector<std::vector<int>> all_exponents(std::size_t n, int max_deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(n, 0);
  while (true) {
    int d = 0;
    for (int v : e) d += v;
    if (d <= max_deg) out.push_back(e);
    std::size_t i = 0;
    while (i < n && ++e[i] > max_deg) e[i++] = 0;
    if (i == n) break;
  }
  return out;
}

PowerProduct random_pp(std::mt19937_64& rng, std::size_t n, unsigned max_e) {
  std::uniform_int_distribution<unsigned> d(0, max_e);
  PowerProduct t(n);
  for (std::size_t i = 0; i < n; ++i) t.set(i, d(rng));
  return t;
}

}  // namespace

TEST_CASE("degrevlex matches the definitional rule") {
  auto exps = all_exponents(3, 3);
  auto o = TermOrdering::degrevlex(3);
  for (const auto& a : exps) {
    for (const auto& b : exps) REQUIRE(o.compare(pp(a), pp(b)) == drl_oracle(a, b));
  }
  // xyz < x^3 in degrevlex.
  CHECK(o.compare(pp({1, 1, 1}), pp({3, 0, 0})) < 0);
  CHECK(o.compare(pp({2, 1, 0}), pp({2, 1, 0})) == 0);
}

TEST_CASE("lex and deglex basics") {
  auto lex = TermOrdering::lex(3);
  CHECK(lex.compare(pp({0, 0, 26}), pp({0, 1, 0})) < 0);
  auto dl = TermOrdering::deglex(3);
  CHECK(dl.compare(pp({0, 0, 26}), pp({0, 1, 0})) > 0);
  CHECK(dl.compare(pp({1, 0, 1}), pp({0, 2, 0})) > 0);
  CHECK_THROWS_AS(lex.compare(pp({1, 0}), pp({0, 1})), ArityError);
}

TEST_CASE("elimination ordering reproduces the printed detection tuple") {
  RingSpec ring = ring_of("ring QQ[x,y,z,w,s,t] elim(s,t)");
  // Increasing tuple printed for p = 7 in the bad-prime detection example.
  const char* printed[] = {"z^3",   "y^2*z^2", "y^3*z", "y^4",   "s*z",   "s*y",   "s*x",
                           "t*w^2", "s*w^2",   "t*z*w", "t*z^2", "t*y*z", "t*y^2", "t^2*w",
                           "s*t*w", "s^2*w",   "t^3",   "s*t^2", "s^2*t", "s^3"};
  std::vector<PowerProduct> ts;
  for (const char* m : printed) ts.push_back(poly_of(ring, m).lt());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    INFO(printed[i] << " < " << printed[i + 1]);
    CHECK(ring.order.compare(ts[i], ts[i + 1]) < 0);
  }
  // Every power product involving s or t exceeds every one that does not.
  CHECK(ring.order.compare(poly_of(ring, "x^9*y^9*z^9*w^9").lt(), poly_of(ring, "t").lt()) < 0);
}

TEST_CASE("orderings are multiplicative and 1 is minimal") {
  std::mt19937_64 rng(3);
  std::vector<TermOrdering> orders = {
      TermOrdering::lex(4), TermOrdering::deglex(4), TermOrdering::degrevlex(4),
      TermOrdering::elim(4, {1, 3}),
      TermOrdering::matrix(4, std::vector<std::vector<std::int64_t>>{
                                  {3, 1, 0, 2}, {0, 1, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}})};
  for (const auto& o : orders) {
    for (int i = 0; i < 2000; ++i) {
      auto t = random_pp(rng, 4, 5), s = random_pp(rng, 4, 5), u = random_pp(rng, 4, 3);
      int c = o.compare(t, s);
      REQUIRE(c == -o.compare(s, t));
      REQUIRE(o.compare(t * u, s * u) == c);
      if (!t.is_one()) REQUIRE(o.compare(t, PowerProduct(4)) > 0);
    }
  }
}

TEST_CASE("matrix ordering validation") {
  using Rows = std::vector<std::vector<std::int64_t>>;
  CHECK_THROWS_AS(TermOrdering::matrix(2, Rows{{1, 1}, {2, 2}}), OrderingError);
  CHECK_THROWS_AS(TermOrdering::matrix(2, Rows{{1, -1}, {0, 1}}), OrderingError);
  CHECK_THROWS_AS(TermOrdering::matrix(2, Rows{{1, 1, 1}}), OrderingError);
  auto o = TermOrdering::matrix(2, {{Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(1)}});
  CHECK(o.rows()[0] == std::vector<std::int64_t>{3, 2});
  // Matrix form of degrevlex agrees with the direct comparator.
  auto drl = TermOrdering::degrevlex(3);
  auto m = TermOrdering::matrix(3, drl.as_matrix());
  for (const auto& a : all_exponents(3, 3)) {
    for (const auto& b : all_exponents(3, 3)) REQUIRE(m.compare(pp(a), pp(b)) == drl.compare(pp(a), pp(b)));
  }
}

TEST_CASE("leading data") {
  RingSpec zz = ring_of("ring ZZ[x,y] degrevlex");
  auto f = poly_of(zz, "6x^2 - 35y^2");
  auto [t, c] = leading(f);
  CHECK(t == pp({2, 0}));
  CHECK(c == 6);
  RingSpec q3 = ring_of("ring QQ[x,y,z] degrevlex");
  auto g = poly_of(q3, "2y - z");
  CHECK(g.lt() == pp({0, 1, 0}));
  CHECK(g.lc() == 2);
  auto k = poly_of(q3, "7/3");
  CHECK(k.lt().is_one());
  CHECK(k.lc() == Rational(7, 3));
  CHECK_THROWS_AS(leading(QPoly{}), DomainError);
}

TEST_CASE("den and prim") {
  RingSpec r1 = ring_of("ring QQ[x] lex");
  auto f = poly_of(r1, "2x + 4/3");
  CHECK(den(f) == 3);
  CHECK(format_poly(prim(f), r1.names) == "3*x + 2");
  CHECK(den(QPoly{}) == 1);
  CHECK_THROWS_AS(prim(QPoly{}), DomainError);

  RingSpec r = ring_of("ring QQ[x,y,z] degrevlex");
  CHECK(den(std::vector<QPoly>{poly_of(r, "x - 1/2"), poly_of(r, "y - 1/3")}) == 6);
  CHECK(format_poly(prim(poly_of(r, "x - 1/4*z")), r.names) == "4*x - z");
  CHECK(format_poly(prim(poly_of(r, "x + y")), r.names) == "x + y");
  CHECK(format_poly(prim(poly_of(r, "-2x + 6/5*y")), r.names) == "5*x - 3*y");
}

TEST_CASE("prim properties on random polynomials") {
  RingSpec r = ring_of("ring QQ[x,y,z] degrevlex");
  QRing qr = r.qring();
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-30, 30), dn(1, 12), nterms(1, 5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Term<Rational>> ts;
    int k = nterms(rng);
    for (int j = 0; j < k; ++j) ts.push_back({random_pp(rng, 3, 3), Rational(coef(rng), dn(rng))});
    for (auto& t : ts) t.coeff.canonicalize();
    QPoly f = qr.make(ts);
    if (f.is_zero()) continue;
    ZPoly g = prim(f);
    CHECK(content(g) == 1);
    CHECK(g.lc() > 0);
    Rational q(coef(rng), dn(rng));
    q.canonicalize();
    if (q == 0) continue;
    CHECK(prim(qr.scale(f, q)) == g);
    // den(f) * f is integral and no prime can be removed from den(f).
    QPoly h = qr.scale(f, Rational(den(f)));
    for (const auto& t : h.terms) CHECK(t.coeff.get_den() == 1);
    for (const auto& [p, e] : factorize(den(f))) {
      QPoly h2 = qr.scale(f, Rational(den(f) / p));
      bool integral = true;
      for (const auto& t : h2.terms) integral = integral && t.coeff.get_den() == 1;
      CHECK_FALSE(integral);
    }
  }
}

TEST_CASE("reduction modulo p is a ring homomorphism") {
  RingSpec r = ring_of("ring QQ[x,y,z] degrevlex");
  QRing qr = r.qring();
  PrimeField f5(5);
  FpRing fr(f5, r.order);
  CHECK(format_poly(reduce_mod_p(poly_of(r, "x - 1/2"), f5), r.names) == "x + 2");
  CHECK(reduce_mod_p(QPoly{}, f5).is_zero());
  CHECK_THROWS_AS(reduce_mod_p(poly_of(r, "x - 1/5"), f5), BadPrimeError);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-20, 20), dn(1, 4), nterms(0, 4);
  PrimeField f7(7);
  FpRing f7r(f7, r.order);
  for (int i = 0; i < 300; ++i) {
    auto rnd = [&] {
      std::vector<Term<Rational>> ts;
      int k = nterms(rng);
      for (int j = 0; j < k; ++j) {
        Rational c(coef(rng), dn(rng));
        c.canonicalize();
        ts.push_back({random_pp(rng, 3, 2), c});
      }
      return qr.make(ts);
    };
    QPoly a = rnd(), b = rnd();
    CHECK(reduce_mod_p(qr.mul(a, b), f7) == f7r.mul(reduce_mod_p(a, f7), reduce_mod_p(b, f7)));
    CHECK(reduce_mod_p(qr.add(a, b), f7) == f7r.add(reduce_mod_p(a, f7), reduce_mod_p(b, f7)));
  }
}

TEST_CASE("arithmetic and canonical printing") {
  RingSpec r = ring_of("ring QQ[x,y,z] degrevlex");
  QRing qr = r.qring();
  auto a = poly_of(r, "x + y"), b = poly_of(r, "x - y");
  CHECK(format_poly(qr.mul(a, b), r.names) == "x^2 - y^2");
  CHECK(format_poly(qr.pow(a, 3), r.names) == "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
  CHECK(format_poly(poly_of(r, "y - 1/2 z"), r.names) == "y - 1/2*z");
  CHECK(format_poly(poly_of(r, "-x*y^2 + 3 - z"), r.names) == "-x*y^2 - z + 3");
  CHECK(format_poly(qr.sub(a, a), r.names) == "0");
  // Re-sorting under another ordering.
  auto f = poly_of(r, "x + y^2");
  CHECK(format_poly(f, r.names) == "y^2 + x");
  CHECK(format_poly(qr.with_order(TermOrdering::lex(3)).resort(f), r.names) == "x + y^2");
}
