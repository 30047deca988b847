#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "mgb/gb_field.hpp"
#include "mgb/poly_ops.hpp"

using namespace mgb;
using mgb::test::ideal_of;
using mgb::test::poly_of;

namespace {

std::set<std::string> as_set(const std::vector<QPoly>& fs, const Names& names) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(format_poly(f, names));
  return out;
}

std::set<std::string> as_set(const std::vector<FpPoly>& fs, const Names& names) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(format_poly(f, names));
  return out;
}

ReducedGB<RationalField> gb(const Ideal& I) { return buchberger_reduced(I.ring.qring(), I.gens); }

// Random sparse ideal with small coefficients: n <= 3, degree <= 4, <= 3 generators.
std::vector<QPoly> random_gens(std::mt19937_64& rng, const QRing& r, int ngens) {
  std::uniform_int_distribution<int> coef(-5, 5), nterms(1, 3), e(0, 2), deg_cap(1, 4);
  std::vector<QPoly> out;
  for (int g = 0; g < ngens; ++g) {
    std::vector<Term<Rational>> ts;
    int cap = deg_cap(rng);
    int k = nterms(rng);
    for (int j = 0; j < k; ++j) {
      PowerProduct t(r.arity());
      int left = cap;
      for (std::size_t i = 0; i < r.arity(); ++i) {
        int v = std::min(e(rng), left);
        left -= v;
        t.set(i, static_cast<unsigned>(v));
      }
      ts.push_back({t, Rational(coef(rng))});
    }
    ts.push_back({PowerProduct(r.arity()), Rational(coef(rng))});
    QPoly f = r.make(ts);
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("reduced basis of the strict inclusion example") {
  Ideal I = ideal_of("ring QQ[x,y,z] degrevlex; ideal(x + 2z, x + 2y);");
  auto G = gb(I);
  CHECK(as_set(G.elements, I.ring.names) == std::set<std::string>{"x + 2*z", "y - z"});
  // Increasing leading terms.
  CHECK(format_list(G.elements, I.ring.names) == "[y - z, x + 2*z]");

  PrimeField f2(2);
  FpRing r2(f2, I.ring.order);
  std::vector<FpPoly> pf, pg;
  for (const auto& f : I.gens) pf.push_back(reduce_mod_p(f, f2));
  for (const auto& g : G.elements) pg.push_back(reduce_mod_p(g, f2));
  CHECK(format_list(buchberger_reduced(r2, pf).elements, I.ring.names) == "[x]");
  CHECK(as_set(buchberger_reduced(r2, pg).elements, I.ring.names) ==
        std::set<std::string>{"y + z", "x"});
}

TEST_CASE("reduced bases of further printed examples") {
  Ideal I = ideal_of("ring QQ[x,y,z] degrevlex; ideal(2x - y, 2y - z);");
  CHECK(as_set(gb(I).elements, I.ring.names) ==
        std::set<std::string>{"y - 1/2*z", "x - 1/4*z"});

  Ideal J = ideal_of("ring QQ[x,y] degrevlex; ideal(x^2*y - 7/2*y, x*y^2 - 3/5*x);");
  CHECK(format_list(gb(J).elements, J.ring.names) ==
        "[x^2 - 35/6*y^2, y^3 - 3/5*y, x*y^2 - 3/5*x]");

  Ideal K = ideal_of("ring QQ[x,y] degrevlex; ideal(x + y + 1, x^2 + 2x + y + 1, y^3);");
  CHECK(format_list(gb(K).elements, K.ring.names) == "[y, x + 1]");
}

TEST_CASE("twelve fan bases of the Deltone3 ideal are reproduced by suitable orderings") {
  Ideal I = ideal_of("ring QQ[x,y,z] lex; ideal(x^2 - y, x*y + z + 1, z^2 + x);");
  // lex with x > y > z: the last printed basis [x + z^2, y - z^4, z^6 - z - 1].
  CHECK(as_set(gb(I).elements, I.ring.names) ==
        std::set<std::string>{"x + z^2", "y - z^4", "z^6 - z - 1"});
  // lex with y > x > z, realized as a matrix ordering.
  QRing r = I.ring.qring(TermOrdering::matrix(3, std::vector<std::vector<std::int64_t>>{
                                                     {0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  auto G = buchberger_reduced(r, I.gens_under(r.order()));
  CHECK(as_set(G.elements, I.ring.names) ==
        std::set<std::string>{"x + z^2", "y - z^4", "z^6 - z - 1"});
  // lex with z > y > x: [z + x^3 + 1, y - x^2, x^6 + 2x^3 + x + 1].
  QRing rz = I.ring.qring(TermOrdering::matrix(3, std::vector<std::vector<std::int64_t>>{
                                                      {0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  auto Gz = buchberger_reduced(rz, I.gens_under(rz.order()));
  CHECK(as_set(Gz.elements, I.ring.names) ==
        std::set<std::string>{"z + x^3 + 1", "y - x^2", "x^6 + 2*x^3 + x + 1"});
}

TEST_CASE("zero and unit ideals") {
  Ideal Z = ideal_of("ring QQ[x,y] degrevlex; ideal();");
  CHECK(gb(Z).elements.empty());
  Ideal Z2 = ideal_of("ring QQ[x,y] degrevlex; ideal(0, x - x);");
  CHECK(gb(Z2).elements.empty());
  Ideal U = ideal_of("ring QQ[x,y] degrevlex; ideal(x, x + 3);");
  auto G = gb(U);
  CHECK(G.is_unit_ideal());
  CHECK(format_list(G.elements, U.ring.names) == "[1]");
}

TEST_CASE("normal forms") {
  Ideal I = ideal_of("ring QQ[x,y,z] degrevlex; ideal(x + 2z, x + 2y);");
  auto G = gb(I);
  QRing r = I.ring.qring();
  CHECK(format_poly(normal_form(r, poly_of(I.ring, "x^2"), G.elements), I.ring.names) == "4*z^2");
  CHECK(normal_form(r, poly_of(I.ring, "(x + 2z)*(y^2 + 1)"), G.elements).is_zero());
}

TEST_CASE("min_lt") {
  Ideal I = ideal_of("ring QQ[x,y,z] degrevlex; ideal(x^2*y + 7x*y^2 - 2, y^3 + x^2*z, z^3 + x^2 - y);");
  CHECK(format_tuple(min_lt(gb(I)), I.ring.names) == "[z^3, y^3, x^2*y, x^4*z, x^6]");
  Ideal Z = ideal_of("ring QQ[x] lex; ideal();");
  CHECK(min_lt(gb(Z)).empty());
}

TEST_CASE("representation of the reduced basis") {
  Ideal I = ideal_of("ring QQ[x,y,z] degrevlex; ideal(x + 2z, x + 2y);");
  QRing r = I.ring.qring();
  // Basis in the printed order [x + 2z, y - z].
  std::vector<QPoly> G = {poly_of(I.ring, "x + 2z"), poly_of(I.ring, "y - z")};
  auto rep = represent(r, G, I.gens);
  auto entry = [&](std::size_t i, std::size_t j) { return format_poly(rep.matrix[i][j], I.ring.names); };
  CHECK(entry(0, 0) == "1");
  CHECK(entry(1, 0) == "0");
  CHECK(entry(0, 1) == "-1/2");
  CHECK(entry(1, 1) == "1/2");

  auto id = represent(r, I.gens, I.gens);
  CHECK(entry(0, 0) == "1");
  CHECK(format_poly(id.matrix[0][1], I.ring.names) == "0");
  CHECK(format_poly(id.matrix[1][1], I.ring.names) == "1");

  RingSpec r1 = mgb::test::ring_of("ring QQ[x] lex");
  auto rep2 = represent(r1.qring(), {poly_of(r1, "x")}, {poly_of(r1, "2x")});
  CHECK(format_poly(rep2.matrix[0][0], r1.names) == "1/2");

  CHECK_THROWS_AS(represent(r, {poly_of(I.ring, "z")}, I.gens), DomainError);
}

TEST_CASE("representation reproduces G on random ideals") {
  std::mt19937_64 rng(101);
  RingSpec rs = mgb::test::ring_of("ring QQ[x,y,z] degrevlex");
  QRing r = rs.qring();
  for (int i = 0; i < 40; ++i) {
    auto F = random_gens(rng, r, 2);
    if (F.empty()) continue;
    auto G = buchberger_reduced(r, F);
    auto rep = represent(r, G.elements, F);
    for (std::size_t j = 0; j < G.elements.size(); ++j) {
      QPoly sum;
      for (std::size_t k = 0; k < F.size(); ++k) sum = r.add(sum, r.mul(F[k], rep.matrix[k][j]));
      CHECK(sum == G.elements[j]);
    }
  }
}

TEST_CASE("uniqueness under permutation and pair strategy, and basic invariants") {
  std::mt19937_64 rng(7);
  std::vector<TermOrdering> orders = {TermOrdering::degrevlex(3), TermOrdering::lex(3),
                                      TermOrdering::deglex(3)};
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto& o = orders[static_cast<std::size_t>(i) % orders.size()];
    QRing r(RationalField{}, o);
    auto F = random_gens(rng, r, 3);
    GbOptions fifo;
    // FIFO selection under lex can blow up inside a single reduction.
    if (o.kind() == OrderKind::DegRevLex) fifo.strategy = PairStrategy::Fifo;
    fifo.max_reductions = 5000;
    GbOptions normal;
    normal.max_reductions = 5000;
    ReducedGB<RationalField> G1{r, {}}, G2{r, {}};
    try {
      G1 = buchberger_reduced(r, F, normal);
      auto shuffled = F;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      G2 = buchberger_reduced(r, shuffled, fifo);
    } catch (const BudgetExceeded&) {
      continue;
    }
    ++checked;
    REQUIRE(G1.elements == G2.elements);
    CHECK(is_reduced(r, G1.elements));
    CHECK(is_groebner_basis(r, G1.elements));
    for (std::size_t k = 0; k + 1 < G1.elements.size(); ++k) {
      CHECK(r.cmp(G1.elements[k].lt(), G1.elements[k + 1].lt()) < 0);
    }
    for (const auto& f : F) CHECK(normal_form(r, f, G1.elements).is_zero());
    // Idempotence of normal forms.
    QPoly h = r.mul(F.front(), r.add(r.variable(0), r.one()));
    h = r.add(h, r.variable(2));
    QPoly nf = normal_form(r, h, G1.elements);
    CHECK(normal_form(r, nf, G1.elements) == nf);
  }
  CHECK(checked >= 150);
}

TEST_CASE("reduction commutes with pi_p for good primes") {
  std::mt19937_64 rng(19);
  RingSpec rs = mgb::test::ring_of("ring QQ[x,y,z] degrevlex");
  QRing r = rs.qring();
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto F = random_gens(rng, r, 3);
    if (F.empty()) continue;
    GbOptions opts;
    opts.max_reductions = 5000;
    ReducedGB<RationalField> G{r, {}};
    try {
      G = buchberger_reduced(r, F, opts);
    } catch (const BudgetExceeded&) {
      continue;
    }
    Integer d = den(G.elements);
    for (unsigned long p : {3UL, 7UL, 101UL}) {
      if (d % p == 0) continue;
      PrimeField fp(p);
      FpRing rp(fp, r.order());
      std::vector<FpPoly> img;
      for (const auto& g : G.elements) img.push_back(reduce_mod_p(g, fp));
      auto Gp = buchberger_reduced(rp, img);
      REQUIRE(Gp.elements == img);
      // NF commutes with pi_p.
      QPoly f = r.add(r.mul(F.front(), r.variable(1)), r.pow(r.variable(0), 3));
      f = r.add(f, r.constant(Rational(1, 7)));
      if (p == 7) continue;
      CHECK(reduce_mod_p(normal_form(r, f, G.elements), fp) ==
            normal_form(rp, reduce_mod_p(f, fp), Gp.elements));
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("budget exhaustion is reported") {
  Ideal I = ideal_of("ring QQ[x,y,z] lex; ideal(x^2*y + 7x*y^2 - 2, y^3 + x^2*z, z^3 + x^2 - y);");
  GbOptions opts;
  opts.max_reductions = 3;
  CHECK_THROWS_AS(buchberger_reduced(I.ring.qring(), I.gens, opts), BudgetExceeded);
}
