#include <doctest.h>

#include <random>
#include <set>

#include "goldens.hpp"
#include "helpers.hpp"
#include "mgb/errors.hpp"
#include "mgb/poly_ops.hpp"
#include "mgb/prime_class.hpp"

using namespace mgb;
using mgb::test::ideal_of;
using mgb::test::poly_of;

namespace {

std::set<std::string> as_set(const std::vector<FpPoly>& fs, const Names& names) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(format_poly(f, names));
  return out;
}

std::vector<ZPoly> prims(const std::vector<QPoly>& G) {
  std::vector<ZPoly> out;
  for (const auto& g : G) out.push_back(prim(g));
  return out;
}

TermOrdering y_first() {
  return TermOrdering::matrix(2, std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
}

}  // namespace

TEST_CASE("sigma-denominators") {
  Ideal D = ideal_of("ring QQ[x,y] degrevlex; ideal(x + 2y);");
  CHECK(den_sigma(D, TermOrdering::degrevlex(2)) == 1);
  CHECK(den_sigma(D, TermOrdering::lex(2)) == 1);
  CHECK(den_sigma(D, y_first()) == 2);
  Ideal R = ideal_of(golden::kRadNeeded);
  CHECK(den_sigma(R, R.ring.order) == 4);
  Ideal G = ideal_of(golden::kGFandGZ);
  CHECK(den_sigma(G, G.ring.order) == 30);
  Ideal Z = ideal_of("ring QQ[x] lex; ideal();");
  CHECK(den_sigma(Z, Z.ring.order) == 1);
}

TEST_CASE("classification of primes") {
  Ideal M = ideal_of(golden::kManyBadPrimes);
  PrimeClassifier pc(M);
  for (long p : {2L, 3L, 5L, 7L, 11L, 55817L, 1000003L}) {
    CHECK(pc.classify(M.ring.order, p).status == PrimeStatus::SigmaGood);
  }
  auto lex = TermOrdering::lex(3);
  for (long p : {2L, 7L, 11L, 55817L}) {
    auto v = pc.classify(lex, p);
    CHECK(v.status == PrimeStatus::SigmaBad);
    REQUIRE(v.witness.has_value());
    CHECK(den(*v.witness) % p == 0);
  }
  for (long p : {3L, 5L, 13L, 55819L}) CHECK(pc.classify(lex, p).status == PrimeStatus::SigmaGood);
  // The large fifth bad prime.
  Integer d = pc.den_sigma(lex);
  auto f = factorize(d);
  REQUIRE(f.size() == 5);
  CHECK(f[0].first == 2);
  CHECK(f[1].first == 7);
  CHECK(f[2].first == 11);
  CHECK(f[3].first == 55817);
  CHECK(f[4].first > Integer("180000000000000000000000000000000000000000000000000000000000000000"));
  CHECK(f[4].first < Integer("190000000000000000000000000000000000000000000000000000000000000000"));
  CHECK(pc.classify(lex, f[4].first).status == PrimeStatus::SigmaBad);

  Ideal R = ideal_of(golden::kRadNeeded);
  CHECK(classify_prime(R, R.ring.order, 3).status == PrimeStatus::SigmaGood);
  CHECK(classify_prime(R, R.ring.order, 2).status == PrimeStatus::SigmaBad);
  CHECK_THROWS_AS(classify_prime(R, R.ring.order, 4), DomainError);
}

TEST_CASE("(p, sigma)-reductions") {
  Ideal S = ideal_of(golden::kStrictInclusion);
  auto red = reduction(S, S.ring.order, 2);
  CHECK(as_set(red.gens, S.ring.names) == std::set<std::string>{"y + z", "x"});
  // <pi_2(F)> = <x> is strictly smaller.
  FpRing r2(PrimeField(2), S.ring.order);
  std::vector<FpPoly> pf;
  for (const auto& f : S.gens) pf.push_back(reduce_mod_p(f, PrimeField(2)));
  auto gb_pf = buchberger_reduced(r2, pf).elements;
  CHECK(contained_in(r2, pf, red.gens));
  CHECK_FALSE(contained_in(r2, red.gens, gb_pf));

  Ideal R = ideal_of(golden::kRadNeeded);
  CHECK_THROWS_AS(reduction(R, R.ring.order, 2), BadPrimeError);

  // Deltone3 modulo 3 does not depend on the ordering.
  Ideal D = ideal_of(golden::kDeltone3);
  PrimeClassifier pc(D);
  std::vector<TermOrdering> orders = {TermOrdering::degrevlex(3), TermOrdering::lex(3), TermOrdering::deglex(3),
                                      TermOrdering::matrix(3, std::vector<std::vector<std::int64_t>>{
                                                                  {0, 0, 1}, {0, 1, 0}, {1, 0, 0}})};
  FpRing r3(PrimeField(3), D.ring.order);
  auto base = buchberger_reduced(r3, pc.reduction(orders[0], 3).gens).elements;
  for (const auto& o : orders) {
    auto gens = pc.reduction(o, 3).gens;
    auto G = buchberger_reduced(r3, [&] {
      std::vector<FpPoly> v;
      for (auto& g : gens) v.push_back(r3.resort(g));
      return v;
    }()).elements;
    CHECK(G == base);
  }
}

TEST_CASE("Pauer-lucky primes") {
  Ideal G = ideal_of(golden::kGFandGZ);
  ZRing zr(IntegerRing{}, G.ring.order);
  auto v7 = pauer_lucky(zr, prims(G.gens), 7);
  CHECK(v7.status == PrimeStatus::NotPauerLucky);
  REQUIRE(v7.coefficient.has_value());
  CHECK(*v7.coefficient % 7 == 0);
  // 7 is nevertheless sigma-good.
  CHECK(classify_prime(G, G.ring.order, 7).status == PrimeStatus::SigmaGood);
  CHECK(pauer_lucky(zr, prims(G.gens), 11).status == PrimeStatus::PauerLucky);

  Ideal S = ideal_of(golden::kStrictInclusion);
  ZRing zs(IntegerRing{}, S.ring.order);
  CHECK(pauer_lucky(zs, prims(S.gens), 2).status == PrimeStatus::NotPauerLucky);
  CHECK(classify_prime(S, S.ring.order, 2).status == PrimeStatus::SigmaGood);

  Ideal Mo = ideal_of("ring QQ[x,y] degrevlex; ideal(x^2, x*y, y^3);");
  ZRing zm(IntegerRing{}, Mo.ring.order);
  for (long p : {2L, 3L, 5L}) CHECK(pauer_lucky(zm, prims(Mo.gens), p).status == PrimeStatus::PauerLucky);
}

TEST_CASE("relative bad-prime detection") {
  Ideal J = ideal_of(golden::kBadPrimeDetection);
  auto tau = parse_order("elim(s,t)", J.ring.names);
  PrimeClassifier pc(J);
  auto vs = pc.detect_tau_bad(J.ring.order, tau, {2, 3, 5, 7}, 2);
  REQUIRE(vs.size() == 4);
  const char* printed[] = {golden::kDetect2, golden::kDetect3, golden::kDetect5, golden::kDetect7};
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(vs[i].tuple.has_value());
    CHECK(format_tuple(vs[i].tuple->entries, J.ring.names) == printed[i]);
  }
  CHECK(vs[0].status == PrimeStatus::TauBadCertified);
  CHECK(vs[1].status == PrimeStatus::TauBadCertified);
  CHECK(vs[2].status == PrimeStatus::Undecided);
  CHECK(vs[3].status == PrimeStatus::TauBadCertified);
  CHECK(*vs[3].beaten_by_prime == 5);
  // The sequence of comparisons as the primes arrive one at a time.
  CHECK(precedes(*vs[0].tuple, *vs[1].tuple) == TupleCmp::Precedes);
  CHECK(precedes(*vs[1].tuple, *vs[2].tuple) == TupleCmp::Precedes);
  CHECK(precedes(*vs[3].tuple, *vs[2].tuple) == TupleCmp::Precedes);
  // Ground truth: 5 is tau-good, the others tau-bad.
  CHECK(pc.classify(tau, 5).status == PrimeStatus::SigmaGood);
  for (long p : {2L, 3L, 7L}) CHECK(pc.classify(tau, p).status == PrimeStatus::SigmaBad);
  CHECK(format_tuple(os_of_ideal(J, tau).entries, J.ring.names) == golden::kDetect5);

  CHECK(pc.detect_tau_bad(J.ring.order, tau, {3})[0].status == PrimeStatus::Undecided);

  Ideal R = ideal_of(golden::kRadNeeded);
  CHECK_THROWS_AS(detect_tau_bad(R, R.ring.order, TermOrdering::lex(3), {2, 3}), BadPrimeError);
}

TEST_CASE("many bad primes under lex") {
  Ideal M = ideal_of(golden::kManyBadPrimes);
  PrimeClassifier pc(M);
  auto lex = TermOrdering::lex(3);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 101ULL}) {
    CHECK(format_tuple(pc.tau_tuple(M.ring.order, M.ring.order, p).entries, M.ring.names) == golden::kManyDrl);
  }
  CHECK(format_tuple(os_of_ideal(M, M.ring.order).entries, M.ring.names) == golden::kManyDrl);
  CHECK(format_tuple(pc.tau_tuple(M.ring.order, lex, 2).entries, M.ring.names) == golden::kManyLex2);
  CHECK(format_tuple(pc.tau_tuple(M.ring.order, lex, 7).entries, M.ring.names) == golden::kManyLex7);
  CHECK(format_tuple(pc.tau_tuple(M.ring.order, lex, 11).entries, M.ring.names) == golden::kManyLex11);
  CHECK(format_tuple(pc.tau_tuple(M.ring.order, lex, 55817).entries, M.ring.names) == golden::kManyLex11);
  CHECK(format_tuple(pc.tau_tuple(M.ring.order, lex, 13).entries, M.ring.names) == golden::kManyLexGood);
  CHECK(format_tuple(os_of_ideal(M, lex).entries, M.ring.names) == golden::kManyLexGood);
  auto vs = pc.detect_tau_bad(M.ring.order, lex, {2, 3});
  CHECK(vs[0].status == PrimeStatus::TauBadCertified);
  CHECK(vs[1].status == PrimeStatus::Undecided);
}

TEST_CASE("lex basis over F_p from the sigma-basis of a dense ideal") {
  // Reducing the generators against each other on entry used to blow up here.
  Ideal I = ideal_of(
      "ring QQ[x,y,z] degrevlex; ideal(2/3*x*y^2*z + 2*x^3 + 8, 1/7*x^2*y*z - 3/7*y^3*z + 5*y - 5, "
      "2*x*y^3 + 1/5*x*y^2*z + 4*x^3 + 4);");
  PrimeClassifier pc(I);
  auto lex = TermOrdering::lex(3);
  for (std::uint64_t p : {11ULL, 13ULL, 101ULL}) {
    PrimeField f(p);
    FpRing r(f, lex);
    std::vector<FpPoly> direct;
    for (const auto& g : I.gens) direct.push_back(r.resort(reduce_mod_p(g, f)));
    CHECK(pc.tau_basis(I.ring.order, lex, p) == buchberger_reduced(r, direct).elements);
  }
}

TEST_CASE("radical identity") {
  auto R = check_rad_identity(ideal_of(golden::kRadNeeded), TermOrdering::degrevlex(3));
  CHECK(R.rad_den == 2);
  CHECK(R.rad_lcm == 2);
  CHECK(R.equal);
  auto G = check_rad_identity(ideal_of(golden::kGFandGZ), TermOrdering::degrevlex(2));
  CHECK(G.rad_den == 30);
  CHECK(G.rad_lcm == 30);
  CHECK(G.equal);
  auto Mo = check_rad_identity(ideal_of("ring QQ[x,y] degrevlex; ideal(x^2, x*y);"), TermOrdering::degrevlex(2));
  CHECK(Mo.rad_den == 1);
  CHECK(Mo.rad_lcm == 1);
  CHECK_THROWS_AS(check_rad_identity(ideal_of("ring QQ[x] lex; ideal();"), TermOrdering::lex(1)), DomainError);
}
