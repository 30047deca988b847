#pragma once

// Exact integer/rational substrate and the number theory used throughout:
// radicals, CRT, rational reconstruction, modular inverses and primality.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mgb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational num/den (den != 0).
Rational make_rational(const Integer& num, const Integer& den);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Deterministic for n < 2^64; Baillie-PSW plus Miller-Rabin rounds above.
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

struct PartialFactorization {
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer unfactored;  // product of composites rho gave up on, 1 if none
};

/// Trial division up to 2^20, then Pollard-Brent rho with a step budget.
PartialFactorization factorize_partial(const Integer& n);

/// Prime factorization with ascending primes; BudgetExceeded if rho gives up.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// rad(a) == rad(b), without factoring.
bool same_radical(const Integer& a, const Integer& b);

/// Squarefree kernel: the product of the distinct primes dividing n (n >= 1).
Integer rad(const Integer& n);

/// "28 = 2^2 * 7"; "1" for one; "7" for a prime. A composite rho gave up on
/// is printed last, marked unfactored.
std::string format_factorization(const Integer& n);

struct CrtResult {
  Integer residue;
  Integer modulus;
};

/// Combines r1 mod m1 and r2 mod m2 for coprime moduli >= 2. The residue is
/// returned in [0, m1*m2).
CrtResult crt_pair(const Integer& r1, const Integer& m1, const Integer& r2,
                   const Integer& m2);

/// Farey reconstruction: a/b with |a|, b <= floor(sqrt(m/2)), gcd(b, m) = 1
/// and a = r*b (mod m). Requires 0 <= r < m.
std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m);

/// b in [1, p) with a*b = 1 (mod p); throws BadPrimeError when p | a.
Integer mod_inverse(const Integer& a, const Integer& p);

/// Residue of a rational modulo p. Throws BadPrimeError when p divides the
/// denominator.
Integer reduce_rational(const Rational& q, const Integer& p);

/// Samples distinct primes uniformly from [2^(bits-1), 2^bits).
class PrimeGenerator {
 public:
  PrimeGenerator(unsigned bits, std::uint64_t seed);

  std::uint64_t next();
  unsigned bits() const { return bits_; }

 private:
  unsigned bits_;
  std::mt19937_64 rng_;
  std::unordered_set<std::uint64_t> issued_;
};

}  // namespace mgb
