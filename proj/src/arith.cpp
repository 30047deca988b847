#include "mgb/arith.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

constexpr unsigned long kTrialLimit = 1UL << 20;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

constexpr unsigned long kRhoSteps = 1UL << 19;
constexpr unsigned long kRhoSeeds = 2;

// Returns 0 when the step budget runs out.
Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  Integer y = seed % n, c = (seed * 7 + 1) % n, m = 64;
  Integer g = 1, r = 1, q = 1, x, ys;
  auto step = [&](Integer& v) {
    v = (v * v + c) % n;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) step(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      Integer limit = std::min<Integer>(m, r - k);
      for (Integer i = 0; i < limit; ++i) {
        step(y);
        Integer diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
    if (r > kRhoSteps) return 0;
  }
  if (g == n) {
    do {
      step(ys);
      Integer diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g;
}

void split(const Integer& n, std::map<Integer, unsigned>& out, Integer& stuck) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // rho is hopeless on p^k with large p, so peel off perfect powers first.
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Integer, unsigned> sub;
        Integer sub_stuck = 1;
        split(root, sub, sub_stuck);
        for (unsigned long j = 0; j < k; ++j) stuck *= sub_stuck;
        for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
        return;
      }
    }
  }
  for (unsigned long seed = 2; seed < 2 + kRhoSeeds; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != 0 && d != n && d != 1) {
      split(d, out, stuck);
      split(n / d, out, stuck);
      return;
    }
  }
  stuck *= n;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("division by zero in rational literal");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) != 0) return is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

PartialFactorization factorize_partial(const Integer& n) {
  if (n < 1) throw DomainError("factorize: argument must be positive");
  std::map<Integer, unsigned> found;
  Integer rest = n;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (rest == 1) break;
    if (Integer(p) * p > rest) {
      ++found[rest];
      rest = 1;
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      ++found[Integer(p)];
      rest /= p;
    }
  }
  Integer stuck = 1;
  split(rest, found, stuck);
  return {{found.begin(), found.end()}, stuck};
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
  auto f = factorize_partial(n);
  if (f.unfactored != 1) {
    throw BudgetExceeded("factorize: a composite factor with " +
                         std::to_string(mpz_sizeinbase(f.unfactored.get_mpz_t(), 10)) +
                         " digits resisted Pollard rho");
  }
  return std::move(f.factors);
}

bool same_radical(const Integer& a, const Integer& b) {
  if (a < 1 || b < 1) throw DomainError("same_radical: arguments must be positive");
  // a | b^k for some k iff stripping gcds with b reaches 1.
  auto divides_power = [](Integer x, const Integer& y) {
    for (Integer g = gcd(x, y); g != 1; g = gcd(x, y)) x /= g;
    return x == 1;
  };
  return divides_power(a, b) && divides_power(b, a);
}

Integer rad(const Integer& n) {
  if (n < 1) throw DomainError("rad: argument must be positive");
  Integer result = 1;
  for (const auto& [p, e] : factorize(n)) result *= p;
  return result;
}

std::string format_factorization(const Integer& n) {
  if (n == 1) return "1";
  auto [factors, stuck] = factorize_partial(n);
  if (stuck == 1 && factors.size() == 1 && factors.front().second == 1) return n.get_str();
  std::ostringstream out;
  out << n.get_str() << " = ";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out << " * ";
    out << factors[i].first.get_str();
    if (factors[i].second > 1) out << '^' << factors[i].second;
  }
  if (stuck != 1) out << (factors.empty() ? "" : " * ") << stuck.get_str() << " (composite, unfactored)";
  return out.str();
}

CrtResult crt_pair(const Integer& r1, const Integer& m1, const Integer& r2,
                   const Integer& m2) {
  if (m1 < 2 || m2 < 2) throw DomainError("crt_pair: moduli must be >= 2");
  if (gcd(m1, m2) != 1) throw DomainError("crt_pair: moduli are not coprime");
  Integer modulus = m1 * m2;
  Integer a = r1 % m1;
  if (a < 0) a += m1;
  Integer b = r2 % m2;
  if (b < 0) b += m2;
  // x = a + m1 * ((b - a) * m1^{-1} mod m2)
  Integer inv;
  mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  Integer t = ((b - a) % m2) * inv % m2;
  if (t < 0) t += m2;
  Integer residue = a + m1 * t;
  return {residue, modulus};
}

std::optional<Rational> rational_reconstruct(const Integer& r, const Integer& m) {
  if (m < 1 || r < 0 || r >= m) {
    throw DomainError("rational_reconstruct: requires 0 <= r < m");
  }
  if (r == 0) return Rational(0);
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  // Extended Euclid on (m, r) stopping when the remainder drops to the bound.
  Integer r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Integer num = r1, den = t1;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den == 0 || den > bound || abs(num) > bound) return std::nullopt;
  if (gcd(den, m) != 1 || gcd(num, den) != 1) return std::nullopt;
  return make_rational(num, den);
}

Integer mod_inverse(const Integer& a, const Integer& p) {
  if (p < 2) throw DomainError("mod_inverse: modulus must be >= 2");
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw BadPrimeError("mod_inverse: " + a.get_str() + " is not invertible modulo " +
                        p.get_str());
  }
  return inv;
}

Integer reduce_rational(const Rational& q, const Integer& p) {
  Integer num = q.get_num() % p;
  if (num < 0) num += p;
  if (q.get_den() == 1) return num;
  if (mpz_divisible_p(q.get_den().get_mpz_t(), p.get_mpz_t()) != 0) {
    throw BadPrimeError("prime " + p.get_str() + " divides the denominator " +
                        q.get_den().get_str());
  }
  return num * mod_inverse(q.get_den(), p) % p;
}

PrimeGenerator::PrimeGenerator(unsigned bits, std::uint64_t seed)
    : bits_(bits), rng_(seed) {
  if (bits < 2 || bits > 62) {
    throw DomainError("prime size must be between 2 and 62 bits");
  }
}

std::uint64_t PrimeGenerator::next() {
  const std::uint64_t lo = std::uint64_t{1} << (bits_ - 1);
  const std::uint64_t hi = (std::uint64_t{1} << bits_) - 1;
  std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
  // Generous cap: small bit sizes contain only a handful of primes.
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    std::uint64_t candidate = dist(rng_);
    if (is_prime_u64(candidate) && issued_.insert(candidate).second) return candidate;
  }
  throw DomainError("no unused " + std::to_string(bits_) + "-bit primes left");
}

}  // namespace mgb
