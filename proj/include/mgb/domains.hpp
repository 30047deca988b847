#pragma once

// Coefficient domains. Each exposes value_type plus the arithmetic the
// polynomial layer needs; PrimeField carries its modulus at runtime.

#include <cstdint>
#include <string>

#include "mgb/arith.hpp"

namespace mgb {

struct RationalField {
  using value_type = Rational;
  static constexpr bool is_field = true;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const { return 1 / a; }
  value_type div(const value_type& a, const value_type& b) const { return a / b; }
  value_type from_rational(const Rational& q) const { return q; }
  std::string name() const { return "QQ"; }
  bool operator==(const RationalField&) const = default;
};

struct IntegerRing {
  using value_type = Integer;
  static constexpr bool is_field = false;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  /// Exact division; the caller guarantees b | a.
  value_type div(const value_type& a, const value_type& b) const {
    value_type q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  bool divides(const value_type& d, const value_type& a) const {
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
  }
  std::string name() const { return "ZZ"; }
  bool operator==(const IntegerRing&) const = default;
};

/// Z/pZ for a prime p < 2^62, elements stored as residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr bool is_field = true;

  /// Validates primality of p; throws DomainError otherwise.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_one(value_type a) const { return a == 1; }
  value_type add(value_type a, value_type b) const {
    value_type s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(static_cast<unsigned __int128>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_integer(const Integer& n) const;
  /// Throws BadPrimeError when p divides the denominator of q.
  value_type from_rational(const Rational& q) const;

  std::string name() const { return "ZZ/(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t p_;
};

}  // namespace mgb
