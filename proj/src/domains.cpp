#include "mgb/domains.hpp"

#include "mgb/errors.hpp"

namespace mgb {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 62)) throw DomainError("modulus too large: " + std::to_string(p));
  if (!is_prime_u64(p)) throw DomainError("modulus is not prime: " + std::to_string(p));
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw BadPrimeError("inverse of zero in " + name());
  // Extended Euclid on signed 128-bit values.
  __int128 t0 = 0, t1 = 1;
  __int128 r0 = p_, r1 = a;
  while (r1 != 0) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t0 < 0) t0 += p_;
  return static_cast<value_type>(t0);
}

PrimeField::value_type PrimeField::from_integer(const Integer& n) const {
  Integer r = n % Integer(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return r.get_ui();
}

PrimeField::value_type PrimeField::from_rational(const Rational& q) const {
  value_type num = from_integer(q.get_num());
  if (q.get_den() == 1) return num;
  value_type den = from_integer(q.get_den());
  if (den == 0) {
    throw BadPrimeError("prime " + std::to_string(p_) + " divides the denominator " +
                        q.get_den().get_str());
  }
  return mul(num, inv(den));
}

}  // namespace mgb
