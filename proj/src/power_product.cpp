#include "mgb/power_product.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

void check_same_arity(const PowerProduct& a, const PowerProduct& b) {
  if (a.arity() != b.arity()) {
    throw ArityError("power products of arity " + std::to_string(a.arity()) + " and " +
                     std::to_string(b.arity()) + " mixed");
  }
}

}  // namespace

PowerProduct::PowerProduct(std::initializer_list<Exponent> exps)
    : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) degree_ += e;
}

PowerProduct::PowerProduct(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) degree_ += e;
}

PowerProduct PowerProduct::variable(std::size_t arity, std::size_t index) {
  PowerProduct t(arity);
  t.set(index, 1);
  return t;
}

void PowerProduct::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

bool PowerProduct::divides(const PowerProduct& other) const {
  if (degree_ > other.degree_) return false;
  const std::size_t n = exps_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

PowerProduct PowerProduct::quotient(const PowerProduct& divisor) const {
  check_same_arity(*this, divisor);
  PowerProduct q = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw DomainError("power product quotient is not exact");
    q.exps_[i] -= divisor.exps_[i];
  }
  q.degree_ = degree_ - divisor.degree_;
  return q;
}

PowerProduct operator*(const PowerProduct& a, const PowerProduct& b) {
  check_same_arity(a, b);
  PowerProduct r = a;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<PowerProduct::Exponent>::max()) {
      throw DomainError("exponent overflow");
    }
    r.exps_[i] = static_cast<PowerProduct::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

PowerProduct lcm(const PowerProduct& a, const PowerProduct& b) {
  check_same_arity(a, b);
  PowerProduct r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

PowerProduct gcd(const PowerProduct& a, const PowerProduct& b) {
  check_same_arity(a, b);
  PowerProduct r = a;
  r.degree_ = 0;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const PowerProduct& a, const PowerProduct& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const PowerProduct& a, const PowerProduct& b) {
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(),
                                                b.exps_.begin(), b.exps_.end());
}

std::size_t PowerProduct::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace mgb
