#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace mgb {

/// An element x_1^a_1 ... x_n^a_n of the monoid of power products.
/// The arity is fixed at construction; the total degree is cached.
class PowerProduct {
 public:
  using Exponent = std::uint32_t;

  PowerProduct() = default;
  /// The unit power product 1 in n indeterminates.
  explicit PowerProduct(std::size_t arity) : exps_(arity, 0) {}
  PowerProduct(std::initializer_list<Exponent> exps);
  explicit PowerProduct(std::span<const Exponent> exps);

  /// x_index in the given arity.
  static PowerProduct variable(std::size_t arity, std::size_t index);

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent e);
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), exps_.size()}; }

  /// True when *this divides other.
  bool divides(const PowerProduct& other) const;
  /// *this / divisor; throws unless divisor | *this.
  PowerProduct quotient(const PowerProduct& divisor) const;

  friend PowerProduct operator*(const PowerProduct& a, const PowerProduct& b);
  friend PowerProduct lcm(const PowerProduct& a, const PowerProduct& b);
  friend PowerProduct gcd(const PowerProduct& a, const PowerProduct& b);
  friend bool coprime(const PowerProduct& a, const PowerProduct& b);

  friend bool operator==(const PowerProduct& a, const PowerProduct& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  /// Raw lexicographic comparison of exponent vectors (container key order,
  /// not a term ordering).
  friend std::strong_ordering operator<=>(const PowerProduct& a, const PowerProduct& b);

  std::size_t hash() const;

 private:
  boost::container::small_vector<Exponent, 8> exps_;
  std::uint64_t degree_ = 0;
};

}  // namespace mgb

template <>
struct std::hash<mgb::PowerProduct> {
  std::size_t operator()(const mgb::PowerProduct& t) const noexcept { return t.hash(); }
};
