#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mgb/arith.hpp"
#include "mgb/power_product.hpp"

namespace mgb {

enum class OrderKind { Lex, DegLex, DegRevLex, Elim, Matrix };

/// A term ordering on power products of a fixed arity. Indeterminate 0 is
/// the largest for lex, deglex and degrevlex.
///
/// Elimination and matrix orderings are both evaluated as weight matrices:
/// t > s iff the first nonzero entry of M*(exp(t) - exp(s)) is positive.
class TermOrdering {
 public:
  TermOrdering() = default;

  static TermOrdering lex(std::size_t arity);
  static TermOrdering deglex(std::size_t arity);
  static TermOrdering degrevlex(std::size_t arity);
  /// Every power product involving an indeterminate of `block` is greater
  /// than every power product in the remaining indeterminates. Ties are
  /// broken by degrevlex on the complement, then degrevlex on the block.
  static TermOrdering elim(std::size_t arity, std::vector<std::size_t> block);
  /// Rational weight rows; throws OrderingError unless the rows have rank
  /// `arity` and every indeterminate is greater than 1.
  static TermOrdering matrix(std::size_t arity, const std::vector<std::vector<Rational>>& rows);
  /// Integer rows, same validation as above.
  static TermOrdering matrix(std::size_t arity, std::vector<std::vector<std::int64_t>> rows);

  OrderKind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  const std::vector<std::size_t>& block() const { return block_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  /// Negative, zero or positive as t <, =, > s.
  int compare(const PowerProduct& t, const PowerProduct& s) const;
  bool greater(const PowerProduct& t, const PowerProduct& s) const { return compare(t, s) > 0; }
  bool less(const PowerProduct& t, const PowerProduct& s) const { return compare(t, s) < 0; }

  /// Weight rows realizing this ordering (degrevlex, lex and deglex included).
  std::vector<std::vector<std::int64_t>> as_matrix() const;

  /// Stable textual identity, e.g. "degrevlex/3", "elim(4,5)/6".
  std::string key() const;

  friend bool operator==(const TermOrdering& a, const TermOrdering& b) {
    return a.kind_ == b.kind_ && a.arity_ == b.arity_ && a.rows_ == b.rows_ &&
           a.block_ == b.block_;
  }

 private:
  OrderKind kind_ = OrderKind::DegRevLex;
  std::size_t arity_ = 0;
  std::vector<std::size_t> block_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Weight rows of degrevlex on arity n: all-ones then -e_{n-1}, ..., -e_1.
std::vector<std::vector<std::int64_t>> degrevlex_rows(std::size_t arity);

}  // namespace mgb
