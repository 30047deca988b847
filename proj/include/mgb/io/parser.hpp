#pragma once

// Input format:
//
//   ring QQ[x, y, z] degrevlex;
//   ideal(x^2 - y, x*y + z + 1, z^2 + x);
//   sigma elim(x, y);          optional directives
//   tau lex;
//   primes 2, 3, 5;
//   poly x^3 - 2/3*y;
//
// Coefficient rings: QQ, ZZ, ZZ/(p). Orderings: lex, deglex, degrevlex,
// elim(names), matrix([..], [..]). Comments run from '//' or '#' to the end
// of the line.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mgb/ideal.hpp"

namespace mgb {

enum class ParseErrorKind { Lexical, Syntax, Arity, UnknownIndeterminate, NonPrimeModulus, Semantic };

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

struct ParsedInput {
  RingSpec ring;
  std::vector<Ideal> ideals;
  std::optional<TermOrdering> sigma;
  std::optional<TermOrdering> tau;
  std::vector<Integer> primes;
  /// Extra polynomials, sorted under ring.order.
  std::vector<QPoly> polys;
};

ParsedInput parse_input(std::string_view text);

/// An ordering expression such as "elim(s,t)" over the given names.
TermOrdering parse_order(std::string_view text, const std::vector<std::string>& names);

/// A polynomial over the ring, sorted under ring.order and normalized to
/// the ring's coefficient domain.
QPoly parse_poly(std::string_view text, const RingSpec& ring);

/// "2,3,5" -> primes; every entry must be prime.
std::vector<Integer> parse_prime_list(std::string_view text);

/// Short description of the grammar, printed on usage errors.
std::string grammar_help();

}  // namespace mgb
