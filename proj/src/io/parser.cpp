#include "mgb/io/parser.hpp"

#include <cctype>
#include <unordered_map>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

// Limits that keep hostile inputs from exhausting time or memory.
constexpr std::size_t kMaxDepth = 200;
constexpr std::size_t kMaxTerms = 20000;
constexpr std::size_t kMaxProductWork = 4'000'000;
constexpr unsigned long kMaxMonomialExponent = 1UL << 20;
constexpr unsigned long kMaxPolyExponent = 1000;

enum class Tok { Name, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c) != 0) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    std::size_t start = i, l = line, cl = col;
    if (std::isalpha(c) != 0 || c == '_') {
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) != 0 || src[i] == '_')) {
        advance(1);
      }
      out.push_back({Tok::Name, std::string(src.substr(start, i - start)), l, cl});
    } else if (std::isdigit(c) != 0) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])) != 0) advance(1);
      if (i - start > 4000) throw ParseError(ParseErrorKind::Lexical, l, cl, "integer literal too long");
      out.push_back({Tok::Int, std::string(src.substr(start, i - start)), l, cl});
    } else if (std::string_view(";,[]()+-*/^").find(static_cast<char>(c)) != std::string_view::npos) {
      advance(1);
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), l, cl});
    } else {
      std::string shown = std::isprint(c) != 0 ? std::string(1, static_cast<char>(c))
                                               : "byte " + std::to_string(static_cast<int>(c));
      throw ParseError(ParseErrorKind::Lexical, l, cl, "unexpected character '" + shown + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  ParsedInput parse_file() {
    ParsedInput in;
    in.ring = parse_ring();
    set_ring(in.ring);
    expect(";");
    bool any_ideal = false;
    while (peek().kind != Tok::End) {
      const Token& kw = peek();
      if (kw.kind != Tok::Name) fail(ParseErrorKind::Syntax, kw, "expected a statement");
      if (kw.text == "ideal") {
        next();
        in.ideals.push_back(parse_ideal_body());
        any_ideal = true;
      } else if (kw.text == "sigma") {
        next();
        in.sigma = parse_order();
      } else if (kw.text == "tau") {
        next();
        in.tau = parse_order();
      } else if (kw.text == "primes") {
        next();
        in.primes.push_back(parse_prime());
        while (accept(",")) in.primes.push_back(parse_prime());
      } else if (kw.text == "poly") {
        next();
        const Token& at = peek();
        in.polys.push_back(normalize(parse_expr(), at));
      } else {
        fail(ParseErrorKind::Syntax, kw, "unknown statement '" + kw.text + "'");
      }
      expect(";");
    }
    if (!any_ideal) fail(ParseErrorKind::Syntax, peek(), "expected at least one ideal(...) statement");
    return in;
  }

  void set_ring(const RingSpec& ring) {
    ring_ = ring;
    qr_.emplace(RationalField{}, ring.order);
    index_.clear();
    for (std::size_t i = 0; i < ring.names.size(); ++i) index_[ring.names[i]] = i;
  }

  TermOrdering parse_order() {
    const Token& t = peek();
    if (t.kind != Tok::Name) fail(ParseErrorKind::Syntax, t, "expected a term ordering");
    next();
    const std::size_t n = ring_.names.size();
    if (t.text == "lex") return TermOrdering::lex(n);
    if (t.text == "deglex") return TermOrdering::deglex(n);
    if (t.text == "degrevlex") return TermOrdering::degrevlex(n);
    if (t.text == "elim") {
      expect("(");
      std::vector<std::size_t> block;
      do {
        const Token& v = peek();
        if (v.kind != Tok::Name) fail(ParseErrorKind::Syntax, v, "expected an indeterminate");
        auto it = index_.find(v.text);
        if (it == index_.end()) {
          fail(ParseErrorKind::UnknownIndeterminate, v, "'" + v.text + "'");
        }
        block.push_back(it->second);
        next();
      } while (accept(","));
      expect(")");
      try {
        return TermOrdering::elim(n, block);
      } catch (const DomainError& e) {
        fail(ParseErrorKind::Semantic, t, e.what());
      }
    }
    if (t.text == "matrix") {
      expect("(");
      std::vector<std::vector<Rational>> rows;
      do {
        const Token& open = peek();
        expect("[");
        std::vector<Rational> row;
        do {
          row.push_back(parse_signed_rational());
        } while (accept(","));
        expect("]");
        if (row.size() != n) {
          fail(ParseErrorKind::Arity, open,
               "matrix row has " + std::to_string(row.size()) + " entries but the ring has " +
                   std::to_string(n) + " indeterminates");
        }
        rows.push_back(std::move(row));
        if (rows.size() > 4 * n + 16) fail(ParseErrorKind::Semantic, open, "too many matrix rows");
      } while (accept(","));
      expect(")");
      try {
        return TermOrdering::matrix(n, rows);
      } catch (const DomainError& e) {
        fail(ParseErrorKind::Semantic, t, e.what());
      }
    }
    fail(ParseErrorKind::Syntax, t, "unknown term ordering '" + t.text + "'");
  }

  QPoly parse_single_poly() {
    const Token& at = peek();
    QPoly f = normalize(parse_expr(), at);
    if (peek().kind != Tok::End) fail(ParseErrorKind::Syntax, peek(), "unexpected trailing input");
    return f;
  }

  std::vector<Integer> parse_prime_list_only() {
    std::vector<Integer> out;
    out.push_back(parse_prime());
    while (accept(",")) out.push_back(parse_prime());
    if (peek().kind != Tok::End) fail(ParseErrorKind::Syntax, peek(), "unexpected trailing input");
    return out;
  }

  TermOrdering parse_order_only() {
    TermOrdering o = parse_order();
    if (peek().kind != Tok::End) fail(ParseErrorKind::Syntax, peek(), "unexpected trailing input");
    return o;
  }

 private:
  [[noreturn]] static void fail(ParseErrorKind kind, const Token& at, const std::string& msg) {
    throw ParseError(kind, at.line, at.col, msg);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool is(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool accept(const char* p) {
    if (!is(p)) return false;
    next();
    return true;
  }
  void expect(const char* p) {
    if (!accept(p)) {
      const Token& t = peek();
      fail(ParseErrorKind::Syntax, t,
           std::string("expected '") + p + "' but found " +
               (t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'"));
    }
  }

  RingSpec parse_ring() {
    const Token& kw = peek();
    if (kw.kind != Tok::Name || kw.text != "ring") fail(ParseErrorKind::Syntax, kw, "expected 'ring'");
    next();
    RingSpec ring;
    const Token& c = peek();
    if (c.kind != Tok::Name) fail(ParseErrorKind::Syntax, c, "expected QQ, ZZ or ZZ/(p)");
    next();
    if (c.text == "QQ") {
      ring.kind = CoefficientKind::Rational;
    } else if (c.text == "ZZ") {
      if (accept("/")) {
        expect("(");
        const Token& p = peek();
        if (p.kind != Tok::Int) fail(ParseErrorKind::Syntax, p, "expected a prime modulus");
        next();
        Integer m(p.text, 10);
        if (!is_prime(m)) fail(ParseErrorKind::NonPrimeModulus, p, p.text + " is not prime");
        if (m >= Integer(1UL << 62)) {
          fail(ParseErrorKind::Semantic, p, "modulus must be below 2^62");
        }
        expect(")");
        ring.kind = CoefficientKind::Modular;
        ring.modulus = m.get_ui();
      } else {
        ring.kind = CoefficientKind::Integer;
      }
    } else {
      fail(ParseErrorKind::Syntax, c, "unknown coefficient ring '" + c.text + "'");
    }
    expect("[");
    std::unordered_map<std::string, bool> seen;
    do {
      const Token& v = peek();
      if (v.kind != Tok::Name) fail(ParseErrorKind::Syntax, v, "expected an indeterminate name");
      if (seen.contains(v.text)) fail(ParseErrorKind::Semantic, v, "duplicate indeterminate '" + v.text + "'");
      seen[v.text] = true;
      ring.names.push_back(v.text);
      next();
    } while (accept(","));
    expect("]");
    if (ring.names.size() > 64) fail(ParseErrorKind::Semantic, kw, "too many indeterminates");
    set_ring(ring);
    ring.order = parse_order();
    return ring;
  }

  Ideal parse_ideal_body() {
    Ideal I;
    I.ring = ring_;
    expect("(");
    if (accept(")")) return I;
    do {
      const Token& at = peek();
      QPoly f = normalize(parse_expr(), at);
      if (!f.is_zero()) I.gens.push_back(std::move(f));
    } while (accept(","));
    expect(")");
    return I;
  }

  Integer parse_prime() {
    const Token& t = peek();
    if (t.kind != Tok::Int) fail(ParseErrorKind::Syntax, t, "expected a prime");
    next();
    Integer p(t.text, 10);
    if (!is_prime(p)) fail(ParseErrorKind::NonPrimeModulus, t, t.text + " is not prime");
    return p;
  }

  Rational parse_signed_rational() {
    bool neg = accept("-");
    const Token& t = peek();
    if (t.kind != Tok::Int) fail(ParseErrorKind::Syntax, t, "expected an integer weight");
    next();
    Integer num(t.text, 10), den = 1;
    if (accept("/")) {
      const Token& d = peek();
      if (d.kind != Tok::Int) fail(ParseErrorKind::Syntax, d, "expected a denominator");
      next();
      den = Integer(d.text, 10);
      if (den == 0) fail(ParseErrorKind::Semantic, d, "division by zero");
    }
    Rational q = make_rational(num, den);
    return neg ? Rational(-q) : q;
  }

  // expr := ['+'|'-'] term {('+'|'-') term}
  QPoly parse_expr() {
    Depth guard(this);
    QPoly acc;
    bool neg = false;
    if (accept("-")) {
      neg = true;
    } else {
      accept("+");
    }
    acc = parse_term();
    if (neg) acc = qr_->neg(std::move(acc));
    while (true) {
      if (accept("+")) {
        acc = checked(qr_->add(acc, parse_term()));
      } else if (accept("-")) {
        acc = checked(qr_->sub(acc, parse_term()));
      } else {
        break;
      }
    }
    return acc;
  }

  // term := factor {('*' | '/' | implicit) factor}
  QPoly parse_term() {
    QPoly acc = parse_factor();
    while (true) {
      if (accept("*")) {
        acc = multiply(acc, parse_factor());
      } else if (is("/")) {
        const Token& slash = next();
        QPoly d = parse_factor();
        if (d.is_zero()) fail(ParseErrorKind::Semantic, slash, "division by zero");
        if (d.size() != 1 || !d.lt().is_one()) {
          fail(ParseErrorKind::Semantic, slash, "division is only allowed by nonzero constants");
        }
        acc = qr_->scale(std::move(acc), Rational(1 / d.lc()));
      } else if (peek().kind == Tok::Name || peek().kind == Tok::Int || is("(")) {
        acc = multiply(acc, parse_factor());
      } else {
        break;
      }
    }
    return acc;
  }

  // factor := '-' factor | primary ['^' int]
  QPoly parse_factor() {
    Depth guard(this);
    if (accept("-")) return qr_->neg(parse_factor());
    QPoly base = parse_primary();
    if (is("^")) {
      const Token& caret = next();
      const Token& e = peek();
      if (e.kind != Tok::Int) fail(ParseErrorKind::Syntax, e, "expected an integer exponent");
      next();
      Integer ev(e.text, 10);
      bool monomial = base.size() <= 1;
      unsigned long cap = monomial ? kMaxMonomialExponent : kMaxPolyExponent;
      if (ev > Integer(cap)) fail(ParseErrorKind::Semantic, caret, "exponent " + e.text + " too large");
      unsigned long exp = ev.get_ui();
      if (monomial) {
        if (base.is_zero()) return exp == 0 ? qr_->one() : base;
        try {
          PowerProduct t(ring_.names.size());
          for (std::size_t i = 0; i < t.arity(); ++i) {
            unsigned long v = static_cast<unsigned long>(base.lt()[i]) * exp;
            if (v > 0xffffffffUL) throw DomainError("exponent overflow");
            t.set(i, static_cast<PowerProduct::Exponent>(v));
          }
          Rational c;
          mpz_pow_ui(c.get_num_mpz_t(), base.lc().get_num_mpz_t(), exp);
          mpz_pow_ui(c.get_den_mpz_t(), base.lc().get_den_mpz_t(), exp);
          if (mpz_sizeinbase(c.get_num_mpz_t(), 2) > 200000) throw DomainError("coefficient too large");
          return qr_->monomial(t, c);
        } catch (const DomainError& err) {
          fail(ParseErrorKind::Semantic, caret, err.what());
        }
      }
      QPoly r = qr_->one();
      for (unsigned long k = 0; k < exp; ++k) r = multiply(r, base, &caret);
      return r;
    }
    return base;
  }

  QPoly parse_primary() {
    const Token& t = peek();
    if (t.kind == Tok::Int) {
      next();
      return qr_->constant(Rational(Integer(t.text, 10)));
    }
    if (t.kind == Tok::Name) {
      auto it = index_.find(t.text);
      if (it == index_.end()) {
        fail(ParseErrorKind::UnknownIndeterminate, t, "'" + t.text + "'");
      }
      next();
      return qr_->variable(it->second);
    }
    if (accept("(")) {
      QPoly f = parse_expr();
      expect(")");
      return f;
    }
    fail(ParseErrorKind::Syntax, t,
         t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  QPoly multiply(const QPoly& a, const QPoly& b, const Token* at = nullptr) {
    const Token& where = at != nullptr ? *at : peek();
    if (a.size() * b.size() > kMaxProductWork) fail(ParseErrorKind::Semantic, where, "expression too large");
    try {
      return checked(qr_->mul(a, b), &where);
    } catch (const DomainError& err) {
      fail(ParseErrorKind::Semantic, where, err.what());
    }
  }

  QPoly checked(QPoly f, const Token* at = nullptr) {
    if (f.size() > kMaxTerms) fail(ParseErrorKind::Semantic, at != nullptr ? *at : peek(), "expression too large");
    return f;
  }

  /// Maps a rational polynomial into the declared coefficient domain.
  QPoly normalize(QPoly f, const Token& at) {
    switch (ring_.kind) {
      case CoefficientKind::Rational: return f;
      case CoefficientKind::Integer:
        for (const auto& t : f.terms) {
          if (t.coeff.get_den() != 1) {
            fail(ParseErrorKind::Semantic, at, "non-integer coefficient " + t.coeff.get_str() + " over ZZ");
          }
        }
        return f;
      case CoefficientKind::Modular: {
        Integer p(static_cast<unsigned long>(ring_.modulus));
        QPoly g;
        for (const auto& t : f.terms) {
          Integer r;
          try {
            r = reduce_rational(t.coeff, p);
          } catch (const DomainError&) {
            fail(ParseErrorKind::Semantic, at, "coefficient " + t.coeff.get_str() + " undefined modulo " + p.get_str());
          }
          if (r != 0) g.terms.push_back({t.pp, Rational(r)});
        }
        return g;
      }
    }
    return f;
  }

  struct Depth {
    explicit Depth(Parser* p) : parser(p) {
      if (++parser->depth_ > kMaxDepth) {
        fail(ParseErrorKind::Syntax, parser->peek(), "expression nested too deeply");
      }
    }
    ~Depth() { --parser->depth_; }
    Depth(const Depth&) = delete;
    Depth& operator=(const Depth&) = delete;
    Parser* parser;
  };

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  RingSpec ring_;
  std::optional<QRing> qr_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

std::string to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::Lexical: return "lexical error";
    case ParseErrorKind::Syntax: return "syntax error";
    case ParseErrorKind::Arity: return "arity error";
    case ParseErrorKind::UnknownIndeterminate: return "unknown indeterminate";
    case ParseErrorKind::NonPrimeModulus: return "non-prime modulus";
    case ParseErrorKind::Semantic: return "semantic error";
  }
  return "error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         to_string(kind) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

ParsedInput parse_input(std::string_view text) { return Parser(text).parse_file(); }

TermOrdering parse_order(std::string_view text, const std::vector<std::string>& names) {
  Parser p(text);
  RingSpec ring;
  ring.names = names;
  ring.order = TermOrdering::degrevlex(names.size());
  p.set_ring(ring);
  return p.parse_order_only();
}

QPoly parse_poly(std::string_view text, const RingSpec& ring) {
  Parser p(text);
  p.set_ring(ring);
  return p.parse_single_poly();
}

std::vector<Integer> parse_prime_list(std::string_view text) {
  return Parser(text).parse_prime_list_only();
}

std::string grammar_help() {
  return "input file grammar:\n"
         "  input    := ring_decl ';' statement ';' { statement ';' }\n"
         "  ring_decl:= 'ring' ('QQ' | 'ZZ' | 'ZZ/(' prime ')') '[' name {',' name} ']' order\n"
         "  order    := 'lex' | 'deglex' | 'degrevlex' | 'elim(' names ')'\n"
         "            | 'matrix(' '[' q {',' q} ']' {',' '[' ... ']'} ')'\n"
         "  statement:= 'ideal(' [poly {',' poly}] ')' | 'sigma' order | 'tau' order\n"
         "            | 'primes' int {',' int} | 'poly' poly\n"
         "  poly     := sums and products of names and integers with + - * / ^ and ( );\n"
         "              '2x' means 2*x; '/' only divides by nonzero constants\n"
         "  comments start with '//' or '#'; at least one ideal is required\n";
}

}  // namespace mgb
