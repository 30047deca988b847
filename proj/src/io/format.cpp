#include "mgb/io/format.hpp"

#include <sstream>

namespace mgb {

namespace {

// Magnitude and sign of a coefficient, as strings.
std::pair<bool, std::string> split_sign(const Rational& q) {
  if (sgn(q) < 0) return {true, Rational(-q).get_str()};
  return {false, q.get_str()};
}

std::pair<bool, std::string> split_sign(const Integer& n) {
  if (sgn(n) < 0) return {true, Integer(-n).get_str()};
  return {false, n.get_str()};
}

std::pair<bool, std::string> split_sign(std::uint64_t v) { return {false, std::to_string(v)}; }

template <class V>
std::string format_terms(const Polynomial<V>& f, const Names& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms) {
    auto [negative, mag] = split_sign(t.coeff);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.pp.is_one()) {
      out += mag;
    } else if (mag == "1") {
      out += format_pp(t.pp, names);
    } else {
      out += mag + '*' + format_pp(t.pp, names);
    }
  }
  return out;
}

std::string join_names(const std::vector<std::size_t>& idx, const Names& names) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out += ',';
    out += names[idx[i]];
  }
  return out;
}

}  // namespace

std::string format_pp(const PowerProduct& t, const Names& names) {
  if (t.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (t[i] > 1) out += '^' + std::to_string(t[i]);
  }
  return out;
}

std::string format_poly(const QPoly& f, const Names& names) { return format_terms(f, names); }
std::string format_poly(const ZPoly& f, const Names& names) { return format_terms(f, names); }
std::string format_poly(const FpPoly& f, const Names& names) { return format_terms(f, names); }

std::string format_tuple(const std::vector<PowerProduct>& ts, const Names& names) {
  std::string out = "[";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_pp(ts[i], names);
  }
  return out + "]";
}

std::string format_order(const TermOrdering& o, const Names& names) {
  switch (o.kind()) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Elim: return "elim(" + join_names(o.block(), names) + ")";
    case OrderKind::Matrix: {
      std::ostringstream out;
      out << "matrix(";
      for (std::size_t r = 0; r < o.rows().size(); ++r) {
        out << (r > 0 ? ", [" : "[");
        for (std::size_t i = 0; i < o.rows()[r].size(); ++i) {
          out << (i > 0 ? ", " : "") << o.rows()[r][i];
        }
        out << ']';
      }
      out << ')';
      return out.str();
    }
  }
  return "degrevlex";
}

std::string format_ideal_file(const Ideal& I) {
  std::string out = "ring " + I.ring.coefficient_name() + "[";
  for (std::size_t i = 0; i < I.ring.names.size(); ++i) {
    if (i > 0) out += ", ";
    out += I.ring.names[i];
  }
  out += "] " + format_order(I.ring.order, I.ring.names) + ";\nideal(";
  for (std::size_t i = 0; i < I.gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_poly(I.gens[i], I.ring.names);
  }
  return out + ");\n";
}

}  // namespace mgb
