#include "mgb/term_order.hpp"

#include <algorithm>
#include <sstream>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

std::size_t matrix_rank(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

void validate_rows(std::size_t arity, const std::vector<std::vector<std::int64_t>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : rows) {
    if (row.size() != arity) {
      throw OrderingError("matrix row has " + std::to_string(row.size()) + " entries, expected " +
                          std::to_string(arity));
    }
    std::vector<Rational> qr;
    for (auto v : row) qr.emplace_back(static_cast<long>(v));
    q.push_back(std::move(qr));
  }
  if (matrix_rank(q, arity) != arity) {
    throw OrderingError("matrix ordering does not have full rank " + std::to_string(arity));
  }
  for (std::size_t c = 0; c < arity; ++c) {
    for (const auto& row : rows) {
      if (row[c] < 0) {
        throw OrderingError("matrix ordering makes indeterminate " + std::to_string(c + 1) +
                            " smaller than 1");
      }
      if (row[c] > 0) break;
    }
  }
}

}  // namespace

std::vector<std::vector<std::int64_t>> degrevlex_rows(std::size_t arity) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.emplace_back(arity, 1);
  for (std::size_t i = arity; i-- > 1;) {
    std::vector<std::int64_t> r(arity, 0);
    r[i] = -1;
    rows.push_back(std::move(r));
  }
  return rows;
}

TermOrdering TermOrdering::lex(std::size_t arity) {
  TermOrdering o;
  o.kind_ = OrderKind::Lex;
  o.arity_ = arity;
  return o;
}

TermOrdering TermOrdering::deglex(std::size_t arity) {
  TermOrdering o;
  o.kind_ = OrderKind::DegLex;
  o.arity_ = arity;
  return o;
}

TermOrdering TermOrdering::degrevlex(std::size_t arity) {
  TermOrdering o;
  o.kind_ = OrderKind::DegRevLex;
  o.arity_ = arity;
  return o;
}

TermOrdering TermOrdering::elim(std::size_t arity, std::vector<std::size_t> block) {
  std::sort(block.begin(), block.end());
  block.erase(std::unique(block.begin(), block.end()), block.end());
  if (block.empty()) throw OrderingError("elimination block is empty");
  if (block.back() >= arity) throw OrderingError("elimination block index out of range");
  std::vector<bool> in_block(arity, false);
  for (auto i : block) in_block[i] = true;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!in_block[i]) rest.push_back(i);
  }

  std::vector<std::vector<std::int64_t>> rows;
  auto indicator = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::int64_t> r(arity, 0);
    for (auto i : idx) r[i] = 1;
    return r;
  };
  auto revlex_tail = [&](const std::vector<std::size_t>& idx) {
    for (std::size_t k = idx.size(); k-- > 1;) {
      std::vector<std::int64_t> r(arity, 0);
      r[idx[k]] = -1;
      rows.push_back(std::move(r));
    }
  };
  rows.push_back(indicator(block));
  if (!rest.empty()) rows.push_back(indicator(rest));
  revlex_tail(rest);
  revlex_tail(block);

  TermOrdering o;
  o.kind_ = OrderKind::Elim;
  o.arity_ = arity;
  o.block_ = std::move(block);
  o.rows_ = std::move(rows);
  return o;
}

TermOrdering TermOrdering::matrix(std::size_t arity,
                                  const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::vector<std::int64_t>> scaled;
  for (const auto& row : rows) {
    Integer den = 1;
    for (const auto& q : row) den = lcm(den, q.get_den());
    std::vector<std::int64_t> r;
    for (const auto& q : row) {
      Integer v = q.get_num() * (den / q.get_den());
      if (!v.fits_slong_p()) throw OrderingError("matrix weight too large: " + v.get_str());
      r.push_back(v.get_si());
    }
    scaled.push_back(std::move(r));
  }
  return matrix(arity, std::move(scaled));
}

TermOrdering TermOrdering::matrix(std::size_t arity,
                                  std::vector<std::vector<std::int64_t>> rows) {
  validate_rows(arity, rows);
  TermOrdering o;
  o.kind_ = OrderKind::Matrix;
  o.arity_ = arity;
  o.rows_ = std::move(rows);
  return o;
}

int TermOrdering::compare(const PowerProduct& t, const PowerProduct& s) const {
  if (t.arity() != arity_ || s.arity() != arity_) {
    throw ArityError("power product arity does not match the ordering");
  }
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < arity_; ++i) {
        if (t[i] != s[i]) return t[i] > s[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::DegLex:
      if (t.degree() != s.degree()) return t.degree() > s.degree() ? 1 : -1;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (t[i] != s[i]) return t[i] > s[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::DegRevLex:
      if (t.degree() != s.degree()) return t.degree() > s.degree() ? 1 : -1;
      for (std::size_t i = arity_; i-- > 0;) {
        if (t[i] != s[i]) return t[i] < s[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Elim:
    case OrderKind::Matrix:
      for (const auto& row : rows_) {
        __int128 w = 0;
        for (std::size_t i = 0; i < arity_; ++i) {
          if (row[i] == 0) continue;
          w += static_cast<__int128>(row[i]) *
               (static_cast<std::int64_t>(t[i]) - static_cast<std::int64_t>(s[i]));
        }
        if (w != 0) return w > 0 ? 1 : -1;
      }
      if (!(t == s)) throw OrderingError("matrix ordering does not separate two power products");
      return 0;
  }
  return 0;
}

std::vector<std::vector<std::int64_t>> TermOrdering::as_matrix() const {
  switch (kind_) {
    case OrderKind::Lex: {
      std::vector<std::vector<std::int64_t>> rows;
      for (std::size_t i = 0; i < arity_; ++i) {
        std::vector<std::int64_t> r(arity_, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
      }
      return rows;
    }
    case OrderKind::DegLex: {
      std::vector<std::vector<std::int64_t>> rows;
      rows.emplace_back(arity_, 1);
      for (std::size_t i = 0; i + 1 < arity_; ++i) {
        std::vector<std::int64_t> r(arity_, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
      }
      return rows;
    }
    case OrderKind::DegRevLex:
      return degrevlex_rows(arity_);
    case OrderKind::Elim:
    case OrderKind::Matrix:
      return rows_;
  }
  return {};
}

std::string TermOrdering::key() const {
  std::ostringstream out;
  switch (kind_) {
    case OrderKind::Lex: out << "lex"; break;
    case OrderKind::DegLex: out << "deglex"; break;
    case OrderKind::DegRevLex: out << "degrevlex"; break;
    case OrderKind::Elim:
      out << "elim(";
      for (std::size_t i = 0; i < block_.size(); ++i) out << (i ? "," : "") << block_[i];
      out << ")";
      break;
    case OrderKind::Matrix:
      out << "matrix(";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        out << (r ? ";" : "");
        for (std::size_t i = 0; i < rows_[r].size(); ++i) out << (i ? "," : "") << rows_[r][i];
      }
      out << ")";
      break;
  }
  out << '/' << arity_;
  return out.str();
}

}  // namespace mgb
