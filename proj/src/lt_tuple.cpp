#include "mgb/lt_tuple.hpp"

#include <algorithm>

#include "mgb/errors.hpp"

namespace mgb {

std::vector<PowerProduct> interreduce(std::vector<PowerProduct> ts) {
  // Sorting by degree puts every divisor before its multiples.
  std::sort(ts.begin(), ts.end(), [](const PowerProduct& a, const PowerProduct& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<PowerProduct> out;
  for (auto& t : ts) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const PowerProduct& s) { return s.divides(t); });
    if (!redundant) out.push_back(std::move(t));
  }
  return out;
}

LtTuple sorted_tuple(const TermOrdering& order, std::vector<PowerProduct> ts) {
  auto out = interreduce(std::move(ts));
  std::sort(out.begin(), out.end(),
            [&](const PowerProduct& a, const PowerProduct& b) { return order.less(a, b); });
  return {order, std::move(out)};
}

LtTuple os_of_ideal(const Ideal& I, const TermOrdering& order, const GbOptions& options) {
  QRing r = I.ring.qring(order);
  return tuple_of(buchberger_reduced(r, I.gens_under(order), options));
}

TupleCmp precedes(const LtTuple& a, const LtTuple& b) {
  if (!(a.order == b.order)) throw OrderingError("precedes: tuples use different orderings");
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = a.order.compare(a.entries[i], b.entries[i]);
    if (c < 0) return TupleCmp::Precedes;
    if (c > 0) return TupleCmp::Follows;
  }
  // The end of a tuple behaves like an entry above every power product.
  if (a.size() == b.size()) return TupleCmp::Equal;
  return a.size() > b.size() ? TupleCmp::Precedes : TupleCmp::Follows;
}

std::optional<LessThanWitness> lessthan_witness(const LtTuple& T, const std::vector<PowerProduct>& Tprime) {
  const auto& o = T.order;
  std::optional<PowerProduct> tmin;
  for (const auto& s : Tprime) {
    bool divisible = std::any_of(T.entries.begin(), T.entries.end(),
                                 [&](const PowerProduct& t) { return t.divides(s); });
    if (divisible) continue;
    if (!tmin || o.less(s, *tmin)) tmin = s;
  }
  if (!tmin) return std::nullopt;
  auto in_tprime = [&](const PowerProduct& t) {
    return std::find(Tprime.begin(), Tprime.end(), t) != Tprime.end();
  };
  std::size_t j = 0;
  while (j < T.size() && !o.greater(T.entries[j], *tmin)) ++j;
  if (j == T.size()) return std::nullopt;
  for (std::size_t i = 0; i < j; ++i) {
    if (!in_tprime(T.entries[i])) return std::nullopt;
  }
  std::size_t k = j;
  while (k + 1 < T.size() && in_tprime(T.entries[k])) ++k;
  return LessThanWitness{*tmin, j + 1, k + 1};
}

std::string to_string(TupleCmp c) {
  switch (c) {
    case TupleCmp::Precedes:
      return "PRECEDES";
    case TupleCmp::Equal:
      return "EQUAL";
    case TupleCmp::Follows:
      return "FOLLOWS";
  }
  return "?";
}

}  // namespace mgb
