#include "mgb/fourier_motzkin.hpp"

#include <map>

#include "mgb/errors.hpp"

namespace mgb {

namespace {

// Scales by |first nonzero coefficient| and keeps the strongest row per
// direction. Returns false on a row 0 >= b with b > 0.
bool normalize(std::vector<LinearRow>& rows) {
  std::map<std::vector<Rational>, Rational> best;
  for (auto& r : rows) {
    std::size_t k = 0;
    while (k < r.a.size() && r.a[k] == 0) ++k;
    if (k == r.a.size()) {
      if (r.b > 0) return false;
      continue;
    }
    Rational s = abs(r.a[k]);
    for (auto& v : r.a) v /= s;
    r.b /= s;
    auto it = best.find(r.a);
    if (it == best.end()) {
      best.emplace(r.a, r.b);
    } else if (r.b > it->second) {
      it->second = r.b;
    }
  }
  rows.clear();
  for (auto& [a, b] : best) rows.push_back({a, b});
  return true;
}

std::vector<LinearRow> eliminate(const std::vector<LinearRow>& rows, std::size_t var) {
  std::vector<LinearRow> out, pos, neg;
  for (const auto& r : rows) {
    if (r.a[var] > 0) {
      pos.push_back(r);
    } else if (r.a[var] < 0) {
      neg.push_back(r);
    } else {
      out.push_back(r);
    }
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      // p/p_v + q/(-q_v) cancels var.
      Rational cp = 1 / p.a[var], cq = -1 / q.a[var];
      LinearRow r{std::vector<Rational>(p.a.size()), p.b * cp + q.b * cq};
      for (std::size_t i = 0; i < p.a.size(); ++i) r.a[i] = p.a[i] * cp + q.a[i] * cq;
      r.a[var] = 0;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> fm_solve(std::size_t dim, std::vector<LinearRow> ge,
                                              std::vector<LinearRow> eq) {
  for (const auto& r : ge) {
    if (r.a.size() != dim) throw DomainError("fm_solve: row of the wrong length");
  }
  // Equalities by substitution: x_k = (b - sum_{i != k} a_i x_i) / a_k.
  std::vector<std::pair<std::size_t, LinearRow>> subs;
  std::vector<bool> pivot(dim, false);
  for (std::size_t e = 0; e < eq.size(); ++e) {
    LinearRow r = eq[e];
    if (r.a.size() != dim) throw DomainError("fm_solve: row of the wrong length");
    std::size_t k = 0;
    while (k < dim && r.a[k] == 0) ++k;
    if (k == dim) {
      if (r.b != 0) return std::nullopt;
      continue;
    }
    Rational c = r.a[k];
    for (auto& v : r.a) v /= c;
    r.b /= c;
    auto substitute = [&](LinearRow& row) {
      Rational f = row.a[k];
      if (f == 0) return;
      for (std::size_t i = 0; i < dim; ++i) row.a[i] -= f * r.a[i];
      row.b -= f * r.b;
    };
    for (std::size_t e2 = e + 1; e2 < eq.size(); ++e2) substitute(eq[e2]);
    for (auto& row : ge) substitute(row);
    pivot[k] = true;
    subs.emplace_back(k, std::move(r));
  }

  std::vector<std::size_t> free_vars;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!pivot[i]) free_vars.push_back(i);
  }
  if (!normalize(ge)) return std::nullopt;
  std::vector<std::vector<LinearRow>> stages(free_vars.size());
  for (std::size_t idx = free_vars.size(); idx-- > 0;) {
    stages[idx] = ge;
    ge = eliminate(ge, free_vars[idx]);
    if (!normalize(ge)) return std::nullopt;
  }

  std::vector<Rational> x(dim, Rational(0));
  for (std::size_t idx = 0; idx < free_vars.size(); ++idx) {
    std::size_t v = free_vars[idx];
    std::optional<Rational> lo, hi;
    for (const auto& r : stages[idx]) {
      if (r.a[v] == 0) continue;
      Rational rest = r.b;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i != v && r.a[i] != 0) rest -= r.a[i] * x[i];
      }
      Rational bound = rest / r.a[v];
      if (r.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) {
      x[v] = (*lo + *hi) / 2;
    } else if (lo) {
      x[v] = *lo;
    } else if (hi) {
      x[v] = *hi;
    }
  }
  for (std::size_t s = subs.size(); s-- > 0;) {
    const auto& [k, r] = subs[s];
    Rational val = r.b;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i != k && r.a[i] != 0) val -= r.a[i] * x[i];
    }
    x[k] = val;
  }
  return x;
}

}  // namespace mgb
