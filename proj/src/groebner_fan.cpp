#include "mgb/groebner_fan.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <numeric>
#include <sstream>

#include "mgb/fourier_motzkin.hpp"
#include "mgb/gb_field.hpp"
#include "mgb/poly_ops.hpp"
#include "mgb/term_order.hpp"

namespace mgb {

namespace {

std::vector<std::int64_t> primitive(std::vector<std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

std::vector<std::int64_t> exponent_diff(const PowerProduct& a, const PowerProduct& b) {
  std::vector<std::int64_t> v(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) {
    v[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
  }
  return v;
}

LinearRow row_of(const std::vector<std::int64_t>& v, long b) {
  LinearRow r{{}, Rational(b)};
  for (auto x : v) r.a.emplace_back(static_cast<long>(x));
  return r;
}

bool nonnegative(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

// Point with v.w = 0, every other inequality strictly positive, w > 0 except
// where forced. Rows are scaled so strict means >= 1.
std::optional<std::vector<Rational>> facet_point(const std::vector<std::vector<std::int64_t>>& ineqs,
                                                 const std::vector<std::int64_t>& v, std::size_t n) {
  std::vector<LinearRow> ge;
  for (const auto& u : ineqs) {
    if (u != v) ge.push_back(row_of(u, 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    ge.push_back(row_of(e, 1));
  }
  return fm_solve(n, std::move(ge), {row_of(v, 0)});
}

std::vector<std::vector<std::int64_t>> integral(const std::vector<Rational>& w) {
  Integer d = 1;
  for (const auto& q : w) d = lcm(d, q.get_den());
  std::vector<std::int64_t> out;
  Integer g = 0;
  for (const auto& q : w) g = gcd(g, q.get_num() * (d / q.get_den()));
  for (const auto& q : w) {
    Integer v = q.get_num() * (d / q.get_den()) / g;
    if (!v.fits_slong_p()) throw DomainError("fan: weight vector too large");
    out.push_back(v.get_si());
  }
  return {out};
}

struct Flip {
  std::vector<std::int64_t> facet;
  TermOrdering order;
};

}  // namespace

FanOptions FanOptions::from_env() {
  FanOptions o;
  const char* env = std::getenv("MGB_BUDGET");
  if (env == nullptr || *env == '\0') return o;
  std::string s(env);
  auto comma = s.find(',');
  auto number = [&](const std::string& part) -> std::uint64_t {
    if (part.empty() || part.size() > 18 || part.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("MGB_BUDGET must look like \"cones[,reductions]\", got \"" + s + "\"");
    }
    return std::stoull(part);
  };
  o.max_cones = number(s.substr(0, comma));
  if (comma != std::string::npos) o.max_reductions = number(s.substr(comma + 1));
  return o;
}

Integer Fan::universal_denominator() const {
  Integer d = 1;
  for (const auto& c : cones) d = lcm(d, c.den);
  return d;
}

std::string marked_key(const std::vector<QPoly>& elements) {
  std::vector<std::string> parts;
  for (const auto& g : elements) {
    std::ostringstream out;
    auto write = [&](const Term<Rational>& t) {
      for (std::size_t i = 0; i < t.pp.arity(); ++i) out << t.pp[i] << (i + 1 < t.pp.arity() ? "," : "");
      out << ":" << t.coeff.get_str() << ";";
    };
    write(g.terms.front());
    out << "|";
    std::vector<Term<Rational>> tail(g.terms.begin() + 1, g.terms.end());
    std::sort(tail.begin(), tail.end(), [](const auto& a, const auto& b) { return a.pp < b.pp; });
    for (const auto& t : tail) write(t);
    parts.push_back(out.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + "\n";
  return key;
}

std::vector<std::vector<std::int64_t>> cone_inequalities(const std::vector<QPoly>& elements, std::size_t n) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& g : elements) {
    if (g.lt().arity() != n) throw ArityError("cone_inequalities: arity mismatch");
    for (std::size_t k = 1; k < g.terms.size(); ++k) {
      auto v = primitive(exponent_diff(g.lt(), g.terms[k].pp));
      // Implied by w >= 0.
      if (nonnegative(v)) continue;
      out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> cone_facets(const std::vector<std::vector<std::int64_t>>& ineqs,
                                                   std::size_t n) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& v : ineqs) {
    if (facet_point(ineqs, v, n)) out.push_back(v);
  }
  return out;
}

Fan enumerate_fan(const Ideal& I, const FanOptions& options) {
  if (I.is_zero()) throw DomainError("fan: the zero ideal has no Groebner fan to enumerate");
  const std::size_t n = I.ring.arity();
  Fan fan;
  std::map<std::string, std::size_t> index;

  auto budget_left = [&]() -> std::uint64_t {
    if (fan.reductions >= options.max_reductions) {
      throw FanBudgetExceeded("fan: S-pair reduction budget of " + std::to_string(options.max_reductions) +
                                  " exhausted after " + std::to_string(fan.cones.size()) + " cones",
                              fan.cones.size());
    }
    return options.max_reductions - fan.reductions;
  };

  struct Computed {
    MarkedGB cone;
    std::uint64_t reductions;
  };
  auto compute = [&](const TermOrdering& o, std::uint64_t budget) -> Computed {
    GbOptions g;
    g.max_reductions = budget;
    GbStats st;
    QRing r = I.ring.qring(o);
    MarkedGB c;
    c.order = o;
    try {
      c.elements = buchberger_reduced(r, I.gens_under(o), g, &st).elements;
    } catch (const BudgetExceeded&) {
      return {std::move(c), budget + 1};
    }
    c.key = marked_key(c.elements);
    c.den = den(c.elements);
    c.inequalities = cone_inequalities(c.elements, n);
    return {std::move(c), st.reductions};
  };
  auto facets_of = [&](const MarkedGB& c) {
    std::vector<Flip> flips;
    for (const auto& v : c.inequalities) {
      auto w = facet_point(c.inequalities, v, n);
      if (!w) continue;
      std::vector<std::vector<std::int64_t>> rows = integral(*w);
      std::vector<std::int64_t> minus_v;
      for (auto x : v) minus_v.push_back(-x);
      rows.push_back(minus_v);
      for (auto& r : degrevlex_rows(n)) rows.push_back(r);
      flips.push_back({v, TermOrdering::matrix(n, rows)});
    }
    return flips;
  };
  auto add = [&](Computed got) -> std::size_t {
    fan.reductions += std::min(got.reductions, options.max_reductions - fan.reductions);
    budget_left();
    auto it = index.find(got.cone.key);
    if (it != index.end()) return it->second;
    if (fan.cones.size() >= options.max_cones) {
      throw FanBudgetExceeded("fan: cone budget of " + std::to_string(options.max_cones) + " exhausted",
                              fan.cones.size());
    }
    // Interior point: every inequality strictly positive and w > 0.
    std::vector<LinearRow> ge;
    for (const auto& v : got.cone.inequalities) ge.push_back(row_of(v, 1));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> e(n, 0);
      e[i] = 1;
      ge.push_back(row_of(e, 1));
    }
    auto w = fm_solve(n, std::move(ge));
    if (!w) throw DomainError("fan: a Groebner cone came out lower-dimensional");
    got.cone.interior = *w;
    index.emplace(got.cone.key, fan.cones.size());
    fan.cones.push_back(std::move(got.cone));
    return fan.cones.size() - 1;
  };

  add(compute(TermOrdering::degrevlex(n), budget_left()));
  std::vector<std::size_t> frontier = {0};
  while (!frontier.empty()) {
    // Flips of each frontier cone are independent; merging is sequential.
    std::vector<std::vector<std::pair<Flip, Computed>>> results(frontier.size());
    auto work = [&](std::size_t slot, std::uint64_t budget) {
      for (auto& f : facets_of(fan.cones[frontier[slot]])) {
        Computed c = compute(f.order, budget);
        results[slot].emplace_back(std::move(f), std::move(c));
      }
    };
    std::uint64_t budget = budget_left();
    if (options.threads <= 1) {
      for (std::size_t s = 0; s < frontier.size(); ++s) work(s, budget);
    } else {
      for (std::size_t start = 0; start < frontier.size(); start += options.threads) {
        std::vector<std::future<void>> jobs;
        for (std::size_t s = start; s < std::min(frontier.size(), start + options.threads); ++s) {
          jobs.push_back(std::async(std::launch::async, work, s, budget));
        }
        for (auto& j : jobs) j.get();
      }
    }
    std::vector<std::size_t> next;
    for (std::size_t s = 0; s < frontier.size(); ++s) {
      for (auto& [flip, computed] : results[s]) {
        std::size_t before = fan.cones.size();
        std::size_t to = add(std::move(computed));
        if (to == frontier[s]) throw DomainError("fan: a facet flip returned the same cone");
        fan.edges.push_back({frontier[s], to, flip.facet});
        if (fan.cones.size() > before) next.push_back(to);
      }
    }
    frontier = std::move(next);
  }
  return fan;
}

Integer universal_denominator(const Ideal& I, const FanOptions& options) {
  return enumerate_fan(I, options).universal_denominator();
}

std::vector<FpPoly> reduction_universal(const Fan& fan, std::uint64_t p, bool verify) {
  if (fan.cones.empty()) throw DomainError("reduction_universal: empty fan");
  PrimeField fp(p);
  Integer delta = fan.universal_denominator();
  if (delta % static_cast<unsigned long>(p) == 0) {
    throw BadPrimeError(std::to_string(p) + " divides the universal denominator " + delta.get_str());
  }
  const auto& seed = fan.cones.front();
  FpRing r(fp, seed.order);
  auto images = [&](const MarkedGB& c) {
    std::vector<FpPoly> out;
    for (const auto& g : c.elements) out.push_back(r.resort(reduce_mod_p(g, fp)));
    return buchberger_reduced(r, out).elements;
  };
  auto base = images(seed);
  if (verify) {
    for (const auto& c : fan.cones) {
      if (images(c) != base) throw DomainError("reduction_universal: cones disagree modulo p");
    }
  }
  return base;
}

}  // namespace mgb
