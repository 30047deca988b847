#include "mgb/modular_pipeline.hpp"

#include <chrono>
#include <future>

#include "mgb/arith.hpp"
#include "mgb/gb_field.hpp"
#include "mgb/poly_ops.hpp"

namespace mgb {

ModularRun run_prime(PrimeClassifier& pc, const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p) {
  auto v = pc.classify(sigma, Integer(static_cast<unsigned long>(p)));
  if (v.status != PrimeStatus::SigmaGood) {
    throw BadPrimeError(std::to_string(p) + " is not sigma-good");
  }
  ModularRun run;
  run.prime = p;
  run.tau = tau;
  run.basis = pc.tau_basis(sigma, tau, p);
  run.tuple = pc.tau_tuple(sigma, tau, p);
  return run;
}

ModularRun run_prime(const Ideal& I, const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p) {
  PrimeClassifier pc(I);
  return run_prime(pc, sigma, tau, p);
}

FilterResult filter_runs(std::vector<ModularRun> runs) {
  FilterResult out;
  if (runs.empty()) return out;
  std::size_t best = 0;
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (precedes(runs[best].tuple, runs[i].tuple) == TupleCmp::Precedes) best = i;
  }
  LtTuple top = runs[best].tuple;
  std::uint64_t top_prime = runs[best].prime;
  for (auto& r : runs) {
    if (precedes(r.tuple, top) == TupleCmp::Precedes) {
      out.rejected.push_back({std::move(r), top, top_prime});
    } else {
      out.kept.push_back(std::move(r));
    }
  }
  return out;
}

void LiftState::add(const ModularRun& run) {
  if (primes_.empty()) {
    tuple_ = run.tuple;
  } else if (!(run.tuple == tuple_)) {
    throw DomainError("lift: run for " + std::to_string(run.prime) + " has a different tuple");
  }
  Integer p = static_cast<unsigned long>(run.prime);
  if (gcd(modulus_, p) != 1) throw DomainError("lift: prime " + std::to_string(run.prime) + " used twice");
  std::map<std::pair<std::size_t, PowerProduct>, Integer> fresh;
  for (std::size_t i = 0; i < run.basis.size(); ++i) {
    for (const auto& t : run.basis[i].terms) fresh[{i, t.pp}] = Integer(static_cast<unsigned long>(t.coeff));
  }
  // A key absent from either side has residue 0 there.
  for (const auto& [k, r] : table_) fresh.try_emplace(k, 0);
  for (auto& [k, r] : fresh) {
    auto it = table_.find(k);
    Integer old = it == table_.end() ? Integer(0) : it->second;
    r = primes_.empty() ? r : crt_pair(old, modulus_, r, p).residue;
  }
  table_ = std::move(fresh);
  modulus_ *= p;
  primes_.push_back(run.prime);
}

std::optional<std::vector<QPoly>> LiftState::reconstruct() const {
  std::vector<std::vector<Term<Rational>>> terms(tuple_.size());
  for (const auto& [k, r] : table_) {
    auto q = rational_reconstruct(r, modulus_);
    if (!q) return std::nullopt;
    if (*q != 0) terms[k.first].push_back({k.second, *q});
  }
  QRing ring(RationalField{}, tuple_.order);
  std::vector<QPoly> out;
  for (auto& ts : terms) out.push_back(ring.make(std::move(ts)));
  return out;
}

std::optional<std::vector<QPoly>> lift_and_reconstruct(const std::vector<ModularRun>& kept, const Ideal& I,
                                                       const TermOrdering& tau) {
  if (kept.empty()) throw DomainError("lift: no runs");
  LiftState s;
  for (const auto& r : kept) {
    if (r.tau.key() != tau.key()) throw OrderingError("lift: run computed under another ordering");
    if (!r.tuple.empty() && r.tuple.entries.front().arity() != I.ring.arity()) {
      throw ArityError("lift: arity mismatch");
    }
    s.add(r);
  }
  return s.reconstruct();
}

bool verify_candidate(PrimeClassifier& pc, const TermOrdering& sigma, const TermOrdering& tau,
                      const std::vector<QPoly>& candidate, VerifyMode mode) {
  const Ideal& I = pc.ideal();
  QRing rt = I.ring.qring(tau);
  std::vector<QPoly> G;
  for (const auto& g : candidate) {
    if (g.is_zero()) return false;
    G.push_back(rt.resort(g));
  }
  if (G != candidate) return false;  // must already be sorted under tau
  if (!is_reduced(rt, G) || !is_groebner_basis(rt, G)) return false;
  for (const auto& f : I.gens_under(tau)) {
    if (!normal_form(rt, f, G).is_zero()) return false;
  }
  // Candidate inside I: reduce modulo the rational sigma-basis.
  QRing rs = I.ring.qring(sigma);
  const auto& S = pc.reduced_basis(sigma);
  for (const auto& g : G) {
    if (!normal_form(rs, rs.resort(g), S).is_zero()) return false;
  }
  if (mode == VerifyMode::Full) {
    auto direct = buchberger_reduced(rt, I.gens_under(tau)).elements;
    if (direct != G) return false;
  }
  return true;
}

bool verify_candidate(const std::vector<QPoly>& candidate, const Ideal& I, const TermOrdering& tau,
                      VerifyMode mode) {
  PrimeClassifier pc(I);
  return verify_candidate(pc, TermOrdering::degrevlex(I.ring.arity()), tau, candidate, mode);
}

std::string to_string(PrimeFate f) {
  switch (f) {
    case PrimeFate::Used: return "USED";
    case PrimeFate::Unused: return "UNUSED";
    case PrimeFate::TauBad: return "TAU_BAD_CERTIFIED";
    case PrimeFate::SigmaBad: return "SIGMA_BAD";
  }
  return "?";
}

ModularResult modular_gb(const Ideal& I, const TermOrdering& tau, const ModularOptions& options) {
  auto start = std::chrono::steady_clock::now();
  if (tau.arity() != I.ring.arity()) throw ArityError("modular-gb: ordering arity differs from the ring");
  TermOrdering sigma = options.sigma.value_or(TermOrdering::degrevlex(I.ring.arity()));
  PrimeClassifier pc(I);
  ModularResult result;
  auto finish = [&] {
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };
  if (I.is_zero()) return finish();

  PrimeGenerator gen(options.prime_bits, options.seed);
  std::size_t explicit_next = 0;
  auto next_prime = [&] {
    if (explicit_next < options.primes.size()) return options.primes[explicit_next++];
    return gen.next();
  };

  LiftState state;
  std::size_t since_attempt = 0;
  bool attempted = false;
  // Index into result.primes for each prime in the lift state.
  std::vector<std::size_t> in_state;
  std::size_t tried = 0;
  const unsigned batch = std::max(1u, options.threads);

  while (tried < options.max_primes) {
    std::vector<std::uint64_t> ps;
    while (ps.size() < batch && tried + ps.size() < options.max_primes) ps.push_back(next_prime());
    tried += ps.size();
    std::vector<std::future<std::optional<ModularRun>>> jobs;
    for (auto p : ps) {
      jobs.push_back(std::async(batch > 1 ? std::launch::async : std::launch::deferred,
                                [&, p]() -> std::optional<ModularRun> {
                                  try {
                                    return run_prime(pc, sigma, tau, p);
                                  } catch (const BadPrimeError&) {
                                    return std::nullopt;
                                  }
                                }));
    }
    // Sequential fold in prime order.
    for (std::size_t i = 0; i < ps.size(); ++i) {
      auto run = jobs[i].get();
      PrimeRecord rec;
      rec.prime = ps[i];
      if (!run) {
        rec.fate = PrimeFate::SigmaBad;
        result.primes.push_back(std::move(rec));
        continue;
      }
      rec.tuple = run->tuple;
      TupleCmp c = state.empty() ? TupleCmp::Equal : precedes(run->tuple, state.tuple());
      if (c == TupleCmp::Precedes) {
        rec.fate = PrimeFate::TauBad;
        rec.beaten_by = state.tuple();
        rec.beaten_by_prime = state.primes().front();
        result.primes.push_back(std::move(rec));
        continue;
      }
      if (c == TupleCmp::Follows) {
        // Everything lifted so far is now certified bad.
        for (auto k : in_state) {
          result.primes[k].fate = PrimeFate::TauBad;
          result.primes[k].beaten_by = run->tuple;
          result.primes[k].beaten_by_prime = run->prime;
        }
        in_state.clear();
        state.reset();
        since_attempt = 0;
        attempted = false;
      }
      state.add(*run);
      rec.fate = PrimeFate::Unused;
      in_state.push_back(result.primes.size());
      result.primes.push_back(std::move(rec));
      ++since_attempt;
    }
    // First attempt at three supporters, then after every two more.
    bool first = !attempted && state.primes().size() >= 3;
    if (!first && !(attempted && since_attempt >= 2)) continue;
    attempted = true;
    since_attempt = 0;
    ++result.reconstructions;
    auto cand = state.reconstruct();
    if (cand && verify_candidate(pc, sigma, tau, *cand, options.verify)) {
      for (auto k : in_state) result.primes[k].fate = PrimeFate::Used;
      result.basis = std::move(*cand);
      return finish();
    }
  }
  throw BudgetExceeded("modular-gb: no verified basis after " + std::to_string(options.max_primes) + " primes");
}

}  // namespace mgb
