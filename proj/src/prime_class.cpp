#include "mgb/prime_class.hpp"

#include <future>

#include "mgb/errors.hpp"
#include "mgb/io/format.hpp"
#include "mgb/poly_ops.hpp"

namespace mgb {

std::string to_string(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::SigmaGood:
      return "SIGMA_GOOD";
    case PrimeStatus::SigmaBad:
      return "SIGMA_BAD";
    case PrimeStatus::PauerLucky:
      return "PAUER_LUCKY";
    case PrimeStatus::NotPauerLucky:
      return "NOT_PAUER_LUCKY";
    case PrimeStatus::TauBadCertified:
      return "TAU_BAD_CERTIFIED";
    case PrimeStatus::Undecided:
      return "UNDECIDED";
  }
  return "?";
}

PrimeClassifier::PrimeClassifier(Ideal I, GbOptions options) : I_(std::move(I)), options_(options) {}

const std::vector<QPoly>& PrimeClassifier::reduced_basis(const TermOrdering& sigma) {
  std::string key = sigma.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bases_.find(key);
    if (it != bases_.end()) return *it->second;
  }
  QRing r = I_.ring.qring(sigma);
  auto G = std::make_shared<const std::vector<QPoly>>(
      buchberger_reduced(r, I_.gens_under(sigma), options_).elements);
  std::lock_guard<std::mutex> lock(mu_);
  return *bases_.emplace(key, std::move(G)).first->second;
}

Integer PrimeClassifier::den_sigma(const TermOrdering& sigma) { return den(reduced_basis(sigma)); }

PrimeVerdict PrimeClassifier::classify(const TermOrdering& sigma, const Integer& p) {
  if (!is_prime(p)) throw DomainError("classify: " + p.get_str() + " is not prime");
  PrimeVerdict v;
  v.prime = p;
  v.status = PrimeStatus::SigmaGood;
  for (const auto& g : reduced_basis(sigma)) {
    if (den(g) % p == 0) {
      v.status = PrimeStatus::SigmaBad;
      v.witness = g;
      break;
    }
  }
  return v;
}

ReductionIdeal PrimeClassifier::reduction(const TermOrdering& sigma, std::uint64_t p) {
  PrimeField fp(p);
  auto v = classify(sigma, Integer(static_cast<unsigned long>(p)));
  if (v.status == PrimeStatus::SigmaBad) {
    throw BadPrimeError(std::to_string(p) + " is sigma-bad: it divides the denominator of " +
                        format_poly(*v.witness, I_.ring.names));
  }
  ReductionIdeal out{p, sigma, {}};
  for (const auto& g : reduced_basis(sigma)) out.gens.push_back(reduce_mod_p(g, fp));
  return out;
}

std::vector<FpPoly> PrimeClassifier::tau_basis(const TermOrdering& sigma, const TermOrdering& tau,
                                               std::uint64_t p) {
  std::string key = std::to_string(p) + "|" + sigma.key() + "|" + tau.key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tau_bases_.find(key);
    if (it != tau_bases_.end()) return *it->second;
  }
  ReductionIdeal red = reduction(sigma, p);
  FpRing r(PrimeField(p), tau);
  std::vector<FpPoly> gens;
  for (auto& g : red.gens) gens.push_back(r.resort(std::move(g)));
  auto G = std::make_shared<const std::vector<FpPoly>>(buchberger_reduced(r, gens, options_).elements);
  std::lock_guard<std::mutex> lock(mu_);
  return *tau_bases_.emplace(key, std::move(G)).first->second;
}

LtTuple PrimeClassifier::tau_tuple(const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p) {
  std::vector<PowerProduct> lts;
  for (const auto& g : tau_basis(sigma, tau, p)) lts.push_back(g.lt());
  return {tau, std::move(lts)};
}

std::vector<PrimeVerdict> PrimeClassifier::detect_tau_bad(const TermOrdering& sigma, const TermOrdering& tau,
                                                          const std::vector<std::uint64_t>& primes,
                                                          unsigned threads) {
  for (auto p : primes) {
    auto v = classify(sigma, Integer(static_cast<unsigned long>(p)));
    if (v.status != PrimeStatus::SigmaGood) {
      throw BadPrimeError("detect: " + std::to_string(p) + " is not sigma-good");
    }
  }
  std::vector<LtTuple> tuples(primes.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) tuples[i] = tau_tuple(sigma, tau, primes[i]);
  } else {
    for (std::size_t start = 0; start < primes.size(); start += threads) {
      std::vector<std::future<LtTuple>> jobs;
      for (std::size_t i = start; i < std::min(primes.size(), start + threads); ++i) {
        jobs.push_back(std::async(std::launch::async, [&, i] { return tau_tuple(sigma, tau, primes[i]); }));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) tuples[start + i] = jobs[i].get();
    }
  }
  // The best tuple is the tau-largest one; ties keep the first prime.
  std::size_t best = 0;
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    if (precedes(tuples[best], tuples[i]) == TupleCmp::Precedes) best = i;
  }
  std::vector<PrimeVerdict> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    PrimeVerdict v;
    v.prime = Integer(static_cast<unsigned long>(primes[i]));
    v.tuple = tuples[i];
    if (precedes(tuples[i], tuples[best]) == TupleCmp::Precedes) {
      v.status = PrimeStatus::TauBadCertified;
      v.beaten_by = tuples[best];
      v.beaten_by_prime = Integer(static_cast<unsigned long>(primes[best]));
    } else {
      v.status = PrimeStatus::Undecided;
    }
    out.push_back(std::move(v));
  }
  return out;
}

RadCheck PrimeClassifier::check_rad_identity(const TermOrdering& sigma) {
  if (I_.is_zero()) throw DomainError("rad-check needs a nonzero ideal");
  const auto& G = reduced_basis(sigma);
  std::vector<ZPoly> pg;
  for (const auto& g : G) pg.push_back(prim(g));
  ZRing zr(IntegerRing{}, sigma);
  Integer l = lcm_sigma(strong_gb(zr, pg, options_));
  RadCheck out{rad(den(G)), rad(l), false};
  out.equal = out.rad_den == out.rad_lcm;
  return out;
}

Integer den_sigma(const Ideal& I, const TermOrdering& sigma) { return PrimeClassifier(I).den_sigma(sigma); }

PrimeVerdict classify_prime(const Ideal& I, const TermOrdering& sigma, const Integer& p) {
  return PrimeClassifier(I).classify(sigma, p);
}

ReductionIdeal reduction(const Ideal& I, const TermOrdering& sigma, std::uint64_t p) {
  return PrimeClassifier(I).reduction(sigma, p);
}

std::vector<PrimeVerdict> detect_tau_bad(const Ideal& I, const TermOrdering& sigma, const TermOrdering& tau,
                                         const std::vector<std::uint64_t>& primes) {
  return PrimeClassifier(I).detect_tau_bad(sigma, tau, primes);
}

RadCheck check_rad_identity(const Ideal& I, const TermOrdering& sigma) {
  return PrimeClassifier(I).check_rad_identity(sigma);
}

PrimeVerdict pauer_lucky(const ZRing& ring, const std::vector<ZPoly>& F, const Integer& p,
                         const GbOptions& options) {
  if (!is_prime(p)) throw DomainError("pauer_lucky: " + p.get_str() + " is not prime");
  for (const auto& f : F) {
    if (f.is_zero()) throw DomainError("pauer_lucky: zero generator");
  }
  PrimeVerdict v;
  v.prime = p;
  v.status = PrimeStatus::PauerLucky;
  for (const auto& g : strong_gb(ring, F, options).elements) {
    if (g.lc() % p == 0) {
      v.status = PrimeStatus::NotPauerLucky;
      v.coefficient = g.lc();
      break;
    }
  }
  return v;
}

bool contained_in(const FpRing& ring, const std::vector<FpPoly>& a, const std::vector<FpPoly>& b_basis) {
  for (const auto& f : a) {
    if (!normal_form(ring, ring.resort(f), b_basis).is_zero()) return false;
  }
  return true;
}

}  // namespace mgb
