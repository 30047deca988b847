#pragma once

// Prime classification: sigma-denominators, good and bad primes, the
// (p, sigma)-reduction, Pauer-luckiness and relative bad-prime detection.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgb/gb_integer.hpp"
#include "mgb/lt_tuple.hpp"

namespace mgb {

enum class PrimeStatus { SigmaGood, SigmaBad, PauerLucky, NotPauerLucky, TauBadCertified, Undecided };

std::string to_string(PrimeStatus s);

struct PrimeVerdict {
  Integer prime;
  PrimeStatus status = PrimeStatus::Undecided;
  /// SigmaBad: a basis element whose denominator the prime divides.
  std::optional<QPoly> witness;
  /// NotPauerLucky: a leading coefficient divisible by the prime.
  std::optional<Integer> coefficient;
  /// Detection: the prime's own tuple and, when certified bad, the tuple
  /// (and a prime holding it) that it strictly precedes.
  std::optional<LtTuple> tuple;
  std::optional<LtTuple> beaten_by;
  std::optional<Integer> beaten_by_prime;
};

/// I_(p, sigma): images of the reduced sigma-basis, which form the reduced
/// sigma-basis of the ideal they generate.
struct ReductionIdeal {
  std::uint64_t p;
  TermOrdering order;
  std::vector<FpPoly> gens;
};

struct RadCheck {
  Integer rad_den;
  Integer rad_lcm;
  bool equal;
};

/// Memoizes rational reduced bases per ordering and per-prime tuples for
/// one ideal. Safe to share between threads.
class PrimeClassifier {
 public:
  explicit PrimeClassifier(Ideal I, GbOptions options = {});

  const Ideal& ideal() const { return I_; }
  const std::vector<QPoly>& reduced_basis(const TermOrdering& sigma);
  Integer den_sigma(const TermOrdering& sigma);
  PrimeVerdict classify(const TermOrdering& sigma, const Integer& p);
  /// Throws BadPrimeError when p divides den_sigma(I).
  ReductionIdeal reduction(const TermOrdering& sigma, std::uint64_t p);
  /// Reduced tau-basis of I_(p, sigma) over F_p.
  std::vector<FpPoly> tau_basis(const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p);
  LtTuple tau_tuple(const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p);
  /// Every prime must be sigma-good; the check runs before any tuple work.
  std::vector<PrimeVerdict> detect_tau_bad(const TermOrdering& sigma, const TermOrdering& tau,
                                           const std::vector<std::uint64_t>& primes, unsigned threads = 1);
  RadCheck check_rad_identity(const TermOrdering& sigma);

 private:
  Ideal I_;
  GbOptions options_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const std::vector<QPoly>>> bases_;
  std::map<std::string, std::shared_ptr<const std::vector<FpPoly>>> tau_bases_;
};

Integer den_sigma(const Ideal& I, const TermOrdering& sigma);
PrimeVerdict classify_prime(const Ideal& I, const TermOrdering& sigma, const Integer& p);
ReductionIdeal reduction(const Ideal& I, const TermOrdering& sigma, std::uint64_t p);
std::vector<PrimeVerdict> detect_tau_bad(const Ideal& I, const TermOrdering& sigma, const TermOrdering& tau,
                                         const std::vector<std::uint64_t>& primes);
RadCheck check_rad_identity(const Ideal& I, const TermOrdering& sigma);

/// PauerLucky iff p does not divide lcm_sigma of a minimal strong basis of <F>.
PrimeVerdict pauer_lucky(const ZRing& ring, const std::vector<ZPoly>& F, const Integer& p,
                         const GbOptions& options = {});

/// True when every element of `a` reduces to zero modulo the reduced basis
/// `b_basis` (which must be a Groebner basis under ring's ordering).
bool contained_in(const FpRing& ring, const std::vector<FpPoly>& a, const std::vector<FpPoly>& b_basis);

}  // namespace mgb
