#pragma once

// Modular Groebner bases over QQ: per-prime tau-bases of I_(p, sigma),
// tuple filtering, CRT lifting, rational reconstruction and verification.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mgb/lt_tuple.hpp"
#include "mgb/prime_class.hpp"

namespace mgb {

struct ModularRun {
  std::uint64_t prime = 0;
  TermOrdering tau;
  std::vector<FpPoly> basis;
  LtTuple tuple;
};

struct RejectedRun {
  ModularRun run;
  LtTuple beaten_by;
  std::uint64_t beaten_by_prime = 0;
};

struct FilterResult {
  std::vector<ModularRun> kept;
  std::vector<RejectedRun> rejected;
};

/// Reduced tau-basis of I_(p, sigma). Throws BadPrimeError when p is not
/// sigma-good.
ModularRun run_prime(PrimeClassifier& pc, const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p);
ModularRun run_prime(const Ideal& I, const TermOrdering& sigma, const TermOrdering& tau, std::uint64_t p);

/// Keeps the runs holding the tau-largest tuple seen; every run whose tuple
/// strictly precedes it is rejected with that tuple as certificate.
FilterResult filter_runs(std::vector<ModularRun> runs);

/// Coefficient table of runs sharing one tuple, combined by CRT.
class LiftState {
 public:
  bool empty() const { return primes_.empty(); }
  const LtTuple& tuple() const { return tuple_; }
  const Integer& modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  /// Throws DomainError when the run's tuple differs from the committed one.
  void add(const ModularRun& run);
  void reset() { *this = LiftState{}; }
  /// Farey-reconstructs every coefficient; nullopt if any fails.
  std::optional<std::vector<QPoly>> reconstruct() const;

 private:
  LtTuple tuple_;
  Integer modulus_ = 1;
  std::vector<std::uint64_t> primes_;
  std::map<std::pair<std::size_t, PowerProduct>, Integer> table_;
};

/// Candidate reduced basis over QQ from runs that share one tuple, or
/// nullopt when more primes are needed.
std::optional<std::vector<QPoly>> lift_and_reconstruct(const std::vector<ModularRun>& kept, const Ideal& I,
                                                       const TermOrdering& tau);

enum class VerifyMode { Cheap, Full };

/// Cheap: the candidate is a reduced tau-basis, contains the generators in
/// its ideal and lies in I (checked against the rational sigma-basis).
/// Full additionally compares with a directly computed tau-basis.
bool verify_candidate(PrimeClassifier& pc, const TermOrdering& sigma, const TermOrdering& tau,
                      const std::vector<QPoly>& candidate, VerifyMode mode = VerifyMode::Cheap);
bool verify_candidate(const std::vector<QPoly>& candidate, const Ideal& I, const TermOrdering& tau,
                      VerifyMode mode = VerifyMode::Cheap);

struct ModularOptions {
  std::optional<TermOrdering> sigma;  // degrevlex when unset
  unsigned prime_bits = 31;
  std::size_t max_primes = 64;
  VerifyMode verify = VerifyMode::Cheap;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  /// Explicit primes used in order before any generated ones.
  std::vector<std::uint64_t> primes;
};

enum class PrimeFate { Used, Unused, TauBad, SigmaBad };
std::string to_string(PrimeFate f);

struct PrimeRecord {
  std::uint64_t prime = 0;
  PrimeFate fate = PrimeFate::Unused;
  std::optional<LtTuple> tuple;
  std::optional<LtTuple> beaten_by;
  std::optional<std::uint64_t> beaten_by_prime;
};

struct ModularResult {
  std::vector<QPoly> basis;
  std::vector<PrimeRecord> primes;
  std::size_t reconstructions = 0;
  double seconds = 0;
};

/// Throws BudgetExceeded when max_primes runs do not yield a verified basis.
ModularResult modular_gb(const Ideal& I, const TermOrdering& tau, const ModularOptions& options = {});

}  // namespace mgb
