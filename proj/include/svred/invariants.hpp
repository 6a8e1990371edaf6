#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svred/ideal.hpp"
#include "svred/sv_engine.hpp"

namespace svred {

inline constexpr std::size_t kDefaultBettiCap = 14;

struct BettiEntry {
  unsigned index = 0;  // homological degree i
  Monomial multidegree;
  std::size_t rank = 0;
};

/// Multigraded Betti numbers of R/I.
struct BettiTable {
  std::vector<BettiEntry> entries;  // nonzero entries, by (index, multidegree)
  std::vector<std::size_t> totals;  // beta_i, i = 0..pd
  unsigned pd = 0;
};

/// Betti numbers of R/I from the Taylor complex on the minimal generators:
/// for every lcm of a subset, the homology of the strand of subsets with that
/// exact lcm, ranks computed exactly over Q. Throws ResourceError when the
/// number of minimal generators exceeds `cap`.
BettiTable multigraded_betti(const Ideal& ideal, std::size_t cap = kDefaultBettiCap);

unsigned proj_dim(const Ideal& ideal, std::size_t cap = kDefaultBettiCap);

/// Minimum size of a variable set meeting the support of every minimal
/// generator. Throws PreconditionError for the zero or unit ideal.
unsigned height_monomial(const Ideal& ideal);

struct SpreadEstimate {
  unsigned estimate = 0;
  bool stabilized = false;
  std::vector<std::size_t> mu_sequence;  // mu(I^n), n = 1..n_max
};

/// Estimates the analytic spread from the growth of mu(I^n): d + 1 where d
/// is the lowest order whose finite differences are constant on the tail.
/// `stabilized` requires at least three agreeing values. Not a certificate.
SpreadEstimate analytic_spread_estimate(const Ideal& ideal, unsigned n_max = 8);

/// Polynomial degree bound sequence → (estimate, stabilized); exposed for tests.
SpreadEstimate estimate_from_sequence(std::vector<std::size_t> mu_sequence);

struct InvariantReport {
  unsigned height = 0;
  unsigned pd = 0;
  std::size_t mu = 0;
  unsigned ara_lower = 0;
  std::size_t ara_upper = 0;
  unsigned ell_lower = 0;
  std::optional<unsigned> ell_estimate;
  bool ell_estimate_stabilized = false;
  std::optional<unsigned> ell_certified;
};

struct InvariantOptions {
  std::size_t betti_cap = kDefaultBettiCap;
  /// When set, the analytic-spread estimator runs up to this power.
  std::optional<unsigned> spread_n_max;
};

/// Bounds along height <= pd <= ara <= mu for a squarefree monomial ideal.
/// A certificate is used only when `verification` reports it passed.
InvariantReport ara_bounds(const Ideal& ideal, const Certificate* certificate = nullptr,
                           const VerificationReport* verification = nullptr, const InvariantOptions& options = {});

enum class Minimality { certified_minimal, consistent_minimal, unknown };

const char* to_string(Minimality m);

/// Requires a passing verification of `reduction` as a reduction of `ideal`.
Minimality classify_minimality(const Ideal& reduction, const Ideal& ideal, const InvariantReport& report,
                               const VerificationReport& verification);

}  // namespace svred
