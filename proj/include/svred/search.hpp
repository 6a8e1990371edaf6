#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "svred/ideal.hpp"
#include "svred/invariants.hpp"
#include "svred/sv_engine.hpp"

namespace svred {

struct SearchBudget {
  /// Node cap for each subtree rooted at one choice of (r, P_0).
  std::size_t node_limit = 2'000'000;
  double time_limit_seconds = 60.0;
  /// Largest r tried; when absent every r up to mu - 1 is tried.
  std::optional<std::size_t> r_target;
  /// Subtrees explored concurrently; does not affect the result.
  unsigned workers = 1;
};

struct SearchResult {
  std::optional<Partition> partition;
  /// True when every assignment with r <= r_target was ruled out.
  bool exhaustive = false;
  bool node_limit_hit = false;
  bool time_limit_hit = false;
  std::size_t nodes = 0;
  std::optional<unsigned> ell_estimate;
  bool ell_estimate_stabilized = false;
  /// Why no partition was returned, empty on success.
  std::string reason;
};

/// Backtracking search for an SV partition of a monomial ideal with at most
/// r_target + 1 parts, smallest r first. Deterministic for a fixed budget.
SearchResult search_sv_partition(const Ideal& ideal, const SearchBudget& budget = {});

struct EqualityResult {
  std::optional<InvariantReport> report;
  std::optional<Certificate> certificate;
  SearchResult search;
  unsigned pd = 0;
};

/// Searches for an SV partition with pd parts; on success the certificate is
/// verified and the report carries ell = ara = pd.
EqualityResult certify_equalities(const Ideal& ideal, SearchBudget budget = {});

}  // namespace svred
