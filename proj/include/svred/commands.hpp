#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "svred/json_io.hpp"

namespace svred {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitPass;
  Json report;
};

/// Names of the ideal and partition to act on; empty picks the last one.
struct Selection {
  std::string ideal;
  std::string partition;
};

struct Defaults {
  std::size_t betti_cap = kDefaultBettiCap;
  std::size_t search_nodes = SearchBudget{}.node_limit;
  double search_seconds = SearchBudget{}.time_limit_seconds;
};

/// Reads SVRED_BETTI_CAP, SVRED_SEARCH_NODES and SVRED_SEARCH_SECONDS.
Defaults defaults_from_environment();

CommandResult cmd_family(const std::string& name, const std::string& params);

/// mode is "sv", "b" or "ba".
CommandResult cmd_check(const std::string& input, const std::string& mode, std::optional<unsigned> m_max = {},
                        const Selection& selection = {});

/// Builds a certificate; the kind defaults to the family's, else SV.
CommandResult cmd_reduce(const std::string& input, const std::optional<std::string>& mode = {},
                         std::optional<unsigned> m_max = {}, const Selection& selection = {});

/// Verifies a certificate document, or builds and verifies one from a
/// family document or session.
CommandResult cmd_verify(const std::string& input, const std::optional<std::string>& mode = {},
                         const Selection& selection = {});

struct InvariantsRequest {
  std::size_t betti_cap = kDefaultBettiCap;
  std::optional<unsigned> spread_n_max = 8;
  /// Build and verify a certificate to sharpen the bounds.
  bool certify = false;
  std::optional<std::string> mode;
};

CommandResult cmd_invariants(const std::string& input, const InvariantsRequest& request = {},
                             const Selection& selection = {});

CommandResult cmd_search(const std::string& input, const SearchBudget& budget, bool certify = false,
                         const Selection& selection = {});

/// Runs `body`, mapping library errors to exit code 2 (1 for failed
/// validation) with an "error" report.
template <typename F>
CommandResult guarded(F&& body);

CommandResult error_result(const std::exception& error);

template <typename F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return error_result(e);
  }
}

}  // namespace svred
