#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "svred/ideal.hpp"
#include "svred/sv_engine.hpp"

namespace svred {

struct NamedRing {
  std::string name;
  RingPtr ring;
};

struct NamedIdeal {
  std::string name;
  std::string ring;
  Ideal ideal;
};

struct NamedPartition {
  std::string name;
  std::string ideal;
  Partition partition;
};

/// Declarations parsed from an input document, in declaration order.
struct Session {
  std::vector<NamedRing> rings;
  std::vector<NamedIdeal> ideals;
  std::vector<NamedPartition> partitions;

  /// Lookup by name; the empty name selects the last declaration.
  const NamedRing& ring(const std::string& name = {}) const;
  const NamedIdeal& ideal(const std::string& name = {}) const;
  const NamedPartition& partition(const std::string& name = {}) const;
};

/// Parses
///   ring R = vars x, y [; rel poly, ...] [; local];
///   ideal I = poly, ...;
///   partition P of I = [poly, ...] [poly, ...] ...;
/// Ideals live in the most recently declared ring. `#` starts a comment.
/// Errors throw ParseError with line and column.
Session parse_session(std::string_view text);

/// Parses one polynomial over the variables of `ring`.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring);

/// Prints a session in the input grammar; parse_session inverts it.
std::string print_session(const Session& session);

/// Wraps an ideal and a partition of it as a one-ring session.
Session make_session(const Partition& partition, const std::string& ring_name = "R",
                     const std::string& ideal_name = "I", const std::string& partition_name = "P");

}  // namespace svred
