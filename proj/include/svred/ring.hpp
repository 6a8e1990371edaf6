#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "svred/polynomial.hpp"

namespace svred {

/// Polynomial ring K[x_1..x_n] over the rationals, optionally modulo a list
/// of relations. `origin_local` selects the unit convention: units are the
/// elements with nonzero constant term (a localization at the origin) rather
/// than only the nonzero scalars.
class RingContext {
 public:
  static std::shared_ptr<const RingContext> make(std::vector<std::string> variables,
                                                 std::vector<Polynomial> relations = {},
                                                 bool origin_local = false);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }
  bool origin_local() const noexcept { return origin_local_; }
  std::size_t nvars() const noexcept { return variables_.size(); }
  bool is_quotient() const noexcept { return !relations_.empty(); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same variables, relations and convention.
  bool same_as(const RingContext& other) const;

  std::string print(const Polynomial& p) const { return p.to_string(variables_); }
  std::string print(const Monomial& m) const { return m.to_string(variables_); }

  /// True when `value` is a unit under this ring's convention (scalar or
  /// origin-local).
  bool is_unit(const Polynomial& value) const;

 private:
  RingContext() = default;

  std::vector<std::string> variables_;
  std::vector<Polynomial> relations_;
  bool origin_local_ = false;
};

using RingPtr = std::shared_ptr<const RingContext>;

/// Ring on the concatenated variables of `a` then `b` (no shared names
/// allowed); relations of both are carried over.
RingPtr tensor_ring(const RingContext& a, const RingContext& b);

/// Re-embeds `p` from a ring with `from_vars` variables into a larger one,
/// placing variable i at position offset + i.
Polynomial embed(const Polynomial& p, std::size_t target_nvars, std::size_t offset);

void require_same_ring(const RingContext& a, const RingContext& b);

}  // namespace svred
