#pragma once

#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "svred/ring.hpp"

namespace svred {

enum class IdealKind { monomial, squarefree_monomial, general };

const char* to_string(IdealKind kind);

/// Finitely generated ideal of a ring context. Zero generators are dropped,
/// so the zero ideal has an empty generator list and the unit ideal is (1).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  static Ideal from_monomials(RingPtr ring, std::span<const Monomial> monomials);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }
  IdealKind kind() const noexcept { return kind_; }
  bool is_monomial() const noexcept { return kind_ != IdealKind::general; }
  bool is_squarefree() const noexcept { return kind_ == IdealKind::squarefree_monomial; }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_homogeneous() const noexcept;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  IdealKind kind_;
};

/// Unique minimal monomial generating set, sorted leading-first in the
/// canonical order. Throws UnsupportedError for non-monomial ideals.
std::vector<Monomial> minimal_generators(const Ideal& ideal);

/// Removes duplicates and every monomial divisible by another; sorts.
std::vector<Monomial> minimalize(std::vector<Monomial> monomials);

std::size_t num_min_gens(const Ideal& ideal);

/// Membership of a monomial in the monomial ideal generated by `generators`.
bool monomial_member(const Monomial& m, std::span<const Monomial> generators);

/// All n-fold products; minimalized for monomial ideals. I^0 = (1).
Ideal ideal_power(const Ideal& ideal, unsigned n);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Generated by pairwise lcms of minimal generators, minimalized.
Ideal intersect_monomial(const Ideal& a, const Ideal& b);

/// Membership of a monomial in I^k for a monomial ideal I given by its
/// minimal generators. Memoizes across calls on the same object.
class MonomialPowerMembership {
 public:
  explicit MonomialPowerMembership(std::vector<Monomial> generators) : gens_(std::move(generators)) {}
  bool contains(const Monomial& m, unsigned power);

 private:
  std::vector<Monomial> gens_;
  std::vector<std::unordered_set<Monomial, MonomialHash>> known_in_, known_out_;  // indexed by power
};

}  // namespace svred
