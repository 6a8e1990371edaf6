#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "svred/ideal.hpp"

namespace svred {

/// Monomial order given by a kind and a variable permutation:
/// permutation[k] is the ring variable at significance rank k (0 = largest).
class TermOrder {
 public:
  enum class Kind { lex, degrevlex };

  static TermOrder degrevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);
  /// Throws StructuralError unless `permutation` is a bijection on 0..n-1.
  static TermOrder make(Kind kind, std::vector<std::size_t> permutation);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }
  std::size_t nvars() const noexcept { return permutation_.size(); }

  /// Compares monomials given in ring coordinates.
  int compare(const Monomial& a, const Monomial& b) const;

  Monomial to_internal(const Monomial& m) const;
  Monomial from_internal(const Monomial& m) const;

 private:
  Kind kind_ = Kind::degrevlex;
  std::vector<std::size_t> permutation_;
};

struct BuchbergerOptions {
  /// Only S-pairs whose lcm has total degree <= bound are processed. For
  /// homogeneous input this yields a basis that decides membership of every
  /// polynomial of degree <= bound.
  std::optional<std::uint64_t> degree_bound;
};

/// Reduced Gröbner basis (monic, inter-reduced) of some generators plus the
/// relations of the ring.
class GroebnerBasis {
 public:
  const RingPtr& ring() const noexcept { return ring_; }
  const TermOrder& order() const noexcept { return order_; }
  /// Elements in ring coordinates, sorted by ascending leading monomial.
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  const std::optional<std::uint64_t>& degree_bound() const noexcept { return degree_bound_; }
  bool is_unit() const;

  /// Remainder of full division, in ring coordinates.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  /// Leading monomial of element i (ring coordinates) under this order.
  const Monomial& leading_monomial(std::size_t i) const { return leads_[i]; }

 private:
  friend GroebnerBasis buchberger(const RingPtr&, std::span<const Polynomial>, const TermOrder&, BuchbergerOptions);

  RingPtr ring_;
  TermOrder order_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
  std::optional<std::uint64_t> degree_bound_;
  // Internal coordinates, terms sorted descending under the order.
  std::vector<std::vector<Term>> internal_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> by_lead_;
  std::vector<std::size_t> by_degree_;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer–Möller criteria. Ring relations are appended to `generators`.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const TermOrder& order, BuchbergerOptions options = {});
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Checks the basis postcondition: every S-polynomial of two elements (with
/// lcm degree within the bound, when truncated) has normal form zero, and no
/// leading monomial divides another.
bool satisfies_buchberger_criterion(const GroebnerBasis& basis);

/// Invoked with every basis produced by buchberger(); nullptr to clear.
/// Intended for test instrumentation.
void set_basis_observer(std::function<void(const GroebnerBasis&)> observer);

struct Containment {
  bool contained = true;
  /// First generator of the smaller ideal that is not a member.
  std::optional<Polynomial> witness;
};

/// Decides small ⊆ big (relations of the ring included).
Containment ideal_contains(const Ideal& big, const Ideal& small);
Containment ideal_contains(const Ideal& big, std::span<const Polynomial> candidates);

/// Least s in [0, s_max] with I^{s+1} ⊆ J·I^s. Throws PreconditionError
/// (carrying the witness) when J is not contained in I.
std::optional<unsigned> is_reduction(const Ideal& reduction, const Ideal& ideal, unsigned s_max);

/// f ∈ √I, via 1 ∈ I + (1 - t·f) over one extra variable t.
bool radical_membership(const Polynomial& f, const Ideal& ideal);

}  // namespace svred
