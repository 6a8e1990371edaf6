#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svred/ideal.hpp"
#include "svred/sv_engine.hpp"

namespace svred {

struct ExpectedInvariants {
  std::optional<unsigned> pd;
  std::optional<unsigned> ell;
  std::optional<std::size_t> reduction_generators;
};

/// A ready-to-verify example: ring, ideal, partition and auxiliary data.
struct FamilyBundle {
  std::string name;
  std::string params;
  Ideal ideal;
  /// Linear primes whose intersection is the ideal (dual_ci only).
  std::vector<Ideal> components;
  Partition partition;
  CertificateKind kind;
  unsigned m_max = 1;
  std::optional<BaData> ba;
  /// Explicit reduction generators for oracle-only bundles.
  std::vector<Polynomial> generators;
  std::vector<ContainmentCheck> extra_checks;
  std::optional<ExpectedInvariants> expected;

  const RingPtr& ring() const noexcept { return ideal.ring(); }
  CertificateOptions certificate_options() const;
  Certificate certificate() const;
};

/// Alexander dual of a complete intersection on blocks of sizes h.
FamilyBundle dual_ci(const std::vector<unsigned>& h);
/// Disjoint-variable sum of dual_ci ideals with concatenated partitions.
FamilyBundle dual_ci_sum(const std::vector<std::vector<unsigned>>& hs);
/// Edge ideal of the 2r-cycle with the Ba partition.
FamilyBundle even_cycle(unsigned r);
/// Edge ideal of K5 with the explicit five-generator reduction.
FamilyBundle complete_graph_k5(const Rational& a = 1, const Rational& b = 2, const Rational& c = 3,
                               const Rational& d = 4);
/// Six-variable ideal with one binomial generator; B applies, SV does not.
FamilyBundle binomial_example();
/// (x, y, z) in the local hypersurface x^m y^m = z^(2m).
FamilyBundle hypersurface_example(unsigned m);

/// Builds a bundle from CLI syntax, e.g. ("dual-ci", "2,2"), ("k5", "1,2,3,4").
FamilyBundle make_family(const std::string& name, const std::string& params);

std::vector<std::string> family_names();

}  // namespace svred
