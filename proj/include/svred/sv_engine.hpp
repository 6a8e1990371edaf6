#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "svred/ideal.hpp"
#include "svred/linalg.hpp"

namespace svred {

/// Ordered parts P_0..P_r of the generating set of an ideal.
///
/// Invariants (checked on construction): the union of the parts equals the
/// generator set of the ideal, P_0 has exactly one element, no part is
/// empty and no element repeats within a part.
class Partition {
 public:
  Partition(Ideal ideal, std::vector<std::vector<Polynomial>> parts);

  const Ideal& ideal() const noexcept { return ideal_; }
  const RingPtr& ring() const noexcept { return ideal_.ring(); }
  const std::vector<std::vector<Polynomial>>& parts() const noexcept { return parts_; }
  const std::vector<Polynomial>& part(std::size_t level) const { return parts_.at(level); }
  /// Index of the last level.
  std::size_t r() const noexcept { return parts_.size() - 1; }
  std::size_t levels() const noexcept { return parts_.size(); }
  /// Part sizes c_0..c_r.
  std::vector<std::size_t> sizes() const;
  bool all_monomial() const noexcept;

 private:
  Ideal ideal_;
  std::vector<std::vector<Polynomial>> parts_;
};

/// One verified instance of a partition condition. `elements` index into
/// part `level`; the target (level, index) names a' (or p') in a lower part
/// and `cofactor` is b, so that product(elements)^exponent = a' * b.
/// Entries decided by ideal membership instead of an explicit identity
/// carry no target and set `via_oracle`.
struct Witness {
  std::size_t level = 0;
  std::vector<std::size_t> elements;
  std::optional<std::size_t> target_level;
  std::optional<std::size_t> target_index;
  std::optional<Polynomial> cofactor;
  unsigned exponent = 1;
  bool via_oracle = false;

  friend bool operator==(const Witness&, const Witness&) = default;
};

using WitnessTable = std::vector<Witness>;

struct ConditionFailure {
  std::size_t level = 0;
  std::vector<std::size_t> elements;
  std::string reason;
};

struct CheckResult {
  bool passed = false;
  WitnessTable witnesses;
  /// Per level: the largest pair exponent used (1 for SV, 1 at level 0).
  std::vector<unsigned> m_table;
  std::optional<ConditionFailure> failure;
};

/// Level sizes n_0..n_r and scalar matrices A^(0)..A^(r), each
/// (n_l - 1) x c_l.
struct BaData {
  std::vector<unsigned> n;
  std::vector<linalg::DenseMatrix> matrices;
};

/// Pairwise condition: a*a'' = a'*b with a' in a lower part and b in I.
/// When `supplied` is given, those witnesses are verified instead of
/// searched, and a mismatch throws ValidationError.
CheckResult check_sv(const Partition& partition, const WitnessTable* supplied = nullptr);

/// Powered condition: (a*a'')^m ∈ I_{l-1} * I^{2m-1} for the least m <= m_max.
CheckResult check_b(const Partition& partition, unsigned m_max = 4);

/// Subset-product condition: p_1*...*p_n = p'*b with b ∈ I^{n-1} for every
/// n_l-subset of a part with c_l >= 2.
CheckResult check_ba(const Partition& partition, const BaData& ba);

/// Throws ValidationError naming the level (and column set) when shapes
/// are wrong, n_l is out of range or a maximal minor is not a unit.
void validate_ba_data(const Partition& partition, const BaData& ba);

/// g_l = sum of the elements of P_l.
std::vector<Polynomial> sv_generators(const Partition& partition);

/// g_i^(l) = sum_j a_ij^(l) p_j^(l); n_l - 1 generators per level.
std::vector<Polynomial> ba_generators(const Partition& partition, const BaData& ba);

/// Default Ba data: n_l = 2 everywhere with the all-ones row, which makes
/// the subset condition coincide with the pairwise one.
BaData default_ba_data(const Partition& partition);

enum class CertificateKind { sv, b, ba, oracle_only };

const char* to_string(CertificateKind kind);
CertificateKind certificate_kind_from_string(const std::string& text);

/// I_{through_level}^{power} ⊆ (g_k : k in generator_indices) * I^{ideal_power}.
struct ContainmentCheck {
  std::size_t through_level = 0;
  unsigned power = 1;
  std::vector<std::size_t> generator_indices;
  unsigned ideal_power = 0;

  friend bool operator==(const ContainmentCheck&, const ContainmentCheck&) = default;
};

struct Certificate {
  CertificateKind kind = CertificateKind::sv;
  Partition partition;
  WitnessTable witnesses;
  std::optional<BaData> ba;
  std::vector<unsigned> m_table;
  std::vector<Polynomial> generators;
  std::optional<unsigned> certified_n;
  std::optional<unsigned> oracle_result;
  std::vector<ContainmentCheck> extra_checks;
};

/// Exponent N with I^N ⊆ J*I^{N-1} guaranteed by the constructive proofs:
/// prod_{l=1..r} c_l*m_l for SV/B and prod_{l=0..r} n_l for Ba.
/// Throws UnsupportedError for oracle-only certificates.
unsigned certified_exponent(const Certificate& certificate);

struct CertificateOptions {
  unsigned m_max = 4;
  std::optional<BaData> ba;
  /// Required for oracle-only certificates.
  std::vector<Polynomial> generators;
  std::vector<ContainmentCheck> extra_checks;
};

/// Runs the condition check for `kind` and assembles the certificate.
/// Throws ValidationError if the check fails.
Certificate build_certificate(CertificateKind kind, const Partition& partition, const CertificateOptions& options = {});

struct StageResult {
  std::string stage;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  bool passed = false;
  std::vector<StageResult> stages;
  unsigned s_max = 0;
  std::optional<unsigned> oracle_least_s;
  std::vector<bool> extra_check_results;
  std::size_t generator_count = 0;

  /// First failing stage, or nullptr.
  const StageResult* failed_stage() const;
};

/// Default search bound for the reduction oracle without a certified N.
inline constexpr unsigned kDefaultSMax = 8;

/// Replays the certificate: partition invariants, every stored witness and
/// coverage of all required pairs/subsets, the generators, N, any extra
/// containment checks, and finally the oracle with s_max = N - 1.
VerificationReport verify_certificate(const Certificate& certificate);

/// Membership of f in I^power (monomial fast path, otherwise the oracle).
bool member_of_power(const Polynomial& f, const Ideal& ideal, unsigned power);

/// I_l = (P_0 ∪ ... ∪ P_l).
Ideal level_ideal(const Partition& partition, std::size_t level);

}  // namespace svred
