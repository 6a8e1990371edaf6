#include "svred/sv_engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "svred/errors.hpp"
#include "svred/groebner.hpp"

namespace svred {

// ---------------------------------------------------------------- Partition

Partition::Partition(Ideal ideal, std::vector<std::vector<Polynomial>> parts)
    : ideal_(std::move(ideal)), parts_(std::move(parts)) {
  if (parts_.empty()) throw ValidationError("partition has no parts");
  if (parts_.front().size() != 1)
    throw ValidationError("P_0 must have exactly one element, has " + std::to_string(parts_.front().size()));
  const auto& gens = ideal_.generators();
  std::vector<bool> covered(gens.size(), false);
  for (std::size_t l = 0; l < parts_.size(); ++l) {
    const auto& part = parts_[l];
    if (part.empty()) throw ValidationError("part P_" + std::to_string(l) + " is empty");
    for (std::size_t i = 0; i < part.size(); ++i) {
      const auto& p = part[i];
      if (p.nvars() != ideal_.ring()->nvars()) throw StructuralError("partition element over a different ring");
      for (std::size_t j = 0; j < i; ++j)
        if (part[j] == p)
          throw ValidationError("element " + ideal_.ring()->print(p) + " repeated in P_" + std::to_string(l));
      auto it = std::find(gens.begin(), gens.end(), p);
      if (it == gens.end())
        throw ValidationError("element " + ideal_.ring()->print(p) + " of P_" + std::to_string(l) +
                              " is not a generator of the ideal");
      covered[static_cast<std::size_t>(it - gens.begin())] = true;
    }
  }
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (!covered[g]) throw ValidationError("generator " + ideal_.ring()->print(gens[g]) + " is in no part");
}

std::vector<std::size_t> Partition::sizes() const {
  std::vector<std::size_t> c;
  c.reserve(parts_.size());
  for (const auto& part : parts_) c.push_back(part.size());
  return c;
}

bool Partition::all_monomial() const noexcept {
  for (const auto& part : parts_)
    for (const auto& p : part)
      if (!p.is_monomial()) return false;
  return true;
}

Ideal level_ideal(const Partition& partition, std::size_t level) {
  std::vector<Polynomial> gens;
  for (std::size_t l = 0; l <= level; ++l)
    gens.insert(gens.end(), partition.part(l).begin(), partition.part(l).end());
  return Ideal(partition.ring(), std::move(gens));
}

// ------------------------------------------------------------- membership

namespace {

std::vector<Monomial> monomial_generators(const Ideal& ideal) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators())
    if (g.is_monomial()) out.push_back(g.leading().mono);
  return minimalize(std::move(out));
}

// Caches the oracle work shared by all pairs of one check.
class Membership {
 public:
  explicit Membership(const Ideal& ideal)
      : ideal_(ideal), monomial_part_(monomial_generators(ideal)), powers_(monomial_part_) {}

  // Sound combinatorial test: every term of f lies in (monomial gens)^k.
  bool by_divisibility(const Polynomial& f, unsigned power) {
    for (const auto& t : f.terms())
      if (!powers_.contains(t.mono, power)) return false;
    return true;
  }

  // Divisibility decides exactly for monomial ideals of a polynomial ring.
  bool divisibility_is_exact() const { return ideal_.is_monomial() && !ideal_.ring()->is_quotient(); }

  bool in_power(const Polynomial& f, unsigned power) {
    if (power == 0 || f.is_zero()) return true;
    if (by_divisibility(f, power)) return true;
    if (divisibility_is_exact()) return false;
    return oracle_contains(power_key(power), [&] { return ideal_power(ideal_, power); }, f);
  }

  bool in_product(const Polynomial& f, const Ideal& lower, std::size_t level, unsigned power) {
    auto key = "L" + std::to_string(level) + "^" + std::to_string(power);
    return oracle_contains(key, [&] { return ideal_product(lower, ideal_power(ideal_, power)); }, f);
  }

  bool equal_in_ring(const Polynomial& a, const Polynomial& b) {
    if (a == b) return true;
    if (!ideal_.ring()->is_quotient()) return false;
    return oracle_contains("relations", [&] { return Ideal::zero(ideal_.ring()); }, a - b);
  }

 private:
  static std::string power_key(unsigned power) { return "I^" + std::to_string(power); }

  template <class Make>
  bool oracle_contains(const std::string& key, Make make, const Polynomial& f) {
    auto it = ideals_.find(key);
    if (it == ideals_.end()) it = ideals_.emplace(key, make()).first;
    const Ideal& big = it->second;
    const auto& ring = big.ring();
    bool homogeneous = big.is_homogeneous() && f.is_homogeneous() &&
                       std::all_of(ring->relations().begin(), ring->relations().end(),
                                   [](const Polynomial& p) { return p.is_homogeneous(); });
    auto& slot = bases_[key];
    if (!slot || (slot->degree_bound() && (!homogeneous || *slot->degree_bound() < f.degree()))) {
      BuchbergerOptions options;
      if (homogeneous) options.degree_bound = std::max<std::uint64_t>(f.degree(), slot && slot->degree_bound() ? *slot->degree_bound() : 0);
      slot = buchberger(ring, big.generators(), TermOrder::degrevlex(ring->nvars()), options);
    }
    return slot->contains(f);
  }

  const Ideal& ideal_;
  std::vector<Monomial> monomial_part_;
  MonomialPowerMembership powers_;
  std::map<std::string, Ideal> ideals_;
  std::map<std::string, std::optional<GroebnerBasis>> bases_;
};

Polynomial product_of(const Partition& partition, std::size_t level, const std::vector<std::size_t>& elements) {
  Polynomial u = Polynomial::constant(partition.ring()->nvars(), 1);
  for (std::size_t i : elements) u *= partition.part(level).at(i);
  return u;
}

// First (l', k, b) with u = P_{l'}[k] * b and b ∈ I^power, scanning lower
// levels in order.
std::optional<Witness> find_factorization(const Partition& partition, Membership& membership, std::size_t level,
                                          const Polynomial& u, unsigned power) {
  for (std::size_t lower = 0; lower < level; ++lower) {
    const auto& part = partition.part(lower);
    for (std::size_t k = 0; k < part.size(); ++k) {
      auto q = divide_exact(u, part[k]);
      if (q && membership.in_power(*q, power)) {
        Witness w;
        w.target_level = lower;
        w.target_index = k;
        w.cofactor = std::move(*q);
        return w;
      }
    }
  }
  return std::nullopt;
}

std::string describe(const Partition& partition, std::size_t level, const std::vector<std::size_t>& elements) {
  std::string out = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += partition.ring()->print(partition.part(level).at(elements[i]));
  }
  return out + "} in P_" + std::to_string(level);
}

std::vector<std::vector<std::size_t>> pairs_of(std::size_t c) { return linalg::combinations(c, 2); }

}  // namespace

bool member_of_power(const Polynomial& f, const Ideal& ideal, unsigned power) {
  Membership membership(ideal);
  return membership.in_power(f, power);
}

// ----------------------------------------------------------------- checks

namespace {

// Verifies an explicit identity witness: product(elements)^exponent equals
// target * cofactor in the ring and the cofactor lies in I^power.
std::optional<std::string> verify_identity(const Partition& partition, Membership& membership, const Witness& w,
                                           unsigned power) {
  if (!w.target_level || !w.target_index || !w.cofactor) return "witness lacks target or cofactor";
  if (*w.target_level >= w.level) return "target level is not below the witness level";
  const auto& target_part = partition.part(*w.target_level);
  if (*w.target_index >= target_part.size()) return "target index out of range";
  Polynomial u = product_of(partition, w.level, w.elements).pow(w.exponent);
  Polynomial rhs = target_part[*w.target_index] * *w.cofactor;
  if (!membership.equal_in_ring(u, rhs)) return "identity does not hold";
  if (!membership.in_power(*w.cofactor, power)) return "cofactor is not in the required power of the ideal";
  return std::nullopt;
}

void check_elements(const Partition& partition, const Witness& w, std::size_t arity) {
  if (w.level == 0 || w.level >= partition.levels()) throw ValidationError("witness level out of range");
  if (w.elements.size() != arity) throw ValidationError("witness has the wrong number of elements");
  for (std::size_t i : w.elements)
    if (i >= partition.part(w.level).size()) throw ValidationError("witness element index out of range");
}

}  // namespace

CheckResult check_sv(const Partition& partition, const WitnessTable* supplied) {
  Membership membership(partition.ideal());
  CheckResult result;
  result.m_table.assign(partition.levels(), 1);
  for (std::size_t level = 1; level < partition.levels(); ++level) {
    for (const auto& pair : pairs_of(partition.part(level).size())) {
      if (supplied) {
        auto it = std::find_if(supplied->begin(), supplied->end(),
                               [&](const Witness& w) { return w.level == level && w.elements == pair; });
        if (it == supplied->end()) {
          result.failure = ConditionFailure{level, pair, "no witness supplied for " + describe(partition, level, pair)};
          return result;
        }
        check_elements(partition, *it, 2);
        if (it->exponent != 1) throw ValidationError("pairwise witness must have exponent 1");
        if (auto err = verify_identity(partition, membership, *it, 1))
          throw ValidationError("supplied witness for " + describe(partition, level, pair) + ": " + *err);
        result.witnesses.push_back(*it);
        continue;
      }
      Polynomial u = product_of(partition, level, pair);
      auto w = find_factorization(partition, membership, level, u, 1);
      if (!w) {
        result.failure = ConditionFailure{
            level, pair, "no a' in a lower part with a*a'' = a'*b, b in I, for " + describe(partition, level, pair)};
        return result;
      }
      w->level = level;
      w->elements = pair;
      result.witnesses.push_back(std::move(*w));
    }
  }
  result.passed = true;
  return result;
}

CheckResult check_b(const Partition& partition, unsigned m_max) {
  if (m_max == 0) throw PreconditionError("m_max must be at least 1");
  const Ideal& ideal = partition.ideal();
  Membership membership(ideal);
  CheckResult result;
  result.m_table.assign(partition.levels(), 1);
  for (std::size_t level = 1; level < partition.levels(); ++level) {
    const auto& part = partition.part(level);
    if (part.size() < 2) continue;
    Ideal lower = level_ideal(partition, level - 1);
    for (const auto& pair : pairs_of(part.size())) {
      Polynomial base = part[pair[0]] * part[pair[1]];
      std::optional<Witness> found;
      for (unsigned m = 1; m <= m_max && !found; ++m) {
        Polynomial u = base.pow(m);
        found = find_factorization(partition, membership, level, u, 2 * m - 1);
        if (!found && !(partition.all_monomial() && membership.divisibility_is_exact()) &&
            membership.in_product(u, lower, level, 2 * m - 1)) {
          found = Witness{};
          found->via_oracle = true;
        }
        if (found) found->exponent = m;
      }
      if (!found) {
        result.failure = ConditionFailure{level, pair,
                                          "(a*a'')^m not in I_{l-1}*I^{2m-1} for any m <= " + std::to_string(m_max) +
                                              " for " + describe(partition, level, pair)};
        return result;
      }
      found->level = level;
      found->elements = pair;
      result.m_table[level] = std::max(result.m_table[level], found->exponent);
      result.witnesses.push_back(std::move(*found));
    }
  }
  result.passed = true;
  return result;
}

void validate_ba_data(const Partition& partition, const BaData& ba) {
  if (ba.n.size() != partition.levels() || ba.matrices.size() != partition.levels())
    throw ValidationError("Ba data needs one n and one matrix per level");
  for (std::size_t level = 0; level < partition.levels(); ++level) {
    const std::size_t c = partition.part(level).size();
    const unsigned n = ba.n[level];
    const std::string where = "level " + std::to_string(level);
    if (c == 1 && n != 2) throw ValidationError(where + ": n must be 2 for a single-element part");
    if (c >= 2 && (n < 2 || n > c)) throw ValidationError(where + ": n must satisfy 2 <= n <= c");
    const auto& a = ba.matrices[level];
    if (a.size() != n - 1) throw ValidationError(where + ": matrix must have n - 1 rows");
    for (const auto& row : a)
      if (row.size() != c) throw ValidationError(where + ": matrix must have c columns");
    linalg::for_each_maximal_minor(a, c, [&](const std::vector<std::size_t>& cols, const Rational& det) {
      // Scalar entries: a minor is a unit exactly when it is nonzero.
      if (det == 0) {
        std::string set;
        for (std::size_t k = 0; k < cols.size(); ++k) set += (k ? "," : "") + std::to_string(cols[k] + 1);
        throw ValidationError(where + ": maximal minor on columns {" + set + "} is not a unit");
      }
    });
  }
}

CheckResult check_ba(const Partition& partition, const BaData& ba) {
  validate_ba_data(partition, ba);
  Membership membership(partition.ideal());
  CheckResult result;
  result.m_table.assign(partition.levels(), 1);
  for (std::size_t level = 1; level < partition.levels(); ++level) {
    const std::size_t c = partition.part(level).size();
    if (c < 2) continue;
    const unsigned n = ba.n[level];
    for (const auto& subset : linalg::combinations(c, n)) {
      Polynomial u = product_of(partition, level, subset);
      auto w = find_factorization(partition, membership, level, u, n - 1);
      if (!w) {
        result.failure = ConditionFailure{
            level, subset, "no p' in a lower part with product = p'*b, b in I^(n-1), for " + describe(partition, level, subset)};
        return result;
      }
      w->level = level;
      w->elements = subset;
      result.witnesses.push_back(std::move(*w));
    }
  }
  result.passed = true;
  return result;
}

std::vector<Polynomial> sv_generators(const Partition& partition) {
  std::vector<Polynomial> gens;
  for (const auto& part : partition.parts()) {
    Polynomial g(partition.ring()->nvars());
    for (const auto& p : part) g += p;
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<Polynomial> ba_generators(const Partition& partition, const BaData& ba) {
  validate_ba_data(partition, ba);
  std::vector<Polynomial> gens;
  for (std::size_t level = 0; level < partition.levels(); ++level) {
    const auto& part = partition.part(level);
    for (const auto& row : ba.matrices[level]) {
      Polynomial g(partition.ring()->nvars());
      for (std::size_t j = 0; j < part.size(); ++j) g += row[j] * part[j];
      gens.push_back(std::move(g));
    }
  }
  return gens;
}

BaData default_ba_data(const Partition& partition) {
  BaData ba;
  for (const auto& part : partition.parts()) {
    ba.n.push_back(2);
    ba.matrices.push_back({std::vector<Rational>(part.size(), Rational(1))});
  }
  return ba;
}

// ------------------------------------------------------------ certificates

const char* to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::sv:
      return "SV";
    case CertificateKind::b:
      return "B";
    case CertificateKind::ba:
      return "Ba";
    case CertificateKind::oracle_only:
      return "oracle-only";
  }
  return "SV";
}

CertificateKind certificate_kind_from_string(const std::string& text) {
  if (text == "SV" || text == "sv") return CertificateKind::sv;
  if (text == "B" || text == "b") return CertificateKind::b;
  if (text == "Ba" || text == "ba") return CertificateKind::ba;
  if (text == "oracle-only") return CertificateKind::oracle_only;
  throw ValidationError("unknown certificate kind '" + text + "'");
}

unsigned certified_exponent(const Certificate& certificate) {
  const auto c = certificate.partition.sizes();
  switch (certificate.kind) {
    case CertificateKind::oracle_only:
      throw UnsupportedError("oracle-only certificates carry no certified exponent");
    case CertificateKind::sv:
    case CertificateKind::b: {
      unsigned n = 1;
      for (std::size_t l = 1; l < c.size(); ++l) {
        unsigned m = 1;
        if (certificate.kind == CertificateKind::b) {
          if (certificate.m_table.size() != c.size()) throw ValidationError("m_table needs one entry per level");
          m = certificate.m_table[l];
        }
        n *= static_cast<unsigned>(c[l]) * m;
      }
      return n;
    }
    case CertificateKind::ba: {
      if (!certificate.ba) throw ValidationError("Ba certificate without Ba data");
      unsigned n = 1;
      for (unsigned v : certificate.ba->n) n *= v;
      return n;
    }
  }
  return 1;
}

Certificate build_certificate(CertificateKind kind, const Partition& partition, const CertificateOptions& options) {
  Certificate cert{kind, partition, {}, std::nullopt, std::vector<unsigned>(partition.levels(), 1), {}, std::nullopt,
                   std::nullopt, options.extra_checks};
  CheckResult check;
  switch (kind) {
    case CertificateKind::sv:
      check = check_sv(partition);
      break;
    case CertificateKind::b:
      check = check_b(partition, options.m_max);
      break;
    case CertificateKind::ba:
      cert.ba = options.ba ? *options.ba : default_ba_data(partition);
      check = check_ba(partition, *cert.ba);
      break;
    case CertificateKind::oracle_only:
      if (options.generators.empty()) throw ValidationError("oracle-only certificate needs explicit generators");
      cert.generators = options.generators;
      return cert;
  }
  if (!check.passed)
    throw ValidationError(std::string(to_string(kind)) + " condition fails: " + check.failure->reason);
  cert.witnesses = std::move(check.witnesses);
  cert.m_table = std::move(check.m_table);
  cert.generators = kind == CertificateKind::ba ? ba_generators(partition, *cert.ba) : sv_generators(partition);
  cert.certified_n = certified_exponent(cert);
  return cert;
}

const StageResult* VerificationReport::failed_stage() const {
  for (const auto& s : stages)
    if (!s.passed) return &s;
  return nullptr;
}

namespace {

std::optional<std::string> replay_witnesses(const Certificate& cert, Membership& membership) {
  const Partition& partition = cert.partition;
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> required;
  std::size_t arity = 2;
  for (std::size_t level = 1; level < partition.levels(); ++level) {
    const std::size_t c = partition.part(level).size();
    if (cert.kind == CertificateKind::ba) {
      if (c < 2) continue;
      for (auto& s : linalg::combinations(c, cert.ba->n.at(level))) required.emplace(level, std::move(s));
    } else {
      for (auto& s : pairs_of(c)) required.emplace(level, std::move(s));
    }
  }
  std::vector<unsigned> level_max(partition.levels(), 1);
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
  for (const auto& w : cert.witnesses) {
    if (cert.kind == CertificateKind::ba) arity = w.level < cert.ba->n.size() ? cert.ba->n[w.level] : 0;
    try {
      check_elements(partition, w, arity);
    } catch (const ValidationError& e) {
      return std::string(e.what());
    }
    auto key = std::make_pair(w.level, w.elements);
    if (!required.contains(key)) return "witness for a tuple that needs none: " + describe(partition, w.level, w.elements);
    if (!seen.insert(key).second) return "duplicate witness for " + describe(partition, w.level, w.elements);
    const std::string where = describe(partition, w.level, w.elements);
    switch (cert.kind) {
      case CertificateKind::sv:
        if (w.exponent != 1 || w.via_oracle) return "pairwise witness must be an identity with exponent 1: " + where;
        if (auto err = verify_identity(partition, membership, w, 1)) return *err + ": " + where;
        break;
      case CertificateKind::b: {
        if (w.exponent == 0) return "exponent must be positive: " + where;
        const unsigned power = 2 * w.exponent - 1;
        if (w.via_oracle) {
          Polynomial u = product_of(partition, w.level, w.elements).pow(w.exponent);
          if (!membership.in_product(u, level_ideal(partition, w.level - 1), w.level, power))
            return "oracle membership fails: " + where;
        } else if (auto err = verify_identity(partition, membership, w, power)) {
          return *err + ": " + where;
        }
        level_max[w.level] = std::max(level_max[w.level], w.exponent);
        break;
      }
      case CertificateKind::ba:
        if (w.exponent != 1 || w.via_oracle) return "subset witness must be an identity with exponent 1: " + where;
        if (auto err = verify_identity(partition, membership, w, static_cast<unsigned>(w.elements.size()) - 1))
          return *err + ": " + where;
        break;
      case CertificateKind::oracle_only:
        return "oracle-only certificates carry no witnesses";
    }
  }
  for (const auto& key : required)
    if (!seen.contains(key)) return "missing witness for " + describe(partition, key.first, key.second);
  if (cert.kind == CertificateKind::b) {
    for (std::size_t l = 1; l < partition.levels(); ++l)
      if (cert.m_table.at(l) < level_max[l]) return "m_table entry below a witness exponent at level " + std::to_string(l);
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport report;
  report.generator_count = cert.generators.size();
  const Partition& partition = cert.partition;
  const Ideal& ideal = partition.ideal();
  auto stage = [&](const std::string& name, bool ok, std::string detail) {
    report.stages.push_back({name, ok, std::move(detail)});
    return ok;
  };

  // structure
  {
    std::string problem;
    if ((cert.kind == CertificateKind::sv || cert.kind == CertificateKind::b) && cert.m_table.size() != partition.levels())
      problem = "m_table needs one entry per level";
    if (cert.kind == CertificateKind::ba && !cert.ba) problem = "Ba certificate without Ba data";
    if (cert.kind == CertificateKind::oracle_only && cert.generators.empty()) problem = "oracle-only certificate without generators";
    for (const auto& g : cert.generators)
      if (g.nvars() != ideal.ring()->nvars()) problem = "generator over a different ring";
    if (!stage("structure", problem.empty(), problem.empty() ? "partition with " + std::to_string(partition.levels()) + " parts" : problem))
      return report;
  }

  Membership membership(ideal);

  // replay
  if (cert.kind == CertificateKind::oracle_only) {
    stage("replay", true, "no partition condition for oracle-only certificates");
  } else {
    std::optional<std::string> err;
    try {
      if (cert.kind == CertificateKind::ba) validate_ba_data(partition, *cert.ba);
      err = replay_witnesses(cert, membership);
    } catch (const Error& e) {
      err = e.what();
    }
    if (!stage("replay", !err, err ? *err : std::to_string(cert.witnesses.size()) + " witnesses verified")) return report;
  }

  // generators
  if (cert.kind != CertificateKind::oracle_only) {
    std::vector<Polynomial> expected =
        cert.kind == CertificateKind::ba ? ba_generators(partition, *cert.ba) : sv_generators(partition);
    if (!stage("generators", expected == cert.generators,
               expected == cert.generators ? std::to_string(expected.size()) + " generators re-derived"
                                           : "stored generators differ from the re-derived ones"))
      return report;
  } else {
    stage("generators", true, std::to_string(cert.generators.size()) + " explicit generators");
  }

  // exponent
  std::optional<unsigned> n;
  if (cert.kind == CertificateKind::oracle_only) {
    if (!stage("exponent", !cert.certified_n, cert.certified_n ? "oracle-only certificate claims an exponent" : "none"))
      return report;
  } else {
    n = certified_exponent(cert);
    bool ok = cert.certified_n && *cert.certified_n == *n;
    if (!stage("exponent", ok, "N = " + std::to_string(*n) + (ok ? "" : " (stored value differs)"))) return report;
  }

  // extra containment checks
  for (const auto& check : cert.extra_checks) {
    std::string label = "I_" + std::to_string(check.through_level) + "^" + std::to_string(check.power) + " in (g) * I^" +
                        std::to_string(check.ideal_power);
    bool ok = false;
    try {
      std::vector<Polynomial> chosen;
      for (std::size_t k : check.generator_indices) chosen.push_back(cert.generators.at(k));
      Ideal lhs = ideal_power(level_ideal(partition, check.through_level), check.power);
      Ideal rhs = ideal_product(Ideal(ideal.ring(), std::move(chosen)), ideal_power(ideal, check.ideal_power));
      ok = ideal_contains(rhs, lhs).contained;
    } catch (const std::out_of_range&) {
      label += ": index out of range";
    }
    report.extra_check_results.push_back(ok);
    if (!stage("extra_check", ok, label)) return report;
  }

  // oracle
  report.s_max = n ? *n - 1 : kDefaultSMax;
  Ideal j(ideal.ring(), cert.generators);
  try {
    report.oracle_least_s = is_reduction(j, ideal, report.s_max);
  } catch (const PreconditionError& e) {
    stage("oracle", false, e.what());
    return report;
  }
  bool ok = report.oracle_least_s.has_value();
  std::string detail = ok ? "I^{s+1} = J*I^s at s = " + std::to_string(*report.oracle_least_s)
                          : "no s <= " + std::to_string(report.s_max) + " found";
  if (ok && cert.oracle_result && *cert.oracle_result != *report.oracle_least_s) {
    ok = false;
    detail += " (stored oracle result " + std::to_string(*cert.oracle_result) + " differs)";
  }
  report.passed = stage("oracle", ok, detail);
  return report;
}

}  // namespace svred
