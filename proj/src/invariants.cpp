#include "svred/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "svred/errors.hpp"
#include "svred/linalg.hpp"

namespace svred {

namespace {

struct MultidegreeLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_degrevlex(a, b) < 0; }
};

}  // namespace

BettiTable multigraded_betti(const Ideal& ideal, std::size_t cap) {
  const auto gens = minimal_generators(ideal);
  const std::size_t mu = gens.size();
  if (mu > cap)
    throw ResourceError("Taylor complex needs " + std::to_string(mu) + " minimal generators, cap is " +
                        std::to_string(cap));
  BettiTable table;
  const std::size_t nvars = ideal.ring()->nvars();
  if (mu == 1 && gens.front().is_one()) {
    // R/(1) = 0
    table.totals = {};
    return table;
  }

  // Group subsets by lcm.
  const std::uint32_t count = std::uint32_t{1} << mu;
  std::vector<Monomial> lcms(count);
  lcms[0] = Monomial(nvars);
  std::map<Monomial, std::vector<std::uint32_t>, MultidegreeLess> strands;
  strands[lcms[0]].push_back(0);
  for (std::uint32_t s = 1; s < count; ++s) {
    std::uint32_t top = 31 - static_cast<std::uint32_t>(std::countl_zero(s));
    lcms[s] = lcm(lcms[s & ~(std::uint32_t{1} << top)], gens[top]);
    strands[lcms[s]].push_back(s);
  }

  std::vector<std::size_t> totals(mu + 1, 0);
  for (const auto& [degree, subsets] : strands) {
    // Chain groups by cardinality.
    std::vector<std::vector<std::uint32_t>> by_size(mu + 1);
    for (std::uint32_t s : subsets) by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    std::vector<std::size_t> ranks(mu + 2, 0);  // ranks[i] = rank of d_i : C_i -> C_{i-1}
    for (std::size_t i = 1; i <= mu; ++i) {
      if (by_size[i].empty() || by_size[i - 1].empty()) continue;
      std::map<std::uint32_t, std::size_t> column;
      for (std::size_t k = 0; k < by_size[i - 1].size(); ++k) column[by_size[i - 1][k]] = k;
      std::vector<linalg::SparseRow> rows;
      rows.reserve(by_size[i].size());
      for (std::uint32_t s : by_size[i]) {
        linalg::SparseRow row;
        int position = 0;
        for (std::uint32_t bit = 0; bit < mu; ++bit) {
          if (!(s & (std::uint32_t{1} << bit))) continue;
          std::uint32_t face = s & ~(std::uint32_t{1} << bit);
          auto it = column.find(face);
          // Faces with a smaller lcm vanish after tensoring with K.
          if (it != column.end()) row.emplace_back(it->second, Rational(position % 2 == 0 ? 1 : -1));
          ++position;
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!row.empty()) rows.push_back(std::move(row));
      }
      ranks[i] = linalg::rank(std::move(rows));
    }
    for (std::size_t i = 0; i <= mu; ++i) {
      std::size_t dim = by_size[i].size();
      if (dim == 0) continue;
      std::size_t h = dim - ranks[i] - ranks[i + 1];
      if (h != 0) {
        table.entries.push_back({static_cast<unsigned>(i), degree, h});
        totals[i] += h;
      }
    }
  }
  std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.index != b.index) return a.index < b.index;
    return compare_degrevlex(a.multidegree, b.multidegree) < 0;
  });
  std::size_t pd = 0;
  for (std::size_t i = 0; i <= mu; ++i)
    if (totals[i] != 0) pd = i;
  totals.resize(pd + 1);
  table.totals = std::move(totals);
  table.pd = static_cast<unsigned>(pd);
  return table;
}

unsigned proj_dim(const Ideal& ideal, std::size_t cap) { return multigraded_betti(ideal, cap).pd; }

unsigned height_monomial(const Ideal& ideal) {
  const auto gens = minimal_generators(ideal);
  if (gens.empty()) throw PreconditionError("height of the zero ideal is undefined here");
  std::vector<std::uint64_t> supports;
  for (const auto& g : gens) {
    if (g.is_one()) throw PreconditionError("height of the unit ideal is undefined here");
    supports.push_back(g.support_mask());
  }
  const std::size_t n = ideal.ring()->nvars();
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& combo : linalg::combinations(n, k)) {
      std::uint64_t cover = 0;
      for (std::size_t v : combo) cover |= std::uint64_t{1} << v;
      if (std::all_of(supports.begin(), supports.end(), [&](std::uint64_t s) { return (s & cover) != 0; }))
        return static_cast<unsigned>(k);
    }
  }
  throw PreconditionError("no variable cover found");
}

SpreadEstimate estimate_from_sequence(std::vector<std::size_t> mu_sequence) {
  SpreadEstimate out;
  out.mu_sequence = mu_sequence;
  std::vector<long long> diff(mu_sequence.begin(), mu_sequence.end());
  for (unsigned d = 0; !diff.empty(); ++d) {
    const std::size_t len = diff.size();
    if (len >= 3 && diff[len - 1] == diff[len - 2] && diff[len - 2] == diff[len - 3]) {
      out.estimate = d + 1;
      out.stabilized = true;
      return out;
    }
    if (len < 3) {
      // Not enough data to see the tail settle; report the order reached.
      out.estimate = d + 1;
      out.stabilized = false;
      return out;
    }
    std::vector<long long> next(len - 1);
    for (std::size_t i = 0; i + 1 < len; ++i) next[i] = diff[i + 1] - diff[i];
    diff = std::move(next);
  }
  return out;
}

SpreadEstimate analytic_spread_estimate(const Ideal& ideal, unsigned n_max) {
  if (n_max < 4) throw PreconditionError("analytic spread estimate needs n_max >= 4");
  const auto base = minimal_generators(ideal);
  std::vector<std::size_t> mu;
  std::vector<Monomial> power = base;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) {
      std::vector<Monomial> next;
      next.reserve(power.size() * base.size());
      for (const auto& a : power)
        for (const auto& b : base) next.push_back(a * b);
      power = minimalize(std::move(next));
    }
    mu.push_back(power.size());
  }
  return estimate_from_sequence(std::move(mu));
}

InvariantReport ara_bounds(const Ideal& ideal, const Certificate* certificate, const VerificationReport* verification,
                           const InvariantOptions& options) {
  if (!ideal.is_squarefree())
    throw UnsupportedError("ara bounds need a squarefree monomial ideal, got " + ideal.to_string());
  InvariantReport report;
  report.mu = num_min_gens(ideal);
  report.height = height_monomial(ideal);
  report.pd = proj_dim(ideal, options.betti_cap);
  report.ara_lower = report.pd;
  report.ara_upper = report.mu;
  report.ell_lower = report.pd;
  if (certificate && verification && verification->passed) {
    const std::size_t count = certificate->generators.size();
    report.ara_upper = std::min(report.ara_upper, count);
    if (certificate->kind != CertificateKind::oracle_only && count == report.pd) report.ell_certified = report.pd;
  }
  if (options.spread_n_max) {
    auto est = analytic_spread_estimate(ideal, *options.spread_n_max);
    report.ell_estimate = est.estimate;
    report.ell_estimate_stabilized = est.stabilized;
  }
  return report;
}

const char* to_string(Minimality m) {
  switch (m) {
    case Minimality::certified_minimal:
      return "certified-minimal";
    case Minimality::consistent_minimal:
      return "consistent-minimal";
    case Minimality::unknown:
      return "unknown";
  }
  return "unknown";
}

Minimality classify_minimality(const Ideal& reduction, const Ideal& ideal, const InvariantReport& report,
                               const VerificationReport& verification) {
  if (!verification.passed) throw PreconditionError("classification needs a verified reduction");
  require_same_ring(*reduction.ring(), *ideal.ring());
  const std::size_t count = reduction.size();
  if (report.ell_certified && count == *report.ell_certified) return Minimality::certified_minimal;
  if (ideal.is_squarefree() && count == report.pd) return Minimality::certified_minimal;
  if (report.ell_estimate && report.ell_estimate_stabilized && count == *report.ell_estimate)
    return Minimality::consistent_minimal;
  return Minimality::unknown;
}

}  // namespace svred
