#include "svred/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <thread>

#include "svred/errors.hpp"

namespace svred {

namespace {

using Mask = std::uint32_t;
using Clock = std::chrono::steady_clock;

struct Problem {
  std::vector<Polynomial> gens;  // search order
  std::vector<Monomial> monos;
  // cand[i][j]: generators a' with a' | g_i g_j and g_i g_j / a' in I.
  std::vector<std::vector<Mask>> cand;
};

Problem make_problem(const Ideal& ideal) {
  Problem p;
  p.gens = ideal.generators();
  std::stable_sort(p.gens.begin(), p.gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return compare_degrevlex(a.leading().mono, b.leading().mono) > 0;
  });
  for (const auto& g : p.gens) p.monos.push_back(g.leading().mono);
  const std::size_t n = p.gens.size();
  p.cand.assign(n, std::vector<Mask>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Monomial u = p.monos[i] * p.monos[j];
      Mask mask = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        auto q = mono_quotient(u, p.monos[k]);
        if (q && monomial_member(*q, p.monos)) mask |= Mask{1} << k;
      }
      p.cand[i][j] = p.cand[j][i] = mask;
    }
  return p;
}

enum class Outcome { found, exhausted, node_limit, time_limit };

class Subtree {
 public:
  Subtree(const Problem& p, std::size_t r, std::size_t root, std::size_t node_limit, Clock::time_point deadline,
          const std::atomic<bool>& stop)
      : p_(p), r_(r), root_(root), node_limit_(node_limit), deadline_(deadline), stop_(stop),
        level_(p.gens.size(), kUnplaced), count_(r + 1, 0) {}

  Outcome run() {
    place(root_, 0);
    Outcome out = dfs(0);
    return out;
  }

  std::size_t nodes() const { return nodes_; }
  std::vector<std::vector<Polynomial>> parts() const {
    std::vector<std::vector<Polynomial>> parts(r_ + 1);
    for (std::size_t i = 0; i < p_.gens.size(); ++i) parts[level_[i]].push_back(p_.gens[i]);
    return parts;
  }

 private:
  static constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);

  void place(std::size_t i, std::size_t l) {
    level_[i] = l;
    ++count_[l];
    placed_ |= Mask{1} << i;
  }
  void unplace(std::size_t i) {
    --count_[level_[i]];
    level_[i] = kUnplaced;
    placed_ &= ~(Mask{1} << i);
  }

  // Candidates still able to serve as a' for a pair at level l: placed
  // below l, or not yet placed.
  Mask usable(std::size_t l) const {
    Mask m = ~placed_ & ((Mask{1} << p_.gens.size()) - 1);
    for (std::size_t k = 0; k < p_.gens.size(); ++k)
      if (level_[k] != kUnplaced && level_[k] < l) m |= Mask{1} << k;
    return m;
  }

  bool consistent() const {
    const std::size_t n = p_.gens.size();
    std::vector<Mask> usable_at(r_ + 1);
    for (std::size_t l = 0; l <= r_; ++l) usable_at[l] = usable(l);
    for (std::size_t i = 0; i < n; ++i) {
      if (level_[i] == kUnplaced) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if (level_[j] == level_[i] && (p_.cand[i][j] & usable_at[level_[i]]) == 0) return false;
    }
    return true;
  }

  Outcome dfs(std::size_t next) {
    const std::size_t n = p_.gens.size();
    while (next < n && level_[next] != kUnplaced) ++next;
    if (next == n) return Outcome::found;
    if (stop_.load(std::memory_order_relaxed)) return Outcome::time_limit;
    std::size_t remaining = 0;
    for (std::size_t k = next; k < n; ++k)
      if (level_[k] == kUnplaced) ++remaining;
    for (std::size_t l = 1; l <= r_; ++l) {
      if (++nodes_ > node_limit_) return Outcome::node_limit;
      if ((nodes_ & 1023) == 0 && Clock::now() > deadline_) return Outcome::time_limit;
      const bool was_empty = count_[l] == 0;
      place(next, l);
      std::size_t empty = 0;
      for (std::size_t m = 1; m <= r_; ++m)
        if (count_[m] == 0) ++empty;
      if (empty <= remaining - 1 && consistent()) {
        Outcome out = dfs(next + 1);
        if (out != Outcome::exhausted) {
          if (out != Outcome::found) unplace(next);
          return out;
        }
      }
      unplace(next);
      (void)was_empty;
    }
    return Outcome::exhausted;
  }

  const Problem& p_;
  std::size_t r_;
  std::size_t root_;
  std::size_t node_limit_;
  Clock::time_point deadline_;
  const std::atomic<bool>& stop_;
  std::vector<std::size_t> level_;
  std::vector<std::size_t> count_;
  Mask placed_ = 0;
  std::size_t nodes_ = 0;
};

struct SubtreeResult {
  Outcome outcome = Outcome::exhausted;
  std::size_t nodes = 0;
  std::vector<std::vector<Polynomial>> parts;
};

}  // namespace

SearchResult search_sv_partition(const Ideal& ideal, const SearchBudget& budget) {
  if (!ideal.is_monomial()) throw UnsupportedError("partition search needs a monomial ideal");
  if (!ideal.ring()->relations().empty()) throw UnsupportedError("partition search needs a polynomial ring");
  if (ideal.size() > 16) throw PreconditionError("partition search supports at most 16 generators");
  if (ideal.size() == 0) throw PreconditionError("partition search needs a nonzero ideal");
  if (budget.node_limit == 0 || budget.time_limit_seconds <= 0 || budget.workers == 0)
    throw PreconditionError("search budget limits must be positive");

  const Problem problem = make_problem(ideal);
  const std::size_t n = problem.gens.size();
  const std::size_t r_max = std::min(budget.r_target.value_or(n - 1), n - 1);
  const auto deadline =
      Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.time_limit_seconds));

  SearchResult result;
  bool complete = true;
  std::atomic<bool> stop{false};
  for (std::size_t r = 0; r <= r_max && !result.partition; ++r) {
    // Subtrees are indexed by the P_0 choice; the first success in index
    // order wins regardless of which worker finished first.
    std::vector<SubtreeResult> results(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t root = next++; root < n; root = next++) {
        Subtree tree(problem, r, root, budget.node_limit, deadline, stop);
        SubtreeResult& out = results[root];
        out.outcome = tree.run();
        out.nodes = tree.nodes();
        if (out.outcome == Outcome::found) out.parts = tree.parts();
        if (out.outcome == Outcome::time_limit) stop = true;
      }
    };
    const unsigned workers = std::min<unsigned>(budget.workers, static_cast<unsigned>(n));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work);
      for (auto& t : threads) t.join();
    }
    for (std::size_t root = 0; root < n; ++root) {
      const auto& out = results[root];
      result.nodes += out.nodes;
      if (result.partition) continue;
      if (out.outcome == Outcome::found) {
        Partition candidate(ideal, out.parts);
        if (check_sv(candidate).passed) {
          result.partition = std::move(candidate);
          continue;
        }
        complete = false;
      } else if (out.outcome == Outcome::node_limit) {
        result.node_limit_hit = true;
        complete = false;
      } else if (out.outcome == Outcome::time_limit) {
        result.time_limit_hit = true;
        complete = false;
      }
    }
    if (result.time_limit_hit) break;
  }
  if (result.partition) return result;

  result.exhaustive = complete && !result.time_limit_hit;
  const std::size_t parts = r_max + 1;
  if (result.exhaustive)
    result.reason = "no SV partition with at most " + std::to_string(parts) + " parts exists";
  else if (result.time_limit_hit)
    result.reason = "time limit reached";
  else
    result.reason = "node limit reached";
  if (ideal.is_monomial()) {
    try {
      auto est = analytic_spread_estimate(ideal, 8);
      result.ell_estimate = est.estimate;
      result.ell_estimate_stabilized = est.stabilized;
      if (est.stabilized && est.estimate > parts)
        result.reason += "; analytic spread estimate " + std::to_string(est.estimate) + " exceeds " +
                         std::to_string(parts) + ", and every reduction needs at least that many generators";
    } catch (const Error&) {
    }
  }
  return result;
}

EqualityResult certify_equalities(const Ideal& ideal, SearchBudget budget) {
  if (!ideal.is_squarefree()) throw UnsupportedError("certify_equalities needs a squarefree monomial ideal");
  EqualityResult out;
  out.pd = proj_dim(ideal);
  if (out.pd == 0) throw PreconditionError("certify_equalities needs a proper nonzero ideal");
  budget.r_target = out.pd - 1;
  out.search = search_sv_partition(ideal, budget);
  if (!out.search.partition) return out;
  Certificate cert = build_certificate(CertificateKind::sv, *out.search.partition);
  VerificationReport verification = verify_certificate(cert);
  if (!verification.passed) return out;
  out.report = ara_bounds(ideal, &cert, &verification);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace svred
