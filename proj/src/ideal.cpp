#include "svred/ideal.hpp"

#include <algorithm>

#include "svred/errors.hpp"

namespace svred {

const char* to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::monomial:
      return "monomial";
    case IdealKind::squarefree_monomial:
      return "squarefree-monomial";
    case IdealKind::general:
      return "general";
  }
  return "general";
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw StructuralError("ideal without a ring");
  for (auto& g : generators) {
    if (g.nvars() != ring_->nvars()) throw StructuralError("generator over a different ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
  bool monomial = std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& p) { return p.is_monomial(); });
  if (!monomial) {
    kind_ = IdealKind::general;
  } else {
    bool squarefree = std::all_of(generators_.begin(), generators_.end(),
                                  [](const Polynomial& p) { return p.leading().mono.is_squarefree(); });
    kind_ = squarefree ? IdealKind::squarefree_monomial : IdealKind::monomial;
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto n = ring->nvars();
  return Ideal(std::move(ring), {Polynomial::constant(n, 1)});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::from_monomials(RingPtr ring, std::span<const Monomial> monomials) {
  std::vector<Polynomial> gens;
  gens.reserve(monomials.size());
  for (const auto& m : monomials) gens.push_back(Polynomial::from_monomial(m));
  return Ideal(std::move(ring), std::move(gens));
}

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += ring_->print(generators_[i]);
  }
  return out + ")";
}

std::vector<Monomial> minimalize(std::vector<Monomial> monomials) {
  // Ascending degree so that any divisor of m is met before m.
  std::sort(monomials.begin(), monomials.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) < 0; });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    bool divisible = false;
    for (const auto& k : kept) {
      if (k.degree() >= m.degree()) break;
      if (k.divides(m)) {
        divisible = true;
        break;
      }
    }
    if (!divisible) kept.push_back(std::move(m));
  }
  std::reverse(kept.begin(), kept.end());
  return kept;
}

std::vector<Monomial> minimal_generators(const Ideal& ideal) {
  if (!ideal.is_monomial()) throw UnsupportedError("minimal generators need a monomial ideal, got " + ideal.to_string());
  std::vector<Monomial> monos;
  monos.reserve(ideal.size());
  for (const auto& g : ideal.generators()) monos.push_back(g.leading().mono);
  return minimalize(std::move(monos));
}

std::size_t num_min_gens(const Ideal& ideal) { return minimal_generators(ideal).size(); }

bool monomial_member(const Monomial& m, std::span<const Monomial> generators) {
  return std::any_of(generators.begin(), generators.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

std::vector<Monomial> monomial_products(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return minimalize(std::move(out));
}

std::vector<Polynomial> dedup(std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) { return polynomial_less(b, a); });
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  return polys;
}

}  // namespace

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  if (a.is_monomial() && b.is_monomial()) {
    auto prod = monomial_products(minimal_generators(a), minimal_generators(b));
    return Ideal::from_monomials(a.ring(), prod);
  }
  std::vector<Polynomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) gens.push_back(x * y);
  return Ideal(a.ring(), dedup(std::move(gens)));
}

Ideal ideal_power(const Ideal& ideal, unsigned n) {
  if (n == 0) return Ideal::unit(ideal.ring());
  if (ideal.is_monomial()) {
    auto base = minimal_generators(ideal);
    auto acc = base;
    for (unsigned k = 1; k < n; ++k) acc = monomial_products(acc, base);
    return Ideal::from_monomials(ideal.ring(), acc);
  }
  // Products over multisets of generators (combinations with repetition).
  const auto& gens = ideal.generators();
  std::vector<std::pair<Polynomial, std::size_t>> layer;  // product, last generator index used
  for (std::size_t i = 0; i < gens.size(); ++i) layer.emplace_back(gens[i], i);
  for (unsigned k = 1; k < n; ++k) {
    std::vector<std::pair<Polynomial, std::size_t>> next;
    for (const auto& [p, last] : layer)
      for (std::size_t i = last; i < gens.size(); ++i) next.emplace_back(p * gens[i], i);
    layer = std::move(next);
  }
  std::vector<Polynomial> out;
  out.reserve(layer.size());
  for (auto& entry : layer) out.push_back(std::move(entry.first));
  return Ideal(ideal.ring(), dedup(std::move(out)));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect_monomial(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  auto ga = minimal_generators(a);
  auto gb = minimal_generators(b);
  std::vector<Monomial> lcms;
  lcms.reserve(ga.size() * gb.size());
  for (const auto& x : ga)
    for (const auto& y : gb) lcms.push_back(lcm(x, y));
  return Ideal::from_monomials(a.ring(), minimalize(std::move(lcms)));
}

bool MonomialPowerMembership::contains(const Monomial& m, unsigned power) {
  if (power == 0) return true;
  if (known_in_.size() <= power) {
    known_in_.resize(power + 1);
    known_out_.resize(power + 1);
  }
  if (known_in_[power].contains(m)) return true;
  if (known_out_[power].contains(m)) return false;
  bool result = false;
  for (const auto& g : gens_) {
    auto q = mono_quotient(m, g);
    if (q && contains(*q, power - 1)) {
      result = true;
      break;
    }
  }
  (result ? known_in_[power] : known_out_[power]).insert(m);
  return result;
}

}  // namespace svred
