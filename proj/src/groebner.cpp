#include "svred/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "svred/errors.hpp"

namespace svred {

namespace {

using TermList = std::vector<Term>;
using Kind = TermOrder::Kind;

int compare_internal(Kind kind, const Monomial& a, const Monomial& b) {
  return kind == Kind::lex ? compare_lex(a, b) : compare_degrevlex(a, b);
}

// Returns p[start..] - c * shift * g, assuming the first terms cancel.
TermList subtract_shifted(TermList& p, std::size_t start, const TermList& g, const Monomial& shift,
                          const Rational& c, Kind kind) {
  TermList out;
  out.reserve(p.size() - start + g.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  while (i < p.size() || j < g.size()) {
    int cmp;
    Monomial gm;
    if (j < g.size()) gm = g[j].mono * shift;
    if (i == p.size())
      cmp = -1;
    else if (j == g.size())
      cmp = 1;
    else
      cmp = compare_internal(kind, p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(p[i++]));
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -c * g[j].coeff});
      ++j;
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({std::move(p[i].mono), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(TermList& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

// Reducer lookup over a growing list of monic polynomials.
class ReducerSet {
 public:
  explicit ReducerSet(const std::vector<TermList>& polys) : polys_(polys) {}

  void add(std::size_t index) {
    const Monomial& lead = polys_[index].front().mono;
    by_lead_.emplace(lead, index);
    auto pos = std::upper_bound(by_degree_.begin(), by_degree_.end(), lead.degree(),
                                [&](std::uint64_t d, std::size_t k) { return d < polys_[k].front().mono.degree(); });
    by_degree_.insert(pos, index);
  }

  void remove(std::size_t index) {
    by_lead_.erase(polys_[index].front().mono);
    by_degree_.erase(std::find(by_degree_.begin(), by_degree_.end(), index));
  }

  const TermList* find(const Monomial& m) const {
    auto it = by_lead_.find(m);
    if (it != by_lead_.end()) return &polys_[it->second];
    for (std::size_t k : by_degree_) {
      const Monomial& lead = polys_[k].front().mono;
      if (lead.degree() >= m.degree()) break;
      if (lead.divides(m)) return &polys_[k];
    }
    return nullptr;
  }

 private:
  const std::vector<TermList>& polys_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> by_lead_;
  std::vector<std::size_t> by_degree_;
};

template <class Find>
TermList reduce_full(TermList p, const Find& find, Kind kind) {
  TermList remainder;
  std::size_t start = 0;
  while (start < p.size()) {
    const Term& head = p[start];
    const TermList* g = find(head.mono);
    if (g == nullptr) {
      remainder.push_back(std::move(p[start]));
      ++start;
      continue;
    }
    Monomial shift = *mono_quotient(head.mono, g->front().mono);
    Rational c = head.coeff / g->front().coeff;
    p = subtract_shifted(p, start, *g, shift, c, kind);
    start = 0;
  }
  return remainder;
}

TermList s_polynomial(const TermList& f, const TermList& g, Kind kind) {
  Monomial l = lcm(f.front().mono, g.front().mono);
  Monomial sf = *mono_quotient(l, f.front().mono);
  Monomial sg = *mono_quotient(l, g.front().mono);
  // Both monic: S = sf*f - sg*g.
  TermList a;
  a.reserve(f.size());
  for (const auto& t : f) a.push_back({t.mono * sf, t.coeff});
  TermList out = subtract_shifted(a, 0, g, sg, Rational(1), kind);
  return out;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

struct PairLess {
  Kind kind;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = compare_internal(kind, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

std::mutex observer_mutex;
std::function<void(const GroebnerBasis&)> basis_observer;

TermList to_internal(const Polynomial& p, const TermOrder& order) {
  TermList out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({order.to_internal(t.mono), t.coeff});
  std::sort(out.begin(), out.end(),
            [&](const Term& a, const Term& b) { return compare_internal(order.kind(), a.mono, b.mono) > 0; });
  return out;
}

Polynomial from_internal(const TermList& p, std::size_t nvars, const TermOrder& order) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({order.from_internal(t.mono), t.coeff});
  return Polynomial::from_terms(nvars, std::move(terms));
}

}  // namespace

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
  return make(Kind::degrevlex, std::move(perm));
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> perm(nvars);
  for (std::size_t i = 0; i < nvars; ++i) perm[i] = i;
  return make(Kind::lex, std::move(perm));
}

TermOrder TermOrder::make(Kind kind, std::vector<std::size_t> permutation) {
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t v : permutation) {
    if (v >= permutation.size() || seen[v]) throw StructuralError("term order permutation is not a bijection");
    seen[v] = true;
  }
  TermOrder order;
  order.kind_ = kind;
  order.permutation_ = std::move(permutation);
  return order;
}

Monomial TermOrder::to_internal(const Monomial& m) const {
  std::vector<Exponent> e(permutation_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = m[permutation_[k]];
  return Monomial(std::move(e));
}

Monomial TermOrder::from_internal(const Monomial& m) const {
  std::vector<Exponent> e(permutation_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[permutation_[k]] = m[k];
  return Monomial(std::move(e));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  return compare_internal(kind_, to_internal(a), to_internal(b));
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && elements_.front().is_constant(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (f.nvars() != ring_->nvars()) throw StructuralError("normal form of a polynomial from another ring");
  if (degree_bound_ && f.degree() > *degree_bound_)
    throw PreconditionError("polynomial degree exceeds the truncation bound of the basis");
  auto find = [&](const Monomial& m) -> const TermList* {
    auto it = by_lead_.find(m);
    if (it != by_lead_.end()) return &internal_[it->second];
    for (std::size_t k : by_degree_) {
      const Monomial& lead = internal_[k].front().mono;
      if (lead.degree() >= m.degree()) break;
      if (lead.divides(m)) return &internal_[k];
    }
    return nullptr;
  };
  TermList r = reduce_full(to_internal(f, order_), find, order_.kind());
  return from_internal(r, ring_->nvars(), order_);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) { return basis.normal_form(f); }

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators, const TermOrder& order,
                         BuchbergerOptions options) {
  if (order.nvars() != ring->nvars()) throw StructuralError("term order over a different number of variables");
  const Kind kind = order.kind();
  const auto bound = options.degree_bound;

  std::vector<TermList> input;
  for (const auto& g : generators) {
    if (g.nvars() != ring->nvars()) throw StructuralError("generator over a different ring");
    if (!g.is_zero()) input.push_back(to_internal(g, order));
  }
  for (const auto& rel : ring->relations()) input.push_back(to_internal(rel, order));
  std::stable_sort(input.begin(), input.end(), [](const TermList& a, const TermList& b) {
    return a.front().mono.degree() < b.front().mono.degree();
  });

  std::vector<TermList> polys;
  polys.reserve(input.size() * 2);
  std::vector<bool> active;
  ReducerSet reducers(polys);
  std::set<Pair, PairLess> pairs(PairLess{kind});
  bool unit = false;

  auto lead = [&](std::size_t k) -> const Monomial& { return polys[k].front().mono; };

  // Gebauer–Möller installation of a new element h.
  auto update = [&](TermList h) {
    make_monic(h);
    const std::size_t hi = polys.size();
    polys.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = lead(hi);

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) candidates.push_back({g, hi, lcm(lead(g), lh)});

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool keep = coprime(lead(p.i), lh);
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < candidates.size() && keep; ++d)
          if (candidates[d].lcm.divides(p.lcm)) keep = false;
        for (std::size_t d = 0; d < kept.size() && keep; ++d)
          if (kept[d].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    for (auto it = pairs.begin(); it != pairs.end();) {
      if (lh.divides(it->lcm) && lcm(lead(it->i), lh) != it->lcm && lcm(lead(it->j), lh) != it->lcm)
        it = pairs.erase(it);
      else
        ++it;
    }
    for (auto& p : kept) {
      if (coprime(lead(p.i), lh)) continue;
      if (bound && p.lcm.degree() > *bound) continue;
      pairs.insert(std::move(p));
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active[g] && lh.divides(lead(g))) {
        active[g] = false;
        reducers.remove(g);
      }
    }
    reducers.add(hi);
    if (lh.is_one()) unit = true;
  };

  auto find = [&](const Monomial& m) { return reducers.find(m); };

  for (auto& f : input) {
    if (unit) break;
    TermList h = reduce_full(std::move(f), find, kind);
    if (!h.empty()) update(std::move(h));
  }
  while (!pairs.empty() && !unit) {
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    TermList s = s_polynomial(polys[p.i], polys[p.j], kind);
    TermList h = reduce_full(std::move(s), find, kind);
    if (!h.empty()) update(std::move(h));
  }

  GroebnerBasis basis;
  basis.ring_ = ring;
  basis.order_ = order;
  basis.degree_bound_ = bound;

  std::vector<TermList> reduced;
  if (unit) {
    TermList one;
    one.push_back({Monomial(ring->nvars()), Rational(1)});
    reduced.push_back(std::move(one));
  } else {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) idx.push_back(k);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return compare_internal(kind, lead(a), lead(b)) < 0;
    });
    for (std::size_t k : idx) {
      TermList tail(polys[k].begin() + 1, polys[k].end());
      TermList r = reduce_full(std::move(tail), find, kind);
      TermList element;
      element.reserve(r.size() + 1);
      element.push_back(polys[k].front());
      for (auto& t : r) element.push_back(std::move(t));
      reduced.push_back(std::move(element));
    }
  }

  for (std::size_t k = 0; k < reduced.size(); ++k) {
    basis.elements_.push_back(from_internal(reduced[k], ring->nvars(), order));
    basis.leads_.push_back(order.from_internal(reduced[k].front().mono));
    basis.by_lead_.emplace(reduced[k].front().mono, k);
    basis.by_degree_.push_back(k);
  }
  basis.internal_ = std::move(reduced);
  std::stable_sort(basis.by_degree_.begin(), basis.by_degree_.end(), [&](std::size_t a, std::size_t b) {
    return basis.internal_[a].front().mono.degree() < basis.internal_[b].front().mono.degree();
  });

  std::function<void(const GroebnerBasis&)> observer;
  {
    std::lock_guard lock(observer_mutex);
    observer = basis_observer;
  }
  if (observer) observer(basis);
  return basis;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators) {
  return buchberger(ring, generators, TermOrder::degrevlex(ring->nvars()));
}

bool satisfies_buchberger_criterion(const GroebnerBasis& basis) {
  const auto& order = basis.order();
  const auto& elems = basis.elements();
  std::vector<TermList> internal;
  for (const auto& e : elems) internal.push_back(to_internal(e, order));
  for (std::size_t i = 0; i < internal.size(); ++i) {
    for (std::size_t j = 0; j < internal.size(); ++j) {
      if (i != j && internal[i].front().mono.divides(internal[j].front().mono)) return false;
    }
  }
  for (std::size_t i = 0; i < internal.size(); ++i) {
    for (std::size_t j = i + 1; j < internal.size(); ++j) {
      Monomial l = lcm(internal[i].front().mono, internal[j].front().mono);
      if (basis.degree_bound() && l.degree() > *basis.degree_bound()) continue;
      TermList s = s_polynomial(internal[i], internal[j], order.kind());
      Polynomial sp = from_internal(s, basis.ring()->nvars(), order);
      if (!basis.normal_form(sp).is_zero()) return false;
    }
  }
  return true;
}

void set_basis_observer(std::function<void(const GroebnerBasis&)> observer) {
  std::lock_guard lock(observer_mutex);
  basis_observer = std::move(observer);
}

namespace {

bool all_homogeneous(std::span<const Polynomial> polys) {
  return std::all_of(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

}  // namespace

Containment ideal_contains(const Ideal& big, std::span<const Polynomial> candidates) {
  const auto& ring = big.ring();
  BuchbergerOptions options;
  if (big.is_homogeneous() && all_homogeneous(ring->relations()) && all_homogeneous(candidates)) {
    std::uint64_t d = 0;
    for (const auto& c : candidates) d = std::max(d, c.degree());
    options.degree_bound = d;
  }
  GroebnerBasis gb = buchberger(ring, big.generators(), TermOrder::degrevlex(ring->nvars()), options);
  for (const auto& c : candidates) {
    if (c.nvars() != ring->nvars()) throw StructuralError("containment test across rings");
    if (!gb.contains(c)) return {false, c};
  }
  return {};
}

Containment ideal_contains(const Ideal& big, const Ideal& small) {
  require_same_ring(*big.ring(), *small.ring());
  return ideal_contains(big, small.generators());
}

std::optional<unsigned> is_reduction(const Ideal& reduction, const Ideal& ideal, unsigned s_max) {
  require_same_ring(*reduction.ring(), *ideal.ring());
  auto inside = ideal_contains(ideal, reduction);
  if (!inside.contained) {
    auto printed = ideal.ring()->print(*inside.witness);
    throw PreconditionError("candidate reduction is not contained in the ideal: " + printed, printed);
  }
  Ideal power_s = Ideal::unit(ideal.ring());
  for (unsigned s = 0; s <= s_max; ++s) {
    Ideal next = ideal_product(power_s, ideal);
    if (next.is_monomial()) next = Ideal::from_monomials(ideal.ring(), minimal_generators(next));
    Ideal rhs = ideal_product(reduction, power_s);
    if (ideal_contains(rhs, next).contained) return s;
    power_s = std::move(next);
  }
  return std::nullopt;
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  const auto& ring = *ideal.ring();
  if (f.nvars() != ring.nvars()) throw StructuralError("radical membership across rings");
  if (f.is_zero()) return true;
  std::string fresh = "t";
  while (ring.index_of(fresh)) fresh += "_";
  auto vars = ring.variables();
  vars.push_back(fresh);
  const std::size_t n = vars.size();
  std::vector<Polynomial> rels;
  for (const auto& r : ring.relations()) rels.push_back(embed(r, n, 0));
  RingPtr extended = RingContext::make(std::move(vars), std::move(rels), ring.origin_local());
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, n, 0));
  Polynomial t = Polynomial::variable(n, n - 1);
  gens.push_back(Polynomial::constant(n, 1) - t * embed(f, n, 0));
  return buchberger(extended, gens).is_unit();
}

}  // namespace svred
