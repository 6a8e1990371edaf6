#include "svred/ring.hpp"

#include <algorithm>
#include <set>

#include "svred/errors.hpp"

namespace svred {

std::shared_ptr<const RingContext> RingContext::make(std::vector<std::string> variables,
                                                     std::vector<Polynomial> relations, bool origin_local) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(v).second) throw StructuralError("duplicate variable name '" + v + "'");
  }
  for (const auto& rel : relations) {
    if (rel.nvars() != variables.size()) throw StructuralError("relation over a different variable list");
  }
  relations.erase(std::remove_if(relations.begin(), relations.end(), [](const Polynomial& p) { return p.is_zero(); }),
                  relations.end());
  std::shared_ptr<RingContext> ring(new RingContext());
  ring->variables_ = std::move(variables);
  ring->relations_ = std::move(relations);
  ring->origin_local_ = origin_local;
  return ring;
}

std::optional<std::size_t> RingContext::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

bool RingContext::same_as(const RingContext& other) const {
  return this == &other || (variables_ == other.variables_ && relations_ == other.relations_ &&
                            origin_local_ == other.origin_local_);
}

bool RingContext::is_unit(const Polynomial& value) const {
  if (value.is_zero()) return false;
  if (value.is_constant()) return true;
  if (!origin_local_) return false;
  return value.terms().back().mono.is_one();
}

RingPtr tensor_ring(const RingContext& a, const RingContext& b) {
  std::vector<std::string> vars = a.variables();
  vars.insert(vars.end(), b.variables().begin(), b.variables().end());
  std::vector<Polynomial> rels;
  for (const auto& r : a.relations()) rels.push_back(embed(r, vars.size(), 0));
  for (const auto& r : b.relations()) rels.push_back(embed(r, vars.size(), a.nvars()));
  return RingContext::make(std::move(vars), std::move(rels), a.origin_local() || b.origin_local());
}

Polynomial embed(const Polynomial& p, std::size_t target_nvars, std::size_t offset) {
  if (offset + p.nvars() > target_nvars) throw StructuralError("embedding does not fit the target ring");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<Exponent> e(target_nvars, 0);
    std::copy(t.mono.exponents().begin(), t.mono.exponents().end(), e.begin() + static_cast<std::ptrdiff_t>(offset));
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(target_nvars, std::move(terms));
}

void require_same_ring(const RingContext& a, const RingContext& b) {
  if (!a.same_as(b)) throw StructuralError("objects belong to different rings");
}

}  // namespace svred
