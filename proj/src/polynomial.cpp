#include "svred/polynomial.hpp"

#include <algorithm>

#include "svred/errors.hpp"

namespace svred {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw StructuralError("polynomials over different rings");
}

// Merge two sorted term lists computing a + scale * b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, const Rational& scale) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size())
      cmp = -1;
    else if (j == b.size())
      cmp = 1;
    else
      cmp = compare_degrevlex(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].mono, scale * b[j].coeff});
      ++j;
    } else {
      Rational c = a[i].coeff + scale * b[j].coeff;
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.size() != nvars) throw StructuralError("term has wrong number of variables");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare_degrevlex(a.mono, b.mono) > 0; });
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  for (auto& t : p.terms_) t.coeff.canonicalize();
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return from_monomial(Monomial::variable(nvars, index));
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::uint64_t Polynomial::degree() const noexcept {
  // Leading term has maximal degree under a degree-compatible order.
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return inv * *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.nvars_);
  out.terms_ = merge_terms(a.terms_, b.terms_, Rational(1));
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  Polynomial out(a.nvars_);
  out.terms_ = merge_terms(a.terms_, b.terms_, Rational(-1));
  return out;
}

Polynomial Polynomial::multiply_term(const Monomial& m, const Rational& c) const {
  Polynomial out(nvars_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) out.terms_.push_back({t.mono * m, t.coeff * c});
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  Polynomial out(a.nvars_);
  for (const auto& t : small.terms_) out += large.multiply_term(t.mono, t.coeff);
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (c == 0) return out;
  out.terms_ = p.terms_;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.mono.is_one()) {
      out += rational_to_string(c);
    } else {
      if (c != 1) out += rational_to_string(c) + '*';
      out += t.mono.to_string(names);
    }
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  if (g.is_zero()) throw StructuralError("division by the zero polynomial");
  Polynomial quotient(f.nvars());
  Polynomial rest = f;
  const Term& lead = g.leading();
  while (!rest.is_zero()) {
    auto q = mono_quotient(rest.leading().mono, lead.mono);
    if (!q) return std::nullopt;
    Rational c = rest.leading().coeff / lead.coeff;
    quotient += Polynomial::from_monomial(*q, c);
    rest -= g.multiply_term(*q, c);
  }
  return quotient;
}

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int cmp = compare_degrevlex(a.terms()[i].mono, b.terms()[i].mono);
    if (cmp != 0) return cmp < 0;
    if (a.terms()[i].coeff != b.terms()[i].coeff) return a.terms()[i].coeff < b.terms()[i].coeff;
  }
  return a.size() < b.size();
}

}  // namespace svred
