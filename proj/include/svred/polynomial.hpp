#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "svred/monomial.hpp"

namespace svred {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
};

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// in descending degrevlex order with no zero coefficients and no repeated
/// monomials, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Normalizes: merges repeated monomials, drops zeros, sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// A single nonzero term (coefficient allowed).
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const noexcept;
  /// Total degree of the leading term; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;

  const Term& leading() const { return terms_.front(); }
  Polynomial monic() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial multiply_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Prints with `*` for products and `^` for powers, leading term first,
  /// e.g. `x12*x21 + x11*x22` or `x^2*y^2 - z^4`.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Quotient q with f = q * g in the polynomial ring, or absent when g does
/// not divide f. For a single divisor the division remainder vanishes
/// exactly when g | f, so the first non-divisible leading term decides.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Total order on polynomials used for deterministic sorting (by leading
/// terms, then size, then coefficients).
bool polynomial_less(const Polynomial& a, const Polynomial& b);

std::string rational_to_string(const Rational& q);

}  // namespace svred
