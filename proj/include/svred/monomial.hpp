#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace svred {

using Exponent = std::uint32_t;

/// Exponent vector over the variables of a ring. The length is fixed by the
/// ring; the total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept { return degree_; }

  bool is_one() const noexcept { return degree_ == 0; }
  bool is_squarefree() const noexcept;
  /// True when this monomial divides `other` (componentwise <=).
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(Exponent n) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

  /// Bitmask of variables with positive exponent; only valid for size() <= 64.
  std::uint64_t support_mask() const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// a / b when b divides a, absent otherwise. Throws StructuralError when the
/// monomials live over different variable counts.
std::optional<Monomial> mono_quotient(const Monomial& a, const Monomial& b);

/// Degree reverse lexicographic comparison with respect to the declared
/// variable order (x_0 > x_1 > ...). Returns <0, 0, >0.
int compare_degrevlex(const Monomial& a, const Monomial& b);

/// Pure lexicographic comparison (x_0 > x_1 > ...).
int compare_lex(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Descending canonical order, i.e. leading monomial first.
struct DegrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_degrevlex(a, b) > 0; }
};

}  // namespace svred
