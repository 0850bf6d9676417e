#pragma once

// Integer combinations of e-th roots of unity, stored as coefficient vectors
// modulo x^e - 1. Equality and zero tests reduce modulo the cyclotomic
// polynomial Phi_e, so they are exact.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gagola {

/// Phi_e, coefficients from x^0 upward.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned e);

class CyclotomicInteger {
 public:
  CyclotomicInteger() : CyclotomicInteger(1) {}
  explicit CyclotomicInteger(unsigned e);
  /// sum_k coeffs[k] zeta_e^k; coeffs may be shorter than e.
  CyclotomicInteger(unsigned e, std::vector<std::int64_t> coeffs);
  static CyclotomicInteger integer(unsigned e, std::int64_t n);

  unsigned exponent() const noexcept { return e_; }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  CyclotomicInteger operator+(const CyclotomicInteger& o) const;
  CyclotomicInteger operator-(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(const CyclotomicInteger& o) const;
  CyclotomicInteger operator*(std::int64_t k) const;
  /// Complex conjugate: zeta^k -> zeta^-k.
  CyclotomicInteger conj() const;

  /// Remainder modulo Phi_e; the canonical form used for comparisons.
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  /// Image under zeta_e -> z in GF(p), where z has order e.
  std::uint64_t mod_p(std::uint64_t p, std::uint64_t z) const;

  /// Integers print plainly, otherwise "2*z6^1 - z6^3" in reduced form.
  std::string to_string() const;

  bool operator==(const CyclotomicInteger& o) const;

 private:
  void require_same(const CyclotomicInteger& o) const;

  unsigned e_;
  std::vector<std::int64_t> c_;  // size e_
};

}  // namespace gagola
