#pragma once

// Exact arithmetic in GF(p^n). Elements are packed into one 64-bit word:
// bit i is the coefficient of x^i when p = 2, and the base-p digit i holds
// that coefficient otherwise. Operations on raw packed values live on Field;
// FieldElement is the value type carrying its field along.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gagola {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  using Value = std::uint64_t;

  /// Builds GF(p^n). `modulus` lists coefficients from x^0 up to x^n and must
  /// be monic of degree n; when absent the lexicographically least
  /// irreducible polynomial is chosen.
  static FieldPtr create(std::uint64_t p, unsigned n,
                         std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return n_; }
  std::uint64_t cardinality() const noexcept { return q_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }
  /// The modulus packed like an element (including the leading term), e.g.
  /// 0xB for x^3 + x + 1.
  std::uint64_t modulus_code() const noexcept { return modulus_code_; }

  Value add(Value a, Value b) const;
  Value sub(Value a, Value b) const;
  Value neg(Value a) const;
  Value mul(Value a, Value b) const;
  Value inv(Value a) const;
  Value pow(Value a, std::int64_t k) const;
  /// a^(p^h).
  Value frobenius(Value a, unsigned h) const;
  std::uint64_t order(Value a) const;

  /// The least (by packed value) generator of the multiplicative group.
  Value primitive_element() const;
  /// Packed value of x (equal to the prime-field element p_ mod p when n = 1).
  Value generator_x() const;
  Value from_int(std::int64_t k) const;

  std::vector<std::uint64_t> coefficients(Value a) const;
  Value from_coefficients(const std::vector<std::uint64_t>& coeffs) const;

  /// "0x5@GF(2^3,0xB)".
  std::string format(Value a) const;
  std::string name() const;

  bool contains(Value a) const noexcept { return a < q_; }

 private:
  Field(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus);

  Value mul_binary(Value a, Value b) const;
  Value mul_general(Value a, Value b) const;

  std::uint64_t p_;
  unsigned n_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  std::uint64_t modulus_code_ = 0;
  std::vector<std::uint64_t> digit_weight_;  // p^i
  mutable std::optional<Value> primitive_;
  std::vector<std::pair<std::uint64_t, unsigned>> unit_group_factors_;
};

/// Irreducibility over GF(p) of a monic polynomial (coefficients low to high).
bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly);

inline FieldPtr create_field(std::uint64_t p, unsigned n,
                             std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
  return Field::create(p, n, std::move(modulus));
}

class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Value value);

  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }
  static FieldElement x(FieldPtr field) {
    auto v = field->generator_x();
    return {std::move(field), v};
  }

  const FieldPtr& field() const noexcept { return field_; }
  Field::Value value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;
  FieldElement pow(std::int64_t k) const;
  FieldElement frobenius(unsigned h) const;
  std::uint64_t order() const;

  std::string to_string() const { return field_->format(value_); }

  bool operator==(const FieldElement& o) const;
  std::strong_ordering operator<=>(const FieldElement& o) const;

 private:
  void require_same(const FieldElement& o) const;

  FieldPtr field_;
  Field::Value value_;
};

/// Parses the textual form produced by Field::format, building the field.
FieldElement parse_field_element(const std::string& text);

}  // namespace gagola

template <>
struct std::hash<gagola::FieldElement> {
  std::size_t operator()(const gagola::FieldElement& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.value());
  }
};
