#include "gagola/finite_field.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "gagola/error.hpp"
#include "gagola/number_theory.hpp"

namespace gagola {

namespace {

using Poly = std::vector<std::uint64_t>;  // low to high, trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return nt::pow_mod(a, p - 2, p); }

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = nt::mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = (a[shift + i] + p - nt::mul_mod(c, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + nt::mul_mod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mul_mod(result, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// x^(p^k) mod f.
Poly x_power_frobenius(unsigned k, const Poly& f, std::uint64_t p) {
  Poly g = poly_mod(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) g = poly_pow_mod(g, p, f, p);
  return g;
}

}  // namespace

bool is_irreducible(std::uint64_t p, const std::vector<std::uint64_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  if (f.back() != 1) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  const Poly x = poly_mod(Poly{0, 1}, f, p);
  if (x_power_frobenius(n, f, p) != x) return false;
  for (std::uint64_t r : nt::prime_divisors(n)) {
    Poly h = poly_sub(x_power_frobenius(static_cast<unsigned>(n / r), f, p), x, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldPtr Field::create(std::uint64_t p, unsigned n,
                       std::optional<std::vector<std::uint64_t>> modulus) {
  if (!nt::is_prime(p) || p >= (std::uint64_t{1} << 31)) {
    raise(Errc::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  if (n == 0) raise(Errc::InvalidArgument, "field degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 63) / p) raise(Errc::Overflow, "field cardinality exceeds 2^63");
    q *= p;
  }
  std::vector<std::uint64_t> poly;
  if (modulus) {
    poly = *modulus;
    trim(poly);
    if (poly.size() != n + 1) raise(Errc::InvalidArgument, "modulus must have degree n");
    for (auto c : poly) {
      if (c >= p) raise(Errc::InvalidArgument, "modulus coefficient out of range");
    }
    if (poly.back() != 1) raise(Errc::InvalidArgument, "modulus must be monic");
    if (!is_irreducible(p, poly)) raise(Errc::ReduciblePolynomial, "modulus is reducible");
  } else {
    // Lexicographic order on the packed lower coefficients.
    for (std::uint64_t code = 0; code < q; ++code) {
      std::vector<std::uint64_t> cand(n + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < n; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[n] = 1;
      if (is_irreducible(p, cand)) {
        poly = std::move(cand);
        break;
      }
    }
  }
  return FieldPtr(new Field(p, n, std::move(poly)));
}

Field::Field(std::uint64_t p, unsigned n, std::vector<std::uint64_t> modulus)
    : p_(p), n_(n), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < n_; ++i) {
    digit_weight_.push_back(q_);
    q_ *= p_;
  }
  if (p_ == 2) {
    for (unsigned i = 0; i <= n_; ++i) {
      if (modulus_[i]) modulus_code_ |= std::uint64_t{1} << i;
    }
  } else {
    // Leading term p^n may not fit; the code is informational, saturate.
    unsigned __int128 code = 0, w = 1;
    for (unsigned i = 0; i <= n_; ++i) {
      code += w * modulus_[i];
      w *= p_;
    }
    modulus_code_ = code > std::numeric_limits<std::uint64_t>::max()
                        ? std::numeric_limits<std::uint64_t>::max()
                        : static_cast<std::uint64_t>(code);
  }
  if (q_ > 2) unit_group_factors_ = nt::factorize(q_ - 1);
}

Field::Value Field::add(Value a, Value b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return (a + b) % p_;
  Value r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    const Value w = digit_weight_[i];
    r += ((a / w % p_ + b / w % p_) % p_) * w;
  }
  return r;
}

Field::Value Field::neg(Value a) const {
  if (p_ == 2) return a;
  if (n_ == 1) return (p_ - a) % p_;
  Value r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    const Value w = digit_weight_[i];
    r += ((p_ - a / w % p_) % p_) * w;
  }
  return r;
}

Field::Value Field::sub(Value a, Value b) const { return add(a, neg(b)); }

Field::Value Field::mul_binary(Value a, Value b) const {
  // n <= 63, so a * x never leaves the word before reduction.
  const Value top = Value{1} << n_;
  Value r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_code_;
  }
  return r;
}

Field::Value Field::mul_general(Value a, Value b) const {
  if (n_ == 1) return nt::mul_mod(a, b, p_);
  std::vector<std::uint64_t> da(n_), db(n_);
  for (unsigned i = 0; i < n_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::vector<std::uint64_t> r(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      r[i + j] = (r[i + j] + nt::mul_mod(da[i], db[j], p_)) % p_;
    }
  }
  for (std::size_t k = r.size(); k-- > n_;) {
    const std::uint64_t c = r[k];
    if (c == 0) continue;
    for (unsigned i = 0; i < n_; ++i) {
      r[k - n_ + i] = (r[k - n_ + i] + p_ - nt::mul_mod(c, modulus_[i], p_)) % p_;
    }
    r[k] = 0;
  }
  Value out = 0;
  for (unsigned i = 0; i < n_; ++i) out += r[i] * digit_weight_[i];
  return out;
}

Field::Value Field::mul(Value a, Value b) const {
  return p_ == 2 ? mul_binary(a, b) : mul_general(a, b);
}

Field::Value Field::pow(Value a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Value result = 1;
  auto e = static_cast<std::uint64_t>(k);
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Field::Value Field::inv(Value a) const {
  if (a == 0) raise(Errc::ZeroInverse, "inverse of zero in " + name());
  // a^(q-2) without a signed round trip.
  Value result = 1, base = a;
  std::uint64_t e = q_ - 2;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Field::Value Field::frobenius(Value a, unsigned h) const {
  h %= n_;
  for (unsigned i = 0; i < h; ++i) {
    Value r = 1, base = a;
    std::uint64_t e = p_;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    a = r;
  }
  return a;
}

std::uint64_t Field::order(Value a) const {
  if (a == 0) raise(Errc::ZeroElement, "multiplicative order of zero");
  if (q_ == 2) return 1;
  std::uint64_t ord = q_ - 1;
  for (auto [r, e] : unit_group_factors_) {
    for (unsigned i = 0; i < e; ++i) {
      const std::uint64_t cand = ord / r;
      Value x = 1, base = a;
      std::uint64_t k = cand;
      while (k > 0) {
        if (k & 1) x = mul(x, base);
        base = mul(base, base);
        k >>= 1;
      }
      if (x != 1) break;
      ord = cand;
    }
  }
  return ord;
}

Field::Value Field::primitive_element() const {
  if (!primitive_) {
    for (Value g = 1; g < q_; ++g) {
      if (order(g) == q_ - 1) {
        primitive_ = g;
        break;
      }
    }
  }
  return *primitive_;
}

Field::Value Field::generator_x() const {
  if (n_ >= 2) return p_;
  return (p_ - modulus_[0]) % p_;
}

Field::Value Field::from_int(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Value>(r);
}

std::vector<std::uint64_t> Field::coefficients(Value a) const {
  std::vector<std::uint64_t> c(n_);
  for (unsigned i = 0; i < n_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Field::Value Field::from_coefficients(const std::vector<std::uint64_t>& coeffs) const {
  if (coeffs.size() != n_) raise(Errc::InvalidArgument, "coefficient vector must have n entries");
  Value r = 0;
  for (unsigned i = 0; i < n_; ++i) {
    if (coeffs[i] >= p_) raise(Errc::InvalidArgument, "coefficient out of range");
    r += coeffs[i] * digit_weight_[i];
  }
  return r;
}

std::string Field::name() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "GF(%llu^%u,0x%llX)", static_cast<unsigned long long>(p_), n_,
                static_cast<unsigned long long>(modulus_code_));
  return buf;
}

std::string Field::format(Value a) const {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llX@", static_cast<unsigned long long>(a));
  return buf + name();
}

FieldElement parse_field_element(const std::string& text) {
  unsigned long long value = 0, p = 0, code = 0;
  unsigned n = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "0x%llx@GF(%llu^%u,0x%llx)%c", &value, &p, &n, &code, &tail) != 4) {
    raise(Errc::ParseError, "bad field element '" + text + "'");
  }
  if (!nt::is_prime(p) || n == 0 || n > 63) raise(Errc::ParseError, "bad field in '" + text + "'");
  std::vector<std::uint64_t> poly(n + 1, 0);
  unsigned long long c = code;
  if (p == 2) {
    for (unsigned i = 0; i <= n; ++i) poly[i] = (c >> i) & 1;
  } else {
    for (unsigned i = 0; i <= n; ++i) {
      poly[i] = c % p;
      c /= p;
    }
  }
  FieldPtr field = Field::create(p, n, poly);
  if (!field->contains(value)) raise(Errc::ParseError, "element out of range in '" + text + "'");
  return {field, value};
}

FieldElement::FieldElement(FieldPtr field, Field::Value value)
    : field_(std::move(field)), value_(value) {
  if (!field_->contains(value_)) raise(Errc::InvalidArgument, "value outside field");
}

void FieldElement::require_same(const FieldElement& o) const {
  if (field_ == o.field_) return;
  if (field_->characteristic() != o.field_->characteristic() ||
      field_->modulus() != o.field_->modulus()) {
    raise(Errc::MixedFields, field_->name() + " vs " + o.field_->name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t k) const { return {field_, field_->pow(value_, k)}; }
FieldElement FieldElement::frobenius(unsigned h) const { return {field_, field_->frobenius(value_, h)}; }
std::uint64_t FieldElement::order() const { return field_->order(value_); }

bool FieldElement::operator==(const FieldElement& o) const {
  require_same(o);
  return value_ == o.value_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  require_same(o);
  return value_ <=> o.value_;
}

}  // namespace gagola
