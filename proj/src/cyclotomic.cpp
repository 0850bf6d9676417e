#include "gagola/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "gagola/error.hpp"
#include "gagola/number_theory.hpp"

namespace gagola {

namespace {

using Poly = std::vector<std::int64_t>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division by a monic polynomial; returns the quotient.
Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  const std::size_t dn = den.size() - 1;
  if (num.size() - 1 < dn) return {0};
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

// Remainder modulo a monic polynomial.
Poly remainder(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  num.resize(std::min(num.size(), dn));
  return num;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned e) {
  if (e == 0) raise(Errc::InvalidArgument, "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  // x^e - 1 = prod_{d | e} Phi_d; divisors come out ascending, so every
  // proper divisor is cached before it is needed.
  for (auto d64 : nt::divisors(e)) {
    const auto d = static_cast<unsigned>(d64);
    if (cache.count(d)) continue;
    Poly p(d + 1, 0);
    p[0] = -1;
    p[d] = 1;
    for (auto f : nt::divisors(d)) {
      if (f != d) p = divide_exact(p, cache.at(static_cast<unsigned>(f)));
    }
    trim(p);
    cache.emplace(d, std::move(p));
  }
  return cache.at(e);
}

CyclotomicInteger::CyclotomicInteger(unsigned e) : e_(e), c_(e, 0) {
  if (e == 0) raise(Errc::InvalidArgument, "cyclotomic exponent must be positive");
}

CyclotomicInteger::CyclotomicInteger(unsigned e, std::vector<std::int64_t> coeffs)
    : CyclotomicInteger(e) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) c_[k % e_] += coeffs[k];
}

CyclotomicInteger CyclotomicInteger::integer(unsigned e, std::int64_t n) {
  CyclotomicInteger r(e);
  r.c_[0] = n;
  return r;
}

void CyclotomicInteger::require_same(const CyclotomicInteger& o) const {
  if (e_ != o.e_) raise(Errc::InvalidArgument, "cyclotomic exponents differ");
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& o) const {
  require_same(o);
  CyclotomicInteger r = *this;
  for (unsigned k = 0; k < e_; ++k) r.c_[k] += o.c_[k];
  return r;
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& o) const {
  require_same(o);
  CyclotomicInteger r = *this;
  for (unsigned k = 0; k < e_; ++k) r.c_[k] -= o.c_[k];
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& o) const {
  require_same(o);
  CyclotomicInteger r(e_);
  // Character values are sparse (supported on multiples of e/o(g)).
  for (unsigned i = 0; i < e_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[(i + j) % e_] += c_[i] * o.c_[j];
    }
  }
  return r;
}

CyclotomicInteger CyclotomicInteger::operator*(std::int64_t k) const {
  CyclotomicInteger r = *this;
  for (auto& c : r.c_) c *= k;
  return r;
}

CyclotomicInteger CyclotomicInteger::conj() const {
  CyclotomicInteger r(e_);
  for (unsigned k = 0; k < e_; ++k) r.c_[(e_ - k) % e_] = c_[k];
  return r;
}

std::vector<std::int64_t> CyclotomicInteger::reduced() const {
  auto r = remainder(c_, cyclotomic_polynomial(e_));
  r.resize(cyclotomic_polynomial(e_).size() - 1, 0);
  return r;
}

bool CyclotomicInteger::is_zero() const {
  for (auto c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> CyclotomicInteger::as_integer() const {
  const auto r = reduced();
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return r.empty() ? 0 : r[0];
}

std::uint64_t CyclotomicInteger::mod_p(std::uint64_t p, std::uint64_t z) const {
  std::uint64_t acc = 0, zk = 1;
  for (unsigned k = 0; k < e_; ++k) {
    const std::int64_t c = c_[k] % static_cast<std::int64_t>(p);
    const std::uint64_t cu = c < 0 ? static_cast<std::uint64_t>(c + static_cast<std::int64_t>(p))
                                   : static_cast<std::uint64_t>(c);
    acc = (acc + nt::mul_mod(cu, zk, p)) % p;
    zk = nt::mul_mod(zk, z, p);
  }
  return acc;
}

std::string CyclotomicInteger::to_string() const {
  if (auto n = as_integer()) return std::to_string(*n);
  const auto r = reduced();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < r.size(); ++k) {
    std::int64_t c = r[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'z' << e_ << '^' << k;
  }
  return os.str();
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& o) const {
  require_same(o);
  return (*this - o).is_zero();
}

}  // namespace gagola
