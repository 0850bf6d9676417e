#include "gagola/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gagola/error.hpp"

namespace gagola::nt {

namespace {

using u128 = unsigned __int128;

constexpr u64 kMax = std::numeric_limits<u64>::max();

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Largest k with q^k | p^e - 1, evaluated modulo q^k.
unsigned valuation_of_power_minus_one(u64 p, u64 e, u64 q) {
  unsigned k = 0;
  u64 modulus = 1;
  for (;;) {
    if (modulus > kMax / q / 2) raise(Errc::Overflow, "q-adic valuation exceeds 64 bits");
    modulus *= q;
    if (pow_mod(p, e, modulus) != 1 % modulus) return k;
    ++k;
  }
}

}  // namespace

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) raise(Errc::Overflow, "product exceeds 64 bits");
  return r;
}

u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) {
    if (c == kMax) raise(Errc::Overflow, "prime search exceeds 64 bits");
    ++c;
  }
  return c;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  if (n == 0) raise(Errc::InvalidArgument, "factorize(0)");
  std::vector<u64> primes;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    u64 power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

unsigned valuation(u64 m, u64 p) {
  if (m == 0) raise(Errc::InvalidArgument, "valuation of 0");
  if (p < 2) raise(Errc::InvalidArgument, "valuation base must be >= 2");
  unsigned k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

u64 p_part(u64 m, u64 p) {
  if (m == 0) raise(Errc::InvalidArgument, "p_part of 0");
  if (!is_prime(p)) raise(Errc::InvalidArgument, "p_part base must be prime");
  u64 r = 1;
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

u64 order_mod(u64 a, u64 m) {
  if (m == 1) return 1;
  if (gcd(a % m, m) != 1) raise(Errc::InvalidArgument, "order_mod needs a unit");
  // Order divides the exponent of (Z/m)^*, which divides phi(m).
  u64 phi = m;
  for (u64 p : prime_divisors(m)) phi = phi / p * (p - 1);
  u64 ord = phi;
  for (auto [p, e] : factorize(phi)) {
    for (unsigned i = 0; i < e && ord % p == 0; ++i) {
      if (pow_mod(a, ord / p, m) == 1) {
        ord /= p;
      } else {
        break;
      }
    }
  }
  return ord;
}

std::optional<u64> zsigmondy(u64 p, unsigned a) {
  if (!is_prime(p)) raise(Errc::InvalidArgument, "zsigmondy base must be prime");
  if (a == 0) raise(Errc::InvalidArgument, "zsigmondy exponent must be positive");
  const u64 value = checked_pow(p, a);
  if (value > (u64{1} << 63)) raise(Errc::Overflow, "p^a exceeds 2^63");
  const u64 target = value - 1;
  if (target == 1) return std::nullopt;
  for (u64 q : prime_divisors(target)) {
    if (order_mod(p % q, q) == a) {
      // Re-verify the definition directly.
      for (unsigned b = 1; b < a; ++b) {
        if (pow_mod(p, b, q) == 1) raise(Errc::InvalidArgument, "zsigmondy order mismatch");
      }
      return q;
    }
  }
  return std::nullopt;
}

bool is_zsigmondy_exception(u64 p, unsigned a) {
  if (p == 2 && a == 6) return true;
  if (a != 2) return false;
  u64 next = p + 1;
  return (next & (next - 1)) == 0;
}

LemmaOneVerdict lemma_one_check(unsigned a) {
  if (a > 36) raise(Errc::Overflow, "3^(a+2) exceeds 64 bits");
  LemmaOneVerdict v;
  v.a = a;
  const u64 exponent = checked_pow(3, a);
  const u64 low = checked_pow(3, a + 1);
  const u64 high = checked_pow(3, a + 2);
  v.residue_low = pow_mod(2, exponent, low);
  v.residue_high = pow_mod(2, exponent, high);
  v.congruent_low = v.residue_low == low - 1;
  v.not_congruent_high = v.residue_high != high - 1;
  return v;
}

OneaVerdict onea_three_part(unsigned n) {
  if (n == 0 || n > 31) raise(Errc::InvalidArgument, "onea_three_part needs 1 <= n <= 31");
  OneaVerdict v;
  v.n = n;
  v.a = valuation(n, 3);
  const u64 two_n = u64{1} << n;
  v.three_part = p_part(checked_mul(two_n - 1, two_n + 1), 3);
  v.expected = checked_pow(3, v.a + 1);
  v.residue = pow_mod(2, n, v.expected);
  const u64 want = (n % 2 == 1) ? v.expected - 1 : 1 % v.expected;
  v.sign_ok = v.residue == want;
  return v;
}

NorcondVerdict norcond_check(u64 p, u64 q, u64 n) {
  if (!is_prime(p) || !is_prime(q)) raise(Errc::InvalidArgument, "norcond_check needs primes p, q");
  if (n == 0) raise(Errc::InvalidArgument, "norcond_check needs n >= 1");
  NorcondVerdict v;
  v.p = p;
  v.q = q;
  v.n = n;
  v.a = valuation(n, q);
  v.m = n;
  for (unsigned i = 0; i < v.a; ++i) v.m /= q;
  if (v.a == 0) {
    v.status = NorcondStatus::HypothesisNotMet;
    v.detail = "q does not divide n";
    return v;
  }
  const u64 q2 = checked_mul(q, q);
  if (pow_mod(p, v.m, q2) != 1 % q2) {
    v.status = NorcondStatus::HypothesisNotMet;
    v.detail = "q^2 does not divide p^m - 1";
    return v;
  }
  v.lhs = checked_pow(q, valuation_of_power_minus_one(p, n, q));
  v.rhs = checked_mul(checked_pow(q, v.a), checked_pow(q, valuation_of_power_minus_one(p, v.m, q)));
  v.status = v.lhs == v.rhs ? NorcondStatus::Holds : NorcondStatus::Fails;
  v.detail = v.status == NorcondStatus::Holds ? "identity holds" : "identity fails";
  return v;
}

std::vector<NorcondVerdict> norcond_search(u64 max_p, u64 max_q, u64 max_n) {
  std::vector<NorcondVerdict> found;
  for (u64 p = 2; p <= max_p; ++p) {
    if (!is_prime(p)) continue;
    for (u64 q = 2; q <= max_q; ++q) {
      if (!is_prime(q)) continue;
      for (u64 n = 1; n <= max_n; ++n) {
        NorcondVerdict v = norcond_check(p, q, n);
        if (v.status != NorcondStatus::HypothesisNotMet) found.push_back(v);
      }
    }
  }
  return found;
}

bool numcond_solvable(u64 h, unsigned d) {
  if (d == 0 || d > 62) raise(Errc::InvalidArgument, "numcond_solvable needs 1 <= d <= 62");
  const u64 modulus = (u64{1} << d) - 1;
  if (modulus == 1) return true;
  // 2 has order d modulo 2^d - 1, so only h mod d matters.
  const u64 reduced = h % d;
  const u64 lhs = ((u64{1} << reduced) + 1) % modulus;
  for (unsigned j = 0; j < d; ++j) {
    if ((u64{1} << j) % modulus == lhs) return true;
  }
  return false;
}

std::vector<u64> prime_power_divisors(u64 n) {
  std::vector<u64> out;
  for (auto [p, e] : factorize(n)) {
    u64 power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= p;
      out.push_back(power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NonexEntry> nonex_d_values(u64 n, u64 k, u64 h) {
  if (k == 0 || n == 0 || n % k != 0) raise(Errc::NotDivisor, "k must divide n");
  std::vector<NonexEntry> out;
  for (u64 d : prime_power_divisors(n)) {
    if (k % d == 0) continue;
    if (d > 62) raise(Errc::Overflow, "2^d - 1 exceeds 64 bits");
    out.push_back({d, numcond_solvable(h % d, static_cast<unsigned>(d))});
  }
  return out;
}

}  // namespace gagola::nt
