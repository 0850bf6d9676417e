#pragma once

// Integer lemmas at 64-bit scale: p-parts, primitive prime divisors,
// 3-adic identities for 2^n +- 1, and the congruence test used to rule out
// centralizers in the Suzuki automorphism group.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gagola::nt {

using u64 = std::uint64_t;

// Checked arithmetic; throws Errc::Overflow.
u64 checked_mul(u64 a, u64 b);
u64 checked_pow(u64 base, unsigned exp);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 gcd(u64 a, u64 b);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(u64 n);
u64 next_prime(u64 n);

/// Prime factorization (sorted by prime). Trial division for small factors,
/// Pollard-Brent for whatever survives.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

unsigned valuation(u64 m, u64 p);

/// Largest power of p dividing m.
u64 p_part(u64 m, u64 p);

/// Multiplicative order of a modulo m (gcd(a, m) must be 1, m >= 1).
u64 order_mod(u64 a, u64 m);

/// Smallest prime q dividing p^a - 1 but no p^b - 1 for b < a.
std::optional<u64> zsigmondy(u64 p, unsigned a);

/// True for (Mersenne p, 2) and (2, 6): the cases where no primitive
/// divisor exists. The degenerate (2, 1) is reported separately.
bool is_zsigmondy_exception(u64 p, unsigned a);

struct LemmaOneVerdict {
  unsigned a = 0;
  u64 residue_low = 0;   // 2^(3^a) mod 3^(a+1)
  u64 residue_high = 0;  // 2^(3^a) mod 3^(a+2)
  bool congruent_low = false;
  bool not_congruent_high = false;
  bool holds() const { return congruent_low && not_congruent_high; }
};

/// 2^(3^a) == -1 mod 3^(a+1) and != -1 mod 3^(a+2).
LemmaOneVerdict lemma_one_check(unsigned a);

struct OneaVerdict {
  unsigned n = 0;
  unsigned a = 0;            // 3^a = n_3
  u64 three_part = 0;        // ((2^n - 1)(2^n + 1))_3
  u64 expected = 0;          // 3^(a+1)
  u64 residue = 0;           // 2^n mod 3^(a+1)
  bool sign_ok = false;      // -1 for odd n, +1 for even n
  bool holds() const { return three_part == expected && sign_ok; }
};

OneaVerdict onea_three_part(unsigned n);

enum class NorcondStatus { Holds, Fails, HypothesisNotMet };

struct NorcondVerdict {
  u64 p = 0, q = 0, n = 0;
  unsigned a = 0;  // n = q^a m
  u64 m = 0;
  u64 lhs = 0;  // (p^n - 1)_q
  u64 rhs = 0;  // q^a (p^m - 1)_q
  NorcondStatus status = NorcondStatus::HypothesisNotMet;
  std::string detail;
};

/// (p^n - 1)_q = q^a (p^m - 1)_q whenever n = q^a m, q does not divide m,
/// a >= 1 and q^2 | p^m - 1. Both sides are evaluated with modular powers,
/// so no intermediate p^n is formed.
NorcondVerdict norcond_check(u64 p, u64 q, u64 n);

/// All triples in the box with the hypothesis satisfied, each verified.
std::vector<NorcondVerdict> norcond_search(u64 max_p, u64 max_q, u64 max_n);

/// Exists j in [0, d) with 2^h + 1 == 2^j mod 2^d - 1.
bool numcond_solvable(u64 h, unsigned d);

struct NonexEntry {
  u64 d = 0;
  bool solvable = false;  // numcond_solvable(h mod d, d)
};

/// Prime powers d > 1 dividing n but not k, with the congruence verdict
/// for h. Throws NotDivisor unless k | n.
std::vector<NonexEntry> nonex_d_values(u64 n, u64 k, u64 h);
inline std::vector<NonexEntry> nonex_d_values(u64 n, u64 k) {
  return nonex_d_values(n, k, k);
}

/// Prime-power divisors > 1 of n.
std::vector<u64> prime_power_divisors(u64 n);

}  // namespace gagola::nt
