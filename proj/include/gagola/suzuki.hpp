#pragma once

// Suzuki 2-groups of type A: pairs over F = GF(2^n) with
// (a,c)(b,d) = (a+b, c+d+b Theta(a)), Theta(a) = a^(2^h), and the three
// automorphism families acting on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gagola/finite_field.hpp"
#include "gagola/group_algorithms.hpp"

namespace gagola {

struct SuzukiPair {
  const Field* field = nullptr;
  unsigned h = 0;
  Field::Value a = 0, b = 0;

  SuzukiPair operator*(const SuzukiPair& o) const;
  bool operator==(const SuzukiPair& o) const { return a == o.a && b == o.b; }
  bool operator<(const SuzukiPair& o) const { return a != o.a ? a < o.a : b < o.b; }
  std::string to_string() const;
};

}  // namespace gagola

template <>
struct std::hash<gagola::SuzukiPair> {
  std::size_t operator()(const gagola::SuzukiPair& p) const noexcept {
    return (p.a << 32) ^ p.b;
  }
};

namespace gagola {

class SuzukiGroup {
 public:
  const FieldPtr& field() const noexcept { return field_; }
  unsigned n() const noexcept { return n_; }
  unsigned h() const noexcept { return h_; }
  unsigned theta_order() const noexcept { return theta_order_; }
  Field::Value theta(Field::Value a) const { return field_->frobenius(a, h_); }

  SuzukiPair pair(Field::Value a, Field::Value b) const { return {field_.get(), h_, a, b}; }
  SuzukiPair mul(const SuzukiPair& x, const SuzukiPair& y) const;
  SuzukiPair square(const SuzukiPair& x) const { return mul(x, x); }
  std::uint64_t field_size() const noexcept { return field_->cardinality(); }

  bool materialized() const noexcept { return materialized_.has_value(); }
  /// Requires materialization; generators are (1,0), (g,0), ..., (g^(n-1),0)
  /// for the primitive element g.
  const Materialized<SuzukiPair>& group() const;
  const Subgroup& n_subgroup() const;

 private:
  friend SuzukiGroup suzuki_group(unsigned, unsigned, bool, std::size_t);
  FieldPtr field_;
  unsigned n_ = 0, h_ = 0, theta_order_ = 0;
  std::optional<Materialized<SuzukiPair>> materialized_;
  std::optional<Subgroup> n_subgroup_;
};

/// Raises InvalidTheta unless 1 <= h < n and n/gcd(n,h) is odd and > 1.
SuzukiGroup suzuki_group(unsigned n, unsigned h, bool materialize = true,
                         std::size_t cap = materialization_cap());

/// Raises MixedGroups when the pairs come from different groups.
SuzukiPair suzuki_mul(const SuzukiGroup& m, const SuzukiPair& x, const SuzukiPair& y);
SuzukiPair suzuki_square(const SuzukiGroup& m, const SuzukiPair& x);

/// psi as the images of the basis 1, x, ..., x^(n-1) of F over GF(2).
using LinearMap = std::vector<Field::Value>;
Field::Value apply_linear(const LinearMap& psi, Field::Value a);

/// One of A1 (a,b) -> (a, psi(a)+b), A2 (a,b) -> (xa, x Theta(x) b),
/// A3 (a,b) -> (a^(2^t), b^(2^t)), or a product applied left to right.
class SuzukiAutomorphism {
 public:
  enum class Kind { A1, A2, A3, Product };

  Kind kind() const noexcept { return kind_; }
  const LinearMap& psi() const noexcept { return psi_; }
  Field::Value x() const noexcept { return x_; }
  unsigned t() const noexcept { return t_; }
  const std::vector<SuzukiAutomorphism>& factors() const noexcept { return factors_; }

  SuzukiPair apply(const SuzukiGroup& m, const SuzukiPair& p) const;
  /// "a1:0x1,0x2,0x4" (matrix rows), "a2:0x2", "a3:1", products ';'-joined.
  std::string serialize() const;

  static SuzukiAutomorphism a1(LinearMap psi);
  static SuzukiAutomorphism a2(Field::Value x);
  static SuzukiAutomorphism a3(unsigned t);
  static SuzukiAutomorphism product(std::vector<SuzukiAutomorphism> factors);

 private:
  Kind kind_ = Kind::Product;
  LinearMap psi_;
  Field::Value x_ = 1;
  unsigned t_ = 0;
  std::vector<SuzukiAutomorphism> factors_;
};

/// Each constructor checks the homomorphism property: on every Cayley edge
/// when M is materialized, otherwise on all pairs of a deterministic sample.
SuzukiAutomorphism make_a1(const SuzukiGroup& m, LinearMap psi);
SuzukiAutomorphism make_a2(const SuzukiGroup& m, Field::Value x);  // ZeroScalar for 0
SuzukiAutomorphism make_a3(const SuzukiGroup& m, unsigned t);

/// The automorphism as a permutation of element ids (materialized M).
IdMap to_id_map(const SuzukiGroup& m, const SuzukiAutomorphism& phi);
/// Order of phi, found by iterating it on the elements (a,0), (0,b).
std::uint64_t automorphism_order(const SuzukiGroup& m, const SuzukiAutomorphism& phi);

struct RelationsReport {
  bool exhaustive = false;
  std::uint64_t triples = 0;
  std::uint64_t map_comparisons = 0;  // relation instances checked on every element
};

/// Checks (phi_psi)^(phi_x) = (a, x^-1 Theta(x^-1) psi(xa) + b),
/// (phi_psi)^(phi_tau) = (a, psi(a^tau)^(tau^-1) + b) and
/// (phi_x)^(phi_tau) = phi_(x^(tau^-1)), where f^g applies g, f, then g^-1.
/// Exhaustive over (psi, x, tau) for n <= 3, a fixed-seed sample of psi
/// otherwise. Raises RelationFailed with the first witness.
RelationsReport conjugation_relations_check(const SuzukiGroup& m, std::size_t psi_samples = 64);

struct BruteForceAutReport {
  std::uint64_t order = 0;
  std::uint64_t expected = 0;  // 2^(n^2) (2^n - 1) n
  std::uint64_t candidates = 0;
  bool identity_found = false;
  bool all_preserve_n = false;
  bool all_factor = false;          // every automorphism sifts into A1 A2 A3
  bool decomposition_holds = false;  // (a,b) -> (f(a), g(a)+h(b)) with h(a Theta a) = f(a) Theta f(a)
  bool centralizer_of_n_is_a1 = false;
  std::uint64_t sylow2_order = 0;    // |<A1, phi_sigma>|
  std::uint64_t aut_two_part = 0;    // |Aut(M)|_2
  std::vector<SuzukiAutomorphism> generators;  // factored generating set of Aut(M)
  bool holds() const {
    return order == expected && identity_found && all_preserve_n && all_factor &&
           decomposition_holds && centralizer_of_n_is_a1 && sylow2_order == aut_two_part;
  }
};

/// Enumerates images of the generators (order 4, independent modulo N),
/// extends along words and keeps the bijective homomorphisms. Needs a
/// materialized M of order at most 64.
BruteForceAutReport brute_force_aut(const SuzukiGroup& m);

struct CentralizerA1Report {
  Field::Value x = 0;
  std::uint64_t x_order = 0;
  std::optional<std::uint64_t> exhaustive_log2;  // n <= 4
  std::uint64_t linear_log2 = 0;                 // GF(2) kernel dimension
  bool routes_agree = true;
  std::optional<unsigned> j;    // x Theta(x) = x^(2^j)
  bool congruence_solvable = false;  // 2^h + 1 = 2^j mod o(x) for some j
  bool consistent() const {
    const bool nontrivial = linear_log2 > 0;
    return routes_agree && (!nontrivial || j.has_value()) && (congruence_solvable || !nontrivial);
  }
};

/// C_{A1}(phi_x) by the linear system psi(x a) = x Theta(x) psi(a), plus the
/// exhaustive scan over all 2^(n^2) psi when n <= 4.
CentralizerA1Report centralizer_in_a1(const SuzukiGroup& m, Field::Value x);

struct SquaringReport {
  std::uint64_t cosets = 0;
  std::uint64_t distinct_images = 0;
  bool well_defined = false;
  bool bijective() const { return well_defined && distinct_images == cosets; }
};

/// bN -> b^2 from M/N to N, i.e. a -> a Theta(a) on F.
SquaringReport squaring_bijection_check(const SuzukiGroup& m);

}  // namespace gagola
