#pragma once

// Camina and Gagola pairs: certification by brute force plus the character
// table, the d, e bounds, and the involution lemmas for 2-Gagola pairs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gagola/character_table.hpp"
#include "gagola/group_algorithms.hpp"

namespace gagola {

struct CaminaEvidence {
  bool coset_in_class = false;       // (a) gN lies in the class of g
  bool centralizer_orders = false;   // (b) |C_G(g)| = |C_{G/N}(gN)|
  bool commutators_cover_n = false;  // (c) every x in N is [g, y] for some y
  std::optional<Id> witness;         // first g outside N failing (a)
  bool holds() const { return coset_in_class; }
};

/// Evaluates the three conditions over every g outside N. Raises NotNormal,
/// TrivialOrFull, or ConditionDisagreement if the conditions disagree.
CaminaEvidence is_camina_pair(const FiniteGroup& g, const Subgroup& n);

struct BoundVerdicts {
  bool d_le_e2_minus_e = false;
  bool order_le_e4_minus_e3 = false;
  bool e2_eq_p_index = false;
  bool d_eq_formula = false;  // d = e(|N| - 1)
};

struct PairCertificate {
  std::string group_spec;
  Subgroup n;
  std::uint64_t group_order = 0;
  std::uint64_t n_order = 0;
  CaminaEvidence camina;
  bool is_camina = false;
  bool unique_minimal_normal = false;
  std::optional<std::uint64_t> p;  // N elementary abelian of exponent p
  bool transitive_on_n = false;
  std::optional<GagolaCharacter> gagola_witness;
  bool is_gagola = false;
  std::string reason;  // why the pair is not Gagola
  // Set for Gagola pairs; both routes agree.
  std::uint64_t d = 0, e = 0;
  std::uint64_t p_index = 0;       // |P:N|
  std::uint64_t sylow_index = 0;   // |G:P|
  std::uint64_t index_p_part = 0;  // |G:N|_p
  BoundVerdicts bounds;
};

/// Checks that N is the unique minimal normal subgroup, elementary abelian,
/// that G is transitive on N - {1} and that a Gagola character has support
/// N; then computes d, e from the character table and from e^2 = |P:N|,
/// d = e(|N| - 1), raising DAndEDisagree if they differ. Propagates
/// CapExceeded when |G| exceeds `cap`.
PairCertificate is_gagola_pair(const FiniteGroup& g, const Subgroup& n,
                               std::size_t cap = kCharacterTableCap);

/// Tries every minimal normal subgroup and returns the certificates in order.
std::vector<PairCertificate> certify_all(const FiniteGroup& g, std::size_t cap = kCharacterTableCap);

struct BoundsReport {
  std::uint64_t d = 0, e = 0, order = 0;
  // e > 1
  std::optional<bool> d_le_e2_minus_e, order_le_e4_minus_e3, d_lt_e2, order_lt_e4_plus_e3;
  std::optional<bool> n_squared_le_index_p;  // |N|^2 <= |G:N|_p
  bool order_is_d_times_d_plus_e = false;
  // 2-transitive Frobenius with kernel N, computed for every pair.
  bool berkovich = false;
  bool berkovich_consistent = false;  // e = 1 iff berkovich
  bool holds() const;
};

BoundsReport verify_bounds(const FiniteGroup& g, const PairCertificate& cert);

/// Frobenius with kernel N and complement of order |N| - 1: |G| = |N|(|N|-1),
/// C_G(x) = N for x in N - {1}, and G transitive on N - {1} by conjugation.
bool two_transitive_frobenius(const FiniteGroup& g, const Subgroup& n);

struct AbelianQuotientBound {
  std::uint64_t index = 0;    // |G:N|
  std::uint64_t n_order = 0;
  bool derived_is_n = false;  // G' = N
  bool holds() const { return derived_is_n && index >= n_order * n_order; }
};

/// Requires a Camina pair with G a p-group and G/N abelian; raises
/// HypothesisViolated otherwise.
AbelianQuotientBound camina_abelian_quotient_bound(const FiniteGroup& g, const Subgroup& n);

struct OvergroupBound {
  std::uint64_t p_index_m = 0;  // |P:M|
  std::uint64_t m_index_n = 0;  // |M:N|
  bool first = false;           // |P:M| >= |M:N|
  std::optional<bool> second;   // |N|^2 <= |P:N| when |N| <= |M:N|
  bool holds() const { return first && second.value_or(true); }
};

/// M normal, abelian, a p-group, containing N. Raises HypothesisViolated.
OvergroupBound abelian_overgroup_bound(const FiniteGroup& g, const PairCertificate& cert,
                                       const Subgroup& m);

/// Every normal abelian p-subgroup M with N < M.
std::vector<Subgroup> qualifying_overgroups(const FiniteGroup& g, const PairCertificate& cert);

struct InvolutionReport {
  std::size_t involution_cosets = 0;   // involutions of G/N
  bool six = false;                    // all of them lie in O_2(G)/N
  bool seven_applies = false;          // O_2(G)/N has an element of order >= 4
  std::optional<bool> seven;           // |N|^2 divides |G:N| and |G:N|_2 >= |N|^2
  std::uint64_t o2_order = 0;
  bool holds() const { return six && seven.value_or(true); }
};

/// Raises NotTwoGagola unless cert is a certified 2-Gagola pair.
InvolutionReport involution_lemma_checks(const FiniteGroup& g, const PairCertificate& cert);

struct LemmaFiveReport {
  std::optional<Id> involution;  // an involution in K - M
  bool holds() const { return involution.has_value(); }
};

/// N < M normal in K, N elementary abelian 2-group, M/N cyclic of odd order,
/// |K:M| = 2, C_N(M/N) = 1 and K/N dihedral; raises HypothesisViolated
/// naming the first hypothesis that fails.
LemmaFiveReport lemma_five_check(const FiniteGroup& k, const Subgroup& m, const Subgroup& n);

}  // namespace gagola
