#pragma once

// Exhaustive algorithms over a materialized FiniteGroup. Subgroups are id
// sets; everything is computed by scans and closures, never by sampling.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gagola/group.hpp"

namespace gagola {

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Subgroup generated by `gens`.
Subgroup closure(const FiniteGroup& g, std::span<const Id> gens);
/// Subgroup generated by h together with `extra`.
Subgroup join(const FiniteGroup& g, const Subgroup& h, std::span<const Id> extra);
Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

/// Greedy generating set: ascending ids not already generated.
std::vector<Id> generating_set(const FiniteGroup& g, const Subgroup& h);

/// True when `members` is closed under multiplication (finite, so a subgroup).
bool is_subgroup(const FiniteGroup& g, std::span<const Id> members);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Id x);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Id> gens);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
/// Largest normal subgroup of G inside h.
Subgroup core(const FiniteGroup& g, const Subgroup& h);

ClassTable conjugacy_classes(const FiniteGroup& g);
Subgroup centralizer(const FiniteGroup& g, Id x);
/// Elements commuting with every element of h.
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);

/// [A, B] for normal subgroups A, B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup derived_subgroup(const FiniteGroup& g);
/// G = gamma_1 > gamma_2 > ... until it stabilizes.
std::vector<Subgroup> lower_central_series(const FiniteGroup& g);
/// Nilpotency class, or nullopt when G is not nilpotent.
std::optional<unsigned> nilpotency_class(const FiniteGroup& g);
/// Subgroup generated by all p-th powers.
Subgroup power_subgroup(const FiniteGroup& g, std::uint64_t p);
/// Intersection of maximal subgroups; p-groups use G' G^p.
Subgroup frattini_subgroup(const FiniteGroup& g);
Subgroup frattini_by_maximal_subgroups(const FiniteGroup& g);

bool is_abelian(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g, const Subgroup& h);
/// The prime when h is a nontrivial elementary abelian p-group.
std::optional<std::uint64_t> elementary_abelian_prime(const FiniteGroup& g, const Subgroup& h);
/// The prime when |G| is a nontrivial prime power.
std::optional<std::uint64_t> p_group_prime(std::size_t order);

/// Action of G on the right cosets Nx, as a permutation group.
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);
InducedGroup induced_group(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup (cyclic extension), sorted by (order, members). Raises
/// CapExceeded beyond `max_count` subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_count = 200000);
std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g);
std::vector<Subgroup> normal_subgroups(const FiniteGroup& g);
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);
Subgroup o_p_subgroup(const FiniteGroup& g, std::uint64_t p);

/// Maps of element ids; map[x] is the image of x.
using IdMap = std::vector<Id>;

/// Extends generator images (in G's generator order) along stored words and
/// checks every Cayley edge. nullopt unless the result is a homomorphism.
std::optional<IdMap> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& target,
                                         std::span<const Id> generator_images);
bool is_automorphism(const FiniteGroup& g, const IdMap& map);
/// x -> b(a(x)).
IdMap compose(const IdMap& a, const IdMap& b);
IdMap identity_map(const FiniteGroup& g);

struct Class3Report {
  bool holds = false;
  std::size_t elements_checked = 0;
  /// (x, y) pairs exhibiting the conclusion, one per coset xP' outside P'.
  std::vector<std::pair<Id, Id>> witnesses;
  std::optional<Id> counterexample;
};

/// For a class-3 p-group P (p odd), [P',P] <= Z <= Z(P) n P' and an involutory
/// automorphism sigma inverting P/P' and Z and centralizing P'/Z: every
/// x outside P' has y in xP' with C_{P/Z}(yZ) = C_P(y)P'/Z. Raises
/// HypothesisViolated naming the first hypothesis that fails.
Class3Report class3_lemma_check(const FiniteGroup& p, const Subgroup& z, const IdMap& sigma);

/// Automorphisms meeting the sigma hypotheses above, least first.
std::optional<IdMap> find_class3_sigma(const FiniteGroup& p, const Subgroup& z);

}  // namespace gagola
