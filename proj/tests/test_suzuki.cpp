#include <gtest/gtest.h>

#include "gagola/group_algorithms.hpp"
#include "gagola/number_theory.hpp"
#include "gagola/suzuki.hpp"

namespace gagola {
namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::InvalidArgument;
}

TEST(SuzukiGroup, ThetaValidation) {
  EXPECT_EQ(error_of([] { suzuki_group(4, 2); }), Errc::InvalidTheta);
  EXPECT_EQ(error_of([] { suzuki_group(2, 1); }), Errc::InvalidTheta);
  EXPECT_EQ(error_of([] { suzuki_group(6, 3); }), Errc::InvalidTheta);
  EXPECT_EQ(error_of([] { suzuki_group(3, 0); }), Errc::InvalidTheta);
  EXPECT_EQ(error_of([] { suzuki_group(3, 3); }), Errc::InvalidTheta);
  EXPECT_EQ(suzuki_group(3, 1).theta_order(), 3u);
  EXPECT_EQ(suzuki_group(6, 2).theta_order(), 3u);
  EXPECT_EQ(suzuki_group(9, 3, false).theta_order(), 3u);
}

TEST(SuzukiGroup, LawByHand) {
  auto m = suzuki_group(3, 1);
  // GF(8) = GF(2)[x]/(x^3+x+1) packed in bits; Theta(a) = a^2.
  const auto& f = *m.field();
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      const auto p = m.mul(m.pair(a, 1), m.pair(b, 2));
      EXPECT_EQ(p.a, a ^ b);
      EXPECT_EQ(p.b, 1u ^ 2u ^ f.mul(b, f.mul(a, a)));
    }
  }
  auto other = suzuki_group(3, 2);
  EXPECT_EQ(error_of([&] { suzuki_mul(m, m.pair(1, 0), other.pair(1, 0)); }), Errc::MixedGroups);
}

// Structural facts: |M| = q^2, Z(M) = M' = Phi(M) = N, exponent 4, and the
// involutions are exactly N - {1}.
TEST(SuzukiGroup, Structure) {
  for (auto [n, h] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {6, 2}}) {
    auto m = suzuki_group(n, h);
    const auto& g = m.group().group;
    const std::uint64_t q = std::uint64_t{1} << n;
    ASSERT_EQ(g.order(), q * q);
    const auto& nsub = m.n_subgroup();
    EXPECT_EQ(nsub.order(), q);
    EXPECT_EQ(center(g), nsub);
    EXPECT_EQ(derived_subgroup(g), nsub);
    EXPECT_EQ(frattini_subgroup(g), nsub);
    EXPECT_EQ(g.exponent(), 4u);
    for (Id x = 1; x < g.order(); ++x) {
      EXPECT_EQ(g.element_order(x) == 2, nsub.contains(x));
    }
  }
}

TEST(SuzukiAutomorphisms, FamiliesAreAutomorphisms) {
  auto m = suzuki_group(3, 1);
  auto a1 = make_a1(m, {3, 5, 1});
  EXPECT_TRUE(is_automorphism(m.group().group, to_id_map(m, a1)));
  EXPECT_EQ(automorphism_order(m, a1), 2u);
  auto a2 = make_a2(m, m.field()->primitive_element());
  EXPECT_EQ(automorphism_order(m, a2), 7u);
  auto a3 = make_a3(m, 1);
  EXPECT_EQ(automorphism_order(m, a3), 3u);
  EXPECT_EQ(error_of([&] { make_a2(m, 0); }), Errc::ZeroScalar);
  EXPECT_EQ(error_of([&] { make_a3(m, 3); }), Errc::InvalidArgument);

  auto big = suzuki_group(9, 3, false);
  EXPECT_NO_THROW(make_a1(big, {1, 2, 4, 8, 16, 32, 64, 128, 256}));
  EXPECT_NO_THROW(make_a2(big, 5));
  EXPECT_NO_THROW(make_a3(big, 4));
}

TEST(SuzukiAutomorphisms, Serialization) {
  EXPECT_EQ(SuzukiAutomorphism::a1({1, 2, 4}).serialize(), "a1:0x1,0x2,0x4");
  // psi(1) = x, psi(x) = 1, psi(x^2) = 0: row 0 has bit 1, row 1 has bit 0.
  EXPECT_EQ(SuzukiAutomorphism::a1({2, 1, 0}).serialize(), "a1:0x2,0x1,0x0");
  EXPECT_EQ(SuzukiAutomorphism::a2(6).serialize(), "a2:0x6");
  EXPECT_EQ(SuzukiAutomorphism::product({SuzukiAutomorphism::a2(2), SuzukiAutomorphism::a3(1)})
                .serialize(),
            "a2:0x2;a3:1");
}

TEST(SuzukiAutomorphisms, ConjugationRelationsExhaustive) {
  auto m = suzuki_group(3, 1);
  auto r = conjugation_relations_check(m);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.triples, 512u * 7u * 3u);
  EXPECT_EQ(r.map_comparisons, 3u * 512u * 7u * 3u);
}

TEST(SuzukiAutomorphisms, ConjugationRelationsSampled) {
  auto m = suzuki_group(5, 2, false);
  auto r = conjugation_relations_check(m, 4);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.triples, 4u * 31u * 5u);
}

TEST(SuzukiAutomorphisms, PhiXUnderTau) {
  // (phi_x)^(phi_tau) for tau = squaring is phi of x^(2^(n-1)) = x^4 in GF(8).
  auto m = suzuki_group(3, 1);
  const auto& f = *m.field();
  const auto x = f.primitive_element();
  const auto tau = SuzukiAutomorphism::a3(1);
  const auto tauinv = SuzukiAutomorphism::a3(2);
  const auto phi_x = SuzukiAutomorphism::a2(x);
  const auto expected = SuzukiAutomorphism::a2(f.pow(x, 4));
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      const auto p = m.pair(a, b);
      EXPECT_EQ(tauinv.apply(m, phi_x.apply(m, tau.apply(m, p))), expected.apply(m, p));
    }
  }
}

TEST(SuzukiAutomorphisms, BruteForceAutOrder) {
  auto m = suzuki_group(3, 1);
  auto r = brute_force_aut(m);
  EXPECT_EQ(r.order, 10752u);
  EXPECT_EQ(r.expected, 10752u);
  EXPECT_EQ(r.candidates, 56u * 48u * 32u);
  EXPECT_TRUE(r.identity_found);
  EXPECT_TRUE(r.all_preserve_n);
  EXPECT_TRUE(r.all_factor);
  EXPECT_TRUE(r.decomposition_holds);
  EXPECT_TRUE(r.centralizer_of_n_is_a1);
  EXPECT_EQ(r.aut_two_part, 512u);
  EXPECT_EQ(r.sylow2_order, 512u);
  EXPECT_TRUE(r.holds());
  EXPECT_FALSE(r.generators.empty());
}

TEST(SuzukiCentralizer, TrivialForOrderSeven) {
  auto m = suzuki_group(3, 1);
  const auto x = m.field()->primitive_element();
  auto r = centralizer_in_a1(m, x);
  EXPECT_EQ(r.x_order, 7u);
  ASSERT_TRUE(r.exhaustive_log2);
  EXPECT_EQ(*r.exhaustive_log2, 0u);
  EXPECT_EQ(r.linear_log2, 0u);
  EXPECT_FALSE(r.j);
  EXPECT_FALSE(r.congruence_solvable);
  EXPECT_TRUE(r.consistent());
}

TEST(SuzukiCentralizer, AllScalarsSmall) {
  // The exhaustive and linear routes agree for every x, and a nontrivial
  // centralizer forces x Theta(x) = x^(2^j).
  for (auto [n, h] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {3, 2}}) {
    auto m = suzuki_group(n, h);
    for (std::uint64_t x = 1; x < (std::uint64_t{1} << n); ++x) {
      auto r = centralizer_in_a1(m, x);
      EXPECT_TRUE(r.routes_agree) << x;
      EXPECT_TRUE(r.consistent()) << x;
      if (x == 1) EXPECT_EQ(r.linear_log2, n * n);  // phi_1 is the identity
    }
  }
}

TEST(SuzukiCentralizer, OrderNineInGF64) {
  auto m = suzuki_group(6, 2, false);
  const auto& f = *m.field();
  const auto x = f.pow(f.primitive_element(), 7);
  auto r = centralizer_in_a1(m, x);
  EXPECT_EQ(r.x_order, 9u);
  EXPECT_FALSE(r.exhaustive_log2);
  ASSERT_TRUE(r.j);
  EXPECT_EQ(*r.j, 5u);  // 1 + 2^2 = 5 = 2^5 mod 9
  EXPECT_TRUE(r.congruence_solvable);
  EXPECT_GT(r.linear_log2, 0u);
  EXPECT_TRUE(r.consistent());
}

TEST(SuzukiSquaring, Bijection) {
  for (auto [n, h] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 2}, {9, 3}, {7, 3}}) {
    auto m = suzuki_group(n, h, false);
    auto r = squaring_bijection_check(m);
    EXPECT_EQ(r.cosets, std::uint64_t{1} << n);
    EXPECT_TRUE(r.bijective()) << n << "," << h;
  }
}

}  // namespace
}  // namespace gagola
