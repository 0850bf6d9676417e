#include <gtest/gtest.h>

#include <algorithm>

#include "gagola/character_table.hpp"
#include "gagola/group_algorithms.hpp"
#include "gagola/number_theory.hpp"
#include "gagola/permutation.hpp"

namespace gagola {
namespace {

Materialized<Permutation> perm_group(std::uint32_t m,
                                     const std::vector<std::vector<std::vector<std::uint32_t>>>& gens) {
  std::vector<Permutation> ps;
  for (const auto& c : gens) ps.push_back(Permutation::from_cycles(m, c));
  return generate_group(ps, Permutation::identity(m));
}

Materialized<Permutation> q8() {
  return perm_group(8, {{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}});
}

TEST(Cyclotomic, PolynomialsByOracle) {
  // Phi_n(x) for small n, known closed forms.
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<std::int64_t>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p = cyclotomic_polynomial(105);
  EXPECT_EQ(p.size(), 49u);
  EXPECT_EQ(*std::min_element(p.begin(), p.end()), -2);
}

TEST(Cyclotomic, ZeroTest) {
  // 1 + z3 + z3^2 = 0; z4^2 = -1; z5 sum vanishes; 1 + z6^3 = 0.
  EXPECT_TRUE(CyclotomicInteger(3, {1, 1, 1}).is_zero());
  EXPECT_EQ(CyclotomicInteger(4, {0, 0, 1}).as_integer(), -1);
  EXPECT_TRUE(CyclotomicInteger(5, {1, 1, 1, 1, 1}).is_zero());
  EXPECT_TRUE(CyclotomicInteger(6, {1, 0, 0, 1}).is_zero());
  EXPECT_FALSE(CyclotomicInteger(6, {1, 0, 1}).is_zero());
  // zeta_6 + zeta_6^5 = 1.
  EXPECT_EQ(CyclotomicInteger(6, {0, 1, 0, 0, 0, 1}).as_integer(), 1);
}

TEST(Cyclotomic, ArithmeticAgreesModP) {
  // GF(13) has elements of order 12; any such z gives a ring map.
  const std::uint64_t p = 13;
  std::uint64_t z = 2;  // 2 is a primitive root mod 13
  CyclotomicInteger a(12, {3, -1, 0, 2, 0, 0, 0, 5});
  CyclotomicInteger b(12, {0, 4, 1, 0, -3});
  EXPECT_EQ((a * b).mod_p(p, z), a.mod_p(p, z) * b.mod_p(p, z) % p);
  EXPECT_EQ((a + b).mod_p(p, z), (a.mod_p(p, z) + b.mod_p(p, z)) % p);
  EXPECT_EQ((a * b.conj()).conj(), a.conj() * b);
}

TEST(Dixon, PrimeExamples) {
  // 3 = 1 mod 2 and 3 > 2 floor(sqrt 2) = 2.
  EXPECT_EQ(dixon_prime(2, 2), 3u);
  EXPECT_EQ(dixon_prime(8, 4), 5u);
  EXPECT_EQ(dixon_prime(6, 6), 7u);
  EXPECT_EQ(dixon_prime(54, 6), 19u);
}

TEST(Dixon, ClassConstantsByPairCount) {
  for (auto m : {perm_group(3, {{{1, 2, 3}}, {{1, 2}}}), q8()}) {
    const auto& g = m.group;
    const auto ct = conjugacy_classes(g);
    ClassConstants a(g, ct);
    const std::size_t k = ct.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t l = 0; l < k; ++l) {
          std::uint32_t count = 0;
          for (Id x : ct.members[i]) {
            for (Id y : ct.members[j]) count += g.mul(x, y) == ct.reps[l];
          }
          EXPECT_EQ(a(i, j, l), count);
        }
        // Identity class: one pair hits the fixed representative, so
        // |C_j| pairs over the whole class.
        EXPECT_EQ(a(0, j, j), 1u);
        EXPECT_EQ(a(0, j, j) * ct.sizes[j], ct.sizes[j]);
      }
    }
  }
  // S3: two transpositions multiply to the identity in 3 ways.
  auto s = perm_group(3, {{{1, 2, 3}}, {{1, 2}}});
  const auto ct = conjugacy_classes(s.group);
  ClassConstants a(s.group, ct);
  EXPECT_EQ(a(2, 2, 0), 3u);
}

TEST(CharacterTable, C2) {
  auto m = perm_group(2, {{{1, 2}}});
  auto t = character_table(m.group);
  EXPECT_EQ(t.degrees, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(t.values[0][1].as_integer(), 1);
  EXPECT_EQ(t.values[1][1].as_integer(), -1);
  EXPECT_FALSE(find_gagola_character(m.group, t));
}

TEST(CharacterTable, S3AndQ8) {
  auto s = perm_group(3, {{{1, 2, 3}}, {{1, 2}}});
  auto ts = character_table(s.group);
  EXPECT_EQ(ts.degrees, (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(ts.prime, 7u);
  auto de = degree_d_and_e(ts);
  ASSERT_EQ(de.size(), 1u);
  EXPECT_EQ(de[0].d, 2u);
  EXPECT_EQ(de[0].e, 1u);

  auto q = q8();
  auto tq = character_table(q.group);
  EXPECT_EQ(tq.degrees, (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  std::vector<std::int64_t> row;
  for (const auto& v : tq.values[4]) row.push_back(*v.as_integer());
  EXPECT_EQ(row, (std::vector<std::int64_t>{2, -2, 0, 0, 0}));
  auto gc = find_gagola_character(q.group, tq);
  ASSERT_TRUE(gc);
  EXPECT_EQ(gc->index, 4u);
  EXPECT_EQ(gc->n, center(q.group));
  auto dq = degree_d_and_e(tq);
  EXPECT_EQ(dq[0].e, 2u);
}

TEST(CharacterTable, AbelianHasNoGagolaCharacter) {
  auto m = perm_group(6, {{{1, 2, 3, 4, 5, 6}}});
  auto t = character_table(m.group);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_TRUE(rows_orthogonal(t));
  EXPECT_FALSE(find_gagola_character(m.group, t));
  try {
    degree_d_and_e(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AbelianGroup);
  }
}

// Oracle: the permutation character pi(g) = #fixed points must decompose with
// nonnegative integer multiplicities <pi, chi>.
void expect_permutation_character_decomposes(const Materialized<Permutation>& m,
                                             const CharacterTable& t) {
  const auto& ct = t.classes;
  const auto e = static_cast<unsigned>(t.exponent);
  std::int64_t total_degree = 0;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    CyclotomicInteger acc(e);
    for (std::size_t c = 0; c < ct.size(); ++c) {
      const auto& perm = m.element(ct.reps[c]);
      std::int64_t fixed = 0;
      for (std::uint32_t i = 0; i < perm.degree(); ++i) fixed += perm[i] == i;
      acc = acc + t.values[chi][c].conj() * (fixed * static_cast<std::int64_t>(ct.sizes[c]));
    }
    auto n = acc.as_integer();
    ASSERT_TRUE(n);
    ASSERT_EQ(*n % static_cast<std::int64_t>(t.group_order), 0);
    EXPECT_GE(*n, 0);
    total_degree += *n / static_cast<std::int64_t>(t.group_order) * static_cast<std::int64_t>(t.degrees[chi]);
  }
  EXPECT_EQ(total_degree, static_cast<std::int64_t>(m.element(0).degree()));
}

TEST(CharacterTable, KnownTablesAndOrthogonality) {
  struct Case {
    Materialized<Permutation> g;
    std::vector<std::uint64_t> degrees;
  };
  std::vector<Case> cases;
  cases.push_back({perm_group(4, {{{1, 2, 3, 4}}, {{1, 2}}}), {1, 1, 2, 3, 3}});
  cases.push_back({perm_group(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}}), {1, 3, 3, 4, 5}});
  cases.push_back({perm_group(4, {{{1, 2, 3, 4}}, {{1, 3}}}), {1, 1, 1, 1, 2}});
  cases.push_back({perm_group(7, {{{1, 2, 3, 4, 5, 6, 7}}, {{2, 4, 3, 7, 5, 6}}}), {1, 1, 1, 1, 1, 1, 6}});
  cases.push_back({perm_group(5, {{{1, 2, 3, 4, 5}}, {{1, 2}}}), {1, 1, 4, 4, 5, 5, 6}});
  for (auto& c : cases) {
    auto t = character_table(c.g.group);
    EXPECT_EQ(t.degrees, c.degrees);
    EXPECT_TRUE(rows_orthogonal(t));
    EXPECT_TRUE(columns_orthogonal(t));
    expect_permutation_character_decomposes(c.g, t);
    // Principal character first.
    for (const auto& v : t.values[0]) EXPECT_EQ(v.as_integer(), 1);
    // Values at the identity are the degrees.
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_EQ(t.values[i][0].as_integer(), static_cast<std::int64_t>(t.degrees[i]));
    }
  }
}

TEST(CharacterTable, A5HasIrrationalValues) {
  auto m = perm_group(5, {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}});
  auto t = character_table(m.group);
  int irrational = 0;
  for (const auto& row : t.values) {
    for (const auto& v : row) irrational += !v.as_integer().has_value();
  }
  EXPECT_EQ(irrational, 4);  // (1 +- sqrt5)/2 on the two 5-cycle classes
  // (1 + sqrt 5)/2 satisfies x^2 = x + 1.
  for (const auto& row : t.values) {
    for (const auto& v : row) {
      if (!v.as_integer()) EXPECT_EQ(v * v, v + CyclotomicInteger::integer(v.exponent(), 1));
    }
  }
}

TEST(CharacterTable, CapExceeded) {
  auto m = perm_group(5, {{{1, 2, 3, 4, 5}}, {{1, 2}}});
  try {
    character_table(m.group, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CapExceeded);
  }
}

}  // namespace
}  // namespace gagola
