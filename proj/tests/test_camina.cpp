#include <gtest/gtest.h>

#include <random>

#include "gagola/camina.hpp"
#include "gagola/constructions.hpp"
#include "gagola/group_spec.hpp"
#include "gagola/permutation.hpp"

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

Id find_perm(const BuiltGroup& b, const std::vector<std::vector<std::uint32_t>>& cycles) {
  const auto& perms = b.elements_as<Permutation>();
  const auto target = Permutation::from_cycles(perms[0].degree(), cycles);
  for (Id i = 0; i < perms.size(); ++i) {
    if (perms[i] == target) return i;
  }
  ADD_FAILURE() << "permutation not in group";
  return 0;
}

Subgroup generated(const BuiltGroup& b, const std::vector<std::vector<std::vector<std::uint32_t>>>& gens) {
  std::vector<Id> ids;
  for (const auto& c : gens) ids.push_back(find_perm(b, c));
  return closure(b.group, ids);
}

// Oracle straight from the definition: every gn is y^-1 g y for some y.
bool camina_by_definition(const FiniteGroup& g, const Subgroup& n) {
  for (Id x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    for (Id m : n.elements()) {
      const Id target = g.mul(x, m);
      bool found = false;
      for (Id y = 0; y < g.order() && !found; ++y) found = g.conj(x, y) == target;
      if (!found) return false;
    }
  }
  return true;
}

TEST(Camina, Examples) {
  auto d4 = parse_group_spec("named:d4");
  EXPECT_TRUE(is_camina_pair(d4.group, center(d4.group)).holds());
  auto q8 = parse_group_spec("named:q8");
  EXPECT_TRUE(is_camina_pair(q8.group, center(q8.group)).holds());
  auto c4 = parse_group_spec("perm:m=4;gens=(1,2,3,4)");
  const Id sq[] = {find_perm(c4, {{1, 3}, {2, 4}})};
  auto ev = is_camina_pair(c4.group, closure(c4.group, sq));
  EXPECT_FALSE(ev.holds());
  EXPECT_FALSE(ev.centralizer_orders);
  EXPECT_FALSE(ev.commutators_cover_n);
  EXPECT_TRUE(ev.witness);
}

TEST(Camina, Errors) {
  auto s3 = parse_group_spec("named:s3");
  EXPECT_EQ(error_of([&] { is_camina_pair(s3.group, trivial_subgroup(s3.group)); }), Errc::TrivialOrFull);
  EXPECT_EQ(error_of([&] { is_camina_pair(s3.group, whole_group(s3.group)); }), Errc::TrivialOrFull);
  auto t = generated(s3, {{{1, 2}}});
  EXPECT_EQ(error_of([&] { is_camina_pair(s3.group, t); }), Errc::NotNormal);
}

TEST(Camina, EquivalenceOnCorpus) {
  for (const char* spec : {"named:d4", "named:q8", "named:3^1+2", "heis:q=3", "heis:q=4", "agl1:q=4",
                           "agl1:q=8", "suzuki:n=3;h=1", "named:s4", "named:a4"}) {
    auto b = parse_group_spec(spec);
    for (const auto& n : normal_subgroups(b.group)) {
      if (n.is_trivial() || n.is_whole()) continue;
      CaminaEvidence ev;
      ASSERT_NO_THROW(ev = is_camina_pair(b.group, n)) << spec;
      if (b.order() <= 200) EXPECT_EQ(ev.holds(), camina_by_definition(b.group, n)) << spec;
    }
  }
}

// Random permutation groups on at most 6 points from a fixed seed.
TEST(Camina, EquivalenceOnRandomGroups) {
  std::mt19937 rng(20261016);
  int pairs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t deg = 3 + rng() % 4;
    std::vector<Permutation> gens;
    const int k = 1 + rng() % 2;
    for (int i = 0; i < k; ++i) {
      std::vector<std::uint32_t> img(deg);
      for (std::uint32_t j = 0; j < deg; ++j) img[j] = j;
      std::shuffle(img.begin(), img.end(), rng);
      gens.push_back(Permutation(img));
    }
    auto m = generate_group(gens, Permutation::identity(deg));
    for (const auto& n : normal_subgroups(m.group)) {
      if (n.is_trivial() || n.is_whole()) continue;
      CaminaEvidence ev;
      ASSERT_NO_THROW(ev = is_camina_pair(m.group, n));
      EXPECT_EQ(ev.holds(), camina_by_definition(m.group, n));
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 20);
}

TEST(Gagola, Q8AndD4) {
  for (const char* spec : {"named:q8", "named:d4"}) {
    auto b = parse_group_spec(spec);
    auto c = is_gagola_pair(b.group, center(b.group));
    EXPECT_TRUE(c.is_gagola) << c.reason;
    EXPECT_TRUE(c.is_camina);
    EXPECT_EQ(c.d, 2u);
    EXPECT_EQ(c.e, 2u);
    EXPECT_EQ(c.p_index, 4u);
    EXPECT_EQ(c.sylow_index, 1u);  // |G:P| = |N| - 1
    auto v = verify_bounds(b.group, c);
    EXPECT_TRUE(v.holds());
    EXPECT_EQ(*v.d_le_e2_minus_e, true);
    EXPECT_EQ(v.order, 16u - 8u);  // tight: |G| = e^4 - e^3
    EXPECT_FALSE(v.berkovich);
  }
}

TEST(Gagola, HeisenbergFamily) {
  for (std::uint64_t q : {3, 4, 5}) {
    auto b = heisenberg_gagola(q);
    auto c = is_gagola_pair(b.group, *b.designated_n);
    ASSERT_TRUE(c.is_gagola) << c.reason;
    EXPECT_EQ(c.e, q);
    EXPECT_EQ(c.d, q * (q - 1));
    EXPECT_EQ(c.group_order, q * q * q * q - q * q * q);
    EXPECT_EQ(c.sylow_index, q - 1);
    EXPECT_TRUE(c.bounds.d_le_e2_minus_e && c.bounds.order_le_e4_minus_e3 &&
                c.bounds.e2_eq_p_index && c.bounds.d_eq_formula);
    auto v = verify_bounds(b.group, c);
    EXPECT_TRUE(v.holds());
    EXPECT_TRUE(*v.n_squared_le_index_p);
    auto all = certify_all(b.group);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].n, *b.designated_n);
  }
}

TEST(Gagola, FrobeniusCasesHaveEOne) {
  // (S3, A3): the degree-2 character vanishes off A3, so e = 1.
  auto s3 = parse_group_spec("named:s3");
  auto a3 = generated(s3, {{{1, 2, 3}}});
  auto c = is_gagola_pair(s3.group, a3);
  EXPECT_TRUE(c.is_gagola) << c.reason;
  EXPECT_EQ(c.d, 2u);
  EXPECT_EQ(c.e, 1u);
  auto v = verify_bounds(s3.group, c);
  EXPECT_TRUE(v.berkovich);
  EXPECT_TRUE(v.holds());
  EXPECT_FALSE(v.d_le_e2_minus_e);

  for (std::uint64_t q : {4, 8}) {
    auto b = agl1(q);
    auto cq = is_gagola_pair(b.group, *b.designated_n);
    ASSERT_TRUE(cq.is_gagola) << cq.reason;
    EXPECT_EQ(cq.d, q - 1);
    EXPECT_EQ(cq.e, 1u);
    EXPECT_TRUE(verify_bounds(b.group, cq).berkovich);
  }
}

TEST(Gagola, NotGagola) {
  auto s4 = parse_group_spec("named:s4");
  auto v4 = generated(s4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  auto c = is_gagola_pair(s4.group, v4);
  EXPECT_FALSE(c.is_gagola);
  EXPECT_FALSE(c.reason.empty());
  // 3^{1+2} with its centre: Camina, but the centre is not acted on transitively.
  auto e = parse_group_spec("named:3^1+2");
  auto ce = is_gagola_pair(e.group, center(e.group));
  EXPECT_TRUE(ce.is_camina);
  EXPECT_FALSE(ce.is_gagola);
  EXPECT_FALSE(ce.transitive_on_n);
  EXPECT_EQ(error_of([&] { verify_bounds(e.group, ce); }), Errc::HypothesisViolated);
}

TEST(Gagola, CapPropagates) {
  auto b = heisenberg_gagola(7);
  EXPECT_EQ(error_of([&] { is_gagola_pair(b.group, *b.designated_n); }), Errc::CapExceeded);
  auto c = is_gagola_pair(b.group, *b.designated_n, 4096);
  EXPECT_TRUE(c.is_gagola);
  EXPECT_EQ(c.e, 7u);
  EXPECT_EQ(c.d, 42u);
}

TEST(Bounds, AbelianQuotient) {
  auto q8 = parse_group_spec("named:q8");
  auto r = camina_abelian_quotient_bound(q8.group, center(q8.group));
  EXPECT_EQ(r.index, 4u);
  EXPECT_EQ(r.n_order, 2u);
  EXPECT_TRUE(r.holds());
  auto e = parse_group_spec("named:3^1+2");
  auto re = camina_abelian_quotient_bound(e.group, center(e.group));
  EXPECT_EQ(re.index, 9u);
  EXPECT_TRUE(re.holds());
  auto s3 = parse_group_spec("named:s3");
  auto a3 = generated(s3, {{{1, 2, 3}}});
  EXPECT_EQ(error_of([&] { camina_abelian_quotient_bound(s3.group, a3); }), Errc::HypothesisViolated);
}

TEST(Bounds, AbelianOvergroup) {
  auto b = heisenberg_gagola(3);
  auto c = is_gagola_pair(b.group, *b.designated_n);
  auto vac = abelian_overgroup_bound(b.group, c, c.n);
  EXPECT_TRUE(vac.holds());
  EXPECT_EQ(vac.m_index_n, 1u);
  EXPECT_FALSE(vac.second);
  // {(a, 0, c)} is normal and abelian of order q^2.
  for (std::uint64_t q : {3, 4, 5}) {
    auto bq = heisenberg_gagola(q);
    auto cq = is_gagola_pair(bq.group, *bq.designated_n);
    auto ms = qualifying_overgroups(bq.group, cq);
    ASSERT_FALSE(ms.empty()) << q;
    for (const auto& m : ms) {
      auto r = abelian_overgroup_bound(bq.group, cq, m);
      EXPECT_TRUE(r.holds());
      EXPECT_TRUE(r.first);
    }
  }
  auto s = sylow_subgroup(b.group, 3);
  EXPECT_EQ(error_of([&] { abelian_overgroup_bound(b.group, c, s); }), Errc::HypothesisViolated);
}

TEST(Involutions, TwoGagolaPairs) {
  auto q8 = parse_group_spec("named:q8");
  auto c = is_gagola_pair(q8.group, center(q8.group));
  auto r = involution_lemma_checks(q8.group, c);
  EXPECT_EQ(r.involution_cosets, 3u);
  EXPECT_TRUE(r.six);
  EXPECT_FALSE(r.seven_applies);
  EXPECT_TRUE(r.holds());

  auto h4 = heisenberg_gagola(4);
  auto c4 = is_gagola_pair(h4.group, *h4.designated_n);
  auto r4 = involution_lemma_checks(h4.group, c4);
  EXPECT_EQ(r4.o2_order, 64u);
  EXPECT_EQ(r4.involution_cosets, 15u);
  EXPECT_TRUE(r4.holds());

  auto h3 = heisenberg_gagola(3);
  auto c3 = is_gagola_pair(h3.group, *h3.designated_n);
  EXPECT_EQ(error_of([&] { involution_lemma_checks(h3.group, c3); }), Errc::NotTwoGagola);
}

TEST(Involutions, InvolutionOutsideM) {
  auto s4 = parse_group_spec("named:s4");
  auto v4 = generated(s4, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}});
  auto a4 = generated(s4, {{{1, 2, 3}}, {{2, 3, 4}}});
  auto r = lemma_five_check(s4.group, a4, v4);
  ASSERT_TRUE(r.holds());
  EXPECT_FALSE(a4.contains(*r.involution));
  EXPECT_EQ(s4.group.element_order(*r.involution), 2u);

  auto k = parse_group_spec("perm:m=5;gens=(1,2,3),(1,2),(4,5)");
  auto n = generated(k, {{{4, 5}}});
  auto m = generated(k, {{{1, 2, 3}}, {{4, 5}}});
  EXPECT_EQ(error_of([&] { lemma_five_check(k.group, m, n); }), Errc::HypothesisViolated);
}

TEST(GroupSpec, Parse) {
  EXPECT_EQ(parse_group_spec("perm:m=3;gens=(1,2),(1,2,3)").order(), 6u);
  EXPECT_EQ(parse_group_spec("perm:m=3;gens=()").order(), 1u);
  EXPECT_EQ(parse_group_spec("named:3^1+2").order(), 27u);
  EXPECT_EQ(parse_group_spec("suzuki:n=3;h=1").order(), 64u);
  EXPECT_EQ(parse_group_spec("heis:q=3").order(), 54u);
  EXPECT_EQ(parse_group_spec("gamma:p=2;n=4").order(), 60u);
  EXPECT_EQ(parse_group_spec("sl2:q=4").order(), 60u);
  for (const char* bad : {"perm:m=3", "perm:m=3;gens=(1,4)", "perm:m=3;gens=(1,2", "heis", "foo:q=3",
                          "heis:q=x", "heis:q=3;r=1", "named:nope", "sl2:q=9"}) {
    EXPECT_EQ(error_of([&] { parse_group_spec(bad); }), Errc::ParseError) << bad;
  }
}

}  // namespace
}  // namespace gagola
