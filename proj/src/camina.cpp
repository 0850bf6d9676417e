#include "gagola/camina.hpp"

#include <algorithm>

#include "gagola/error.hpp"
#include "gagola/number_theory.hpp"

namespace gagola {

namespace {

void require_proper_normal(const FiniteGroup& g, const Subgroup& n) {
  if (n.parent_order() != g.order()) raise(Errc::InvalidArgument, "subgroup of another group");
  if (n.is_trivial() || n.is_whole()) raise(Errc::TrivialOrFull, "N must satisfy 1 < N < G");
  if (!is_normal(g, n)) raise(Errc::NotNormal, "N is not normal in G");
}

std::uint64_t isqrt_exact(std::uint64_t v, bool& exact) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  exact = r * r == v;
  return r;
}

}  // namespace

CaminaEvidence is_camina_pair(const FiniteGroup& g, const Subgroup& n) {
  require_proper_normal(g, n);
  const ClassTable ct = conjugacy_classes(g);
  const Quotient q = quotient_group(g, n);
  const ClassTable qct = conjugacy_classes(q.group);

  CaminaEvidence ev;
  ev.coset_in_class = ev.centralizer_orders = ev.commutators_cover_n = true;
  std::vector<char> hit(g.order());
  for (Id x = 0; x < g.order(); ++x) {
    if (n.contains(x)) continue;
    bool a = true;
    for (Id y : n.elements()) a &= ct.class_of[g.mul(x, y)] == ct.class_of[x];
    if (!a && !ev.witness) ev.witness = x;
    ev.coset_in_class &= a;

    const std::uint64_t cg = g.order() / ct.sizes[ct.class_of[x]];
    const Id qx = q.projection[x];
    const std::uint64_t cq = q.group.order() / qct.sizes[qct.class_of[qx]];
    ev.centralizer_orders &= cg == cq;

    std::fill(hit.begin(), hit.end(), 0);
    for (Id y = 0; y < g.order(); ++y) hit[g.comm(x, y)] = 1;
    bool c = true;
    for (Id y : n.elements()) c &= hit[y] != 0;
    ev.commutators_cover_n &= c;
  }
  if (ev.coset_in_class != ev.centralizer_orders || ev.coset_in_class != ev.commutators_cover_n) {
    raise(Errc::ConditionDisagreement,
          std::string("Camina conditions disagree: (a) ") + (ev.coset_in_class ? "true" : "false") +
              ", (b) " + (ev.centralizer_orders ? "true" : "false") + ", (c) " +
              (ev.commutators_cover_n ? "true" : "false"));
  }
  return ev;
}

PairCertificate is_gagola_pair(const FiniteGroup& g, const Subgroup& n, std::size_t cap) {
  require_proper_normal(g, n);
  PairCertificate c;
  c.n = n;
  c.group_order = g.order();
  c.n_order = n.order();
  c.camina = is_camina_pair(g, n);
  c.is_camina = c.camina.holds();

  const auto minimal = minimal_normal_subgroups(g);
  c.unique_minimal_normal = minimal.size() == 1 && minimal[0] == n;
  c.p = elementary_abelian_prime(g, n);

  // Orbit of one nonidentity element of N under conjugation.
  const Id start = n.elements()[1];
  std::vector<char> seen(g.order(), 0);
  std::vector<Id> orbit{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (Id s : g.generators()) {
      const Id y = g.conj(orbit[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  c.transitive_on_n = orbit.size() == n.order() - 1;

  const CharacterTable t = character_table(g, cap);
  c.gagola_witness = find_gagola_character(g, t);
  const bool support_is_n = c.gagola_witness && c.gagola_witness->n == n;

  if (!c.unique_minimal_normal) {
    c.reason = "N is not the unique minimal normal subgroup";
  } else if (!c.p) {
    c.reason = "N is not elementary abelian";
  } else if (!c.transitive_on_n) {
    c.reason = "G is not transitive on N - {1}";
  } else if (!c.gagola_witness) {
    c.reason = "no irreducible character vanishes off two classes";
  } else if (!support_is_n) {
    c.reason = "the Gagola character has a different support";
  }
  c.is_gagola = c.reason.empty();
  if (!c.is_gagola) return c;
  if (!c.is_camina) raise(Errc::ConditionDisagreement, "Gagola pair that is not a Camina pair");

  const std::uint64_t p = *c.p;
  const Subgroup sylow = sylow_subgroup(g, p);
  c.p_index = sylow.order() / n.order();
  c.sylow_index = g.order() / sylow.order();
  c.index_p_part = nt::p_part(g.order() / n.order(), p);

  // Character route.
  const std::uint64_t d_chi = t.degrees[c.gagola_witness->index];
  const std::uint64_t e_chi = g.order() / d_chi - d_chi;
  // Structural route.
  bool square = false;
  const std::uint64_t e_str = isqrt_exact(c.p_index, square);
  const std::uint64_t d_str = e_str * (n.order() - 1);
  if (!square || d_chi != d_str || e_chi != e_str || g.order() % d_chi != 0) {
    raise(Errc::DAndEDisagree, "character route gives d=" + std::to_string(d_chi) +
                                   ", e=" + std::to_string(e_chi) + "; |P:N| = " +
                                   std::to_string(c.p_index) + ", |N| = " +
                                   std::to_string(n.order()));
  }
  c.d = d_chi;
  c.e = e_chi;
  c.bounds.e2_eq_p_index = c.e * c.e == c.p_index;
  c.bounds.d_eq_formula = c.d == c.e * (c.n_order - 1);
  c.bounds.d_le_e2_minus_e = c.d + c.e <= c.e * c.e;
  c.bounds.order_le_e4_minus_e3 = c.group_order + c.e * c.e * c.e <= c.e * c.e * c.e * c.e;
  return c;
}

std::vector<PairCertificate> certify_all(const FiniteGroup& g, std::size_t cap) {
  std::vector<PairCertificate> out;
  for (const auto& n : minimal_normal_subgroups(g)) {
    if (n.is_whole()) continue;
    out.push_back(is_gagola_pair(g, n, cap));
  }
  return out;
}

bool two_transitive_frobenius(const FiniteGroup& g, const Subgroup& n) {
  const std::uint64_t k = n.order();
  if (k < 2 || g.order() != k * (k - 1) || !is_normal(g, n)) return false;
  for (Id x : n.elements()) {
    if (x == g.identity()) continue;
    if (centralizer(g, x) != n) return false;
  }
  std::vector<char> seen(g.order(), 0);
  std::size_t orbit = 0;
  const Id start = n.elements()[1];
  for (Id y = 0; y < g.order(); ++y) {
    const Id z = g.conj(start, y);
    if (!seen[z]) {
      seen[z] = 1;
      ++orbit;
    }
  }
  return orbit == k - 1;
}

bool BoundsReport::holds() const {
  auto ok = [](const std::optional<bool>& v) { return v.value_or(true); };
  return order_is_d_times_d_plus_e && berkovich_consistent && ok(d_le_e2_minus_e) &&
         ok(order_le_e4_minus_e3) && ok(d_lt_e2) && ok(order_lt_e4_plus_e3) &&
         ok(n_squared_le_index_p);
}

BoundsReport verify_bounds(const FiniteGroup& g, const PairCertificate& cert) {
  if (!cert.is_gagola || cert.e == 0) raise(Errc::HypothesisViolated, "not a certified Gagola pair");
  BoundsReport r;
  r.d = cert.d;
  r.e = cert.e;
  r.order = cert.group_order;
  const std::uint64_t e = cert.e, d = cert.d;
  r.order_is_d_times_d_plus_e = nt::checked_mul(d, d + e) == r.order;
  if (e > 1) {
    const std::uint64_t e2 = e * e, e3 = e2 * e, e4 = e3 * e;
    r.d_le_e2_minus_e = d <= e2 - e;
    r.order_le_e4_minus_e3 = r.order <= e4 - e3;
    r.d_lt_e2 = d < e2;
    r.order_lt_e4_plus_e3 = r.order < e4 + e3;
    r.n_squared_le_index_p = cert.n_order * cert.n_order <= cert.index_p_part;
  }
  r.berkovich = two_transitive_frobenius(g, cert.n);
  r.berkovich_consistent = (e == 1) == r.berkovich;
  return r;
}

AbelianQuotientBound camina_abelian_quotient_bound(const FiniteGroup& g, const Subgroup& n) {
  if (!p_group_prime(g.order())) raise(Errc::HypothesisViolated, "G is not a p-group");
  const Subgroup derived = derived_subgroup(g);
  if (!derived.is_subset_of(n)) raise(Errc::HypothesisViolated, "G/N is not abelian");
  if (!is_camina_pair(g, n).holds()) raise(Errc::HypothesisViolated, "(G,N) is not a Camina pair");
  AbelianQuotientBound r;
  r.index = g.order() / n.order();
  r.n_order = n.order();
  r.derived_is_n = derived == n;
  return r;
}

OvergroupBound abelian_overgroup_bound(const FiniteGroup& g, const PairCertificate& cert,
                                       const Subgroup& m) {
  if (!cert.is_gagola) raise(Errc::HypothesisViolated, "not a certified Gagola pair");
  const std::uint64_t p = *cert.p;
  if (!cert.n.is_subset_of(m)) raise(Errc::HypothesisViolated, "N is not contained in M");
  if (!is_normal(g, m)) raise(Errc::HypothesisViolated, "M is not normal");
  if (!is_abelian(g, m)) raise(Errc::HypothesisViolated, "M is not abelian");
  if (p_group_prime(m.order()) != p) raise(Errc::HypothesisViolated, "M is not a p-group");
  const Subgroup sylow = sylow_subgroup(g, p);
  OvergroupBound r;
  r.p_index_m = sylow.order() / m.order();
  r.m_index_n = m.order() / cert.n_order;
  r.first = r.p_index_m >= r.m_index_n;
  if (cert.n_order <= r.m_index_n) {
    r.second = cert.n_order * cert.n_order <= sylow.order() / cert.n_order;
  }
  return r;
}

std::vector<Subgroup> qualifying_overgroups(const FiniteGroup& g, const PairCertificate& cert) {
  if (!cert.is_gagola) raise(Errc::HypothesisViolated, "not a certified Gagola pair");
  std::vector<Subgroup> out;
  for (const auto& m : normal_subgroups(g)) {
    if (m.order() <= cert.n_order || !cert.n.is_subset_of(m)) continue;
    if (p_group_prime(m.order()) != cert.p || !is_abelian(g, m)) continue;
    out.push_back(m);
  }
  return out;
}

InvolutionReport involution_lemma_checks(const FiniteGroup& g, const PairCertificate& cert) {
  if (!cert.is_gagola || cert.p != 2u) raise(Errc::NotTwoGagola, "not a certified 2-Gagola pair");
  const Subgroup& n = cert.n;
  const Subgroup o2 = o_p_subgroup(g, 2);
  InvolutionReport r;
  r.o2_order = o2.order();
  r.six = true;
  std::vector<char> coset_seen(g.order(), 0);
  for (Id t = 0; t < g.order(); ++t) {
    if (n.contains(t) || !n.contains(g.mul(t, t))) continue;
    // Count each coset tN once, via its least element.
    Id least = t;
    for (Id y : n.elements()) least = std::min(least, g.mul(t, y));
    if (!coset_seen[least]) {
      coset_seen[least] = 1;
      ++r.involution_cosets;
    }
    r.six &= o2.contains(t);
  }
  for (Id x : o2.elements()) {
    if (!n.contains(g.mul(x, x))) {
      r.seven_applies = true;
      break;
    }
  }
  if (r.seven_applies) {
    const std::uint64_t index = g.order() / n.order();
    const std::uint64_t n2 = n.order() * n.order();
    r.seven = index % n2 == 0 && nt::p_part(index, 2) >= n2;
  }
  return r;
}

LemmaFiveReport lemma_five_check(const FiniteGroup& k, const Subgroup& m, const Subgroup& n) {
  auto fail = [](const std::string& what) { raise(Errc::HypothesisViolated, what); };
  if (!is_normal(k, n) || !is_normal(k, m)) fail("N and M must be normal in K");
  if (!n.is_subset_of(m) || n == m) fail("N < M fails");
  if (elementary_abelian_prime(k, n) != 2u) fail("N is not an elementary abelian 2-group");
  const std::uint64_t mn = m.order() / n.order();
  if (mn % 2 == 0) fail("|M:N| is not odd");
  if (k.order() != 2 * m.order()) fail("|K:M| is not 2");
  // M/N cyclic: some c in M has cN of order |M:N|.
  std::optional<Id> gen;
  for (Id c : m.elements()) {
    std::uint64_t ord = 1;
    Id y = c;
    while (!n.contains(y)) {
      y = k.mul(y, c);
      ++ord;
    }
    if (ord == mn) {
      gen = c;
      break;
    }
  }
  if (!gen) fail("M/N is not cyclic");
  for (Id x : n.elements()) {
    if (x != k.identity() && k.comm(x, *gen) == k.identity()) fail("C_N(M/N) is not trivial");
  }
  // K/N dihedral: some t outside M with t^2 in N inverts cN.
  bool dihedral = false;
  for (Id t = 0; t < k.order() && !dihedral; ++t) {
    if (m.contains(t) || !n.contains(k.mul(t, t))) continue;
    dihedral = n.contains(k.mul(k.conj(*gen, t), *gen));
  }
  if (!dihedral) fail("K/N is not dihedral");
  LemmaFiveReport r;
  for (Id t = 0; t < k.order(); ++t) {
    if (!m.contains(t) && k.element_order(t) == 2) {
      r.involution = t;
      break;
    }
  }
  return r;
}

}  // namespace gagola
