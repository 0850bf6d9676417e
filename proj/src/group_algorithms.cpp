#include "gagola/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "gagola/number_theory.hpp"
#include "gagola/permutation.hpp"

namespace gagola {

namespace {

// BFS from the members of `seed` (a subgroup, or just the identity) under
// right multiplication by `gens`.
Subgroup close_from(const FiniteGroup& g, const std::vector<Id>& seed, std::span<const Id> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Id> members;
  members.reserve(seed.size() * 2);
  for (Id x : seed) {
    if (!seen[x]) {
      seen[x] = 1;
      members.push_back(x);
    }
  }
  if (!seen[0]) {
    seen[0] = 1;
    members.push_back(0);
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Id s : gens) {
      const Id y = g.mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g.order(), std::move(members));
}

struct TrackedSubgroup {
  Subgroup group;
  std::vector<Id> gens;
};

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g.order(), {0}); }

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Id> all(g.order());
  std::iota(all.begin(), all.end(), Id{0});
  return Subgroup(g.order(), std::move(all));
}

Subgroup closure(const FiniteGroup& g, std::span<const Id> gens) {
  return close_from(g, {0}, gens);
}

Subgroup join(const FiniteGroup& g, const Subgroup& h, std::span<const Id> extra) {
  std::vector<Id> gens = generating_set(g, h);
  bool grows = false;
  for (Id x : extra) {
    if (!h.contains(x)) grows = true;
    gens.push_back(x);
  }
  if (!grows) return h;
  return close_from(g, h.elements(), gens);
}

Subgroup join(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  const auto gb = generating_set(g, b);
  return join(g, a, gb);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Id> out;
  for (Id x : a.elements()) {
    if (b.contains(x)) out.push_back(x);
  }
  return Subgroup(a.parent_order(), std::move(out));
}

std::vector<Id> generating_set(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Id> gens;
  Subgroup k = trivial_subgroup(g);
  for (Id x : h.elements()) {
    if (k.order() == h.order()) break;
    if (k.contains(x)) continue;
    gens.push_back(x);
    k = close_from(g, k.elements(), gens);
  }
  return gens;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Id> members) {
  if (members.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (Id x : members) in[x] = 1;
  for (Id x : members) {
    for (Id y : members) {
      if (!in[g.mul(x, y)]) return false;
    }
  }
  return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto hg = generating_set(g, h);
  for (Id s : g.generators()) {
    for (Id x : hg) {
      if (!h.contains(g.conj(x, s))) return false;
    }
  }
  return true;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, Id x) {
  std::vector<Id> out;
  out.reserve(h.order());
  for (Id y : h.elements()) out.push_back(g.conj(y, x));
  return Subgroup(g.order(), std::move(out));
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Id> seed) {
  std::vector<Id> gens(seed.begin(), seed.end());
  Subgroup h = closure(g, gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (Id s : g.generators()) {
      const Id y = g.conj(gens[i], s);
      if (!h.contains(y)) {
        gens.push_back(y);
        h = close_from(g, h.elements(), gens);
      }
    }
  }
  return h;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  const auto hg = generating_set(g, h);
  std::vector<Id> out;
  for (Id x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Id y : hg) {
      if (!h.contains(g.conj(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup core(const FiniteGroup& g, const Subgroup& h) {
  Subgroup s = h;
  for (bool changed = true; changed;) {
    changed = false;
    for (Id t : g.generators()) {
      Subgroup next = intersection(s, conjugate(g, s, t));
      if (next.order() != s.order()) {
        s = std::move(next);
        changed = true;
      }
    }
  }
  return s;
}

ClassTable conjugacy_classes(const FiniteGroup& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> raw_class(n, kUnset);
  std::vector<std::vector<Id>> raw_members;
  for (Id x = 0; x < n; ++x) {
    if (raw_class[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(raw_members.size());
    std::vector<Id> orbit{x};
    raw_class[x] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Id s : g.generators()) {
        const Id y = g.conj(orbit[i], s);
        if (raw_class[y] == kUnset) {
          raw_class[y] = c;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    raw_members.push_back(std::move(orbit));
  }
  // Ascending scan makes orbit[0] the minimum id; order by (size, rep).
  std::vector<std::uint32_t> order(raw_members.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw_members[a].size() != raw_members[b].size()) {
      return raw_members[a].size() < raw_members[b].size();
    }
    return raw_members[a][0] < raw_members[b][0];
  });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  ClassTable t;
  t.class_of.resize(n);
  for (Id x = 0; x < n; ++x) t.class_of[x] = rank[raw_class[x]];
  for (std::uint32_t c : order) {
    t.reps.push_back(raw_members[c][0]);
    t.sizes.push_back(raw_members[c].size());
    t.members.push_back(std::move(raw_members[c]));
  }
  if (n > 1) {
    for (auto p : nt::prime_divisors(n)) {
      std::vector<std::uint32_t> pm(t.size());
      for (std::size_t c = 0; c < t.size(); ++c) {
        pm[c] = t.class_of[g.pow(t.reps[c], static_cast<std::int64_t>(p))];
      }
      t.power_map.emplace(p, std::move(pm));
    }
  }
  return t;
}

Subgroup centralizer(const FiniteGroup& g, Id x) {
  std::vector<Id> out;
  for (Id y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  const auto hg = generating_set(g, h);
  std::vector<Id> out;
  for (Id y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Id x : hg) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Id> out;
  for (Id y = 0; y < g.order(); ++y) {
    bool ok = true;
    for (Id s : g.generators()) {
      if (g.mul(s, y) != g.mul(y, s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(y);
  }
  return Subgroup(g.order(), std::move(out));
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  const auto ga = generating_set(g, a);
  const auto gb = generating_set(g, b);
  std::vector<Id> comms;
  for (Id x : ga) {
    for (Id y : gb) comms.push_back(g.comm(x, y));
  }
  return normal_closure(g, comms);
}

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Id> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.comm(gens[i], gens[j]));
  }
  return normal_closure(g, comms);
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  const Subgroup all = series.back();
  while (true) {
    Subgroup next = commutator_subgroup(g, series.back(), all);
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<unsigned> nilpotency_class(const FiniteGroup& g) {
  const auto series = lower_central_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<unsigned>(series.size() - 1);
}

Subgroup power_subgroup(const FiniteGroup& g, std::uint64_t p) {
  std::vector<Id> powers;
  std::vector<char> seen(g.order(), 0);
  for (Id x = 0; x < g.order(); ++x) {
    const Id y = g.pow(x, static_cast<std::int64_t>(p));
    if (!seen[y]) {
      seen[y] = 1;
      powers.push_back(y);
    }
  }
  return normal_closure(g, powers);
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
  if (auto p = p_group_prime(g.order())) {
    return join(g, derived_subgroup(g), power_subgroup(g, *p));
  }
  return frattini_by_maximal_subgroups(g);
}

Subgroup frattini_by_maximal_subgroups(const FiniteGroup& g) {
  const auto maxes = maximal_subgroups(g);
  Subgroup out = whole_group(g);
  for (const auto& m : maxes) out = intersection(out, m);
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
  const auto gens = generating_set(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::optional<std::uint64_t> elementary_abelian_prime(const FiniteGroup& g, const Subgroup& h) {
  if (h.is_trivial() || !is_abelian(g, h)) return std::nullopt;
  std::uint64_t p = 0;
  for (Id x : h.elements()) {
    if (x == 0) continue;
    const std::uint64_t o = g.element_order(x);
    if (p == 0) p = o;
    if (o != p) return std::nullopt;
  }
  if (!nt::is_prime(p)) return std::nullopt;
  return p;
}

std::optional<std::uint64_t> p_group_prime(std::size_t order) {
  if (order < 2) return std::nullopt;
  const auto f = nt::factorize(order);
  if (f.size() != 1) return std::nullopt;
  return f[0].first;
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) raise(Errc::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t size = g.order();
  constexpr Id kUnset = ~Id{0};
  std::vector<Id> coset(size, kUnset);
  std::vector<Id> reps;
  for (Id x = 0; x < size; ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<Id>(reps.size());
    reps.push_back(x);
    for (Id m : n.elements()) coset[g.mul(m, x)] = c;
  }
  const auto index = static_cast<std::uint32_t>(reps.size());
  std::vector<Permutation> gen_perms;
  for (Id s : g.generators()) {
    std::vector<std::uint32_t> images(index);
    for (Id c = 0; c < index; ++c) images[c] = coset[g.mul(reps[c], s)];
    gen_perms.emplace_back(std::move(images));
  }
  auto mat = generate_group(gen_perms, Permutation::identity(index),
                            std::max<std::size_t>(index, 1));
  std::vector<Id> gen_qid;
  for (const auto& p : gen_perms) gen_qid.push_back(mat.id_of(p));

  Quotient q;
  q.projection.assign(size, 0);
  for (Id x = 1; x < size; ++x) {
    q.projection[x] = mat.group.mul(q.projection[g.parent(x)], gen_qid[g.parent_generator(x)]);
  }
  q.lift.assign(mat.order(), kUnset);
  for (Id x = 0; x < size; ++x) {
    if (q.lift[q.projection[x]] == kUnset) q.lift[q.projection[x]] = x;
  }
  q.group = std::move(mat.group);
  return q;
}

InducedGroup induced_group(const FiniteGroup& g, const Subgroup& h) {
  std::vector<IdElement> gens;
  for (Id x : generating_set(g, h)) gens.push_back({&g, x});
  auto mat = generate_group(gens, IdElement{&g, 0}, h.order());
  InducedGroup out;
  out.to_parent.reserve(mat.order());
  for (const auto& e : mat.elements) {
    out.from_parent.emplace(e.id, static_cast<Id>(out.to_parent.size()));
    out.to_parent.push_back(e.id);
  }
  out.group = std::move(mat.group);
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t max_count) {
  // Every subgroup is generated by its elements of prime-power order, so
  // repeatedly extending by cyclic subgroups of prime-power order reaches
  // all of them.
  std::vector<Id> cyclic_gens;
  {
    std::vector<char> covered(g.order(), 0);
    for (Id x = 1; x < g.order(); ++x) {
      if (covered[x]) continue;
      const auto f = nt::factorize(g.element_order(x));
      if (f.size() != 1) continue;
      cyclic_gens.push_back(x);
      // Mark the other generators of <x> so each cyclic subgroup appears once.
      const std::uint64_t o = g.element_order(x);
      for (std::uint64_t k = 1; k < o; ++k) {
        if (nt::gcd(k, o) == 1) covered[g.pow(x, static_cast<std::int64_t>(k))] = 1;
      }
    }
  }
  std::vector<TrackedSubgroup> found;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  auto lookup_or_add = [&](Subgroup s, std::vector<Id> gens) -> bool {
    auto& bucket = by_hash[s.hash()];
    for (auto i : bucket) {
      if (found[i].group == s) return false;
    }
    if (found.size() >= max_count) {
      raise(Errc::CapExceeded, "more than " + std::to_string(max_count) + " subgroups");
    }
    bucket.push_back(found.size());
    found.push_back({std::move(s), std::move(gens)});
    return true;
  };
  lookup_or_add(trivial_subgroup(g), {});
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Id c : cyclic_gens) {
      if (found[i].group.contains(c)) continue;
      auto gens = found[i].gens;
      gens.push_back(c);
      Subgroup s = close_from(g, found[i].group.elements(), gens);
      lookup_or_add(std::move(s), std::move(gens));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& t : found) out.push_back(std::move(t.group));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  auto subs = all_subgroups(g);
  subs.pop_back();  // G itself is last in (order, members) order
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < subs.size() && maximal; ++j) {
      if (subs[j].order() > subs[i].order() && subs[i].is_subset_of(subs[j])) maximal = false;
    }
    if (maximal) out.push_back(std::move(subs[i]));
  }
  return out;
}

namespace {

std::vector<TrackedSubgroup> class_normal_closures(const FiniteGroup& g, const ClassTable& ct) {
  std::vector<TrackedSubgroup> out;
  for (std::size_t c = 1; c < ct.size(); ++c) {
    const Id seed[] = {ct.reps[c]};
    Subgroup s = normal_closure(g, seed);
    bool dup = false;
    for (const auto& t : out) {
      if (t.group == s) dup = true;
    }
    if (!dup) out.push_back({std::move(s), {ct.reps[c]}});
  }
  return out;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
  // Normal subgroups are exactly the joins of normal closures of classes.
  const auto ct = conjugacy_classes(g);
  const auto ncs = class_normal_closures(g, ct);
  std::vector<TrackedSubgroup> found{{trivial_subgroup(g), {}}};
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  by_hash[found[0].group.hash()].push_back(0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& nc : ncs) {
      if (nc.group.is_subset_of(found[i].group)) continue;
      auto gens = found[i].gens;
      gens.insert(gens.end(), nc.gens.begin(), nc.gens.end());
      Subgroup s = normal_closure(g, gens);
      auto& bucket = by_hash[s.hash()];
      bool dup = false;
      for (auto j : bucket) {
        if (found[j].group == s) dup = true;
      }
      if (dup) continue;
      bucket.push_back(found.size());
      found.push_back({std::move(s), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  for (auto& t : found) out.push_back(std::move(t.group));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  // A minimal normal subgroup is the normal closure of any of its
  // nontrivial elements, so the candidates are the class closures.
  const auto ct = conjugacy_classes(g);
  auto ncs = class_normal_closures(g, ct);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < ncs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ncs.size() && minimal; ++j) {
      if (j != i && ncs[j].group.order() < ncs[i].group.order() &&
          ncs[j].group.is_subset_of(ncs[i].group)) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(ncs[i].group);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!nt::is_prime(p) || g.order() % p != 0) {
    raise(Errc::PNotDividing, std::to_string(p) + " does not divide " + std::to_string(g.order()));
  }
  const std::uint64_t target = nt::p_part(g.order(), p);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    // p divides |N(S):S| while S is not Sylow; take the least x in N(S)
    // with xS of order p and adjoin it.
    const Subgroup nrm = normalizer(g, s);
    std::optional<Id> pick;
    for (Id x : nrm.elements()) {
      if (!s.contains(x) && s.contains(g.pow(x, static_cast<std::int64_t>(p)))) {
        pick = x;
        break;
      }
    }
    if (!pick) raise(Errc::InvalidArgument, "Sylow growth stalled");
    std::vector<Id> members;
    members.reserve(s.order() * p);
    Id xk = 0;
    for (std::uint64_t k = 0; k < p; ++k) {
      for (Id y : s.elements()) members.push_back(g.mul(y, xk));
      xk = g.mul(xk, *pick);
    }
    s = Subgroup(g.order(), std::move(members));
  }
  return s;
}

Subgroup o_p_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (g.order() % p != 0) return trivial_subgroup(g);
  return core(g, sylow_subgroup(g, p));
}

std::optional<IdMap> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& target,
                                         std::span<const Id> generator_images) {
  const std::size_t k = g.generators().size();
  if (generator_images.size() != k) raise(Errc::InvalidArgument, "one image per generator");
  // The generators are themselves elements with words; their images are
  // fixed by the word images, so pin them first and check consistency.
  IdMap map(g.order(), 0);
  for (Id x = 1; x < g.order(); ++x) {
    map[x] = target.mul(map[g.parent(x)], generator_images[g.parent_generator(x)]);
  }
  for (Id x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      if (map[g.right_by_generator(x, s)] != target.mul(map[x], generator_images[s])) {
        return std::nullopt;
      }
    }
  }
  return map;
}

bool is_automorphism(const FiniteGroup& g, const IdMap& map) {
  if (map.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (Id y : map) {
    if (y >= g.order() || hit[y]) return false;
    hit[y] = 1;
  }
  const std::size_t k = g.generators().size();
  for (Id x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < k; ++s) {
      if (map[g.right_by_generator(x, s)] != g.mul(map[x], map[g.generators()[s]])) return false;
    }
  }
  return true;
}

IdMap compose(const IdMap& a, const IdMap& b) {
  IdMap out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

IdMap identity_map(const FiniteGroup& g) {
  IdMap m(g.order());
  std::iota(m.begin(), m.end(), Id{0});
  return m;
}

namespace {

// Collects the first failed sigma hypothesis, or empty when all hold.
std::string class3_sigma_problem(const FiniteGroup& g, const Subgroup& derived, const Subgroup& z,
                                 const IdMap& sigma) {
  if (!is_automorphism(g, sigma)) return "sigma is not an automorphism";
  const IdMap sq = compose(sigma, sigma);
  if (sq != identity_map(g) || sigma == identity_map(g)) return "order of sigma is not 2";
  for (Id x = 0; x < g.order(); ++x) {
    if (!derived.contains(g.mul(sigma[x], x))) return "sigma does not invert P/P'";
  }
  for (Id x : z.elements()) {
    if (sigma[x] != g.inv(x)) return "sigma does not invert Z";
  }
  for (Id x : derived.elements()) {
    if (!z.contains(g.mul(g.inv(x), sigma[x]))) return "sigma does not centralize P'/Z";
  }
  return {};
}

void class3_group_hypotheses(const FiniteGroup& g, const Subgroup& z, const Subgroup& derived) {
  const auto p = p_group_prime(g.order());
  if (!p || *p == 2) raise(Errc::HypothesisViolated, "P is not a p-group for odd p");
  const auto cls = nilpotency_class(g);
  if (!cls || *cls != 3) {
    raise(Errc::HypothesisViolated,
          "nilpotence class is " + std::to_string(cls.value_or(0)) + ", not 3");
  }
  const Subgroup gamma3 = commutator_subgroup(g, derived, whole_group(g));
  if (!gamma3.is_subset_of(z)) raise(Errc::HypothesisViolated, "[P',P] is not contained in Z");
  if (!z.is_subset_of(intersection(center(g), derived))) {
    raise(Errc::HypothesisViolated, "Z is not contained in Z(P) n P'");
  }
}

}  // namespace

Class3Report class3_lemma_check(const FiniteGroup& g, const Subgroup& z, const IdMap& sigma) {
  const Subgroup derived = derived_subgroup(g);
  class3_group_hypotheses(g, z, derived);
  if (auto problem = class3_sigma_problem(g, derived, z, sigma); !problem.empty()) {
    raise(Errc::HypothesisViolated, problem);
  }

  // For y, C_{P/Z}(yZ) pulled back to P is {t : [t,y] in Z}; compare with
  // C_P(y)P'.
  auto conclusion_holds = [&](Id y) {
    const Subgroup cy = centralizer(g, y);
    const Subgroup rhs = join(g, cy, derived);
    for (Id t = 0; t < g.order(); ++t) {
      if (z.contains(g.comm(t, y)) != rhs.contains(t)) return false;
    }
    return true;
  };

  Class3Report r;
  std::vector<char> done(g.order(), 0);
  for (Id x = 0; x < g.order(); ++x) {
    if (derived.contains(x) || done[x]) continue;
    ++r.elements_checked;
    std::optional<Id> witness;
    for (Id d : derived.elements()) {
      const Id y = g.mul(x, d);
      done[y] = 1;
      if (!witness && conclusion_holds(y)) witness = y;
    }
    if (!witness) {
      r.counterexample = x;
      r.holds = false;
      return r;
    }
    r.witnesses.emplace_back(x, *witness);
  }
  r.holds = true;
  return r;
}

std::optional<IdMap> find_class3_sigma(const FiniteGroup& g, const Subgroup& z) {
  const Subgroup derived = derived_subgroup(g);
  const auto& gens = g.generators();
  // sigma inverts P/P', so each generator image lies in s^-1 P'.
  std::vector<std::vector<Id>> choices;
  for (Id s : gens) {
    std::vector<Id> c;
    for (Id d : derived.elements()) c.push_back(g.mul(g.inv(s), d));
    std::sort(c.begin(), c.end());
    choices.push_back(std::move(c));
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  while (true) {
    std::vector<Id> images;
    for (std::size_t i = 0; i < gens.size(); ++i) images.push_back(choices[i][idx[i]]);
    if (auto m = extend_homomorphism(g, g, images)) {
      if (class3_sigma_problem(g, derived, z, *m).empty()) return m;
    }
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  return std::nullopt;
}

}  // namespace gagola
