#include "gagola/suzuki.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "gagola/error.hpp"
#include "gagola/number_theory.hpp"

namespace gagola {

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << std::uppercase << v;
  return os.str();
}

const Field& field_of(const SuzukiPair& p) {
  if (p.field == nullptr) raise(Errc::InvalidArgument, "uninitialized Suzuki pair");
  return *p.field;
}

}  // namespace

SuzukiPair SuzukiPair::operator*(const SuzukiPair& o) const {
  if (field != o.field || h != o.h) raise(Errc::MixedGroups, "pairs from different groups");
  const Field& f = field_of(*this);
  return {field, h, f.add(a, o.a), f.add(f.add(b, o.b), f.mul(o.a, f.frobenius(a, h)))};
}

std::string SuzukiPair::to_string() const {
  return "(" + hex(a) + "," + hex(b) + ")";
}

SuzukiPair SuzukiGroup::mul(const SuzukiPair& x, const SuzukiPair& y) const {
  if (x.field != field_.get() || y.field != field_.get() || x.h != h_ || y.h != h_) {
    raise(Errc::MixedGroups, "pair does not belong to this group");
  }
  return x * y;
}

const Materialized<SuzukiPair>& SuzukiGroup::group() const {
  if (!materialized_) raise(Errc::InvalidArgument, "Suzuki group was not materialized");
  return *materialized_;
}

const Subgroup& SuzukiGroup::n_subgroup() const {
  if (!n_subgroup_) raise(Errc::InvalidArgument, "Suzuki group was not materialized");
  return *n_subgroup_;
}

SuzukiGroup suzuki_group(unsigned n, unsigned h, bool materialize, std::size_t cap) {
  if (n == 0 || n > 30) raise(Errc::InvalidArgument, "n must lie in [1, 30]");
  if (h == 0 || h >= n) raise(Errc::InvalidTheta, "h must lie in [1, n)");
  const unsigned order = n / static_cast<unsigned>(nt::gcd(n, h));
  if (order % 2 == 0 || order == 1) {
    raise(Errc::InvalidTheta, "Theta has order " + std::to_string(order) +
                                  ", which must be odd and greater than 1");
  }
  SuzukiGroup m;
  m.field_ = create_field(2, n);
  m.n_ = n;
  m.h_ = h;
  m.theta_order_ = order;
  if (materialize) {
    const Field& f = *m.field_;
    const auto g = f.primitive_element();
    std::vector<SuzukiPair> gens;
    for (unsigned i = 0; i < n; ++i) gens.push_back(m.pair(f.pow(g, i), 0));
    m.materialized_ = generate_group(std::move(gens), m.pair(0, 0), cap);
    std::vector<Id> members;
    for (Id x = 0; x < m.materialized_->order(); ++x) {
      if (m.materialized_->element(x).a == 0) members.push_back(x);
    }
    m.n_subgroup_ = Subgroup(m.materialized_->order(), std::move(members));
  }
  return m;
}

SuzukiPair suzuki_mul(const SuzukiGroup& m, const SuzukiPair& x, const SuzukiPair& y) {
  return m.mul(x, y);
}

SuzukiPair suzuki_square(const SuzukiGroup& m, const SuzukiPair& x) { return m.square(x); }

Field::Value apply_linear(const LinearMap& psi, Field::Value a) {
  Field::Value out = 0;
  for (std::size_t i = 0; a != 0; ++i, a >>= 1) {
    if (a & 1) {
      if (i >= psi.size()) raise(Errc::InvalidArgument, "element outside the domain of psi");
      out ^= psi[i];
    }
  }
  return out;
}

SuzukiAutomorphism SuzukiAutomorphism::a1(LinearMap psi) {
  SuzukiAutomorphism s;
  s.kind_ = Kind::A1;
  s.psi_ = std::move(psi);
  return s;
}

SuzukiAutomorphism SuzukiAutomorphism::a2(Field::Value x) {
  SuzukiAutomorphism s;
  s.kind_ = Kind::A2;
  s.x_ = x;
  return s;
}

SuzukiAutomorphism SuzukiAutomorphism::a3(unsigned t) {
  SuzukiAutomorphism s;
  s.kind_ = Kind::A3;
  s.t_ = t;
  return s;
}

SuzukiAutomorphism SuzukiAutomorphism::product(std::vector<SuzukiAutomorphism> factors) {
  SuzukiAutomorphism s;
  s.kind_ = Kind::Product;
  s.factors_ = std::move(factors);
  return s;
}

SuzukiPair SuzukiAutomorphism::apply(const SuzukiGroup& m, const SuzukiPair& p) const {
  const Field& f = *m.field();
  switch (kind_) {
    case Kind::A1:
      return m.pair(p.a, f.add(apply_linear(psi_, p.a), p.b));
    case Kind::A2:
      return m.pair(f.mul(x_, p.a), f.mul(f.mul(x_, m.theta(x_)), p.b));
    case Kind::A3:
      return m.pair(f.frobenius(p.a, t_), f.frobenius(p.b, t_));
    case Kind::Product: {
      SuzukiPair out = p;
      for (const auto& phi : factors_) out = phi.apply(m, out);
      return out;
    }
  }
  return p;
}

std::string SuzukiAutomorphism::serialize() const {
  switch (kind_) {
    case Kind::A1: {
      std::string out = "a1:";
      for (std::size_t r = 0; r < psi_.size(); ++r) {
        std::uint64_t row = 0;
        for (std::size_t c = 0; c < psi_.size(); ++c) row |= ((psi_[c] >> r) & 1) << c;
        if (r) out += ",";
        out += hex(row);
      }
      return out;
    }
    case Kind::A2:
      return "a2:" + hex(x_);
    case Kind::A3:
      return "a3:" + std::to_string(t_);
    case Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ";";
        out += factors_[i].serialize();
      }
      return out;
    }
  }
  return {};
}

namespace {

void check_homomorphism(const SuzukiGroup& m, const SuzukiAutomorphism& phi) {
  if (m.materialized()) {
    const auto& mg = m.group();
    const IdMap map = to_id_map(m, phi);
    if (!is_automorphism(mg.group, map)) {
      raise(Errc::NotAutomorphism, phi.serialize() + " is not an automorphism");
    }
    return;
  }
  const Field& f = *m.field();
  const auto g = f.primitive_element();
  std::vector<SuzukiPair> sample{m.pair(1, 0), m.pair(0, 1)};
  const unsigned k = std::min(m.n(), 6u);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) sample.push_back(m.pair(f.pow(g, i), f.pow(g, 3 * j + 1)));
  }
  for (const auto& x : sample) {
    for (const auto& y : sample) {
      if (!(phi.apply(m, x * y) == phi.apply(m, x) * phi.apply(m, y))) {
        raise(Errc::NotAutomorphism, phi.serialize() + " fails on " + x.to_string() + " * " +
                                         y.to_string());
      }
    }
  }
  // A homomorphism of M is bijective iff it is bijective modulo N and on N.
  if (phi.apply(m, m.pair(1, 0)).a == 0) {
    raise(Errc::NotAutomorphism, phi.serialize() + " is not bijective");
  }
}

}  // namespace

SuzukiAutomorphism make_a1(const SuzukiGroup& m, LinearMap psi) {
  if (psi.size() != m.n()) raise(Errc::InvalidArgument, "psi needs one image per basis vector");
  for (auto v : psi) {
    if (!m.field()->contains(v)) raise(Errc::InvalidArgument, "psi image outside the field");
  }
  auto phi = SuzukiAutomorphism::a1(std::move(psi));
  check_homomorphism(m, phi);
  return phi;
}

SuzukiAutomorphism make_a2(const SuzukiGroup& m, Field::Value x) {
  if (x == 0) raise(Errc::ZeroScalar, "phi_x needs x != 0");
  if (!m.field()->contains(x)) raise(Errc::InvalidArgument, "scalar outside the field");
  auto phi = SuzukiAutomorphism::a2(x);
  check_homomorphism(m, phi);
  return phi;
}

SuzukiAutomorphism make_a3(const SuzukiGroup& m, unsigned t) {
  if (t >= m.n()) raise(Errc::InvalidArgument, "t must lie in [0, n)");
  auto phi = SuzukiAutomorphism::a3(t);
  check_homomorphism(m, phi);
  return phi;
}

IdMap to_id_map(const SuzukiGroup& m, const SuzukiAutomorphism& phi) {
  const auto& mg = m.group();
  IdMap map(mg.order());
  for (Id x = 0; x < mg.order(); ++x) map[x] = mg.id_of(phi.apply(m, mg.element(x)));
  return map;
}

std::uint64_t automorphism_order(const SuzukiGroup& m, const SuzukiAutomorphism& phi) {
  const Field& f = *m.field();
  const auto g = f.primitive_element();
  std::vector<SuzukiPair> gens;
  for (unsigned i = 0; i < m.n(); ++i) gens.push_back(m.pair(f.pow(g, i), 0));
  auto cur = gens;
  // |Aut(M)| divides 2^(n^2) (2^n - 1) n, so the loop is bounded in practice.
  for (std::uint64_t k = 1; k <= (std::uint64_t{1} << 40); ++k) {
    for (auto& c : cur) c = phi.apply(m, c);
    if (cur == gens) return k;
  }
  raise(Errc::InvalidArgument, "automorphism order out of range");
}

RelationsReport conjugation_relations_check(const SuzukiGroup& m, std::size_t psi_samples) {
  const Field& f = *m.field();
  const unsigned n = m.n();
  const std::uint64_t q = m.field_size();
  RelationsReport report;
  report.exhaustive = n <= 3;

  std::vector<LinearMap> psis;
  if (report.exhaustive) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      LinearMap psi(n);
      for (unsigned i = 0; i < n; ++i) psi[i] = (code >> (i * n)) & (q - 1);
      psis.push_back(std::move(psi));
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t s = 0; s < psi_samples; ++s) {
      LinearMap psi(n);
      for (auto& v : psi) v = rng() & (q - 1);
      psis.push_back(std::move(psi));
    }
  }

  // The points every relation is compared on: all of M when small.
  std::vector<SuzukiPair> points;
  if (q <= 64) {
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) points.push_back(m.pair(a, b));
    }
  } else {
    std::mt19937_64 rng(0xfeed);
    for (int i = 0; i < 256; ++i) points.push_back(m.pair(rng() & (q - 1), rng() & (q - 1)));
  }

  auto fail = [](const std::string& what) { raise(Errc::RelationFailed, what); };

  // Conjugate f^g: apply g, then f, then g^-1.
  auto conj = [&](const SuzukiAutomorphism& fa, const SuzukiAutomorphism& g,
                  const SuzukiAutomorphism& ginv, const SuzukiPair& p) {
    return ginv.apply(m, fa.apply(m, g.apply(m, p)));
  };

  for (const auto& psi : psis) {
    const auto phi_psi = SuzukiAutomorphism::a1(psi);
    for (std::uint64_t x = 1; x < q; ++x) {
      const auto phi_x = SuzukiAutomorphism::a2(x);
      const auto phi_xinv = SuzukiAutomorphism::a2(f.inv(x));
      const auto yinv = f.inv(f.mul(x, m.theta(x)));
      for (unsigned t = 0; t < n; ++t) {
        const auto tau = SuzukiAutomorphism::a3(t);
        const auto tauinv = SuzukiAutomorphism::a3((n - t) % n);
        ++report.triples;
        const std::string where = " for " + phi_psi.serialize() + ", x=" + hex(x) + ", t=" +
                                  std::to_string(t);
        const auto expected_x = SuzukiAutomorphism::a2(f.frobenius(x, (n - t) % n));
        for (const auto& p : points) {
          const auto r1 = conj(phi_psi, phi_x, phi_xinv, p);
          const auto e1 = m.pair(p.a, f.add(f.mul(yinv, apply_linear(psi, f.mul(x, p.a))), p.b));
          if (!(r1 == e1)) fail("(phi_psi)^(phi_x) differs at " + p.to_string() + where);
          const auto r2 = conj(phi_psi, tau, tauinv, p);
          const auto e2 = m.pair(
              p.a, f.add(f.frobenius(apply_linear(psi, f.frobenius(p.a, t)), (n - t) % n), p.b));
          if (!(r2 == e2)) fail("(phi_psi)^(phi_tau) differs at " + p.to_string() + where);
          const auto r3 = conj(phi_x, tau, tauinv, p);
          if (!(r3 == expected_x.apply(m, p))) {
            fail("(phi_x)^(phi_tau) differs at " + p.to_string() + where);
          }
        }
        report.map_comparisons += 3;
      }
    }
  }

  // The two conjugates of phi_psi must themselves lie in A1: additive psi'.
  if (report.exhaustive) {
    const auto& psi = psis.back();
    for (std::uint64_t x = 1; x < q; ++x) {
      const auto yinv = f.inv(f.mul(x, m.theta(x)));
      auto psi1 = [&](std::uint64_t a) { return f.mul(yinv, apply_linear(psi, f.mul(x, a))); };
      for (std::uint64_t a = 0; a < q; ++a) {
        for (std::uint64_t b = 0; b < q; ++b) {
          if (psi1(f.add(a, b)) != f.add(psi1(a), psi1(b))) fail("conjugate of phi_psi is not in A1");
        }
      }
    }
  }
  return report;
}

namespace {

struct Sifted {
  bool ok = false;
  LinearMap psi;
  Field::Value x = 1;
  unsigned t = 0;
};

// Splits phi = phi_psi phi_x phi_tau using its action on N.
Sifted sift(const SuzukiGroup& m, const std::function<SuzukiPair(const SuzukiPair&)>& phi) {
  const Field& f = *m.field();
  const unsigned n = m.n();
  const std::uint64_t q = m.field_size();
  Sifted s;
  std::vector<Field::Value> hn(q);
  for (std::uint64_t b = 0; b < q; ++b) hn[b] = phi(m.pair(0, b)).b;
  bool found = false;
  for (std::uint64_t x = 1; x < q && !found; ++x) {
    const auto y = f.mul(x, m.theta(x));
    for (unsigned t = 0; t < n && !found; ++t) {
      bool match = true;
      for (std::uint64_t b = 0; b < q && match; ++b) match = hn[b] == f.frobenius(f.mul(y, b), t);
      if (match) {
        s.x = x;
        s.t = t;
        found = true;
      }
    }
  }
  if (!found) return s;
  const auto undo_tau = SuzukiAutomorphism::a3((n - s.t) % n);
  const auto undo_x = SuzukiAutomorphism::a2(f.inv(s.x));
  auto rest = [&](const SuzukiPair& p) { return undo_x.apply(m, undo_tau.apply(m, phi(p))); };
  s.psi.resize(n);
  for (unsigned i = 0; i < n; ++i) s.psi[i] = rest(m.pair(Field::Value{1} << i, 0)).b;
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      const auto r = rest(m.pair(a, b));
      if (r.a != a || r.b != f.add(apply_linear(s.psi, a), b)) return s;
    }
  }
  s.ok = true;
  return s;
}

std::set<IdMap> closure_of_maps(const std::vector<IdMap>& gens, std::size_t degree) {
  std::set<IdMap> seen;
  std::vector<IdMap> queue;
  IdMap id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Id>(i);
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      auto next = compose(queue[i], s);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

BruteForceAutReport brute_force_aut(const SuzukiGroup& m) {
  const auto& mg = m.group();
  if (mg.order() > 64) raise(Errc::CapExceeded, "brute force automorphisms need |M| <= 64");
  const FiniteGroup& g = mg.group;
  const Field& f = *m.field();
  const unsigned n = m.n();
  const std::uint64_t q = m.field_size();
  const Subgroup& nsub = m.n_subgroup();

  BruteForceAutReport report;
  report.expected = nt::checked_mul(nt::checked_pow(2, n * n), (q - 1) * n);

  std::vector<Id> outside;
  for (Id x = 0; x < g.order(); ++x) {
    if (!nsub.contains(x)) outside.push_back(x);
  }
  const std::size_t k = g.generators().size();
  std::vector<IdMap> auts;
  std::vector<Id> images(k);
  // Depth-first over generator images whose a-parts stay independent.
  std::function<void(std::size_t, std::vector<Field::Value>)> search =
      [&](std::size_t depth, std::vector<Field::Value> span) {
        if (depth == k) {
          ++report.candidates;
          auto map = extend_homomorphism(g, g, images);
          if (map && is_automorphism(g, *map)) auts.push_back(std::move(*map));
          return;
        }
        for (Id y : outside) {
          const auto a = mg.element(y).a;
          if (std::binary_search(span.begin(), span.end(), a)) continue;
          std::vector<Field::Value> next = span;
          for (auto v : span) next.push_back(v ^ a);
          std::sort(next.begin(), next.end());
          images[depth] = y;
          search(depth + 1, std::move(next));
        }
      };
  search(0, {0});
  report.order = auts.size();
  std::sort(auts.begin(), auts.end());

  const IdMap ident = identity_map(g);
  report.identity_found = std::binary_search(auts.begin(), auts.end(), ident);

  report.all_preserve_n = true;
  report.all_factor = true;
  report.decomposition_holds = true;
  std::size_t centralizing = 0;
  bool centralizing_in_a1 = true;
  std::vector<Sifted> factors;
  for (const auto& map : auts) {
    auto phi = [&](const SuzukiPair& p) { return mg.element(map[mg.id_of(p)]); };
    for (Id x : nsub.elements()) report.all_preserve_n &= nsub.contains(map[x]);

    // (a,b) -> (f(a), g(a) + h(b)) with h(a Theta a) = f(a) Theta f(a).
    bool dec = true;
    for (std::uint64_t a = 0; a < q && dec; ++a) {
      const auto fa = phi(m.pair(a, 0));
      const auto fa_b = fa.b;
      if (a == 0) dec &= fa.a == 0 && fa_b == 0;
      for (std::uint64_t b = 0; b < q && dec; ++b) {
        const auto hb = phi(m.pair(0, b));
        const auto full = phi(m.pair(a, b));
        dec &= hb.a == 0 && full.a == fa.a && full.b == f.add(fa_b, hb.b);
      }
      dec &= phi(m.pair(0, f.mul(a, m.theta(a)))).b == f.mul(fa.a, m.theta(fa.a));
    }
    report.decomposition_holds &= dec;

    auto s = sift(m, phi);
    if (s.ok) {
      const auto prod = SuzukiAutomorphism::product(
          {SuzukiAutomorphism::a1(s.psi), SuzukiAutomorphism::a2(s.x), SuzukiAutomorphism::a3(s.t)});
      for (Id x = 0; x < g.order() && s.ok; ++x) {
        s.ok = prod.apply(m, mg.element(x)) == mg.element(map[x]);
      }
    }
    report.all_factor &= s.ok;

    bool fixes_n = true;
    for (Id x : nsub.elements()) fixes_n &= map[x] == x;
    if (fixes_n) {
      ++centralizing;
      centralizing_in_a1 &= s.ok && s.x == 1 && s.t == 0;
    }
    factors.push_back(std::move(s));
  }
  report.centralizer_of_n_is_a1 = centralizing_in_a1 && centralizing == (std::uint64_t{1} << (n * n));

  // <A1, phi_sigma> for sigma generating the Sylow 2-subgroup of Gal(F).
  std::vector<IdMap> sylow_gens;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      LinearMap psi(n, 0);
      psi[i] = Field::Value{1} << j;
      sylow_gens.push_back(to_id_map(m, SuzukiAutomorphism::a1(psi)));
    }
  }
  const unsigned two_part = static_cast<unsigned>(nt::p_part(n, 2));
  sylow_gens.push_back(to_id_map(m, SuzukiAutomorphism::a3((n / two_part) % n)));
  report.sylow2_order = closure_of_maps(sylow_gens, g.order()).size();
  report.aut_two_part = nt::p_part(report.order, 2);

  // Greedy generating set; the closure must reproduce the whole list.
  std::vector<IdMap> gens;
  std::set<IdMap> generated{ident};
  for (std::size_t i = 0; i < auts.size(); ++i) {
    if (generated.count(auts[i])) continue;
    gens.push_back(auts[i]);
    report.generators.push_back(SuzukiAutomorphism::product(
        {SuzukiAutomorphism::a1(factors[i].psi), SuzukiAutomorphism::a2(factors[i].x),
         SuzukiAutomorphism::a3(factors[i].t)}));
    generated = closure_of_maps(gens, g.order());
  }
  if (generated.size() != auts.size()) report.all_factor = false;
  return report;
}

CentralizerA1Report centralizer_in_a1(const SuzukiGroup& m, Field::Value x) {
  if (x == 0) raise(Errc::ZeroScalar, "phi_x needs x != 0");
  const Field& f = *m.field();
  const unsigned n = m.n();
  const std::uint64_t q = m.field_size();
  CentralizerA1Report r;
  r.x = x;
  r.x_order = f.order(x);
  const auto y = f.mul(x, m.theta(x));

  // Unknown bit k of psi(e_j) is variable j*n + k. For each basis e_i:
  // psi(x e_i) + y psi(e_i) = 0, one equation per output bit.
  const std::size_t vars = std::size_t{n} * n;
  const std::size_t words = (vars + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<Field::Value> ly(n);
  for (unsigned mm = 0; mm < n; ++mm) ly[mm] = f.mul(y, Field::Value{1} << mm);
  for (unsigned i = 0; i < n; ++i) {
    const auto xe = f.mul(x, Field::Value{1} << i);
    for (unsigned k = 0; k < n; ++k) {
      std::vector<std::uint64_t> row(words, 0);
      auto flip = [&](std::size_t v) { row[v / 64] ^= std::uint64_t{1} << (v % 64); };
      for (unsigned j = 0; j < n; ++j) {
        if ((xe >> j) & 1) flip(std::size_t{j} * n + k);
      }
      for (unsigned mm = 0; mm < n; ++mm) {
        if ((ly[mm] >> k) & 1) flip(std::size_t{i} * n + mm);
      }
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vars && rank < rows.size(); ++col) {
    const auto bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][col / 64] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r2 = 0; r2 < rows.size(); ++r2) {
      if (r2 != rank && (rows[r2][col / 64] & bit)) {
        for (std::size_t w = 0; w < words; ++w) rows[r2][w] ^= rows[rank][w];
      }
    }
    ++rank;
  }
  r.linear_log2 = vars - rank;

  if (n <= 4) {
    const auto phi_x = SuzukiAutomorphism::a2(x);
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << vars); ++code) {
      LinearMap psi(n);
      for (unsigned i = 0; i < n; ++i) psi[i] = (code >> (i * n)) & (q - 1);
      const auto phi_psi = SuzukiAutomorphism::a1(psi);
      bool commute = true;
      for (std::uint64_t a = 0; a < q && commute; ++a) {
        for (std::uint64_t b = 0; b < q && commute; ++b) {
          const auto p = m.pair(a, b);
          commute = phi_psi.apply(m, phi_x.apply(m, p)) == phi_x.apply(m, phi_psi.apply(m, p));
        }
      }
      count += commute;
    }
    std::uint64_t lg = 0;
    while ((std::uint64_t{1} << lg) < count) ++lg;
    r.exhaustive_log2 = lg;
    r.routes_agree = (std::uint64_t{1} << lg) == count && lg == r.linear_log2;
  }

  for (unsigned j = 0; j < n; ++j) {
    if (y == f.frobenius(x, j)) {
      r.j = j;
      break;
    }
  }
  const std::uint64_t target = ((std::uint64_t{1} << m.h()) + 1) % r.x_order;
  for (unsigned j = 0; j < n; ++j) {
    if (nt::pow_mod(2, j, r.x_order) == target) r.congruence_solvable = true;
  }
  return r;
}

SquaringReport squaring_bijection_check(const SuzukiGroup& m) {
  const std::uint64_t q = m.field_size();
  if (q > (std::uint64_t{1} << 24)) raise(Errc::CapExceeded, "squaring check needs n <= 24");
  const Field& f = *m.field();
  SquaringReport r;
  r.cosets = q;
  r.well_defined = true;
  std::vector<bool> hit(q, false);
  const std::vector<Field::Value> probes{0, 1, f.primitive_element(), q - 1};
  for (std::uint64_t a = 0; a < q; ++a) {
    const auto sq = m.square(m.pair(a, 0));
    r.well_defined &= sq.a == 0;
    if (q <= 1024) {
      for (std::uint64_t b = 1; b < q; ++b) r.well_defined &= m.square(m.pair(a, b)) == sq;
    } else {
      for (auto b : probes) r.well_defined &= m.square(m.pair(a, b)) == sq;
    }
    if (!hit[sq.b]) {
      hit[sq.b] = true;
      ++r.distinct_images;
    }
  }
  return r;
}

}  // namespace gagola
