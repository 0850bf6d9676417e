#include "gagola/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "gagola/group_algorithms.hpp"
#include "gagola/number_theory.hpp"
#include "gagola/permutation.hpp"

namespace gagola {

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::uppercase << std::hex << v;
  return os.str();
}

Permutation field_map(const Field& f, auto&& fn) {
  std::vector<std::uint32_t> images(f.cardinality());
  for (Field::Value v = 0; v < f.cardinality(); ++v) images[v] = static_cast<std::uint32_t>(fn(v));
  return Permutation(std::move(images));
}

std::string perm_string(const Permutation& p) { return p.to_string(); }

// Translations among permutations of GF(q): v -> v + image(0).
bool is_translation(const Field& f, const Permutation& p) {
  const auto t = p[0];
  for (Field::Value v = 0; v < f.cardinality(); ++v) {
    if (p[static_cast<std::uint32_t>(v)] != f.add(v, t)) return false;
  }
  return true;
}

}  // namespace

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  const Field& f = *field;
  return {field, f.add(f.mul(a, o.a), f.mul(b, o.c)), f.add(f.mul(a, o.b), f.mul(b, o.d)),
          f.add(f.mul(c, o.a), f.mul(d, o.c)), f.add(f.mul(c, o.b), f.mul(d, o.d))};
}

Field::Value Matrix2::det() const { return field->sub(field->mul(a, d), field->mul(b, c)); }

std::string Matrix2::to_string() const {
  return "[[" + hex(a) + "," + hex(b) + "],[" + hex(c) + "," + hex(d) + "]]";
}

HeisElement HeisElement::operator*(const HeisElement& o) const {
  const Field& f = *field;
  // (h; x)(h'; x') = (h * sigma_x(h'); x x'), sigma_x(a,b,c) = (xa, b, xc).
  const Field::Value a2 = f.mul(x, o.a);
  const Field::Value c2 = f.mul(x, o.c);
  return {field, f.add(a, a2), f.add(b, o.b), f.add(f.add(c, c2), f.mul(a, o.b)), f.mul(x, o.x)};
}

std::string HeisElement::to_string() const {
  return "(" + hex(a) + "," + hex(b) + "," + hex(c) + ";" + hex(x) + ")";
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) raise(Errc::InvalidArgument, "q must be a prime power, got " + std::to_string(q));
  const auto f = nt::factorize(q);
  if (f.size() != 1) raise(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  return {f[0].first, f[0].second};
}

BuiltGroup semilinear_group(std::uint64_t p, unsigned n, std::size_t cap) {
  auto field = create_field(p, n);
  const Field& f = *field;
  if (f.cardinality() > 4096) raise(Errc::CapExceeded, "Gamma(V) needs p^n <= 2^12");
  const auto w = f.primitive_element();
  std::vector<Permutation> gens{field_map(f, [&](auto v) { return f.mul(w, v); }),
                                field_map(f, [&](auto v) { return f.frobenius(v, 1); })};
  const auto q = static_cast<std::uint32_t>(f.cardinality());
  auto m = generate_group(gens, Permutation::identity(q), cap);
  Subgroup gamma0 = select_subgroup(m, [&](const Permutation& g) {
    const auto lambda = g[1];
    for (Field::Value v = 0; v < q; ++v) {
      if (g[static_cast<std::uint32_t>(v)] != f.mul(lambda, v)) return false;
    }
    return true;
  });
  Subgroup galois = select_subgroup(m, [&](const Permutation& g) {
    for (unsigned k = 0; k < n; ++k) {
      bool ok = true;
      for (Field::Value v = 0; v < q && ok; ++v) ok = g[static_cast<std::uint32_t>(v)] == f.frobenius(v, k);
      if (ok) return true;
    }
    return false;
  });
  auto b = make_built_group("gamma:p=" + std::to_string(p) + ";n=" + std::to_string(n), std::move(m),
                            perm_string);
  b.marked = {{"gamma0", std::move(gamma0)}, {"galois", std::move(galois)}};
  b.keepalive = field;
  return b;
}

bool SingerReport::holds() const {
  if (!determined) return false;
  for (const auto& s : subgroups) {
    if (!s.holds()) return false;
  }
  return true;
}

SingerReport singer_transitive_subgroups(unsigned n, std::size_t lattice_cap) {
  SingerReport r;
  r.n = n;
  if (n == 0 || n > 62) raise(Errc::InvalidArgument, "n out of range");
  const std::uint64_t target = (std::uint64_t{1} << n) - 1;
  const auto pp = nt::prime_power_divisors(n);
  if (n > 12 || target * n > lattice_cap) {
    // |H Gamma_o : Gamma_o| divides both |H| = 2^n - 1 and n, so coprime
    // values force H = Gamma_o, which is cyclic of order 2^n - 1.
    r.partial = true;
    if (nt::gcd(target, n) == 1) {
      r.detail = "gcd(2^n - 1, n) = 1 forces H = Gamma_o (cyclic); orders 2^d - 1 divide 2^n - 1";
      SingerSubgroup s;
      s.transitive = true;
      for (auto d : pp) {
        const std::uint64_t o = (std::uint64_t{1} << d) - 1;
        s.orders.emplace_back(static_cast<unsigned>(d), o, target % o == 0);
      }
      r.subgroups.push_back(std::move(s));
    } else {
      r.determined = false;
      r.detail = "beyond the cap and gcd(2^n - 1, n) > 1; not settled arithmetically";
    }
    return r;
  }
  const BuiltGroup gamma = semilinear_group(2, n);
  const FiniteGroup& g = gamma.group;
  const Subgroup& gamma0 = gamma.marked_subgroup("gamma0");
  const auto& perms = gamma.elements_as<Permutation>();
  std::vector<Subgroup> reps;
  std::set<std::vector<Id>> seen;
  for (const auto& h : all_subgroups(g)) {
    if (h.order() != target) continue;
    if (seen.count(h.elements())) continue;
    for (Id x = 0; x < g.order(); ++x) {
      auto c = conjugate(g, h, x);
      seen.insert(c.elements());
    }
    reps.push_back(h);
  }
  for (const auto& h : reps) {
    SingerSubgroup s;
    s.h = h;
    std::vector<char> hit(target + 1, 0);
    for (Id x : h.elements()) hit[perms[x][1]] = 1;
    s.transitive = std::count(hit.begin() + 1, hit.end(), 1) == static_cast<long>(target);
    const Subgroup meet = intersection(h, gamma0);
    for (auto d : pp) {
      const std::uint64_t o = (std::uint64_t{1} << d) - 1;
      bool found = false;
      for (Id x : meet.elements()) found = found || g.element_order(x) == o;
      s.orders.emplace_back(static_cast<unsigned>(d), o, found);
    }
    if (s.transitive) r.subgroups.push_back(std::move(s));
  }
  r.detail = std::to_string(r.subgroups.size()) + " transitive class(es) of order " +
             std::to_string(target);
  return r;
}

BuiltGroup agl1(std::uint64_t q, std::size_t cap) {
  const auto [p, k] = prime_power(q);
  if (q > 4096) raise(Errc::CapExceeded, "AGL(1,q) needs q <= 2^12");
  if (q * (q - 1) > cap) raise(Errc::CapExceeded, "closure exceeds cap " + std::to_string(cap));
  auto field = create_field(p, k);
  const Field& f = *field;
  const auto w = f.primitive_element();
  std::vector<Permutation> gens{field_map(f, [&](auto v) { return f.add(v, 1); }),
                                field_map(f, [&](auto v) { return f.mul(w, v); })};
  auto m = generate_group(gens, Permutation::identity(static_cast<std::uint32_t>(q)), cap);
  Subgroup n = select_subgroup(m, [&](const Permutation& g) { return is_translation(f, g); });
  auto b = make_built_group("agl1:q=" + std::to_string(q), std::move(m), perm_string);
  b.designated_n = std::move(n);
  b.keepalive = field;
  return b;
}

BuiltGroup heisenberg_gagola(std::uint64_t q, std::size_t cap) {
  const auto [p, k] = prime_power(q);
  const std::uint64_t order = nt::checked_mul(nt::checked_mul(q, q), nt::checked_mul(q, q - 1));
  if (order > cap) {
    raise(Errc::CapExceeded, "q^3(q-1) = " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
  auto field = create_field(p, k);
  const Field* f = field.get();
  std::vector<HeisElement> gens{{f, 0, 0, 0, f->primitive_element()}, {f, 1, 0, 0, 1}};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::uint64_t> e(k, 0);
    e[i] = 1;
    gens.push_back({f, 0, f->from_coefficients(e), 0, 1});
  }
  auto m = generate_group(gens, HeisElement{f, 0, 0, 0, 1}, cap);
  Subgroup n = select_subgroup(m, [](const HeisElement& e) { return e.a == 0 && e.b == 0 && e.x == 1; });
  auto b = make_built_group("heis:q=" + std::to_string(q), std::move(m),
                            [](const HeisElement& e) { return e.to_string(); });
  b.designated_n = std::move(n);
  b.keepalive = field;
  return b;
}

unsigned __int128 sl2_order(unsigned n) {
  if (n == 0 || n > 30) raise(Errc::InvalidArgument, "sl2 order needs 1 <= n <= 30");
  const unsigned __int128 q = static_cast<unsigned __int128>(1) << n;
  return (q - 1) * q * (q + 1);
}

std::string to_string_u128(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

BuiltGroup sl2(std::uint64_t q, std::size_t cap) {
  const auto [p, n] = prime_power(q);
  if (p != 2) raise(Errc::InvalidArgument, "sl2 is built for q = 2^n");
  if (n > 30) raise(Errc::InvalidArgument, "sl2 needs n <= 30");
  if (sl2_order(n) > cap) {
    raise(Errc::CapExceeded, "|SL_2(" + std::to_string(q) + ")| = " + to_string_u128(sl2_order(n)) +
                                 " exceeds cap " + std::to_string(cap));
  }
  auto field = create_field(2, n);
  const Field* f = field.get();
  const auto w = f->primitive_element();
  std::vector<Matrix2> gens{{f, 1, 1, 0, 1}, {f, w, 0, 0, f->inv(w)}, {f, 0, 1, 1, 0}};
  auto m = generate_group(gens, Matrix2{f, 1, 0, 0, 1}, cap);
  auto b = make_built_group("sl2:q=" + std::to_string(q), std::move(m),
                            [](const Matrix2& x) { return x.to_string(); });
  b.keepalive = field;
  return b;
}

Sl2ThreePart sl2_three_part_check(unsigned n) {
  Sl2ThreePart r;
  r.n = n;
  r.a = nt::valuation(n, 3);
  unsigned __int128 order = sl2_order(n);
  std::uint64_t part = 1;
  while (order % 3 == 0) {
    order /= 3;
    part *= 3;
  }
  r.three_part = part;
  r.expected = nt::checked_pow(3, r.a + 1);
  return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  FieldMatrix r{field, dim, std::vector<Field::Value>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      const auto x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        r.entries[i * dim + j] = field->add(r.entries[i * dim + j], field->mul(x, o.at(k, j)));
      }
    }
  }
  return r;
}

FieldMatrix identity_matrix(const Field* f, std::size_t dim) {
  FieldMatrix m{f, dim, std::vector<Field::Value>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) m.entries[i * dim + i] = 1;
  return m;
}

FieldMatrix kronecker(const FieldMatrix& x, const FieldMatrix& y) {
  const std::size_t n = x.dim * y.dim;
  FieldMatrix r{x.field, n, std::vector<Field::Value>(n * n, 0)};
  for (std::size_t i = 0; i < x.dim; ++i) {
    for (std::size_t j = 0; j < x.dim; ++j) {
      for (std::size_t k = 0; k < y.dim; ++k) {
        for (std::size_t l = 0; l < y.dim; ++l) {
          r.entries[(i * y.dim + k) * n + j * y.dim + l] = x.field->mul(x.at(i, j), y.at(k, l));
        }
      }
    }
  }
  return r;
}

FieldMatrix frobenius_twist(const FieldMatrix& m, unsigned k) {
  FieldMatrix r = m;
  for (auto& v : r.entries) v = m.field->frobenius(v, k);
  return r;
}

std::size_t rank(const Field& f, std::vector<std::vector<Field::Value>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const auto inv = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, inv);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const auto t = rows[i][c];
      if (t == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
    }
    ++r;
  }
  return r;
}

ModuleRep natural_module(const BuiltGroup& group) {
  const auto& mats = group.elements_as<Matrix2>();
  if (mats.empty()) raise(Errc::InvalidArgument, "empty group");
  const Field* f = mats[0].field;
  ModuleRep v;
  v.field = std::static_pointer_cast<const Field>(group.keepalive);
  v.dimension = 2;
  v.act = [&mats, f](Id id) {
    const auto& m = mats[id];
    return FieldMatrix{f, 2, {m.a, m.b, m.c, m.d}};
  };
  return v;
}

ModuleRep twisted_tensor_module(const BuiltGroup& group) {
  const auto& mats = group.elements_as<Matrix2>();
  const Field* f = mats.at(0).field;
  const unsigned n = f->degree();
  if (n != 3) {
    raise(Errc::UnsupportedN, "twisted tensor module is materialized for n = 3 only, got n = " +
                                  std::to_string(n));
  }
  const unsigned m = n / 3;
  ModuleRep v;
  v.field = std::static_pointer_cast<const Field>(group.keepalive);
  v.dimension = 8;
  v.act = [&mats, f, m](Id id) {
    const auto& x = mats[id];
    const FieldMatrix w{f, 2, {x.a, x.b, x.c, x.d}};
    return kronecker(kronecker(w, frobenius_twist(w, m)), frobenius_twist(w, 2 * m));
  };
  return v;
}

std::size_t fixed_space(const FiniteGroup& g, const Subgroup& p, const ModuleRep& v) {
  std::vector<std::vector<Field::Value>> rows;
  const Field& f = *v.field;
  for (Id x : generating_set(g, p)) {
    const FieldMatrix m = v.act(x);
    for (std::size_t i = 0; i < v.dimension; ++i) {
      std::vector<Field::Value> row(v.dimension);
      for (std::size_t j = 0; j < v.dimension; ++j) {
        row[j] = i == j ? f.sub(m.at(i, j), 1) : m.at(i, j);
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return v.dimension;
  return v.dimension - rank(f, std::move(rows));
}

BuiltGroup affine_frobenius_group(std::uint64_t p, unsigned k,
                                  const std::vector<std::vector<std::uint64_t>>& linear_gens) {
  if (!nt::is_prime(p)) raise(Errc::NonPrimeCharacteristic, std::to_string(p));
  const auto q = static_cast<std::uint32_t>(nt::checked_pow(p, k));
  auto coords = [&](std::uint32_t v) {
    std::vector<std::uint64_t> c(k);
    for (unsigned i = 0; i < k; ++i, v /= static_cast<std::uint32_t>(p)) c[i] = v % p;
    return c;
  };
  auto index = [&](const std::vector<std::uint64_t>& c) {
    std::uint32_t v = 0;
    for (unsigned i = k; i-- > 0;) v = v * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(c[i]);
    return v;
  };
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < k; ++i) {
    std::vector<std::uint32_t> images(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      auto c = coords(v);
      c[i] = (c[i] + 1) % p;
      images[v] = index(c);
    }
    gens.emplace_back(std::move(images));
  }
  for (const auto& a : linear_gens) {
    if (a.size() != std::size_t{k} * k) raise(Errc::InvalidArgument, "linear part must be k x k");
    std::vector<std::uint32_t> images(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      const auto c = coords(v);
      std::vector<std::uint64_t> out(k, 0);
      for (unsigned r = 0; r < k; ++r) {
        for (unsigned s = 0; s < k; ++s) out[r] = (out[r] + a[r * k + s] * c[s]) % p;
      }
      images[v] = index(out);
    }
    gens.emplace_back(std::move(images));
  }
  auto m = generate_group(gens, Permutation::identity(q));
  Subgroup kernel = select_subgroup(m, [&](const Permutation& g) {
    const auto t = coords(g[0]);
    for (std::uint32_t v = 0; v < q; ++v) {
      auto c = coords(v);
      for (unsigned i = 0; i < k; ++i) c[i] = (c[i] + t[i]) % p;
      if (g[v] != index(c)) return false;
    }
    return true;
  });
  Subgroup complement = select_subgroup(m, [](const Permutation& g) { return g[0] == 0; });
  std::ostringstream spec;
  spec << "affine:p=" << p << ";k=" << k;
  auto b = make_built_group(spec.str(), std::move(m), perm_string);
  b.marked = {{"kernel", std::move(kernel)}, {"complement", std::move(complement)}};
  return b;
}

BuiltGroup frobenius_example(const std::string& name) {
  if (name == "c7:c6") return affine_frobenius_group(7, 1, {{3}});
  if (name == "c3^2:q8") {
    // [[0,-1],[1,0]] and [[1,1],[1,-1]] generate Q8 in GL_2(3).
    return affine_frobenius_group(3, 2, {{0, 2, 1, 0}, {1, 1, 1, 2}});
  }
  if (name == "c5^2:sl2(3)") {
    // SL_2(3) inside SL_2(5): the least pair (order 4, order 6), in element
    // order, generating a subgroup of order 24.
    auto field = create_field(5, 1);
    const Field* f = field.get();
    std::vector<Matrix2> gens{{f, 1, 1, 0, 1}, {f, 1, 0, 1, 1}};
    auto m = generate_group(gens, Matrix2{f, 1, 0, 0, 1});
    const FiniteGroup& g = m.group;
    for (Id a = 0; a < g.order(); ++a) {
      if (g.element_order(a) != 4) continue;
      for (Id b = 0; b < g.order(); ++b) {
        if (g.element_order(b) != 6) continue;
        const Id pair[] = {a, b};
        if (closure(g, pair).order() != 24) continue;
        auto lin = [&](Id id) {
          const auto& x = m.element(id);
          return std::vector<std::uint64_t>{x.a, x.b, x.c, x.d};
        };
        auto out = affine_frobenius_group(5, 2, {lin(a), lin(b)});
        out.spec = "frob:c5^2:sl2(3)";
        return out;
      }
    }
    raise(Errc::InvalidArgument, "no SL_2(3) found in SL_2(5)");
  }
  raise(Errc::InvalidArgument, "unknown Frobenius example " + name);
}

bool ComplementReport::holds() const {
  for (const auto& p : primes) {
    if (!p.holds) return false;
  }
  return true;
}

ComplementReport frobenius_complement_checks(const BuiltGroup& fg) {
  const FiniteGroup& g = fg.group;
  const Subgroup& kernel = fg.marked_subgroup("kernel");
  const Subgroup& comp = fg.marked_subgroup("complement");
  for (Id h : comp.elements()) {
    if (h == 0) continue;
    for (Id k : kernel.elements()) {
      if (k != 0 && g.conj(k, h) == k) {
        raise(Errc::NotFrobeniusComplement, "complement element " + fg.describe(h) + " fixes " +
                                                fg.describe(k));
      }
    }
  }
  const InducedGroup ih = induced_group(g, comp);
  const FiniteGroup& h = ih.group;
  ComplementReport r;
  r.complement_order = h.order();
  r.z_group = true;
  std::optional<bool> sylow2_q8;
  if (h.order() % 2 == 0) {
    const Subgroup s2 = sylow_subgroup(h, 2);
    std::size_t involutions = 0;
    for (Id x : s2.elements()) involutions += h.element_order(x) == 2;
    sylow2_q8 = s2.order() == 8 && !is_abelian(h, s2) && involutions == 1;
  }
  for (auto p : (h.order() > 1 ? nt::prime_divisors(h.order()) : std::vector<std::uint64_t>{})) {
    ComplementPrime cp;
    cp.p = p;
    std::set<std::vector<Id>> subs;
    for (Id x = 0; x < h.order(); ++x) {
      if (h.element_order(x) != p) continue;
      const Id gen[] = {x};
      subs.insert(closure(h, gen).elements());
    }
    cp.order_p_subgroups = subs.size();
    const Subgroup syl = sylow_subgroup(h, p);
    for (Id x : syl.elements()) cp.sylow_cyclic = cp.sylow_cyclic || h.element_order(x) == syl.order();
    r.z_group = r.z_group && cp.sylow_cyclic;
    cp.all_normal = true;
    for (const auto& s : subs) cp.all_normal = cp.all_normal && is_normal(h, Subgroup(h.order(), s));
    cp.exception = p == 3 && h.order() % 9 != 0 && sylow2_q8.value_or(false);
    cp.holds = cp.all_normal || cp.exception;
    r.primes.push_back(cp);
  }
  if (r.z_group) {
    for (auto& cp : r.primes) cp.holds = cp.holds && cp.order_p_subgroups == 1;
  }
  return r;
}

}  // namespace gagola
