#include "gagola/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gagola/group_algorithms.hpp"
#include "gagola/number_theory.hpp"

namespace gagola {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

struct ModP {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 inv(u64 a) const { return nt::pow_mod(a, p - 2, p); }
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Mat& rows, const ModP& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const u64 s = f.inv(rows[r][c]);
    for (auto& v : rows[r]) v = f.mul(v, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const u64 t = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Basis of {x : A x = 0} for square A.
Mat nullspace(Mat a, const ModP& f) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  const auto pivots = rref(a, f);
  std::vector<char> is_pivot(n, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (low to high) via reduction to Hessenberg form.
Vec charpoly(Mat h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h[i][j] == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (auto& row : h) std::swap(row[i], row[j + 1]);
    }
    const u64 inv = f.inv(h[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      const u64 u = f.mul(h[k][j], inv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[k][c] = f.sub(h[k][c], f.mul(u, h[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = f.add(h[r][j + 1], f.mul(u, h[r][k]));
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    for (std::size_t d = 0; d < m; ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[m - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(h[m - 1][m - 1], p[m - 1][d]));
    }
    u64 t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const u64 coef = f.mul(t, h[i - 1][m - 1]);
      if (coef != 0) {
        for (std::size_t d = 0; d < p[i - 1].size(); ++d) {
          cur[d] = f.sub(cur[d], f.mul(coef, p[i - 1][d]));
        }
      }
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<u64> roots(const Vec& poly, const ModP& f) {
  std::vector<u64> out;
  for (u64 x = 0; x < f.p; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    if (acc == 0) out.push_back(x);
  }
  return out;
}

u64 primitive_root(u64 p) {
  const auto primes = nt::prime_divisors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : primes) {
      if (nt::pow_mod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;  // p = 2
}

}  // namespace

ClassConstants::ClassConstants(const FiniteGroup& g, const ClassTable& ct)
    : k_(ct.size()), a_(k_ * k_ * k_, 0) {
  for (std::size_t l = 0; l < k_; ++l) {
    const Id z = ct.reps[l];
    for (Id x = 0; x < g.order(); ++x) {
      const Id y = g.mul(g.inv(x), z);
      ++a_[(ct.class_of[x] * k_ + ct.class_of[y]) * k_ + l];
    }
  }
}

std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent) {
  const auto root = static_cast<u64>(std::sqrt(static_cast<long double>(order)));
  u64 s = root;
  while (s * s > order) --s;
  while ((s + 1) * (s + 1) <= order) ++s;
  const u64 bound = 2 * s;
  for (u64 p = exponent + 1; p < (u64{1} << 31); p += exponent) {
    if (p > bound && nt::is_prime(p)) return p;
  }
  raise(Errc::PrimeSearchExceeded, "no Dixon prime below 2^31");
}

bool CharacterTable::vanishes(std::size_t chi, std::size_t cls) const {
  if (values_mod_p[chi][cls] != 0) return false;
  return values[chi][cls].is_zero();
}

CharacterTable character_table(const FiniteGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    raise(Errc::CapExceeded, "character table cap " + std::to_string(cap) + " < |G| = " +
                                 std::to_string(g.order()));
  }
  if (g.exponent() > kCharacterTableExponentCap) {
    raise(Errc::CapExceeded, "exponent " + std::to_string(g.exponent()) + " above 200");
  }
  CharacterTable t;
  t.classes = conjugacy_classes(g);
  t.group_order = g.order();
  t.exponent = g.exponent();
  t.prime = dixon_prime(t.group_order, t.exponent);
  const ModP f{t.prime};
  t.root = nt::pow_mod(primitive_root(t.prime), (t.prime - 1) / t.exponent, t.prime);

  const ClassTable& ct = t.classes;
  const std::size_t k = ct.size();
  const ClassConstants a(g, ct);

  // Common eigenspaces, each stored as RREF rows with its pivot columns.
  struct Space {
    Mat basis;
    std::vector<std::size_t> pivots;
  };
  std::vector<Space> spaces;
  {
    Mat id(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    std::vector<std::size_t> piv(k);
    std::iota(piv.begin(), piv.end(), 0);
    spaces.push_back({std::move(id), std::move(piv)});
  }
  for (std::size_t j = 1; j < k; ++j) {
    std::vector<Space> next;
    for (auto& sp : spaces) {
      const std::size_t r = sp.basis.size();
      if (r == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Restriction of M_j, (M_j w)_l = sum_m a(j, l, m) w_m, to the space.
      Mat image(r, Vec(k, 0));
      for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t l = 0; l < k; ++l) {
          u64 acc = 0;
          for (std::size_t m = 0; m < k; ++m) {
            if (sp.basis[s][m] != 0) acc = f.add(acc, f.mul(a(j, l, m) % t.prime, sp.basis[s][m]));
          }
          image[s][l] = acc;
        }
      }
      Mat rmat(r, Vec(r, 0));  // rmat[row t][col s]
      for (std::size_t s = 0; s < r; ++s) {
        for (std::size_t tt = 0; tt < r; ++tt) rmat[tt][s] = image[s][sp.pivots[tt]];
      }
      const auto eig = roots(charpoly(rmat, f), f);
      if (eig.size() <= 1) {
        next.push_back(std::move(sp));
        continue;
      }
      for (u64 lambda : eig) {
        Mat shifted = rmat;
        for (std::size_t i = 0; i < r; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
        Mat coeffs = nullspace(std::move(shifted), f);
        Mat vecs;
        for (const auto& c : coeffs) {
          Vec v(k, 0);
          for (std::size_t s = 0; s < r; ++s) {
            if (c[s] == 0) continue;
            for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(c[s], sp.basis[s][l]));
          }
          vecs.push_back(std::move(v));
        }
        auto piv = rref(vecs, f);
        next.push_back({std::move(vecs), std::move(piv)});
      }
    }
    spaces = std::move(next);
    if (spaces.size() == k) break;
  }
  if (spaces.size() != k) raise(Errc::LiftInconsistent, "eigenspaces did not split");

  std::vector<u64> size_inv(k);
  for (std::size_t l = 0; l < k; ++l) size_inv[l] = f.inv(ct.sizes[l] % t.prime);
  std::vector<std::uint32_t> inverse_class(k);
  for (std::size_t l = 0; l < k; ++l) inverse_class[l] = ct.inverse_class(g, static_cast<std::uint32_t>(l));

  const auto e = static_cast<unsigned>(t.exponent);
  struct Row {
    u64 degree;
    std::vector<CyclotomicInteger> values;
    Vec mod_p;
    std::vector<std::vector<std::int64_t>> key;
    bool principal;
  };
  std::vector<Row> rows;
  for (const auto& sp : spaces) {
    Vec w = sp.basis[0];
    if (w[0] == 0) raise(Errc::LiftInconsistent, "eigenvector vanishes at the identity");
    const u64 s0 = f.inv(w[0]);
    for (auto& v : w) v = f.mul(v, s0);
    u64 sum = 0;
    for (std::size_t l = 0; l < k; ++l) {
      sum = f.add(sum, f.mul(f.mul(w[l], w[inverse_class[l]]), size_inv[l]));
    }
    const u64 d2 = f.mul(t.group_order % t.prime, f.inv(sum));
    u64 d = 0;
    for (u64 c = 1; c * c <= t.group_order; ++c) {
      if (c * c % t.prime == d2) {
        d = c;
        break;
      }
    }
    if (d == 0 || t.group_order % d != 0) raise(Errc::LiftInconsistent, "degree did not lift");
    Vec chi(k);
    for (std::size_t l = 0; l < k; ++l) chi[l] = f.mul(f.mul(w[l], d % t.prime), size_inv[l]);

    Row row{d, {}, chi, {}, true};
    for (std::size_t l = 0; l < k; ++l) {
      const Id x = ct.reps[l];
      const u64 o = g.element_order(x);
      const u64 zo = nt::pow_mod(t.root, t.exponent / o, t.prime);
      const u64 zo_inv = f.inv(zo);
      const u64 o_inv = f.inv(o % t.prime);
      std::vector<u64> power_vals(o);
      Id xi = 0;
      for (u64 i = 0; i < o; ++i) {
        power_vals[i] = chi[ct.class_of[xi]];
        xi = g.mul(xi, x);
      }
      std::vector<std::int64_t> coeffs(e, 0);
      u64 total = 0;
      for (u64 m = 0; m < o; ++m) {
        u64 acc = 0;
        const u64 step = nt::pow_mod(zo_inv, m, t.prime);
        u64 zz = 1;
        for (u64 i = 0; i < o; ++i) {
          acc = f.add(acc, f.mul(power_vals[i], zz));
          zz = f.mul(zz, step);
        }
        const u64 mult = f.mul(acc, o_inv);
        if (mult > d) raise(Errc::LiftInconsistent, "eigenvalue multiplicity above degree");
        coeffs[m * (t.exponent / o)] = static_cast<std::int64_t>(mult);
        total += mult;
      }
      if (total != d) raise(Errc::LiftInconsistent, "multiplicities do not sum to the degree");
      CyclotomicInteger v(e, std::move(coeffs));
      if (v.mod_p(t.prime, t.root) != chi[l]) {
        raise(Errc::LiftInconsistent, "lifted value disagrees mod p");
      }
      if (v.as_integer() != std::optional<std::int64_t>(1)) row.principal = false;
      row.key.push_back(v.reduced());
      row.values.push_back(std::move(v));
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    if (x.principal != y.principal) return x.principal;
    return x.key < y.key;
  });
  u64 sumsq = 0;
  for (auto& r : rows) {
    sumsq += r.degree * r.degree;
    t.degrees.push_back(r.degree);
    t.values.push_back(std::move(r.values));
    t.values_mod_p.push_back(std::move(r.mod_p));
  }
  if (sumsq != t.group_order) raise(Errc::LiftInconsistent, "sum of squared degrees is not |G|");
  return t;
}

bool rows_orthogonal(const CharacterTable& t) {
  const auto e = static_cast<unsigned>(t.exponent);
  const std::size_t k = t.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      CyclotomicInteger acc(e);
      for (std::size_t c = 0; c < k; ++c) {
        acc = acc + t.values[i][c] * t.values[j][c].conj() *
                        static_cast<std::int64_t>(t.classes.sizes[c]);
      }
      const std::int64_t want = i == j ? static_cast<std::int64_t>(t.group_order) : 0;
      if (!(acc == CyclotomicInteger::integer(e, want))) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& t) {
  const auto e = static_cast<unsigned>(t.exponent);
  const std::size_t k = t.size();
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t c2 = c; c2 < k; ++c2) {
      CyclotomicInteger acc(e);
      for (std::size_t i = 0; i < k; ++i) acc = acc + t.values[i][c] * t.values[i][c2].conj();
      const std::int64_t want =
          c == c2 ? static_cast<std::int64_t>(t.group_order / t.classes.sizes[c]) : 0;
      if (!(acc == CyclotomicInteger::integer(e, want))) return false;
    }
  }
  return true;
}

std::optional<GagolaCharacter> find_gagola_character(const FiniteGroup& g,
                                                     const CharacterTable& t) {
  std::optional<GagolaCharacter> found;
  const std::size_t k = t.classes.size();
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    std::vector<std::uint32_t> support;
    for (std::size_t c = 0; c < k; ++c) {
      if (!t.vanishes(chi, c)) support.push_back(static_cast<std::uint32_t>(c));
    }
    if (support.size() != 2 || support.size() == k) continue;
    std::vector<Id> members;
    for (auto c : support) {
      members.insert(members.end(), t.classes.members[c].begin(), t.classes.members[c].end());
    }
    Subgroup n(g.order(), std::move(members));
    if (!is_subgroup(g, n.elements()) || !is_normal(g, n)) {
      raise(Errc::LiftInconsistent, "support of a two-class character is not a normal subgroup");
    }
    if (found) {
      raise(Errc::MultipleGagolaCharacters,
            "characters " + std::to_string(found->index) + " and " + std::to_string(chi));
    }
    found = GagolaCharacter{chi, std::move(n), {support[0], support[1]}};
  }
  return found;
}

std::vector<DegreeE> degree_d_and_e(const CharacterTable& t) {
  std::vector<DegreeE> out;
  for (auto d : t.degrees) {
    if (d == 1 || (!out.empty() && out.back().d == d)) continue;
    const std::uint64_t e = t.group_order / d - d;
    if (t.group_order % d != 0 || t.group_order / d <= d) {
      raise(Errc::LiftInconsistent, "degree squared is not below |G|");
    }
    out.push_back({d, e});
  }
  if (out.empty()) raise(Errc::AbelianGroup, "all irreducible characters are linear");
  return out;
}

}  // namespace gagola
