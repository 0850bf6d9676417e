#pragma once

// The auxiliary families: semilinear groups, AGL(1,q), the Heisenberg-type
// groups of order q^3(q-1), SL_2(2^n) with the twisted tensor module, and
// small Frobenius groups for the complement checks.

#include <cstdint>
#include <functional>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

#include "gagola/built_group.hpp"
#include "gagola/finite_field.hpp"

namespace gagola {

/// 2x2 matrix over a field; entries are packed field values.
struct Matrix2 {
  const Field* field = nullptr;
  Field::Value a = 0, b = 0, c = 0, d = 0;  // [[a, b], [c, d]]

  Matrix2 operator*(const Matrix2& o) const;
  Field::Value det() const;
  bool operator==(const Matrix2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
  }
  bool operator<(const Matrix2& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
  std::string to_string() const;
};

/// Element (h; x) of the Heisenberg group extended by GF(q)^*, with
/// h = (a, b, c) and (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
struct HeisElement {
  const Field* field = nullptr;
  Field::Value a = 0, b = 0, c = 0, x = 1;

  HeisElement operator*(const HeisElement& o) const;
  bool operator==(const HeisElement& o) const {
    return a == o.a && b == o.b && c == o.c && x == o.x;
  }
  bool operator<(const HeisElement& o) const {
    return std::tie(x, a, b, c) < std::tie(o.x, o.a, o.b, o.c);
  }
  std::string to_string() const;
};

}  // namespace gagola

template <>
struct std::hash<gagola::Matrix2> {
  std::size_t operator()(const gagola::Matrix2& m) const noexcept {
    return ((m.a * 1000003u ^ m.b) * 1000003u ^ m.c) * 1000003u ^ m.d;
  }
};

template <>
struct std::hash<gagola::HeisElement> {
  std::size_t operator()(const gagola::HeisElement& e) const noexcept {
    return ((e.a * 1000003u ^ e.b) * 1000003u ^ e.c) * 1000003u ^ e.x;
  }
};

namespace gagola {

/// Gamma(V) for V = GF(p^n), as permutations of V. Marked subgroups
/// "gamma0" (multiplications) and "galois" (Frobenius powers).
BuiltGroup semilinear_group(std::uint64_t p, unsigned n, std::size_t cap = materialization_cap());

struct SingerSubgroup {
  Subgroup h;
  bool transitive = false;
  /// (d, 2^d - 1, found) for each prime-power d > 1 dividing n.
  std::vector<std::tuple<unsigned, std::uint64_t, bool>> orders;
  bool holds() const {
    for (const auto& [d, o, ok] : orders) {
      if (!ok) return false;
    }
    return transitive;
  }
};

struct SingerReport {
  unsigned n = 0;
  bool partial = false;     // arithmetic route only
  bool determined = true;   // false when neither route settles the lemma
  std::string detail;
  std::vector<SingerSubgroup> subgroups;  // one per Gamma(V)-class
  bool holds() const;
};

/// Subgroups of Gamma(GF(2^n)) of order 2^n - 1 transitive on V - {0}, up to
/// conjugacy, each checked for elements of order 2^d - 1 in H n Gamma_o.
/// Subgroup lattices are enumerated only up to this |Gamma(V)|.
inline constexpr std::size_t kSubgroupLatticeCap = 2000;

/// Beyond `lattice_cap` only the arithmetic route (gcd(2^n - 1, n) = 1
/// forces H = Gamma_o) is taken and the report is partial.
SingerReport singer_transitive_subgroups(unsigned n, std::size_t lattice_cap = kSubgroupLatticeCap);

/// AGL(1, q) acting on GF(q); designated N = translations.
BuiltGroup agl1(std::uint64_t q, std::size_t cap = materialization_cap());

/// H(q) extended by GF(q)^* acting as (a,b,c) -> (xa, b, xc); designated N
/// = the centre {(0,0,c)}.
BuiltGroup heisenberg_gagola(std::uint64_t q, std::size_t cap = materialization_cap());

/// Splits a prime power q = p^k; raises InvalidArgument otherwise.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

/// SL_2(2^n) as 2x2 matrices.
BuiltGroup sl2(std::uint64_t q, std::size_t cap = materialization_cap());
/// (q - 1) q (q + 1) for q = 2^n; 128-bit so every n <= 30 fits.
unsigned __int128 sl2_order(unsigned n);
std::string to_string_u128(unsigned __int128 v);

struct Sl2ThreePart {
  unsigned n = 0;
  unsigned a = 0;                // 3^a = n_3
  std::uint64_t three_part = 0;  // |SL_2(2^n)|_3
  std::uint64_t expected = 0;    // 3^(a+1)
  bool holds() const { return three_part == expected; }
};

Sl2ThreePart sl2_three_part_check(unsigned n);

/// Square matrix over a field, row-major.
struct FieldMatrix {
  const Field* field = nullptr;
  std::size_t dim = 0;
  std::vector<Field::Value> entries;

  Field::Value at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }
  FieldMatrix operator*(const FieldMatrix& o) const;
  bool operator==(const FieldMatrix& o) const { return entries == o.entries; }
};

FieldMatrix identity_matrix(const Field* f, std::size_t dim);
FieldMatrix kronecker(const FieldMatrix& x, const FieldMatrix& y);
/// Entrywise Frobenius a -> a^(2^k).
FieldMatrix frobenius_twist(const FieldMatrix& m, unsigned k);
std::size_t rank(const Field& f, std::vector<std::vector<Field::Value>> rows);

/// A representation of a matrix group given by the image of each element.
struct ModuleRep {
  FieldPtr field;
  std::size_t dimension = 0;
  std::function<FieldMatrix(Id)> act;
};

/// The natural 2-dimensional module of a group built by sl2().
ModuleRep natural_module(const BuiltGroup& sl2_group);
/// W (x) W^(2^m) (x) W^(4^m), m = n/3, over GF(2^n). Only n = 3 is
/// materialized; other n raise UnsupportedN.
ModuleRep twisted_tensor_module(const BuiltGroup& sl2_group);
/// dim of the common fixed space of the generators of P.
std::size_t fixed_space(const FiniteGroup& g, const Subgroup& p, const ModuleRep& v);

/// N x H acting on GF(p)^k by affine maps with the given linear parts.
/// Marked subgroups "kernel" (translations) and "complement" (linear part).
BuiltGroup affine_frobenius_group(std::uint64_t p, unsigned k,
                                  const std::vector<std::vector<std::uint64_t>>& linear_gens);

/// Named examples: "c7:c6", "c3^2:q8", "c5^2:sl2(3)".
BuiltGroup frobenius_example(const std::string& name);

struct ComplementPrime {
  std::uint64_t p = 0;
  std::size_t order_p_subgroups = 0;
  bool sylow_cyclic = false;
  bool all_normal = false;
  bool exception = false;  // p = 3, 9 does not divide |H|, Sylow 2 is Q8
  bool holds = false;
};

struct ComplementReport {
  std::size_t complement_order = 0;
  bool z_group = false;
  std::vector<ComplementPrime> primes;
  bool holds() const;
};

/// Requires marked "kernel" and "complement"; raises NotFrobeniusComplement
/// when a nonidentity complement element fixes a nonidentity kernel element.
ComplementReport frobenius_complement_checks(const BuiltGroup& frobenius_group);

}  // namespace gagola
