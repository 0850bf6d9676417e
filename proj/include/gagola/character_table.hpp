#pragma once

// Character tables by the Dixon method: common eigenvectors of the class
// multiplication matrices over GF(p), lifted to cyclotomic integers by a
// discrete Fourier inversion on the powers of each class representative.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gagola/cyclotomic.hpp"
#include "gagola/group.hpp"

namespace gagola {

inline constexpr std::size_t kCharacterTableCap = 2000;
inline constexpr std::uint64_t kCharacterTableExponentCap = 200;

/// a[(i * k + j) * k + l] = #{(x, y) : x in C_i, y in C_j, xy = rep(C_l)}.
class ClassConstants {
 public:
  ClassConstants(const FiniteGroup& g, const ClassTable& ct);
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t l) const {
    return a_[(i * k_ + j) * k_ + l];
  }
  std::size_t classes() const noexcept { return k_; }

 private:
  std::size_t k_;
  std::vector<std::uint32_t> a_;
};

/// Smallest prime p = 1 mod exponent with p > 2 floor(sqrt(order)).
std::uint64_t dixon_prime(std::uint64_t order, std::uint64_t exponent);

struct CharacterTable {
  ClassTable classes;
  std::uint64_t group_order = 0;
  std::uint64_t exponent = 1;
  std::uint64_t prime = 0;
  std::uint64_t root = 0;  // element of order `exponent` in GF(prime)
  std::vector<std::uint64_t> degrees;
  /// values[chi][class]
  std::vector<std::vector<CyclotomicInteger>> values;
  std::vector<std::vector<std::uint64_t>> values_mod_p;

  std::size_t size() const noexcept { return degrees.size(); }
  /// Exact, with the mod-p image as a fast filter.
  bool vanishes(std::size_t chi, std::size_t cls) const;
};

/// Raises CapExceeded above `cap` elements or exponent 200, LiftInconsistent
/// if the modular data fails to lift (never expected).
CharacterTable character_table(const FiniteGroup& g, std::size_t cap = kCharacterTableCap);

/// sum_c |C| chi(c) conj(psi(c)) = |G| delta.
bool rows_orthogonal(const CharacterTable& t);
/// sum_chi chi(c) conj(chi(c')) = |C_G(c)| delta.
bool columns_orthogonal(const CharacterTable& t);

struct GagolaCharacter {
  std::size_t index = 0;
  Subgroup n;
  std::array<std::uint32_t, 2> nonzero_classes{};
};

/// The irreducible character nonzero on exactly two classes (and zero on at
/// least one), with N its support. Raises MultipleGagolaCharacters if two
/// qualify.
std::optional<GagolaCharacter> find_gagola_character(const FiniteGroup& g,
                                                     const CharacterTable& t);

struct DegreeE {
  std::uint64_t d = 0;
  std::uint64_t e = 0;
};

/// One entry per distinct nonlinear degree, e = |G|/d - d. Raises
/// AbelianGroup when every degree is 1.
std::vector<DegreeE> degree_d_and_e(const CharacterTable& t);

}  // namespace gagola
