#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gagola {

/// Permutation of {0, ..., m-1} acting on the right: (x)(g * h) = ((x)g)h.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::uint32_t degree);
  /// Cycles use 1-based points, e.g. {{1, 2, 3}, {4, 5}}.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(images_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  /// Cycle notation with 1-based points; "()" for the identity.
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace gagola

template <>
struct std::hash<gagola::Permutation> {
  std::size_t operator()(const gagola::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};
