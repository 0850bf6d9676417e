#pragma once

// Dense finite groups. A group is materialized once by breadth-first closure
// over its generators; afterwards every algorithm works on element ids
// 0..|G|-1 (0 is the identity) through the multiplication oracle.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "gagola/error.hpp"

namespace gagola {

using Id = std::uint32_t;

/// Groups larger than this are refused (GAGOLA_CAP or set_materialization_cap
/// override it).
std::size_t materialization_cap();
void set_materialization_cap(std::size_t cap);

/// Groups up to this order keep a full multiplication table.
inline constexpr std::size_t kMulTableLimit = 4096;

class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// `right[i * k + s]` is the id of x_i * g_s for the k generators; element
  /// i > 0 equals parent[i] * g_{parent_gen[i]} with parent[i] < i.
  FiniteGroup(std::size_t order, std::vector<Id> generators, std::vector<Id> right,
              std::vector<Id> parent, std::vector<std::uint16_t> parent_gen);

  std::size_t order() const noexcept { return order_; }
  Id identity() const noexcept { return 0; }
  const std::vector<Id>& generators() const noexcept { return generators_; }

  Id mul(Id a, Id b) const;
  Id inv(Id a) const { return inverse_[a]; }
  Id pow(Id a, std::int64_t k) const;
  /// g^-1 x g.
  Id conj(Id x, Id g) const { return mul(inv(g), mul(x, g)); }
  /// x^-1 y^-1 x y.
  Id comm(Id x, Id y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  Id right_by_generator(Id x, std::size_t s) const { return right_[x * generators_.size() + s]; }

  std::uint32_t element_order(Id a) const { return element_order_[a]; }
  std::uint64_t exponent() const noexcept { return exponent_; }

  /// Word in generator indices with product equal to `a`.
  std::vector<std::uint16_t> word(Id a) const;
  Id parent(Id a) const { return parent_[a]; }
  std::uint16_t parent_generator(Id a) const { return parent_gen_[a]; }

  bool has_table() const noexcept { return !table_.empty(); }

 private:
  std::size_t order_ = 0;
  std::vector<Id> generators_;
  std::vector<Id> right_;
  std::vector<Id> parent_;
  std::vector<std::uint16_t> parent_gen_;
  std::vector<std::uint16_t> table_;
  std::vector<Id> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::uint64_t exponent_ = 1;
};

/// A group together with the concrete elements its ids stand for.
template <class E, class Hash = std::hash<E>>
struct Materialized {
  FiniteGroup group;
  std::vector<E> elements;
  std::unordered_map<E, Id, Hash> index;

  Id id_of(const E& e) const {
    auto it = index.find(e);
    if (it == index.end()) raise(Errc::InvalidArgument, "element not in group");
    return it->second;
  }
  const E& element(Id id) const { return elements[id]; }
  std::size_t order() const { return group.order(); }
};

/// Breadth-first closure. Generators are sorted and deduplicated first so ids
/// are reproducible; elements equal to the identity are dropped.
template <class E, class Hash = std::hash<E>>
Materialized<E, Hash> generate_group(std::vector<E> gens, const E& identity,
                                     std::size_t cap = materialization_cap()) {
  if (cap == 0) raise(Errc::InvalidArgument, "cap must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  gens.erase(std::remove(gens.begin(), gens.end(), identity), gens.end());
  if (gens.size() > 65535) raise(Errc::InvalidArgument, "too many generators");

  Materialized<E, Hash> out;
  std::vector<Id> right;
  std::vector<Id> parent{0};
  std::vector<std::uint16_t> parent_gen{0};
  out.elements.push_back(identity);
  out.index.emplace(identity, 0);
  const std::size_t k = gens.size();
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    for (std::size_t s = 0; s < k; ++s) {
      E next = out.elements[i] * gens[s];
      auto it = out.index.find(next);
      Id id;
      if (it == out.index.end()) {
        if (out.elements.size() >= cap) {
          raise(Errc::CapExceeded, "closure exceeds cap " + std::to_string(cap));
        }
        id = static_cast<Id>(out.elements.size());
        out.index.emplace(next, id);
        out.elements.push_back(std::move(next));
        parent.push_back(static_cast<Id>(i));
        parent_gen.push_back(static_cast<std::uint16_t>(s));
      } else {
        id = it->second;
      }
      right.push_back(id);
    }
  }
  std::vector<Id> gen_ids;
  for (const auto& g : gens) gen_ids.push_back(out.index.at(g));
  out.group = FiniteGroup(out.elements.size(), std::move(gen_ids), std::move(right),
                          std::move(parent), std::move(parent_gen));
  return out;
}

/// An element of an already materialized group, used to build subgroups and
/// images as groups in their own right.
struct IdElement {
  const FiniteGroup* group = nullptr;
  Id id = 0;

  IdElement operator*(const IdElement& o) const { return {group, group->mul(id, o.id)}; }
  bool operator==(const IdElement& o) const { return id == o.id; }
  bool operator<(const IdElement& o) const { return id < o.id; }
};

}  // namespace gagola

template <>
struct std::hash<gagola::IdElement> {
  std::size_t operator()(const gagola::IdElement& e) const noexcept { return e.id; }
};

namespace gagola {

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(std::size_t parent_order, std::vector<Id> members);

  std::size_t order() const noexcept { return members_.size(); }
  std::size_t parent_order() const noexcept { return parent_order_; }
  bool contains(Id x) const { return (mask_[x >> 6] >> (x & 63)) & 1; }
  const std::vector<Id>& elements() const noexcept { return members_; }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_order_; }
  bool is_subset_of(const Subgroup& other) const;
  std::size_t hash() const noexcept;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  bool operator<(const Subgroup& o) const {
    if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
    return members_ < o.members_;
  }

 private:
  std::size_t parent_order_ = 0;
  std::vector<Id> members_;
  std::vector<std::uint64_t> mask_;
};

struct ClassTable {
  std::vector<Id> reps;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_of;
  std::vector<std::vector<Id>> members;
  /// power_map.at(p)[c] = class of rep(c)^p, for primes p dividing |G|.
  std::map<std::uint64_t, std::vector<std::uint32_t>> power_map;

  std::size_t size() const noexcept { return reps.size(); }
  std::uint32_t inverse_class(const FiniteGroup& g, std::uint32_t c) const {
    return class_of[g.inv(reps[c])];
  }
};

/// A group materialized from a subgroup, with the embedding back.
struct InducedGroup {
  FiniteGroup group;
  std::vector<Id> to_parent;
  std::unordered_map<Id, Id> from_parent;
};

struct Quotient {
  FiniteGroup group;
  std::vector<Id> projection;  // parent id -> quotient id
  std::vector<Id> lift;        // quotient id -> some parent representative
};

}  // namespace gagola
