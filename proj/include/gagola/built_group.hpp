#pragma once

// A materialized group together with the names the rest of the library
// needs: the spec it came from, how to print an element, and any subgroups
// the construction singles out (the designated N of a family, Gamma_o, ...).

#include <any>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gagola/group.hpp"

namespace gagola {

struct BuiltGroup {
  std::string spec;
  FiniteGroup group;
  std::function<std::string(Id)> describe;
  std::optional<Subgroup> designated_n;
  std::vector<std::pair<std::string, Subgroup>> marked;
  std::shared_ptr<const void> keepalive;  // owns fields the elements point into
  std::any elements;                      // shared_ptr<const vector<E>>

  template <class E>
  const std::vector<E>& elements_as() const {
    auto p = std::any_cast<std::shared_ptr<const std::vector<E>>>(&elements);
    if (!p) raise(Errc::InvalidArgument, "group " + spec + " has a different element type");
    return **p;
  }

  const Subgroup& marked_subgroup(const std::string& name) const {
    for (const auto& [k, v] : marked) {
      if (k == name) return v;
    }
    raise(Errc::InvalidArgument, "no marked subgroup " + name);
  }
  std::size_t order() const { return group.order(); }
};

template <class E, class Hash, class Fmt>
BuiltGroup make_built_group(std::string spec, Materialized<E, Hash> m, Fmt fmt) {
  BuiltGroup b;
  b.spec = std::move(spec);
  auto elements = std::make_shared<const std::vector<E>>(std::move(m.elements));
  b.group = std::move(m.group);
  b.describe = [elements, fmt](Id id) { return fmt((*elements)[id]); };
  b.elements = elements;
  return b;
}

/// Ids of the elements of `m` satisfying `pred`, as a subgroup.
template <class E, class Hash, class Pred>
Subgroup select_subgroup(const Materialized<E, Hash>& m, Pred pred) {
  std::vector<Id> ids;
  for (Id i = 0; i < m.elements.size(); ++i) {
    if (pred(m.elements[i])) ids.push_back(i);
  }
  return Subgroup(m.order(), std::move(ids));
}

}  // namespace gagola
