#include "gagola/group.hpp"

#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

namespace gagola {

namespace {

std::optional<std::size_t>& cap_override() {
  static std::optional<std::size_t> value;
  return value;
}

}  // namespace

std::size_t materialization_cap() {
  if (cap_override()) return *cap_override();
  if (const char* env = std::getenv("GAGOLA_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

void set_materialization_cap(std::size_t cap) {
  if (cap == 0) raise(Errc::InvalidArgument, "cap must be positive");
  cap_override() = cap;
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Id> generators, std::vector<Id> right,
                         std::vector<Id> parent, std::vector<std::uint16_t> parent_gen)
    : order_(order),
      generators_(std::move(generators)),
      right_(std::move(right)),
      parent_(std::move(parent)),
      parent_gen_(std::move(parent_gen)) {
  const std::size_t k = generators_.size();
  if (order_ <= kMulTableLimit) {
    table_.resize(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
      std::uint16_t* row = &table_[i * order_];
      row[0] = static_cast<std::uint16_t>(i);
      for (std::size_t j = 1; j < order_; ++j) {
        row[j] = static_cast<std::uint16_t>(right_[row[parent_[j]] * k + parent_gen_[j]]);
      }
    }
  }
  element_order_.assign(order_, 0);
  element_order_[0] = 1;
  for (Id a = 1; a < order_; ++a) {
    Id x = a;
    std::uint32_t n = 1;
    while (x != 0) {
      x = mul(x, a);
      ++n;
    }
    element_order_[a] = n;
  }
  exponent_ = 1;
  for (auto o : element_order_) exponent_ = std::lcm(exponent_, std::uint64_t{o});
  inverse_.assign(order_, 0);
  for (Id a = 0; a < order_; ++a) inverse_[a] = pow(a, element_order_[a] - 1);
}

Id FiniteGroup::mul(Id a, Id b) const {
  if (!table_.empty()) return table_[a * order_ + b];
  // Walk b's word from a; words are recovered through the parent chain.
  Id stack[512];
  std::size_t depth = 0;
  std::vector<Id> overflow;
  for (Id x = b; x != 0; x = parent_[x]) {
    if (depth < 512) {
      stack[depth++] = x;
    } else {
      overflow.push_back(x);
    }
  }
  const std::size_t k = generators_.size();
  Id r = a;
  for (auto it = overflow.rbegin(); it != overflow.rend(); ++it) r = right_[r * k + parent_gen_[*it]];
  while (depth > 0) {
    const Id x = stack[--depth];
    r = right_[r * k + parent_gen_[x]];
  }
  return r;
}

Id FiniteGroup::pow(Id a, std::int64_t k) const {
  if (k < 0) {
    a = inverse_.empty() ? pow(a, element_order_[a] - 1) : inverse_[a];
    k = -k;
  }
  Id result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint16_t> FiniteGroup::word(Id a) const {
  std::vector<std::uint16_t> w;
  for (Id x = a; x != 0; x = parent_[x]) w.push_back(parent_gen_[x]);
  std::reverse(w.begin(), w.end());
  return w;
}

Subgroup::Subgroup(std::size_t parent_order, std::vector<Id> members)
    : parent_order_(parent_order), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign((parent_order_ + 63) / 64, 0);
  for (Id x : members_) {
    if (x >= parent_order_) raise(Errc::InvalidArgument, "subgroup member outside parent");
    mask_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (other.mask_.size() != mask_.size()) return false;
  for (std::size_t i = 0; i < mask_.size(); ++i) {
    if (mask_[i] & ~other.mask_[i]) return false;
  }
  return true;
}

std::size_t Subgroup::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : mask_) h = (h ^ w) * 1099511628211ull;
  return h;
}

}  // namespace gagola
