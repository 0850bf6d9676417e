#include "gagola/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "gagola/constructions.hpp"
#include "gagola/error.hpp"
#include "gagola/permutation.hpp"
#include "gagola/suzuki.hpp"

namespace gagola {

namespace {

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  if (text.empty() || text.size() > 18 ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    raise(Errc::ParseError, "expected a nonnegative integer for " + key + ", got '" + text + "'");
  }
  return std::stoull(text);
}

std::map<std::string, std::string> parse_fields(const std::string& body) {
  std::map<std::string, std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t end = std::min(body.find(';', pos), body.size());
    const std::string field = body.substr(pos, end - pos);
    pos = end + 1;
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string::npos || eq == 0) raise(Errc::ParseError, "expected key=value, got '" + field + "'");
    if (!out.emplace(field.substr(0, eq), field.substr(eq + 1)).second) {
      raise(Errc::ParseError, "duplicate key " + field.substr(0, eq));
    }
  }
  return out;
}

const std::string& need(const std::map<std::string, std::string>& f, const std::string& key) {
  auto it = f.find(key);
  if (it == f.end()) raise(Errc::ParseError, "missing key " + key);
  return it->second;
}

void only_keys(const std::map<std::string, std::string>& f, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : f) {
    if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end()) {
      raise(Errc::ParseError, "unknown key " + k);
    }
  }
}

Permutation parse_generator(std::uint32_t degree, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') raise(Errc::ParseError, "expected '(' in '" + text + "'");
    const auto close = text.find(')', i);
    if (close == std::string::npos) raise(Errc::ParseError, "unbalanced '(' in '" + text + "'");
    std::vector<std::uint32_t> cycle;
    std::string inner = text.substr(i + 1, close - i - 1);
    std::size_t p = 0;
    while (p < inner.size()) {
      const std::size_t comma = std::min(inner.find(',', p), inner.size());
      const auto v = parse_uint("cycle point", inner.substr(p, comma - p));
      if (v == 0 || v > degree) raise(Errc::ParseError, "cycle point outside 1.." + std::to_string(degree));
      cycle.push_back(static_cast<std::uint32_t>(v));
      p = comma + 1;
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

const std::map<std::string, std::string>& named_groups() {
  static const std::map<std::string, std::string> named{
      {"q8", "perm:m=8;gens=(1,2,3,4)(5,6,7,8),(1,5,3,7)(2,8,4,6)"},
      {"d4", "perm:m=4;gens=(1,2,3,4),(1,3)"},
      {"s3", "perm:m=3;gens=(1,2),(1,2,3)"},
      {"s4", "perm:m=4;gens=(1,2),(1,2,3,4)"},
      {"a4", "perm:m=4;gens=(1,2,3),(2,3,4)"},
      {"a5", "perm:m=5;gens=(1,2,3),(1,2,3,4,5)"},
      {"3^1+2", "perm:m=9;gens=(1,2,3)(4,5,6)(7,8,9),(1,4,7)(2,5,8)(3,6,9),(4,5,6)(7,9,8)"},
  };
  return named;
}

}  // namespace

BuiltGroup permutation_group(std::uint32_t degree, const std::string& gens, std::size_t cap) {
  if (degree == 0) raise(Errc::ParseError, "degree must be positive");
  std::vector<Permutation> perms;
  int depth = 0;
  std::string cur;
  for (char c : gens) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0 || depth > 1) raise(Errc::ParseError, "unbalanced parentheses in gens");
    if (c == ',' && depth == 0) {
      perms.push_back(parse_generator(degree, cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) raise(Errc::ParseError, "unbalanced parentheses in gens");
  if (cur.empty()) raise(Errc::ParseError, "empty generator");
  perms.push_back(parse_generator(degree, cur));
  auto m = generate_group(std::move(perms), Permutation::identity(degree), cap);
  return make_built_group("perm:m=" + std::to_string(degree) + ";gens=" + gens, std::move(m),
                          [](const Permutation& p) { return p.to_string(); });
}

BuiltGroup parse_group_spec(const std::string& raw, std::size_t cap) {
  const std::string spec = strip_spaces(raw);
  const auto colon = spec.find(':');
  if (colon == std::string::npos) raise(Errc::ParseError, "expected family:fields, got '" + raw + "'");
  const std::string family = spec.substr(0, colon);
  const std::string body = spec.substr(colon + 1);

  if (family == "named") {
    auto it = named_groups().find(body);
    if (it == named_groups().end()) raise(Errc::ParseError, "unknown named group " + body);
    auto b = parse_group_spec(it->second, cap);
    b.spec = spec;
    return b;
  }
  const auto f = parse_fields(body);
  if (family == "perm") {
    only_keys(f, {"m", "gens"});
    const auto m = parse_uint("m", need(f, "m"));
    if (m == 0 || m > 4096) raise(Errc::ParseError, "m must lie in [1, 4096]");
    return permutation_group(static_cast<std::uint32_t>(m), need(f, "gens"), cap);
  }
  if (family == "suzuki") {
    only_keys(f, {"n", "h"});
    const auto n = parse_uint("n", need(f, "n"));
    const auto h = parse_uint("h", need(f, "h"));
    if (n == 0 || n > 30 || h > 30) raise(Errc::ParseError, "n and h must lie in [1, 30]");
    auto m = suzuki_group(static_cast<unsigned>(n), static_cast<unsigned>(h), true, cap);
    auto b = make_built_group(spec, m.group(), [](const SuzukiPair& p) { return p.to_string(); });
    b.designated_n = m.n_subgroup();
    b.marked.emplace_back("n", m.n_subgroup());
    b.keepalive = m.field();
    return b;
  }
  if (family == "heis" || family == "agl1" || family == "sl2") {
    only_keys(f, {"q"});
    const auto q = parse_uint("q", need(f, "q"));
    if (family == "heis") return heisenberg_gagola(q, cap);
    if (family == "agl1") return agl1(q, cap);
    auto [p, k] = prime_power(q);
    if (p != 2) raise(Errc::ParseError, "sl2 needs q a power of 2");
    return sl2(q, cap);
  }
  if (family == "gamma") {
    only_keys(f, {"p", "n"});
    const auto p = parse_uint("p", need(f, "p"));
    const auto n = parse_uint("n", need(f, "n"));
    if (n == 0 || n > 62) raise(Errc::ParseError, "n must lie in [1, 62]");
    return semilinear_group(p, static_cast<unsigned>(n), cap);
  }
  raise(Errc::ParseError, "unknown family " + family);
}

}  // namespace gagola
