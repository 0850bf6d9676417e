#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gagola/camina.hpp"
#include "gagola/character_table.hpp"
#include "gagola/error.hpp"
#include "gagola/group_algorithms.hpp"
#include "gagola/group_spec.hpp"
#include "gagola/report.hpp"

namespace {

using namespace gagola;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::size_t parse_cap(const std::string& text) {
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(text, &pos);
    if (pos == text.size() && v > 0) return v;
  } catch (const std::exception&) {
  }
  raise(Errc::ParseError, "invalid cap '" + text + "'");
}

std::vector<Subgroup> select_subgroups(const BuiltGroup& b, const std::optional<std::string>& selector) {
  if (!selector) return minimal_normal_subgroups(b.group);
  if (*selector == "center") return {center(b.group)};
  if (*selector == "derived") return {derived_subgroup(b.group)};
  if (*selector == "designated") {
    if (!b.designated_n) raise(Errc::InvalidArgument, b.spec + " has no designated N");
    return {*b.designated_n};
  }
  if (*selector == "minimal") return minimal_normal_subgroups(b.group);
  raise(Errc::ParseError, "unknown subgroup selector '" + *selector + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Camina and Gagola pairs: certification, character tables and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::optional<std::string> cap_text;
  app.add_flag("--json", as_json, "emit JSON");
  app.add_option("--cap", cap_text, "materialization and character-table cap (default 20000 / 4096)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->set_help_flag("--help", "print this help message and exit");
  std::string suite = "all";
  SuiteOptions options;
  std::optional<std::string> family;
  bool timing = false;
  verify->add_option("suite,--suite", suite, "numtheory, suzuki, bounds, charcheck, frobenius, sl2 or all");
  verify->add_option("--family", family, "bounds: heis or agl1");
  verify->add_option("--q", options.q, "bounds: comma-separated field orders")->delimiter(',');
  verify->add_option("--n", options.n, "suzuki: field degree");
  verify->add_option("--h", options.h, "suzuki: Theta = 2^h-th power");
  verify->add_flag("--full-aut", options.full_aut, "suzuki: brute-force Aut(M) (n = 3)");
  verify->add_flag("--timing", timing, "include wall time in the report");

  auto* certify = app.add_subcommand("certify", "certify (G, N) as a Camina / Gagola pair");
  std::string certify_spec;
  std::optional<std::string> selector;
  certify->add_option("spec", certify_spec, "group spec")->required();
  certify->add_option("--n", selector, "N: center, derived, designated or minimal (default: each minimal normal)");

  auto* chartable = app.add_subcommand("chartable", "print the character table");
  std::string table_spec;
  chartable->add_option("spec", table_spec, "group spec")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (const char* env = std::getenv("GAGOLA_CAP"); env && !cap_text) cap_text = env;
    std::size_t table_cap = options.table_cap;
    if (cap_text) {
      const auto cap = parse_cap(*cap_text);
      set_materialization_cap(cap);
      table_cap = cap;
    }
    options.table_cap = table_cap;
    options.family = family;

    if (verify->parsed()) {
      auto report = run_suite(suite, options);
      if (!timing) report.wall_seconds.reset();
      if (as_json) {
        std::cout << report_json(report).dump(2) << "\n";
      } else {
        std::cout << report_text(report);
      }
      return report.failed() ? kExitFail : 0;
    }

    if (certify->parsed()) {
      const auto b = parse_group_spec(certify_spec);
      json all = json::array();
      for (const auto& n : select_subgroups(b, selector)) {
        const auto c = is_gagola_pair(b.group, n, table_cap);
        std::optional<BoundsReport> bounds;
        if (c.is_gagola) bounds = verify_bounds(b.group, c);
        if (as_json) {
          all.push_back(certificate_json(b, c, bounds));
        } else {
          std::cout << certificate_text(b, c, bounds);
        }
      }
      if (as_json) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << "\n";
      return 0;
    }

    const auto b = parse_group_spec(table_spec);
    const auto t = character_table(b.group, table_cap);
    if (as_json) {
      std::cout << character_table_json(b, t).dump(2) << "\n";
    } else {
      std::cout << character_table_text(b, t);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::UnknownSuite:
      case Errc::InvalidArgument:
      case Errc::InvalidTheta:
        return kExitUsage;
      default:
        return kExitFail;
    }
  }
}
