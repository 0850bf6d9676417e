#pragma once

// Verification suites and the JSON/text renderings shared by the CLI and
// the acceptance runner. Reports are deterministic: no timestamps unless
// timing is requested.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gagola/built_group.hpp"
#include "gagola/camina.hpp"
#include "gagola/character_table.hpp"

namespace gagola {

enum class CheckStatus { Pass, Fail, Partial, HypothesisNotMet };
std::string_view status_name(CheckStatus s) noexcept;

struct CheckRecord {
  std::string id;
  std::string anchor;  // the statement being checked
  CheckStatus status = CheckStatus::Fail;
  nlohmann::json witness;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::optional<double> wall_seconds;
  bool failed() const;
};

struct SuiteOptions {
  std::optional<std::string> family;  // bounds: heis, agl1
  std::vector<std::uint64_t> q;       // bounds: family parameters
  unsigned n = 3, h = 1;              // suzuki
  bool full_aut = false;              // suzuki: brute-force Aut(M)
  std::size_t table_cap = 4096;       // Dixon cap for certification suites
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"numtheory", "suzuki", "bounds", "charcheck", "frobenius",
                                              "sl2"};
  return names;
}

/// Raises UnknownSuite; "all" runs every suite in the order above.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

std::string version_stamp();

nlohmann::json report_json(const VerificationReport& r);
std::string report_text(const VerificationReport& r);

/// "pairCert/1".
nlohmann::json certificate_json(const BuiltGroup& g, const PairCertificate& c,
                                const std::optional<BoundsReport>& bounds);
std::string certificate_text(const BuiltGroup& g, const PairCertificate& c,
                             const std::optional<BoundsReport>& bounds);

/// "charTable/1".
nlohmann::json character_table_json(const BuiltGroup& g, const CharacterTable& t);
std::string character_table_text(const BuiltGroup& g, const CharacterTable& t);

}  // namespace gagola
