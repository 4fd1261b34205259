#ifndef HSS_REPORT_HPP
#define HSS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hss/rigidity.hpp"

namespace hss {

inline constexpr const char* kToolName = "hssverify";
inline constexpr const char* kToolVersion = "1.0.0";

// A verification request: which suite, optionally restricted to one ambient
// space and/or to ambients of bounded rank.
struct SuiteSpec {
  std::string suite;
  std::optional<std::string> space;
  std::optional<int> max_rank;
};

struct RunReport {
  std::string suite;
  std::vector<CheckReport> checks;  // canonical (space, check, embedding) order
  long long elapsed_ms = 0;

  int count(const std::string& status) const;
  // Success = no "fail" and no "catalog-error" result.
  bool ok() const;
};

std::vector<std::string> known_suites();

// Runs the suite; throws std::invalid_argument for an unknown suite or an
// unparseable space label.
RunReport run_suite(const SuiteSpec& spec);

std::string render_text(const RunReport& report);

// The "math" section (suite, summary, checks) is a pure function of the
// input spec: no timings, no environment data, canonical ordering.
nlohmann::ordered_json render_json(const RunReport& report);

}  // namespace hss

#endif
