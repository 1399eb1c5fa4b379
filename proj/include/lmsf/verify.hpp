#ifndef LMSF_VERIFY_HPP
#define LMSF_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lmsf/json_io.hpp"

namespace lmsf::verify {

struct CaseResult {
  std::string label;
  bool ok = true;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int max_size = 0;
  std::vector<CaseResult> cases;

  bool ok() const;
  std::size_t failures() const;
  /// First failing case, if any.
  std::optional<CaseResult> first_failure() const;
  /// {"suite","max_size","passed","cases","failures","first_counterexample","results":[...]}
  io::Json to_json() const;
};

struct SuiteInfo {
  std::string name;
  std::string module;
  std::string summary;
  int default_max_size;
};

/// Registered suites in a fixed order.
const std::vector<SuiteInfo>& suites();

/// Runs a suite; max_size < 0 selects the suite default. Throws
/// std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, int max_size = -1);

}  // namespace lmsf::verify

#endif  // LMSF_VERIFY_HPP
