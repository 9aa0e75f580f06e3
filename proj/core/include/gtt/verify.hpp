#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gtt::verify {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int max_n = 12;  // largest polynomial index exercised
  int max_d = 6;   // largest cross-polytope dimension exercised
  int cross_guard = 7;
};

struct CheckItem {
  std::string check;     // stable name of the property family
  std::string instance;  // parameters of this particular check
  std::string claim;     // what is being asserted, in words
  bool pass = false;
  std::string witness;   // computed values, or the discrepancy on failure
};

struct Report {
  std::string suite;
  VerifyOptions options;
  std::vector<CheckItem> items;
  bool pass() const;
};

// The named verification suites, in canonical order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one suite; throws std::invalid_argument for an unknown name. Items
// are emitted in a deterministic order (sorted by check then instance).
Report run_suite(const std::string& name, const VerifyOptions& opts);

std::string report_to_json(const Report& report, int indent = 2);
std::string report_to_csv(const Report& report);

}  // namespace gtt::verify
