#pragma once

// Seeded invariant suites shared by the CLI and the acceptance runner.
// Each check returns one result per invariant; a result that fails carries
// the smallest failing case as JSON.

#include "wtl/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wtl {

// pinned tolerances (relative to max(1, |value|) where a value is at hand)
inline constexpr const char* kStabTol = "1e-30";
inline constexpr const char* kWdvvTol = "1e-45";
inline constexpr const char* kOpenTol = "1e-30";
inline constexpr unsigned kVerifyDigits = 64;

struct VerifyOptions {
  std::uint64_t seed = 42;
  unsigned precision = kVerifyDigits;  // for the float parts of a suite
  std::optional<int> only_case;        // replay one case of the case-based suites
  bool fault = false;                  // corrupt one compared value (negative control)
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  double seconds = 0;
  json failing_case;  // null when passing
};

json to_json(const CheckResult& r);  // no timing, so reports are reproducible
std::string summary_line(const CheckResult& r);

// tau-structure of the formal manifold
std::vector<CheckResult> check_tau_symmetry(const VerifyOptions& o, int points = 20);
std::vector<CheckResult> check_independence(const VerifyOptions& o, int trials = 100);
std::vector<CheckResult> check_flows(const VerifyOptions& o);

// Hurwitz side
std::vector<CheckResult> check_stabilization(const VerifyOptions& o);
std::vector<CheckResult> check_wdvv(const VerifyOptions& o, int points = 5);
std::vector<CheckResult> check_open(const VerifyOptions& o);
std::vector<CheckResult> check_even(const VerifyOptions& o);

// engine
std::vector<CheckResult> check_series(const VerifyOptions& o, int cases = 200);
std::vector<CheckResult> check_ratfun(const VerifyOptions& o, int cases = 200);

// suite in {series, ratfun, whitham, hurwitz, open, even, all}; throws InputError otherwise
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& o);

}  // namespace wtl
