// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
// Tolerances are the pinned constants in wtl/verify.hpp; the float parts
// run at 64 digits.

#include "wtl/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace wtl;

namespace {

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<std::vector<CheckResult>(const VerifyOptions&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  VerifyOptions o;
  o.seed = 20240601;
  o.precision = kVerifyDigits;
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";

  const std::vector<Criterion> criteria{
      {1, "tau symmetry and pole/infinity agreement (20 points, m<=3, p,q<=4)", 120,
       [](const VerifyOptions& v) { return check_tau_symmetry(v, 20); }},
      {2, "dependence table: 100 perturbations outside it leave Omega unchanged", 60,
       [](const VerifyOptions& v) { return check_independence(v, 100); }},
      {3, "flow/tau compatibility on x-jet points (p,q<=3, m<=2) and sigma^{0,1} = d/dx", 120,
       [](const VerifyOptions& v) { return check_flows(v); }},
      {4, "stabilization sweeps (A n0=2..8; m=2 up to (6;5,5)), deviation < 1e-30", 300,
       [](const VerifyOptions& v) { return check_stabilization(v); }},
      {5, "Hurwitz WDVV on A2, A3, (2;2), residual and symmetry < 1e-45", 180,
       [](const VerifyOptions& v) { return check_wdvv(v, 5); }},
      {6, "open sector rows < 1e-30, log family exact, open WDVV on A2", 180,
       [](const VerifyOptions& v) { return check_open(v); }},
      {7, "even reduction: parity, dual-path Omega, even and even-open rows", 240,
       [](const VerifyOptions& v) { return check_even(v); }},
      {8, "series and ratfun invariants, 200 cases each", 60,
       [](const VerifyOptions& v) {
         auto r = check_series(v, 200);
         auto q = check_ratfun(v, 200);
         r.insert(r.end(), q.begin(), q.end());
         return r;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CheckResult> rs;
    std::string err;
    try {
      rs = c.run(o);
    } catch (const std::exception& e) {
      err = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = err.empty() && !rs.empty();
    for (const auto& r : rs) pass = pass && r.pass;
    const bool in_budget = secs < c.budget_seconds;
    pass = pass && in_budget;
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s [%.2f s, budget %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                c.budget_seconds);
    if (!err.empty()) std::printf("    error: %s\n", err.c_str());
    for (const auto& r : rs) {
      if (verbose || !r.pass) std::printf("    %s\n", summary_line(r).c_str());
      if (!r.pass && !r.failing_case.is_null()) std::printf("    case: %s\n", r.failing_case.dump().c_str());
    }
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
