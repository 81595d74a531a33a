#pragma once

#include "wtl/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <utility>

namespace wtl::vdetail {

// Accumulates comparisons for one invariant.
class Check {
 public:
  Check(std::string name, const VerifyOptions& o) : name_(std::move(name)), fault_(o.fault) {}

  bool expect(bool ok, const std::function<json()>& dump) {
    ++count_;
    if (!ok) {
      ++fails_;
      if (first_.is_null()) first_ = dump();
    }
    return ok;
  }

  // the exception text becomes part of the dumped case
  void error(const std::exception& e, json dump) {
    ++count_;
    ++fails_;
    if (first_.is_null()) {
      dump["error"] = e.what();
      first_ = std::move(dump);
    }
  }

  // true exactly once when the fault flag is set
  bool take_fault() {
    if (!fault_) return false;
    fault_ = false;
    return true;
  }

  void note(const std::string& s) {
    if (!extra_.empty()) extra_ += "; ";
    extra_ += s;
  }
  int count() const { return count_; }

  CheckResult finish() const {
    CheckResult r;
    r.name = name_;
    r.pass = fails_ == 0 && count_ > 0;
    std::ostringstream os;
    os << count_ << " comparisons, " << fails_ << " failed";
    if (!extra_.empty()) os << "; " << extra_;
    r.detail = os.str();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    r.failing_case = first_;
    return r;
  }

 private:
  std::string name_;
  bool fault_;
  int count_ = 0, fails_ = 0;
  std::string extra_;
  json first_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline json case_header(const char* suite, const VerifyOptions& o, long long idx) {
  json j;
  j["suite"] = suite;
  j["seed"] = o.seed;
  j["case"] = idx;
  return j;
}

inline bool selected(const VerifyOptions& o, int idx) { return !o.only_case || *o.only_case == idx; }

inline std::string sci(const Real& x) { return x.str(3, std::ios_base::scientific); }

// sets the float precision for the lifetime of the guard
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(precision()) { set_precision(digits); }
  ~PrecisionGuard() { set_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

}  // namespace wtl::vdetail
