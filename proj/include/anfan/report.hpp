#pragma once

// Verification reports: named checks with pass/fail status and
// deterministic JSON serialization.

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

namespace anfan {

struct VerificationReport {
  int n = 0;
  std::string suite;

  struct Check {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string expected;
    std::string actual;
    long elapsed_ms = 0;
  };
  std::vector<Check> checks;

  bool pass() const {
    for (const Check& c : checks)
      if (c.status == "fail") return false;
    return true;
  }

  void add(const std::string& name, bool ok, const std::string& expected = "",
           const std::string& actual = "", long elapsed_ms = 0) {
    checks.push_back({name, ok ? "pass" : "fail", expected, actual, elapsed_ms});
  }

  void add_skipped(const std::string& name) {
    checks.push_back({name, "skipped", "", "", 0});
  }

  nlohmann::json to_json(bool include_timings = true) const {
    nlohmann::json j;
    j["n"] = n;
    j["suite"] = suite;
    j["status"] = pass() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const Check& c : checks) {
      nlohmann::json e;
      e["name"] = c.name;
      e["status"] = c.status;
      e["expected"] = c.expected;
      e["actual"] = c.actual;
      if (include_timings) e["elapsed_ms"] = c.elapsed_ms;
      j["checks"].push_back(e);
    }
    return j;
  }
};

/// Wall-clock helper for per-check timings.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace anfan
