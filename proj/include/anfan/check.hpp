#pragma once

#include <string>
#include <vector>

namespace anfan {

/// Accumulator for exhaustive verification passes.
struct CheckReport {
  bool pass = true;
  int checked = 0;
  std::vector<std::string> failures;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }

  void merge(const CheckReport& other) {
    checked += other.checked;
    if (!other.pass) pass = false;
    failures.insert(failures.end(), other.failures.begin(),
                    other.failures.end());
  }
};

inline std::string join_failures(const CheckReport& rep, std::size_t cap = 5) {
  std::string s;
  for (std::size_t i = 0; i < rep.failures.size() && i < cap; ++i) {
    if (i) s += "; ";
    s += rep.failures[i];
  }
  if (rep.failures.size() > cap) s += "; ...";
  return s;
}

}  // namespace anfan
