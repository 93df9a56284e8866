#pragma once

#include "fuzzlat/generate.hpp"

namespace fuzzlat {

struct SuiteCheck {
  std::string id;     // property label; failure messages carry it verbatim
  std::string status; // "pass" | "fail" | "skip"
  std::string mode;   // enumeration mode of the sweep
  std::string detail; // witness on failure, reason on skip
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool passed() const;
};

std::vector<std::string> suite_names();

// Runs one named suite against the bundle; unknown names are input errors.
SuiteReport run_suite(const ModelBundle& mb, const std::string& suite,
                      const Budget& b);

json suite_report_to_json(const SuiteReport& r);

} // namespace fuzzlat
