#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace midk {

/// One fixture of the bundled regression suite. Each fixture re-derives a
/// worked example or counterexample and compares the computed verdict (and,
/// where stated, the exact witness) against the expected one.
struct FixtureResult {
  std::string name;      // locus label, e.g. "example-1.3"
  std::string claim;     // what is being reproduced
  std::string expected;  // stated verdict
  std::string computed;  // verdict this build produced
  bool pass = false;
  nlohmann::json witness;  // certificate or payload backing the verdict
};

struct SuiteReport {
  std::vector<FixtureResult> fixtures;
  bool all_pass = true;
};

/// Runs every fixture. Never throws on a failing fixture; failures are rows.
SuiteReport run_paper_suite();

nlohmann::json to_json(const SuiteReport& report);

}  // namespace midk
