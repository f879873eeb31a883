#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loctk/corpus.hpp"

namespace loctk {

struct SuiteOptions {
  CorpusOptions corpus;
  int mono_trials = 1000;   // randomized join subfamilies for monotonicity
  int family_trials = 200;  // randomized families for the compactness check
  uint64_t seed = 0x51D0C41E5EEDull;
  bool inject_defect = false;  // corrupt one corpus table; integrity must catch it
};

struct CheckResult {
  std::string id;      // stable identifier: A0 (integrity) through A14
  std::string name;
  bool pass = false;
  std::string detail;  // witness on failure, deterministic summary on success
  int64_t millis = 0;
};

struct SuiteResult {
  std::vector<CheckResult> checks;
  bool all_pass = false;
  int64_t total_millis = 0;

  const CheckResult* find(const std::string& id) const;
};

// Runs every law check over the corpus.  Never throws for a failing law;
// failures land in the corresponding CheckResult.  When the corpus itself
// fails validation (A0), the remaining checks are not run.
SuiteResult run_suite(const SuiteOptions& opt = {});

}  // namespace loctk
