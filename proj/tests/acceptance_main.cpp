// Acceptance gate: one line per criterion, nonzero exit when any fails.
// Criteria 1..14 are the corpus-wide law checks A1..A14 at default options;
// criterion 1 must additionally finish inside its time budget.  Criterion 15
// requires deterministic output: canonical-print idempotence on the shipped
// sample workspace, byte-identical golden reports, and the whole run inside
// its overall budget.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "loctk/dsl.hpp"
#include "loctk/report.hpp"
#include "loctk/suite.hpp"

namespace {

constexpr int64_t kSliceBudgetMillis = 30000;   // criterion 1
constexpr int64_t kTotalBudgetMillis = 120000;  // criterion 15

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void line(int criterion, bool ok, const std::string& note) {
  std::printf("criterion %2d: %s  %s\n", criterion, ok ? "pass" : "FAIL",
              note.c_str());
  if (!ok) ++failures;
}

}  // namespace

int main() {
  loctk::SuiteResult suite = loctk::run_suite(loctk::SuiteOptions{});

  for (int k = 1; k <= 14; ++k) {
    const loctk::CheckResult* c = suite.find("A" + std::to_string(k));
    if (!c) {
      const loctk::CheckResult* a0 = suite.find("A0");
      line(k, false,
           a0 && !a0->pass ? "not run, corpus integrity failed: " + a0->detail
                           : "check did not run");
      continue;
    }
    bool ok = c->pass;
    std::string note = c->name + ": " + c->detail;
    if (k == 1) {
      ok = ok && c->millis < kSliceBudgetMillis;
      note += " [" + std::to_string(c->millis) + " ms of " +
              std::to_string(kSliceBudgetMillis) + "]";
    }
    line(k, ok, note);
  }

  bool ok15 = true;
  std::string note15;
  auto complain = [&](const std::string& msg) {
    ok15 = false;
    if (!note15.empty()) note15 += "; ";
    note15 += msg;
  };
  try {
    const std::string root = LOCTK_SOURCE_DIR;
    std::string src = slurp(root + "/tests/data/corpus.lk");
    loctk::Workspace w = loctk::parse_workspace(src, "corpus.lk");
    std::string once = loctk::print_canonical(w);
    std::string twice =
        loctk::print_canonical(loctk::parse_workspace(once, "roundtrip"));
    if (once != twice) complain("canonical print is not idempotent");

    struct Golden {
      const char* file;
      loctk::Json doc;
    };
    const Golden goldens[] = {
        {"spec_r12.json", loctk::ring_report(w, "R12")},
        {"analyze_square_partial.json", loctk::analyze_report(w, "square", "partial")},
        {"coproduct_three_three.json",
         loctk::coproduct_report(w, "three", "three", true)},
    };
    for (const Golden& g : goldens)
      if (g.doc.dump(2) + "\n" != slurp(root + "/tests/golden/" + g.file))
        complain(std::string("report drifted from golden ") + g.file);

    if (suite.total_millis >= kTotalBudgetMillis)
      complain("run took " + std::to_string(suite.total_millis) + " ms");
  } catch (const std::exception& e) {
    complain(e.what());
  }
  if (ok15)
    note15 = "canonical round-trip, 3 golden reports, " +
             std::to_string(suite.total_millis) + " ms of " +
             std::to_string(kTotalBudgetMillis);
  line(15, ok15, note15);

  std::printf("%d of 15 criteria passed\n", 15 - failures);
  return failures == 0 ? 0 : 1;
}
