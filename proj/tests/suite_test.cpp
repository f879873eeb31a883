#include <doctest.h>

#include "loctk/suite.hpp"

using namespace loctk;

namespace {

SuiteOptions small_options() {
  SuiteOptions opt;
  opt.corpus.max_poset = 3;
  opt.corpus.max_chain = 4;
  opt.corpus.max_boolean = 3;
  opt.corpus.max_ring = 6;
  opt.corpus.max_cyclic_factor = 3;
  opt.corpus.max_space_points = 3;
  opt.mono_trials = 50;
  opt.family_trials = 20;
  return opt;
}

}  // namespace

TEST_CASE("every law check passes on a reduced corpus") {
  SuiteResult r = run_suite(small_options());
  CHECK(r.all_pass);
  REQUIRE(r.checks.size() == 15);
  for (size_t i = 0; i < r.checks.size(); ++i) {
    CAPTURE(r.checks[i].id);
    CAPTURE(r.checks[i].detail);
    CHECK(r.checks[i].pass);
    CHECK(r.checks[i].id == "A" + std::to_string(i));
    CHECK(!r.checks[i].detail.empty());
  }
  CHECK(r.find("A7") != nullptr);
  CHECK(r.find("A15") == nullptr);
}

TEST_CASE("identical options give identical outcomes") {
  SuiteOptions opt = small_options();
  opt.mono_trials = 20;
  opt.family_trials = 10;
  SuiteResult a = run_suite(opt);
  SuiteResult b = run_suite(opt);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("an injected defect is caught by corpus integrity") {
  SuiteOptions opt = small_options();
  opt.inject_defect = true;
  SuiteResult r = run_suite(opt);
  CHECK(!r.all_pass);
  REQUIRE(r.checks.size() == 15);
  const CheckResult& a0 = r.checks.front();
  CHECK(a0.id == "A0");
  CHECK(!a0.pass);
  CHECK(a0.detail.find("join table wrong") != std::string::npos);
  // the law checks are reported but withheld on a bad corpus
  const CheckResult* a1 = r.find("A1");
  REQUIRE(a1 != nullptr);
  CHECK(!a1->pass);
  CHECK(a1->detail == "not run: corpus integrity failed");
}

TEST_CASE("a near-empty corpus still passes") {
  SuiteOptions opt;
  opt.corpus = CorpusOptions{.max_poset = 0,
                             .max_chain = 0,
                             .max_boolean = 0,
                             .max_ring = 0,
                             .max_cyclic_factor = 0,
                             .max_space_points = 0};
  opt.mono_trials = 0;
  opt.family_trials = 0;
  SuiteResult r = run_suite(opt);
  CHECK(r.all_pass);
  const CheckResult* a13 = r.find("A13");
  REQUIRE(a13 != nullptr);
  CHECK(a13->detail.find("not exercised") != std::string::npos);
}
