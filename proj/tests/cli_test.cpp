#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

const std::string kCli = LOCTK_CLI_PATH;
const std::string kCorpus = std::string(LOCTK_SOURCE_DIR) + "/tests/data/corpus.lk";

int decode_status(int rc) {
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

int run(const std::string& args) {
  std::string cmd = "'" + kCli + "' " + args + " > /dev/null 2>&1";
  return decode_status(std::system(cmd.c_str()));
}

struct Capture {
  int code = -1;
  std::string out;
};

Capture run_capture(const std::string& args) {
  std::string cmd = "'" + kCli + "' " + args + " 2> /dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  Capture c;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) c.out.append(buf, got);
  c.code = decode_status(pclose(p));
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("check accepts the shipped corpus") {
  CHECK(run("check '" + kCorpus + "'") == 0);
  Capture c = run_capture("check '" + kCorpus + "' --format json");
  CHECK(c.code == 0);
  nlohmann::json doc = nlohmann::json::parse(c.out);
  CHECK(doc["counts"]["frames"] == 5);
  CHECK(doc["counts"]["rings"] == 5);
  CHECK(doc["counts"]["maps"] == 2);
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("check /nonexistent/path.lk") == 2);
  CHECK(run("check /tmp") == 2);                    // directory, not a file
  CHECK(run("analyze '" + kCorpus + "' --frame nowhere") == 2);
  CHECK(run("points '" + kCorpus + "'") == 2);      // missing required option
  CHECK(run("analyze") == 2);                       // missing file argument
  CHECK(run("frobnicate '" + kCorpus + "'") == 2);  // unknown subcommand
}

TEST_CASE("resource caps exit with code 3") {
  CHECK(run("--cap-elements 4 analyze '" + kCorpus + "' --frame grid") == 3);
  CHECK(run("analyze '" + kCorpus + "' --frame grid --cap-elements 4") == 3);
  CHECK(run("analyze '" + kCorpus + "' --frame grid") == 0);
}

TEST_CASE("point counts respect the chosen join family") {
  Capture full = run_capture("points '" + kCorpus + "' --frame square --format json");
  CHECK(full.code == 0);
  CHECK(nlohmann::json::parse(full.out)["count"] == 2);
  Capture part = run_capture("points '" + kCorpus +
                             "' --frame square --joins partial --format json");
  CHECK(part.code == 0);
  nlohmann::json doc = nlohmann::json::parse(part.out);
  CHECK(doc["count"] == 3);
}

TEST_CASE("text and json formats both render") {
  Capture text = run_capture("analyze '" + kCorpus + "' --frame three");
  CHECK(text.code == 0);
  CHECK(text.out.find("elements") != std::string::npos);
  Capture js = run_capture("analyze '" + kCorpus + "' --frame three --format json");
  CHECK(js.code == 0);
  nlohmann::json doc = nlohmann::json::parse(js.out);
  CHECK(doc["elements"] == 3);
  CHECK(doc["spectrum"]["points"] == 2);
}

TEST_CASE("json reports are byte-stable against the golden copies") {
  struct Golden {
    const char* file;
    std::string args;
  };
  const Golden cases[] = {
      {"spec_r12.json", "spec '" + kCorpus + "' --ring R12 --format json"},
      {"analyze_square_partial.json",
       "analyze '" + kCorpus + "' --frame square --joins partial --format json"},
      {"coproduct_three_three.json",
       "coproduct '" + kCorpus +
           "' --left three --right three --verify-spatial --format json"},
  };
  for (const Golden& g : cases) {
    CAPTURE(g.file);
    Capture c = run_capture(g.args);
    CHECK(c.code == 0);
    CHECK(c.out == slurp(std::string(LOCTK_SOURCE_DIR) + "/tests/golden/" + g.file));
  }
}

TEST_CASE("suite runs clean and fails loudly when sabotaged") {
  CHECK(run("suite --max-poset 0 --max-ring 0 --mono-trials 0 --family-trials 0") == 0);
  Capture bad = run_capture(
      "suite --max-poset 3 --max-ring 4 --mono-trials 10 --family-trials 5"
      " --inject-defect --format json");
  CHECK(bad.code == 1);
  nlohmann::json doc = nlohmann::json::parse(bad.out);
  CHECK(doc["all_pass"] == false);
  CHECK(doc["checks"][0]["id"] == "A0");
  CHECK(doc["checks"][0]["pass"] == false);
}
