#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "loctk/dsl.hpp"
#include "loctk/error.hpp"

using namespace loctk;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSmall = R"(# two frames and a map between them
poset vee { l; r; t; l < t; r < t; }
frame F = downsets vee
frame two = chain 2
map embed : two -> F { e0 -> e0; e1 -> e4; }
joins all on F = full
)";

}  // namespace

TEST_CASE("parsing materializes every declaration kind") {
  Workspace w = parse_workspace(kSmall);
  CHECK(w.posets.size() == 1);
  CHECK(w.frames.size() == 2);
  CHECK(w.maps.size() == 1);
  CHECK(w.joins.size() == 1);
  int f = w.frame_index("F");
  REQUIRE(f >= 0);
  CHECK(w.frames[f].frame.size == 5);  // downsets of the vee
  FrameMap m = workspace_map(w, w.maps[0]);
  validate_frame_map(m);
  GroundJoinFamily j = workspace_family(w, w.joins[0]);
  CHECK(j.entries.size() == 32);  // every subset of a 5-element frame
}

TEST_CASE("canonical print is idempotent and normalizing") {
  std::string once = print_canonical(parse_workspace(kSmall));
  std::string twice = print_canonical(parse_workspace(once, "reparse"));
  CHECK(once == twice);
  // constructor frames normalize to explicit orders with default names
  CHECK(once.find("frame two = order {") != std::string::npos);
  CHECK(once.find("chain") == std::string::npos);
}

TEST_CASE("the shipped corpus round-trips byte for byte") {
  std::string src = slurp(std::string(LOCTK_SOURCE_DIR) + "/tests/data/corpus.lk");
  Workspace w = parse_workspace(src, "corpus.lk");
  CHECK(!w.frames.empty());
  CHECK(!w.rings.empty());
  CHECK(!w.maps.empty());
  CHECK(!w.joins.empty());
  std::string once = print_canonical(w);
  std::string twice = print_canonical(parse_workspace(once, "roundtrip"));
  CHECK(once == twice);
}

TEST_CASE("declarations may reference across files and forward") {
  Workspace w = parse_files({
      {"a.lk", "frame F = downsets P\n"},
      {"b.lk", "poset P { x; y; x < y; }\nring S = product A B\n"},
      {"c.lk", "ring A = Z / 2\nring B = Z / 3\n"},
  });
  CHECK(w.frames[0].frame.size == 3);
  CHECK(w.rings[w.ring_index("S")].ring.size == 6);
}

TEST_CASE("syntax errors carry file and line") {
  try {
    parse_workspace("frame F = chain\n", "bad.lk");
    FAIL("expected a syntax error");
  } catch (const ToolError& e) {
    CHECK(e.code() == Errc::syntax_error);
    CHECK(std::string(e.what()).find("bad.lk:") != std::string::npos);
  }
  try {
    parse_workspace("frame F = chain 2\nmap m F { }\n", "bad.lk");
    FAIL("expected a syntax error");
  } catch (const ToolError& e) {
    CHECK(e.code() == Errc::syntax_error);
    CHECK(std::string(e.what()).find("bad.lk:2") != std::string::npos);
  }
}

TEST_CASE("names are unique per kind") {
  CHECK_THROWS_WITH_AS(parse_workspace("frame F = chain 2\nframe F = chain 3\n"),
                       doctest::Contains("DuplicateName"), ToolError);
  // but the same name may serve different kinds
  Workspace w = parse_workspace("poset F { a; }\nframe F = downsets F\n");
  CHECK(w.poset_index("F") == 0);
  CHECK(w.frame_index("F") == 0);
}

TEST_CASE("unresolved references are reported by kind") {
  CHECK_THROWS_WITH_AS(parse_workspace("frame F = downsets nowhere\n"),
                       doctest::Contains("UnresolvedReference"), ToolError);
  CHECK_THROWS_WITH_AS(
      parse_workspace("frame F = chain 2\nmap m : F -> G { e0 -> e0; }\n"),
      doctest::Contains("UnresolvedReference"), ToolError);
}

TEST_CASE("self-referential rings are rejected") {
  CHECK_THROWS_WITH_AS(parse_workspace("ring R = product R R\n"),
                       doctest::Contains("depends on itself"), ToolError);
}

TEST_CASE("degenerate constructor parameters are rejected") {
  CHECK_THROWS_WITH_AS(parse_workspace("frame F = chain 0\n"),
                       doctest::Contains("InvalidDeclaration"), ToolError);
  CHECK_THROWS_WITH_AS(parse_workspace("ring R = Z / 0\n"),
                       doctest::Contains("InvalidDeclaration"), ToolError);
}

TEST_CASE("order frames must be distributive lattices") {
  // pentagon: bottom < a < b < top and bottom < c < top
  const char* pentagon =
      "frame N = order { x0; a; b; c; x1;"
      " x0 < a; a < b; b < x1; x0 < c; c < x1; }\n";
  CHECK_THROWS_WITH_AS(parse_workspace(pentagon),
                       doctest::Contains("NotDistributive"), ToolError);
}

TEST_CASE("map declarations are checked before materialization") {
  const char* head = "frame A = chain 3\nframe B = boolean 2\n";
  // a missing interior image
  CHECK_THROWS_WITH_AS(
      parse_workspace(std::string(head) + "map m : A -> B { e0 -> e0; e2 -> e3; }\n"),
      doctest::Contains("InvalidDeclaration"), ToolError);
  // an endpoint sent astray
  CHECK_THROWS_WITH_AS(
      parse_workspace(std::string(head) +
                      "map m : A -> B { e0 -> e3; e1 -> e1; e2 -> e3; }\n"),
      doctest::Contains("InvalidDeclaration"), ToolError);
  // conflicting assignments for one element
  CHECK_THROWS_WITH_AS(
      parse_workspace(std::string(head) +
                      "map m : A -> B { e1 -> e1; e1 -> e2; e2 -> e3; }\n"),
      doctest::Contains("InvalidDeclaration"), ToolError);
  // endpoints may be left implicit
  Workspace w =
      parse_workspace(std::string(head) + "map m : A -> B { e1 -> e1; }\n");
  FrameMap m = workspace_map(w, w.maps[0]);
  CHECK(m.img == std::vector<int32_t>{0, 1, 3});
  // law violations surface as map validation failures
  CHECK_THROWS_AS(parse_workspace(std::string(head) +
                                  "map m : B -> A { e1 -> e1; e2 -> e1; }\n"),
                  ToolError);
}

TEST_CASE("join declarations must list true joins") {
  const char* head = "frame B = boolean 2\n";
  CHECK_THROWS_WITH_AS(
      parse_workspace(std::string(head) +
                      "joins j on B = only { e1 <- { e1 e2 }; }\n"),
      doctest::Contains("the parts join to"), ToolError);
  Workspace w = parse_workspace(
      std::string(head) +
      "joins j on B = full except { e3 <- { e1 e2 }; e3 <- { e0 e1 e2 }; }\n");
  GroundJoinFamily full = full_join_family(w.frames[0].frame);
  GroundJoinFamily j = workspace_family(w, w.joins[0]);
  CHECK(j.entries.size() == full.entries.size() - 2);
  validate_family(w.frames[0].frame, j);
}

TEST_CASE("table rings parse and print by rows") {
  const char* src =
      "ring F2 = table {\n"
      "  elements z o;\n"
      "  add z { z o };\n"
      "  add o { o z };\n"
      "  mul z { z z };\n"
      "  mul o { z o };\n"
      "}\n";
  Workspace w = parse_workspace(src);
  CHECK(w.rings[0].ring.size == 2);
  CHECK(ring_isomorphic(w.rings[0].ring, ring_cyclic(2)));
  std::string out = print_canonical(w);
  CHECK(out.find("elements z o;") != std::string::npos);
  CHECK(print_canonical(parse_workspace(out)) == out);

  const char* missing =
      "ring F2 = table {\n"
      "  elements z o;\n"
      "  add z { z o };\n"
      "  mul z { z z };\n"
      "  mul o { z o };\n"
      "}\n";
  CHECK_THROWS_WITH_AS(parse_workspace(missing), doctest::Contains("missing rows"),
                       ToolError);
}

TEST_CASE("spaces check their point lists") {
  CHECK_THROWS_WITH_AS(parse_workspace("space X { points a a; }\n"),
                       doctest::Contains("InvalidDeclaration"), ToolError);
  CHECK_THROWS_WITH_AS(parse_workspace("space X { points a b; open { c }; }\n"),
                       doctest::Contains("UnresolvedReference"), ToolError);
  Workspace w = parse_workspace("space X { points a b; open { a }; }\n");
  CHECK(w.spaces[0].space.opens.size() == 3);
  // opens close under union and intersection on parse
  Workspace w2 = parse_workspace(
      "space Y { points a b c; open { a }; open { b }; }\n");
  CHECK(w2.spaces[0].space.opens.size() == 5);
}
