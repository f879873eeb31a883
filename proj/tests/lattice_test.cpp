#include <doctest.h>

#include <algorithm>

#include "loctk/error.hpp"
#include "loctk/frame.hpp"
#include "loctk/poset.hpp"
#include "loctk/space.hpp"

using namespace loctk;

namespace {

// the 2x2 grid: two incomparable middles over a corner, joined at the top
Poset grid_poset() {
  return make_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                    {"p00", "p01", "p10", "p11"});
}

// largest c with c /\ a <= b, found by plain scan
int heyting_by_scan(const Frame& f, int a, int b) {
  int best = -1;
  for (int c = 0; c < f.size; ++c)
    if (f.leq(f.meet(c, a), b) && (best < 0 || f.leq(best, c))) best = c;
  // the candidates are closed under join, so the maximum is unique; verify
  for (int c = 0; c < f.size; ++c)
    if (f.leq(f.meet(c, a), b)) REQUIRE(f.leq(c, best));
  return best;
}

}  // namespace

TEST_CASE("chain frames: order, tables, endpoints") {
  Frame c = chain_frame(4);
  CHECK(c.size == 4);
  CHECK(c.bottom == 0);
  CHECK(c.top == 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      CHECK(c.join(a, b) == std::max(a, b));
      CHECK(c.meet(a, b) == std::min(a, b));
      CHECK(c.leq(a, b) == (a <= b));
    }
}

TEST_CASE("boolean frames are powersets") {
  Frame b3 = boolean_frame(3);
  CHECK(b3.size == 8);
  CHECK(atoms(b3).count() == 3);
  CHECK(is_boolean_frame(b3));
  CHECK(complemented_elements(b3).count() == 8);
  // index order extends the order of the lattice
  for (int a = 0; a < b3.size; ++a)
    for (int b = 0; b < b3.size; ++b)
      if (b3.leq(a, b)) CHECK(a <= b);
}

TEST_CASE("down-sets of the grid form the six-element diamond") {
  Frame g = downset_frame(grid_poset());
  CHECK(g.size == 6);  // {}, {00}, {00,01}, {00,10}, {00,01,10}, all
  CHECK(atoms(g).count() == 1);
  CHECK_FALSE(is_boolean_frame(g));
  CHECK(complemented_elements(g).count() == 2);
}

TEST_CASE("heyting arrow against a brute-force oracle") {
  for (const Frame& f :
       {chain_frame(3), boolean_frame(2), downset_frame(grid_poset()), chain_frame(5)})
    for (int a = 0; a < f.size; ++a)
      for (int b = 0; b < f.size; ++b)
        CHECK(f.heyting(a, b) == heyting_by_scan(f, a, b));
}

TEST_CASE("boolean heyting arrow is complement-join") {
  Frame b = boolean_frame(3);
  for (int a = 0; a < b.size; ++a) {
    int na = b.pseudo_not(a);
    CHECK(b.meet(a, na) == b.bottom);
    CHECK(b.join(a, na) == b.top);
    for (int y = 0; y < b.size; ++y) CHECK(b.heyting(a, y) == b.join(na, y));
  }
}

TEST_CASE("meet of a subset agrees with folding") {
  Frame g = downset_frame(grid_poset());
  for (int mask = 0; mask < (1 << g.size); ++mask) {
    Bits s(g.size);
    int fold = g.top;
    for (int i = 0; i < g.size; ++i)
      if (mask >> i & 1) {
        s.set(i);
        fold = g.meet(fold, i);
      }
    CHECK(meet_all(g, s) == fold);
  }
}

TEST_CASE("join of the empty set is bottom") {
  Frame c = chain_frame(3);
  CHECK(join_all(c, Bits(c.size)) == c.bottom);
  CHECK(meet_all(c, Bits(c.size)) == c.top);
}

TEST_CASE("well below: complemented elements are way inside everything above") {
  Frame b = boolean_frame(2);
  for (int a = 0; a < b.size; ++a)
    for (int x = 0; x < b.size; ++x)
      CHECK(well_below(b, a, x) == b.leq(a, x));  // boolean: coincide
  Frame c = chain_frame(3);
  CHECK(well_below(c, 0, 1));
  CHECK_FALSE(well_below(c, 1, 1));  // nothing splits the middle of a chain
  CHECK(well_below(c, 1, 2));        // top always admits the witness 1
}

TEST_CASE("prime elements of a chain are every element but top") {
  Frame c = chain_frame(4);
  Bits p = prime_elements(c);
  CHECK(p.count() == 3);
  CHECK_FALSE(p.test(c.top));
}

TEST_CASE("frame isomorphism ignores labels but not shape") {
  Frame a = downset_frame(grid_poset());
  Frame b = downset_frame(make_poset(4, {{3, 2}, {3, 1}, {2, 0}, {1, 0}}));
  CHECK(frame_isomorphic(a, b));  // same grid upside down and relabeled
  CHECK_FALSE(frame_isomorphic(a, boolean_frame(2)));
  CHECK_FALSE(frame_isomorphic(chain_frame(4), boolean_frame(2)));  // same size
}

TEST_CASE("non-lattices and non-distributive lattices are rejected") {
  // two maximal elements: no top, no joins
  CHECK_THROWS_AS((void)build_frame_from_order(make_poset(2, {})), ToolError);
  // diamond: three incomparable middles
  Poset m3 = make_poset(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_WITH_AS((void)build_frame_from_order(m3),
                       doctest::Contains("NotDistributive"), ToolError);
  // pentagon
  Poset n5 = make_poset(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  CHECK_THROWS_WITH_AS((void)build_frame_from_order(n5),
                       doctest::Contains("NotDistributive"), ToolError);
}

TEST_CASE("validate_frame catches a corrupted join table") {
  Frame b = boolean_frame(2);
  validate_frame(b);
  b.join_t[size_t(1) * b.size + 2] = 0;
  CHECK_THROWS_AS(validate_frame(b), ToolError);
}

TEST_CASE("element cap is a hard error") {
  ScopedLimits tight(Limits{.max_elements = 7,
                            .max_coproduct = 4096,
                            .max_full_family = 16,
                            .max_points = 64});
  CHECK_THROWS_WITH_AS((void)boolean_frame(3), doctest::Contains("ResourceCap"),
                       ToolError);
  CHECK(chain_frame(7).size == 7);
}

TEST_CASE("posets: closure, cycles, covers, census") {
  Poset p = make_poset(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));  // transitive closure
  CHECK_THROWS_WITH_AS((void)make_poset(2, {{0, 1}, {1, 0}}),
                       doctest::Contains("NotAPoset"), ToolError);
  std::vector<std::pair<int, int>> cov = cover_relation(p);
  REQUIRE(cov.size() == 2);
  CHECK(cov[0] == std::pair<int, int>{0, 1});
  CHECK(cov[1] == std::pair<int, int>{1, 2});
  // unlabeled posets: 1 empty, 1 singleton, 2 on two points, 5 on three
  CHECK(all_posets_up_to(3).size() == 1 + 1 + 2 + 5);
}

TEST_CASE("linear extension is ascending and index-stable") {
  Poset p = make_poset(4, {{2, 0}, {3, 1}});
  std::vector<int> ext = linear_extension(p);
  std::vector<int> seen;
  for (int i : ext) {
    for (int j : seen) CHECK_FALSE((p.leq(i, j) && i != j));
    seen.push_back(i);
  }
  CHECK(int(ext.size()) == p.size);
}

TEST_CASE("opens of a space are the up-sets of its specialization order") {
  FiniteSpace sierp = make_space(2, {0b01}, {"o", "c"}, true);
  Frame f = opens_frame(sierp);
  CHECK(f.size == 3);
  CHECK(space_T0(sierp));
  Poset spec = specialization_order(sierp);
  for (uint64_t m : sierp.opens)
    for (int a = 0; a < sierp.points; ++a)
      for (int b = 0; b < sierp.points; ++b)
        if ((m >> a & 1) && spec.leq(a, b)) CHECK((m >> b & 1));
  CHECK(frame_isomorphic(f, chain_frame(3)));
}

TEST_CASE("space census at three points") {
  CHECK(all_spaces_up_to(2, false).size() == 1 + 1 + 3);   // all topologies
  CHECK(all_spaces_up_to(2, true).size() == 1 + 1 + 2);    // T0 only
  CHECK(all_spaces_up_to(3, true).size() == 1 + 1 + 2 + 5);  // matches posets
}
