#include <doctest.h>

#include "loctk/coproduct.hpp"
#include "loctk/error.hpp"
#include "loctk/frame.hpp"
#include "loctk/frame_map.hpp"

using namespace loctk;

TEST_CASE("coproduct with the initial frame changes nothing") {
  Frame two = chain_frame(2);
  for (const Frame& f : {chain_frame(4), boolean_frame(2)}) {
    CoproductFrame c = coproduct(two, f);
    CHECK(c.base.size == f.size);
    CHECK(frame_isomorphic(c.base, f));
    FrameMap inj{&c.right, &c.base, c.inj_right};
    CHECK(map_classify(inj).bijective);
  }
}

TEST_CASE("coproducts of powersets multiply their atom counts") {
  Frame b1 = boolean_frame(1);
  Frame b2 = boolean_frame(2);
  CHECK(coproduct(b1, b1).base.size == 2);  // 1x1 atoms
  CoproductFrame c12 = coproduct(b1, b2);
  CHECK(c12.base.size == 4);  // 1x2 atoms
  CHECK(frame_isomorphic(c12.base, b2));
  CoproductFrame c22 = coproduct(b2, b2);
  CHECK(c22.base.size == 16);  // 2x2 atoms
  CHECK(frame_isomorphic(c22.base, boolean_frame(4)));
}

TEST_CASE("coproduct of two three-chains is the six-element diamond") {
  Frame c3 = chain_frame(3);
  CoproductFrame c = coproduct(c3, c3);
  CHECK(c.base.size == 6);
  Poset grid = make_poset(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(frame_isomorphic(c.base, downset_frame(grid)));
}

TEST_CASE("coproduct is commutative up to isomorphism") {
  Frame a = chain_frame(3);
  Frame b = boolean_frame(2);
  CHECK(frame_isomorphic(coproduct(a, b).base, coproduct(b, a).base));
}

TEST_CASE("injections are frame maps and jointly generate") {
  Frame l = chain_frame(3);
  Frame r = boolean_frame(2);
  CoproductFrame c = coproduct(l, r);
  FrameMap il{&c.left, &c.base, c.inj_left};
  FrameMap ir{&c.right, &c.base, c.inj_right};
  validate_frame_map(il);
  validate_frame_map(ir);
  // every element is a join of pairwise meets of injected elements
  for (int x = 0; x < c.base.size; ++x) {
    int acc = c.base.bottom;
    for (int a = 0; a < l.size; ++a)
      for (int b = 0; b < r.size; ++b)
        if (c.ideals[x].test(a * r.size + b))
          acc = c.base.join(acc, c.base.meet(il(a), ir(b)));
    CHECK(acc == x);
  }
}

TEST_CASE("copair mediates and restricts to the injections") {
  Frame l = chain_frame(3);
  Frame r = boolean_frame(2);
  CoproductFrame c = coproduct(l, r);
  Frame m = boolean_frame(2);
  for (const FrameMap& hl : enumerate_frame_maps(l, m))
    for (const FrameMap& hr : enumerate_frame_maps(r, m)) {
      FrameMap h = copair(c, hl, hr);
      validate_frame_map(h);
      for (int a = 0; a < l.size; ++a) CHECK(h(c.inj_left[a]) == hl(a));
      for (int b = 0; b < r.size; ++b) CHECK(h(c.inj_right[b]) == hr(b));
    }
  // the copair of the injections is the identity
  FrameMap il{&c.left, &c.base, c.inj_left};
  FrameMap ir{&c.right, &c.base, c.inj_right};
  FrameMap id = copair(c, il, ir);
  for (int x = 0; x < c.base.size; ++x) CHECK(id(x) == x);
}

TEST_CASE("diagonal complement in a boolean square") {
  Frame b2 = boolean_frame(2);
  CoproductFrame c = coproduct(b2, b2);
  int d = diagonal_complement(c);
  CHECK(d != c.base.bottom);
  // the diagonal itself, seeded by atom squares
  Bits seed(b2.size * b2.size);
  atoms(b2).for_each([&](int a) { seed.set(a * b2.size + a); });
  Bits diag_ideal = c_ideal_closure(b2, b2, seed);
  int diag = -1;
  for (int x = 0; x < c.base.size; ++x)
    if (c.ideals[x] == diag_ideal) diag = x;
  REQUIRE(diag >= 0);
  CHECK(c.base.meet(d, diag) == c.base.bottom);
  CHECK(c.base.join(d, diag) == c.base.top);
}

TEST_CASE("coproduct element cap is enforced") {
  ScopedLimits tight(Limits{.max_elements = 64,
                            .max_coproduct = 100,
                            .max_full_family = 16,
                            .max_points = 64});
  Frame b3 = boolean_frame(3);
  CHECK_THROWS_WITH_AS((void)coproduct(b3, b3), doctest::Contains("ResourceCap"),
                       ToolError);
}

TEST_CASE("inverse limit of a constant system is the frame itself") {
  Frame b2 = boolean_frame(2);
  DirectedSystem sys;
  sys.index = make_poset(2, {{0, 1}});
  sys.frames.push_back(b2);
  sys.frames.push_back(b2);
  sys.maps.assign(4, {});
  sys.maps[sys.pair_slot(0, 1)] = identity_map(b2).img;
  LimitFrame lim = frame_inverse_limit(sys);
  CHECK(frame_isomorphic(lim.base, b2));
  for (size_t t = 0; t < lim.threads.size(); ++t)
    CHECK(lim.threads[t][0] == lim.threads[t][1]);  // constant threads
}

TEST_CASE("incoherent connecting maps are rejected") {
  Frame b2 = boolean_frame(2);
  DirectedSystem sys;
  sys.index = make_poset(3, {{0, 1}, {1, 2}});
  sys.frames = {b2, b2, b2};
  sys.maps.assign(9, {});
  std::vector<int32_t> swap_atoms = {0, 2, 1, 3};
  sys.maps[sys.pair_slot(0, 1)] = identity_map(b2).img;
  sys.maps[sys.pair_slot(1, 2)] = identity_map(b2).img;
  sys.maps[sys.pair_slot(0, 2)] = swap_atoms;  // disagrees with the composite
  CHECK_THROWS_WITH_AS((void)frame_inverse_limit(sys),
                       doctest::Contains("IncoherentSystem"), ToolError);
}
