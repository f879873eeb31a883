#include <doctest.h>

#include <vector>

#include "loctk/error.hpp"
#include "loctk/frame.hpp"
#include "loctk/frame_map.hpp"

using namespace loctk;

namespace {

// all functions dom -> cod satisfying the frame map laws, by raw scan
int count_maps_by_scan(const Frame& dom, const Frame& cod) {
  std::vector<int32_t> img(dom.size, 0);
  int found = 0;
  while (true) {
    bool ok = img[dom.bottom] == cod.bottom && img[dom.top] == cod.top;
    for (int a = 0; ok && a < dom.size; ++a)
      for (int b = a; ok && b < dom.size; ++b) {
        if (img[dom.join(a, b)] != cod.join(img[a], img[b])) ok = false;
        if (img[dom.meet(a, b)] != cod.meet(img[a], img[b])) ok = false;
      }
    if (ok) ++found;
    int i = dom.size - 1;
    while (i >= 0 && img[i] == cod.size - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return found;
}

}  // namespace

TEST_CASE("map enumeration agrees with the brute-force count") {
  std::vector<Frame> frames;
  frames.push_back(chain_frame(2));
  frames.push_back(chain_frame(3));
  frames.push_back(boolean_frame(2));
  frames.push_back(downset_frame(make_poset(3, {{0, 1}, {0, 2}})));
  for (const Frame& dom : frames)
    for (const Frame& cod : frames) {
      std::vector<FrameMap> maps = enumerate_frame_maps(dom, cod);
      CHECK(int(maps.size()) == count_maps_by_scan(dom, cod));
      for (const FrameMap& m : maps) validate_frame_map(m);
      for (size_t i = 1; i < maps.size(); ++i)
        CHECK(maps[i - 1].img < maps[i].img);  // enumeration order
    }
}

TEST_CASE("the two-element frame is the initial object") {
  Frame two = chain_frame(2);
  for (const Frame& cod : {chain_frame(5), boolean_frame(3)})
    CHECK(enumerate_frame_maps(two, cod).size() == 1);
}

TEST_CASE("frame maps out of a boolean source count its points to powers") {
  // Hom(B2, B2): each atom goes where some point sends it: 2^2 maps
  Frame b2 = boolean_frame(2);
  CHECK(enumerate_frame_maps(b2, b2).size() == 4);
  int bijective = 0;
  for (const FrameMap& m : enumerate_frame_maps(b2, b2))
    if (map_classify(m).bijective) ++bijective;
  CHECK(bijective == 2);  // the two atom permutations
}

TEST_CASE("validate_frame_map rejects broken images") {
  Frame c3 = chain_frame(3);
  Frame b2 = boolean_frame(2);
  // both atoms onto the chain's middle: their join must hit top but cannot
  FrameMap bad{&b2, &c3, {0, 1, 1, 2}};
  CHECK_THROWS_AS(validate_frame_map(bad), ToolError);
  FrameMap flipped{&c3, &c3, {2, 1, 0}};
  CHECK_THROWS_WITH_AS(validate_frame_map(flipped),
                       doctest::Contains("EndpointViolation"), ToolError);
}

TEST_CASE("left adjoint satisfies the galois equivalence") {
  Frame dom = downset_frame(make_poset(3, {{0, 1}, {0, 2}}));
  Frame cod = boolean_frame(2);
  for (const FrameMap& f : enumerate_frame_maps(dom, cod)) {
    std::vector<int32_t> adj = left_adjoint(f);
    for (int m = 0; m < cod.size; ++m)
      for (int l = 0; l < dom.size; ++l)
        CHECK(dom.leq(adj[m], l) == cod.leq(m, f(l)));
  }
}

TEST_CASE("openness by heyting preservation matches the frobenius identity") {
  Frame c3 = chain_frame(3);
  Frame b2 = boolean_frame(2);
  std::vector<std::pair<const Frame*, const Frame*>> pairs = {
      {&c3, &c3}, {&c3, &b2}, {&b2, &b2}, {&b2, &c3}};
  for (auto [dom, cod] : pairs)
    for (const FrameMap& f : enumerate_frame_maps(*dom, *cod)) {
      std::vector<int32_t> adj = left_adjoint(f);
      bool frobenius = true;
      for (int a = 0; a < cod->size; ++a)
        for (int b = 0; b < dom->size; ++b)
          if (adj[cod->meet(a, f(b))] != dom->meet(adj[a], b)) frobenius = false;
      CHECK(is_open_map(f) == frobenius);
    }
}

TEST_CASE("collapsing the middle of a chain is not open") {
  Frame c3 = chain_frame(3);
  Frame c2 = chain_frame(2);
  FrameMap squash{&c3, &c2, {0, 0, 1}};
  validate_frame_map(squash);
  std::string witness;
  CHECK_FALSE(is_open_map(squash, &witness));
  CHECK_FALSE(witness.empty());
  // the arrow e1 -> e0 is bottom, but its image arrow is top
  CHECK(c3.heyting(1, 0) == 0);
  CHECK(c2.heyting(squash(1), squash(0)) == 1);
}

TEST_CASE("composition is associative and classified consistently") {
  Frame b2 = boolean_frame(2);
  std::vector<FrameMap> maps = enumerate_frame_maps(b2, b2);
  for (const FrameMap& f : maps)
    for (const FrameMap& g : maps) {
      FrameMap fg = compose(f, g);
      validate_frame_map(fg);
      for (int a = 0; a < b2.size; ++a) CHECK(fg(a) == f(g(a)));
      if (map_classify(f).bijective && map_classify(g).bijective)
        CHECK(map_classify(fg).bijective);
    }
  FrameMap id = identity_map(b2);
  CHECK(map_classify(id).bijective);
  CHECK(is_open_map(id));
}
