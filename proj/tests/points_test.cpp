#include <doctest.h>

#include <algorithm>

#include "loctk/error.hpp"
#include "loctk/frame.hpp"
#include "loctk/frame_map.hpp"
#include "loctk/points.hpp"
#include "loctk/space.hpp"

using namespace loctk;

namespace {

FiniteSpace sierpinski() { return make_space(2, {0, 2, 3}); }

Frame v_downsets() {
  // V shape: two minimal elements under a common top
  return downset_frame(make_poset(3, {{0, 2}, {1, 2}}));
}

}  // namespace

TEST_CASE("classical point counts on stock frames") {
  for (int n = 2; n <= 5; ++n)
    CHECK(classical_points(chain_frame(n)).size() == size_t(n - 1));
  for (int k = 0; k <= 3; ++k)
    CHECK(classical_points(boolean_frame(k)).size() == size_t(k));
  Poset v = make_poset(3, {{0, 2}, {1, 2}});
  CHECK(classical_points(downset_frame(v)).size() == 3);
}

TEST_CASE("points of the full family agree with the prime-element route") {
  for (const Frame& f : {chain_frame(2), chain_frame(4), boolean_frame(2),
                         v_downsets()}) {
    GroundJoinFamily full = full_join_family(f);
    validate_family(f, full);
    std::vector<PointFilter> rel = relative_points(f, full);
    std::vector<PointFilter> cls = classical_points(f);
    REQUIRE(rel.size() == cls.size());
    for (size_t i = 0; i < rel.size(); ++i) {
      CHECK(rel[i].members == cls[i].members);
      CHECK(rel[i].least == cls[i].least);
    }
  }
}

TEST_CASE("dropping join entries can only add points") {
  Frame b2 = boolean_frame(2);
  GroundJoinFamily full = full_join_family(b2);
  GroundJoinFamily trimmed = full;
  // forget every way of writing top as a join of strictly smaller parts
  std::erase_if(trimmed.entries, [&](const JoinEntry& e) {
    return e.target == b2.top && !e.parts.test(b2.top);
  });
  validate_family(b2, trimmed);
  std::vector<PointFilter> rel = relative_points(b2, trimmed);
  CHECK(relative_points(b2, full).size() == 2);
  REQUIRE(rel.size() == 3);
  // the new point is the filter generated by top alone
  bool found = false;
  for (const PointFilter& p : rel)
    if (p.least == b2.top && p.members.count() == 1) found = true;
  CHECK(found);
}

TEST_CASE("tampered families are rejected") {
  Frame c3 = chain_frame(3);
  GroundJoinFamily j = full_join_family(c3);
  REQUIRE(!j.entries.empty());
  j.entries[0].target = c3.top;  // entry 0 is the empty join, to bottom
  CHECK_THROWS_WITH_AS(validate_family(c3, j), doctest::Contains("BadJoinEntry"),
                       ToolError);
}

TEST_CASE("spectra of stock frames") {
  Spectrum s3 = classical_spectrum(chain_frame(3));
  CHECK(s3.pts.size() == 2);
  CHECK(homeomorphic(s3.space, sierpinski()));

  Spectrum sb = classical_spectrum(boolean_frame(2));
  CHECK(sb.pts.size() == 2);
  CHECK(homeomorphic(sb.space, discrete_space(2)));
  CHECK(sb.space.opens.size() == 4);

  // basic opens cover and distinguish in a spatial frame
  Frame f = v_downsets();
  Spectrum sv = spectrum_space(f, full_join_family(f));
  CHECK(sv.basic[f.bottom] == 0);
  CHECK(sv.basic[f.top] == sv.space.full_mask());
  for (int a = 0; a < f.size; ++a)
    for (int b = a + 1; b < f.size; ++b)
      CHECK(sv.basic[a] != sv.basic[b]);
}

TEST_CASE("sobriety of small spaces") {
  SoberReport sd = soberify(discrete_space(2));
  CHECK(sd.sober);
  CHECK(sd.injective);
  CHECK(sd.surjective);

  SoberReport ss = soberify(sierpinski());
  CHECK(ss.sober);

  FiniteSpace indiscrete = make_space(2, {0, 3});
  SoberReport si = soberify(indiscrete);
  CHECK(!si.sober);
  CHECK(!si.injective);  // both points have the same open neighborhoods
  CHECK(si.spectrum.pts.size() == 1);
}

TEST_CASE("mediating map through the spectrum") {
  Frame b2 = boolean_frame(2);
  GroundJoinFamily full = full_join_family(b2);
  Spectrum spec = spectrum_space(b2, full);

  SUBCASE("the basic assignment mediates by the identity") {
    Preinterpretation p{&spec.space, spec.basic};
    validate_preinterpretation(b2, full, p);
    std::vector<int> m = mediating_map(b2, full, spec, p);
    REQUIRE(m.size() == size_t(spec.space.points));
    for (size_t i = 0; i < m.size(); ++i) CHECK(m[i] == int(i));
  }

  SUBCASE("a one-point assignment lands on the matching filter") {
    FiniteSpace one = discrete_space(1);
    // send one atom to the whole point, the other to nothing
    Preinterpretation p{&one, {0, 1, 0, 1}};
    validate_preinterpretation(b2, full, p);
    std::vector<int> m = mediating_map(b2, full, spec, p);
    REQUIRE(m.size() == 1);
    const PointFilter& hit = spec.pts[m[0]];
    CHECK(hit.members.test(1));
    CHECK(!hit.members.test(2));
  }

  SUBCASE("meet violations are caught") {
    FiniteSpace one = discrete_space(1);
    Preinterpretation bad{&one, {0, 1, 1, 1}};  // both atoms full, meet empty
    CHECK_THROWS_WITH_AS(validate_preinterpretation(b2, full, bad),
                         doctest::Contains("InvalidPreinterpretation"), ToolError);
  }
}

TEST_CASE("frame maps into powersets decode to point tuples") {
  Frame c3 = chain_frame(3);
  BooleanPoints bp = boolean_valued_points(c3, boolean_frame(2));
  CHECK(bp.atom_list.size() == 2);
  CHECK(bp.maps.size() == 4);  // two classical points per atom
  CHECK(bp.bijective);

  BooleanPoints one = boolean_valued_points(boolean_frame(2), boolean_frame(1));
  CHECK(one.maps.size() == 2);
  CHECK(one.bijective);
}

TEST_CASE("hom set against a space matches continuous maps into the spectrum") {
  FiniteSpace sierp = sierpinski();
  AdjunctionReport a = adjunction_check(chain_frame(3), sierp);
  CHECK(a.frame_map_count == 3);
  CHECK(a.continuous_count == 3);
  CHECK(a.bijective);

  AdjunctionReport b = adjunction_check(boolean_frame(2), discrete_space(2));
  CHECK(b.frame_map_count == 4);
  CHECK(b.bijective);
}

TEST_CASE("frame maps transfer to point functions against the order") {
  Frame c3 = chain_frame(3);
  Frame b2 = boolean_frame(2);
  Spectrum sd = classical_spectrum(c3);
  Spectrum sc = classical_spectrum(b2);
  FrameMap f{&c3, &b2, {0, 1, 3}};  // atom 1 is the open the map tracks
  validate_frame_map(f);
  std::vector<int> g = interpret_map(f, sd, sc);
  REQUIRE(g.size() == size_t(sc.space.points));
  // pulling the basic opens back through g recovers f
  for (int l = 0; l < c3.size; ++l) {
    uint64_t pulled = 0;
    for (int q = 0; q < sc.space.points; ++q)
      if ((sd.basic[l] >> g[q]) & 1) pulled |= uint64_t{1} << q;
    CHECK(pulled == sc.basic[f(l)]);
  }

  // the identity interprets as the identity
  std::vector<int> idg = interpret_map(identity_map(c3), sd, sd);
  for (size_t q = 0; q < idg.size(); ++q) CHECK(idg[q] == int(q));
}
