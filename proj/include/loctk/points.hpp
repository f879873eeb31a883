#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loctk/frame.hpp"
#include "loctk/frame_map.hpp"
#include "loctk/space.hpp"

namespace loctk {

// Filter of a frame: contains top, omits bottom, upward closed, closed
// under binary meet.  In a finite frame every such set is the up-set of its
// least member, so `least` generates `members`.
struct PointFilter {
  Bits members;
  int least = -1;
};

// A registered family of joins: each entry certifies that `target` is the
// join of `parts`.  Primality of a filter is tested against registered
// entries only, so shrinking the family can only add points.
struct JoinEntry {
  int target = 0;
  Bits parts;
};

struct GroundJoinFamily {
  int frame_size = 0;
  std::vector<JoinEntry> entries;  // canonical order, deduplicated
};

void validate_family(const Frame& f, const GroundJoinFamily& j);

// Every subset paired with its join.  Only for frames small enough to scan
// the full powerset.
GroundJoinFamily full_join_family(const Frame& f);

// Filters that split every registered join: target in the filter forces
// some part in the filter.  Ordered by member bit vector.
std::vector<PointFilter> relative_points(const Frame& f, const GroundJoinFamily& j);

// Independent route: points from prime elements p (p < 1, and a /\ b <= p
// only when a <= p or b <= p) via the filter of elements not below p.
std::vector<PointFilter> classical_points(const Frame& f);

struct Spectrum {
  FiniteSpace space;
  std::vector<PointFilter> pts;
  std::vector<uint64_t> basic;  // basic[l]: the points whose filter holds l
};

Spectrum spectrum_space(const Frame& f, const GroundJoinFamily& j);
Spectrum classical_spectrum(const Frame& f);

// Point function induced by a frame map f: dom -> cod, sending each point
// of the cod-side spectrum to the preimage filter on the dom side.  Fails
// when a preimage is not among the dom-side points; certifies continuity.
std::vector<int> interpret_map(const FrameMap& f, const Spectrum& dom_spec,
                               const Spectrum& cod_spec);

// Assignment of an open of a space to each frame element, respecting top,
// bottom, binary meets, and every registered join.
struct Preinterpretation {
  const FiniteSpace* space = nullptr;
  std::vector<uint64_t> assign;  // per frame element, an open point set
};

void validate_preinterpretation(const Frame& f, const GroundJoinFamily& j,
                                const Preinterpretation& p);

// The unique continuous map from the assignment's space to the spectrum
// whose composite with the basic-open assignment recovers it.  Uniqueness
// is certified by exhausting all continuous maps into the spectrum.
std::vector<int> mediating_map(const Frame& f, const GroundJoinFamily& j,
                               const Spectrum& spec, const Preinterpretation& p);

// All continuous point functions between two finite spaces, each encoded as
// a target point per source point, in lexicographic order.
std::vector<std::vector<int>> continuous_maps(const FiniteSpace& from,
                                              const FiniteSpace& to);

// Frame maps into a Boolean frame versus tuples of classical points, one
// per atom: map f pairs with the tuple of filters { l : atom <= f(l) }.
struct BooleanPoints {
  std::vector<FrameMap> maps;                // Hom(L, B), lexicographic
  std::vector<std::vector<int>> decode;      // per map, point index per atom
  std::vector<int> atom_list;                // atoms of B in index order
  bool bijective = false;                    // decode is a bijection onto tuples
};
BooleanPoints boolean_valued_points(const Frame& l, const Frame& b);

struct SoberReport {
  bool sober = false;
  bool injective = false;
  bool surjective = false;
  std::vector<int> unit;  // spectrum point for each space point
  Spectrum spectrum;
  std::string witness;
};
SoberReport soberify(const FiniteSpace& x);

// Counts and pairs Hom(L, opens Y) with the continuous maps Y -> spectrum L,
// and certifies that the two canonical translations are mutually inverse.
struct AdjunctionReport {
  size_t frame_map_count = 0;
  size_t continuous_count = 0;
  bool bijective = false;
};
AdjunctionReport adjunction_check(const Frame& l, const FiniteSpace& y);

}  // namespace loctk
