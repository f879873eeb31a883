#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loctk/frame.hpp"

namespace loctk {

// Map of frames: preserves binary joins, binary meets, bottom and top.
// Holds non-owning views; the frames must outlive the map.
struct FrameMap {
  const Frame* dom = nullptr;
  const Frame* cod = nullptr;
  std::vector<int32_t> img;

  int operator()(int a) const { return img[a]; }
};

FrameMap identity_map(const Frame& f);

// Throws with a witness pair when some law fails.
void validate_frame_map(const FrameMap& f);

// All frame maps dom -> cod, in lexicographic order of their image arrays.
// Backtracks over elements in index (= linear extension) order, checking
// meets against every earlier element and joins against every earlier pair
// whose join is the element being placed.
std::vector<FrameMap> enumerate_frame_maps(const Frame& dom, const Frame& cod);

// The left adjoint of f, as an element array cod -> dom:
// adj(m) = meet of { l : m <= f(l) }.  Well defined because finite frame
// maps preserve all (finite) meets.
std::vector<int32_t> left_adjoint(const FrameMap& f);

// Openness, decided two independent ways and cross-checked:
//  (a) f preserves arbitrary meets (binary plus top suffices at finite
//      scale) and relative pseudocomplements;
//  (b) the left adjoint satisfies adj(a /\ f(b)) = adj(a) /\ b.
// Disagreement raises CharacterizationMismatch.
bool is_open_map(const FrameMap& f, std::string* witness = nullptr);

struct MapClass {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;  // a bijective frame map is an isomorphism
};
MapClass map_classify(const FrameMap& f);

// Applies g first, then f; requires cod(g) and dom(f) to coincide.
FrameMap compose(const FrameMap& f, const FrameMap& g);

}  // namespace loctk
