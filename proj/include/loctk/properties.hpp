#pragma once

#include <string>
#include <vector>

#include "loctk/coproduct.hpp"
#include "loctk/frame.hpp"
#include "loctk/points.hpp"
#include "loctk/space.hpp"

namespace loctk {

struct Verdict {
  bool holds = false;
  bool degenerate = false;  // one-element frame, where the question collapses
  std::string witness;      // populated when the property fails
};

// Points form an antichain under inclusion.  Cross-checked against a probe:
// no two distinct maps into a small Boolean frame may be pointwise ordered.
// Disagreement raises ShadowMismatch.
Verdict is_TU(const Frame& f);

// Strong Hausdorff separation, decided three independent ways on the square
// coproduct and on points, all cross-checked:
//  (1) every C-ideal above the complement of the diagonal is the set of
//      pairs whose meet lies below a unique element;
//  (2) every such C-ideal swallows (a,b) whenever it holds (a/\b, a/\b);
//  (3) no two distinct points meet nontrivially everywhere.
Verdict is_I_hausdorff(const Frame& f);

// Every element is the join of the elements way inside it.
Verdict is_regular(const Frame& f);

// Binary covers of top split by disjoint complements.
Verdict is_normal(const Frame& f);

// Registered covers of top admit finite subcovers, and every maximal ideal
// splits every registered join; cross-checked.
Verdict is_compact(const Frame& f, const GroundJoinFamily& j);

// Only bottom and top are complemented.
Verdict is_connected(const Frame& f);

// No complemented element of any probed coproduct f (+) m falls outside the
// image of the complemented elements of m under the right injection.
Verdict p_connected_probe(const Frame& f, const std::vector<const Frame*>& tests);

struct SeparationFlags {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
  bool t3 = false;  // t1 plus separation of points from closed sets
};
SeparationFlags space_separation(const FiniteSpace& x);

}  // namespace loctk
