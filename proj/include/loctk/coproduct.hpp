#pragma once

#include <cstdint>
#include <vector>

#include "loctk/frame.hpp"
#include "loctk/frame_map.hpp"
#include "loctk/poset.hpp"

namespace loctk {

// The coproduct of two frames L, R is carried by their C-ideals: subsets of
// the grid L x R that are downward closed and closed under one-sided joins
// (joining first coordinates over a fixed second one and vice versa), and
// that contain the whole bottom cross { (a,b) : a = 0 or b = 0 }.
// A pair set is stored row-major: pair (a, b) is bit a*|R| + b.
struct CoproductFrame {
  Frame base;   // elements are the C-ideals in canonical (size, word) order
  Frame left;   // copy of L
  Frame right;  // copy of R
  std::vector<Bits> ideals;        // ideals[i] is the pair set of element i
  std::vector<int32_t> inj_left;   // frame map L -> base
  std::vector<int32_t> inj_right;  // frame map R -> base
  std::vector<int32_t> cells;      // (a,b) -> index of the principal C-ideal

  int cell(int a, int b) const { return cells[size_t(a) * right.size + b]; }
};

// Least C-ideal containing the seed: adds the bottom cross, then alternates
// one-sided join saturation and downward closure until a fixpoint.
Bits c_ideal_closure(const Frame& l, const Frame& r, Bits seed);

// Generates every C-ideal as a join of principal ones (closures of single
// pairs), closing the collection under pairwise meet (intersection) and
// pairwise join (closure of union), then builds and validates the frame.
CoproductFrame coproduct(const Frame& l, const Frame& r);

// The element sending h to h_left(a) /\ h_right(b) over the pairs of each
// ideal; post-checked to be a frame map agreeing with both injections, with
// a generator certificate that makes it the only such map.
FrameMap copair(const CoproductFrame& c, const FrameMap& h_left, const FrameMap& h_right);

// Index of the closure of { (a,b) : a /\ b = 0 } in the square coproduct.
int diagonal_complement(const CoproductFrame& c);

// Directed system of frames: index poset, one frame per index element, and
// for each strictly comparable pair i < j a connecting frame map
// frames[j] -> frames[i], keyed (i, j).
struct DirectedSystem {
  Poset index;
  std::vector<Frame> frames;
  std::vector<std::vector<int32_t>> maps;  // flattened by pair slot; see pair_slot
  int pair_slot(int i, int j) const { return i * index.size + j; }
};

struct LimitFrame {
  Frame base;  // thread t_x <-> index x, ordered pointwise
  std::vector<std::vector<int32_t>> threads;  // threads[k][i]: component at index i
};

// Threads of the system: tuples x with maps[(i,j)](x_j) = x_i for all
// i <= j, ordered componentwise.  Joins and meets are computed pointwise
// and revalidated.
LimitFrame frame_inverse_limit(const DirectedSystem& sys);

}  // namespace loctk
