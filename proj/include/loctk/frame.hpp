#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "loctk/bits.hpp"
#include "loctk/poset.hpp"

namespace loctk {

struct FiniteSpace;

// Finite frame: a finite distributive lattice, with all structure tabulated.
// Elements are dense indices 0..size-1 laid out along a fixed linear
// extension of the order, so index 0 is bottom and size-1 is top, and
// a <= b implies index(a) <= index(b).
struct Frame {
  int size = 0;
  std::vector<Bits> up;    // up[a] = { b : a <= b }
  std::vector<Bits> down;  // down[a] = { b : b <= a }
  std::vector<int32_t> join_t, meet_t;  // flattened size x size
  std::vector<std::string> names;
  int bottom = 0, top = 0;

  bool leq(int a, int b) const { return up[a].test(b); }
  int join(int a, int b) const { return join_t[size_t(a) * size + b]; }
  int meet(int a, int b) const { return meet_t[size_t(a) * size + b]; }

  // Relative pseudocomplement a -> b, the largest c with c /\ a <= b.
  // The table is filled on first use; concurrent callers are synchronized.
  int heyting(int a, int b) const;
  int pseudo_not(int a) const { return heyting(a, bottom); }

  const std::string& name(int i) const { return names[i]; }

 private:
  struct HeyCache {
    std::once_flag once;
    std::vector<int32_t> t;
  };
  mutable std::shared_ptr<HeyCache> hey_ = std::make_shared<HeyCache>();
};

// Builds and fully validates a frame from an order: relabels elements along
// the canonical linear extension, tabulates binary joins and meets (failing
// with a witness pair if some bound is missing), and checks distributivity
// on all triples.  `cap` bounds the element count; 0 means limits().max_elements.
Frame build_frame_from_order(const Poset& p, int cap = 0);

// Re-runs every structural check on an already built frame.
void validate_frame(const Frame& f);

Frame chain_frame(int n);    // total order on n >= 1 elements
Frame boolean_frame(int k);  // all subsets of k atoms, 2^k elements

std::vector<Bits> all_downsets(const Poset& p);
Frame downset_frame(const Poset& p);

// Frame of open sets of a finite space; element i is X.opens[i].
Frame opens_frame(const FiniteSpace& x);

// Join of an arbitrary subset (fold from bottom).
int join_all(const Frame& f, const Bits& s);

// Meet of an arbitrary subset, computed as the join of all common lower
// bounds rather than by folding.
int meet_all(const Frame& f, const Bits& s);

// a is way inside b: some c has a /\ c = 0 and b \/ c = 1.
bool well_below(const Frame& f, int a, int b);

Bits complemented_elements(const Frame& f);
bool is_boolean_frame(const Frame& f);

Bits atoms(const Frame& f);  // minimal nonzero elements

// p < 1 such that a /\ b <= p forces a <= p or b <= p.
Bits prime_elements(const Frame& f);

bool frame_equal(const Frame& a, const Frame& b);  // same layout and tables
bool frame_isomorphic(const Frame& a, const Frame& b);

Poset frame_order(const Frame& f);  // underlying poset view

}  // namespace loctk
