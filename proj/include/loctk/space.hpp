#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loctk/poset.hpp"

namespace loctk {

// Finite topological space on at most 64 points.  Point sets are single-word
// masks.  The open family always contains the empty set and the full set and
// is closed under union and intersection; opens are kept sorted by
// (cardinality, mask value), which linearly extends inclusion.
struct FiniteSpace {
  int points = 0;
  std::vector<uint64_t> opens;
  std::vector<std::string> names;

  uint64_t full_mask() const {
    return points == 64 ? ~uint64_t{0} : (uint64_t{1} << points) - 1;
  }
  bool is_open(uint64_t s) const;
  int open_index(uint64_t s) const;  // -1 when not open
  const std::string& name(int i) const { return names[i]; }
};

// `complete` closes the family under union and intersection and adds the
// empty and full sets; otherwise the family must already be a topology.
FiniteSpace make_space(int n, std::vector<uint64_t> opens,
                       std::vector<std::string> names = {},
                       bool complete = false);

FiniteSpace discrete_space(int n);

// x is specialized by y (x lies in the closure of {y}) iff every open
// containing x contains y.  Opens are exactly the up-sets of this preorder.
bool specializes(const FiniteSpace& x, int a, int b);
Poset specialization_order(const FiniteSpace& x);  // only valid when T0

bool space_T0(const FiniteSpace& x);

bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b);
FiniteSpace disjoint_union_space(const FiniteSpace& a, const FiniteSpace& b);

// Space of all down-sets of a poset viewed as opens over its carrier,
// i.e. the carrier with the topology whose opens are the down-sets.
FiniteSpace downset_space(const Poset& p);

// All topologies on at most max_points points, one per homeomorphism class.
std::vector<FiniteSpace> all_spaces_up_to(int max_points, bool t0_only);

}  // namespace loctk
