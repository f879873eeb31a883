#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loctk/bits.hpp"

namespace loctk {

struct Poset {
  int size = 0;
  std::vector<Bits> up;    // up[i] = { j : i <= j }, includes i
  std::vector<Bits> down;  // down[i] = { j : j <= i }, includes i
  std::vector<std::string> names;

  bool leq(int a, int b) const { return up[a].test(b); }
  const std::string& name(int i) const { return names[i]; }
};

// Builds a poset from an arbitrary relation list: the order is the
// reflexive-transitive closure of the pairs.  Rejects cycles between
// distinct elements.  Names default to e0..e(n-1).
Poset make_poset(int n, const std::vector<std::pair<int, int>>& rel,
                 std::vector<std::string> names = {});

// Topological order: ascending in the poset, ties broken by element index.
// This is the canonical linear extension used to lay out frame elements.
std::vector<int> linear_extension(const Poset& p);

// Hasse diagram edges (a, b) with a covered by b, in index order.
std::vector<std::pair<int, int>> cover_relation(const Poset& p);

bool poset_isomorphic(const Poset& a, const Poset& b);

// All posets with at most max_size elements, one per isomorphism class,
// in a deterministic order (by size, then by generation order).
std::vector<Poset> all_posets_up_to(int max_size);

// Componentwise order on the cartesian product of the carriers.
Poset product_poset(const Poset& a, const Poset& b);

}  // namespace loctk
