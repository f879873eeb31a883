#pragma once

#include <string>
#include <vector>

#include "loctk/frame.hpp"
#include "loctk/poset.hpp"
#include "loctk/ring.hpp"
#include "loctk/space.hpp"

namespace loctk {

struct NamedFrame {
  std::string name;
  Frame frame;
};
struct NamedRing {
  std::string name;
  FiniteRing ring;
};
struct NamedSpace {
  std::string name;
  FiniteSpace space;
};

struct CorpusOptions {
  int max_poset = 3;          // posets up to this size, up to isomorphism
  int max_chain = 5;          // chain frames C1..C{max_chain}
  int max_boolean = 3;        // powerset frames B0..B{max_boolean}
  int max_ring = 30;          // cyclic rings Z1..Z{max_ring}
  int max_cyclic_factor = 6;  // products Zi x Zj for 2 <= i <= j <= this
  int max_space_points = 3;   // spaces up to this many points, up to homeomorphism
};

// Exhaustive finite test corpus.  Frames are the powersets, the chains and
// the down-set lattices of every corpus poset, deduplicated up to
// isomorphism with the earlier (nicer) name kept.
struct Corpus {
  std::vector<Poset> posets;
  std::vector<NamedFrame> frames;
  std::vector<NamedRing> rings;
  std::vector<NamedSpace> spaces_t0;
  std::vector<NamedSpace> spaces_all;  // includes the non-T0 ones
};

Corpus build_corpus(const CorpusOptions& opt = {});

}  // namespace loctk
