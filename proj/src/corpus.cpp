#include "loctk/corpus.hpp"

namespace loctk {

Corpus build_corpus(const CorpusOptions& opt) {
  Corpus c;
  c.posets = all_posets_up_to(opt.max_poset);

  auto add_frame = [&](const std::string& name, Frame f) {
    for (const NamedFrame& have : c.frames)
      if (frame_isomorphic(have.frame, f)) return;
    c.frames.push_back(NamedFrame{name, std::move(f)});
  };
  for (int k = 0; k <= opt.max_boolean; ++k)
    add_frame("B" + std::to_string(k), boolean_frame(k));
  for (int n = 1; n <= opt.max_chain; ++n)
    add_frame("C" + std::to_string(n), chain_frame(n));
  for (size_t i = 0; i < c.posets.size(); ++i)
    add_frame("D" + std::to_string(i), downset_frame(c.posets[i]));

  for (int n = 1; n <= opt.max_ring; ++n)
    c.rings.push_back(NamedRing{"Z" + std::to_string(n), ring_cyclic(n)});
  for (int i = 2; i <= opt.max_cyclic_factor; ++i)
    for (int j = i; j <= opt.max_cyclic_factor; ++j)
      c.rings.push_back(NamedRing{
          "Z" + std::to_string(i) + "xZ" + std::to_string(j),
          ring_product(ring_cyclic(i), ring_cyclic(j))});

  auto t0 = all_spaces_up_to(opt.max_space_points, true);
  for (size_t i = 0; i < t0.size(); ++i)
    c.spaces_t0.push_back(NamedSpace{"T" + std::to_string(i), std::move(t0[i])});
  auto all = all_spaces_up_to(opt.max_space_points, false);
  for (size_t i = 0; i < all.size(); ++i)
    c.spaces_all.push_back(NamedSpace{"S" + std::to_string(i), std::move(all[i])});

  return c;
}

}  // namespace loctk
