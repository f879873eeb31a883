#include "loctk/frame_map.hpp"

#include <algorithm>

#include "loctk/error.hpp"

namespace loctk {

FrameMap identity_map(const Frame& f) {
  FrameMap m{&f, &f, {}};
  m.img.resize(f.size);
  for (int i = 0; i < f.size; ++i) m.img[i] = i;
  return m;
}

void validate_frame_map(const FrameMap& f) {
  const Frame& d = *f.dom;
  const Frame& c = *f.cod;
  if (int(f.img.size()) != d.size)
    fail(Errc::domain_mismatch, "image array does not match the source frame");
  for (int32_t v : f.img)
    if (v < 0 || v >= c.size)
      fail(Errc::domain_mismatch, "image element out of range");
  if (f.img[d.bottom] != c.bottom)
    fail(Errc::endpoint_violation, "bottom is not sent to bottom");
  if (f.img[d.top] != c.top)
    fail(Errc::endpoint_violation, "top is not sent to top");
  for (int a = 0; a < d.size; ++a)
    for (int b = a; b < d.size; ++b) {
      if (f.img[d.join(a, b)] != c.join(f.img[a], f.img[b]))
        fail(Errc::not_join_preserving,
             "join of " + d.names[a] + " and " + d.names[b] + " is not preserved");
      if (f.img[d.meet(a, b)] != c.meet(f.img[a], f.img[b]))
        fail(Errc::not_meet_preserving,
             "meet of " + d.names[a] + " and " + d.names[b] + " is not preserved");
    }
}

std::vector<FrameMap> enumerate_frame_maps(const Frame& dom, const Frame& cod) {
  if (dom.size > limits().max_elements || cod.size > limits().max_elements)
    fail(Errc::resource_cap, "frame exceeds the element cap for map enumeration");
  int n = dom.size;
  // join_pairs[j]: pairs (a, b) with a, b < j and a \/ b = j.  Joins against
  // elements at index >= j land later in the extension and are checked when
  // that element is placed.
  std::vector<std::vector<std::pair<int, int>>> join_pairs(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int j = dom.join(a, b);
      if (j != a && j != b) join_pairs[j].push_back({a, b});
    }
  std::vector<FrameMap> out;
  std::vector<int32_t> img(n, -1);
  auto place = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(FrameMap{&dom, &cod, img});
      return;
    }
    int lo = 0, hi = cod.size - 1;
    if (k == dom.bottom) { lo = std::max(lo, cod.bottom); hi = std::min(hi, cod.bottom); }
    if (k == dom.top) { lo = std::max(lo, cod.top); hi = std::min(hi, cod.top); }
    for (int v = lo; v <= hi; ++v) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        // meet(i, k) precedes k in the extension, so its image is known.
        if (img[dom.meet(i, k)] != cod.meet(img[i], v)) ok = false;
        if (ok && dom.leq(i, k) && !cod.leq(img[i], v)) ok = false;
      }
      for (auto [a, b] : join_pairs[k])
        if (!ok || cod.join(img[a], img[b]) != v) {
          ok = false;
          break;
        }
      if (!ok) continue;
      img[k] = v;
      self(self, k + 1);
      img[k] = -1;
    }
  };
  place(place, 0);
  return out;
}

std::vector<int32_t> left_adjoint(const FrameMap& f) {
  const Frame& d = *f.dom;
  const Frame& c = *f.cod;
  std::vector<int32_t> adj(c.size);
  for (int m = 0; m < c.size; ++m) {
    Bits sel(d.size);
    for (int l = 0; l < d.size; ++l)
      if (c.leq(m, f.img[l])) sel.set(l);
    adj[m] = meet_all(d, sel);
  }
  return adj;
}

bool is_open_map(const FrameMap& f, std::string* witness) {
  const Frame& d = *f.dom;
  const Frame& c = *f.cod;
  bool direct = true;
  std::string w_direct;
  // Arbitrary meets reduce to binary meets and top here, both already frame
  // map laws; they are rechecked so this route stands on its own.
  if (f.img[d.top] != c.top) {
    direct = false;
    w_direct = "empty meet not preserved";
  }
  for (int a = 0; a < d.size && direct; ++a)
    for (int b = a; b < d.size && direct; ++b)
      if (f.img[d.meet(a, b)] != c.meet(f.img[a], f.img[b])) {
        direct = false;
        w_direct = "binary meet not preserved at (" + d.names[a] + ", " + d.names[b] + ")";
      }
  for (int a = 0; a < d.size && direct; ++a)
    for (int b = 0; b < d.size && direct; ++b)
      if (f.img[d.heyting(a, b)] != c.heyting(f.img[a], f.img[b])) {
        direct = false;
        w_direct = "implication not preserved at (" + d.names[a] + ", " + d.names[b] + ")";
      }
  std::vector<int32_t> adj = left_adjoint(f);
  bool frob = true;
  std::string w_frob;
  for (int a = 0; a < c.size && frob; ++a)
    for (int b = 0; b < d.size && frob; ++b)
      if (adj[c.meet(a, f.img[b])] != d.meet(adj[a], b)) {
        frob = false;
        w_frob = "adjoint identity fails at (" + c.names[a] + ", " + d.names[b] + ")";
      }
  if (direct != frob)
    fail(Errc::characterization_mismatch,
         "openness checks disagree: direct=" + std::to_string(direct) +
             " adjoint=" + std::to_string(frob) + " (" +
             (direct ? w_frob : w_direct) + ")");
  if (witness && !direct) *witness = w_direct;
  return direct;
}

MapClass map_classify(const FrameMap& f) {
  MapClass mc;
  std::vector<int32_t> sorted = f.img;
  std::sort(sorted.begin(), sorted.end());
  mc.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  mc.surjective = int(sorted.size()) == f.cod->size;
  mc.bijective = mc.injective && mc.surjective;
  return mc;
}

FrameMap compose(const FrameMap& f, const FrameMap& g) {
  if (!frame_equal(*g.cod, *f.dom))
    fail(Errc::domain_mismatch, "composition needs cod of the first-applied map to equal dom of the second");
  FrameMap h{g.dom, f.cod, {}};
  h.img.resize(g.img.size());
  for (size_t i = 0; i < g.img.size(); ++i) h.img[i] = f.img[g.img[i]];
  return h;
}

}  // namespace loctk
