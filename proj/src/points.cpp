#include "loctk/points.hpp"

#include <algorithm>

#include "loctk/error.hpp"

namespace loctk {

void validate_family(const Frame& f, const GroundJoinFamily& j) {
  if (j.frame_size != f.size)
    fail(Errc::domain_mismatch, "join family belongs to a different frame");
  for (const JoinEntry& e : j.entries) {
    if (e.target < 0 || e.target >= f.size || e.parts.universe() != f.size)
      fail(Errc::bad_join_entry, "entry out of range");
    if (join_all(f, e.parts) != e.target)
      fail(Errc::bad_join_entry,
           "parts of entry targeting " + f.names[e.target] + " do not join to it");
  }
}

namespace {

void canonicalize(GroundJoinFamily& j) {
  std::sort(j.entries.begin(), j.entries.end(), [](const JoinEntry& a, const JoinEntry& b) {
    if (a.target != b.target) return a.target < b.target;
    return canon_less(a.parts, b.parts);
  });
  j.entries.erase(std::unique(j.entries.begin(), j.entries.end(),
                              [](const JoinEntry& a, const JoinEntry& b) {
                                return a.target == b.target && a.parts == b.parts;
                              }),
                  j.entries.end());
}

}  // namespace

GroundJoinFamily full_join_family(const Frame& f) {
  if (f.size > limits().max_full_family)
    fail(Errc::resource_cap, "frame of " + std::to_string(f.size) +
                                 " elements exceeds the full-family cap of " +
                                 std::to_string(limits().max_full_family));
  GroundJoinFamily j;
  j.frame_size = f.size;
  for (uint32_t mask = 0; mask < (uint32_t(1) << f.size); ++mask) {
    Bits parts(f.size);
    for (int i = 0; i < f.size; ++i)
      if ((mask >> i) & 1) parts.set(i);
    j.entries.push_back({join_all(f, parts), std::move(parts)});
  }
  canonicalize(j);
  return j;
}

std::vector<PointFilter> relative_points(const Frame& f, const GroundJoinFamily& j) {
  validate_family(f, j);
  std::vector<PointFilter> out;
  // A subset closed upward and under binary meet contains the meet of all
  // its members, so every filter here is the up-set of a least element;
  // enumerating generators enumerates filters.
  for (int m = 0; m < f.size; ++m) {
    if (m == f.bottom) continue;  // its up-set would contain bottom
    bool prime = true;
    for (const JoinEntry& e : j.entries) {
      if (!f.leq(m, e.target)) continue;
      bool split = false;
      e.parts.for_each([&](int p) {
        if (!split && f.leq(m, p)) split = true;
      });
      if (!split) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back({f.up[m], m});
  }
  std::sort(out.begin(), out.end(), [](const PointFilter& a, const PointFilter& b) {
    return a.members.words() < b.members.words();
  });
  return out;
}

std::vector<PointFilter> classical_points(const Frame& f) {
  std::vector<PointFilter> out;
  Bits primes = prime_elements(f);
  primes.for_each([&](int p) {
    Bits members(f.size);
    for (int x = 0; x < f.size; ++x)
      if (!f.leq(x, p)) members.set(x);
    // The members form a filter, hence are the up-set of their meet.
    int least = meet_all(f, members);
    if (!members.test(least) || members != f.up[least])
      fail(Errc::shadow_mismatch, "complement of a prime down-set is not a filter");
    out.push_back({std::move(members), least});
  });
  std::sort(out.begin(), out.end(), [](const PointFilter& a, const PointFilter& b) {
    return a.members.words() < b.members.words();
  });
  return out;
}

namespace {

Spectrum spectrum_from_points(const Frame& f, std::vector<PointFilter> pts) {
  Spectrum s;
  int np = int(pts.size());
  if (np > limits().max_points)
    fail(Errc::resource_cap, "spectrum exceeds the point cap");
  s.pts = std::move(pts);
  s.basic.assign(f.size, 0);
  for (int l = 0; l < f.size; ++l)
    for (int i = 0; i < np; ++i)
      if (s.pts[i].members.test(l)) s.basic[l] |= uint64_t{1} << i;
  std::vector<std::string> names;
  for (int i = 0; i < np; ++i) names.push_back("x" + f.names[s.pts[i].least]);
  s.space = make_space(np, s.basic, std::move(names), /*complete=*/true);
  return s;
}

}  // namespace

Spectrum spectrum_space(const Frame& f, const GroundJoinFamily& j) {
  return spectrum_from_points(f, relative_points(f, j));
}

Spectrum classical_spectrum(const Frame& f) {
  return spectrum_from_points(f, classical_points(f));
}

namespace {

int find_point(const std::vector<PointFilter>& pts, const Bits& members) {
  for (size_t i = 0; i < pts.size(); ++i)
    if (pts[i].members == members) return int(i);
  return -1;
}

}  // namespace

std::vector<int> interpret_map(const FrameMap& f, const Spectrum& dom_spec,
                               const Spectrum& cod_spec) {
  const Frame& d = *f.dom;
  std::vector<int> phi(cod_spec.pts.size());
  for (size_t i = 0; i < cod_spec.pts.size(); ++i) {
    Bits pre(d.size);
    for (int l = 0; l < d.size; ++l)
      if (cod_spec.pts[i].members.test(f.img[l])) pre.set(l);
    int k = find_point(dom_spec.pts, pre);
    if (k < 0)
      fail(Errc::not_a_point_image,
           "preimage of point " + cod_spec.space.names[i] +
               " is not a point of the target spectrum");
    phi[size_t(i)] = k;
  }
  // Continuity certificate: the preimage of each basic open is basic.
  for (int l = 0; l < d.size; ++l) {
    uint64_t pulled = 0;
    for (size_t i = 0; i < phi.size(); ++i)
      if ((dom_spec.basic[l] >> phi[i]) & 1) pulled |= uint64_t{1} << i;
    if (pulled != cod_spec.basic[f.img[l]])
      fail(Errc::shadow_mismatch, "induced point function is not continuous");
  }
  return phi;
}

void validate_preinterpretation(const Frame& f, const GroundJoinFamily& j,
                                const Preinterpretation& p) {
  validate_family(f, j);
  const FiniteSpace& x = *p.space;
  if (int(p.assign.size()) != f.size)
    fail(Errc::invalid_preinterpretation, "assignment does not cover the frame");
  for (int l = 0; l < f.size; ++l)
    if (!x.is_open(p.assign[l]))
      fail(Errc::invalid_preinterpretation,
           "element " + f.names[l] + " is assigned a non-open set");
  if (p.assign[f.top] != x.full_mask())
    fail(Errc::invalid_preinterpretation, "top is not assigned the whole space");
  if (p.assign[f.bottom] != 0)
    fail(Errc::invalid_preinterpretation, "bottom is not assigned the empty set");
  for (int a = 0; a < f.size; ++a)
    for (int b = a; b < f.size; ++b)
      if (p.assign[f.meet(a, b)] != (p.assign[a] & p.assign[b]))
        fail(Errc::invalid_preinterpretation, "meet of " + f.names[a] + " and " +
                                                  f.names[b] + " is not respected");
  for (const JoinEntry& e : j.entries) {
    uint64_t u = 0;
    e.parts.for_each([&](int part) { u |= p.assign[part]; });
    if (u != p.assign[e.target])
      fail(Errc::invalid_preinterpretation,
           "registered join onto " + f.names[e.target] + " is not respected");
  }
}

std::vector<std::vector<int>> continuous_maps(const FiniteSpace& from,
                                              const FiniteSpace& to) {
  std::vector<std::vector<int>> out;
  if (from.points == 0) {
    out.push_back({});
    return out;
  }
  double total = 1;
  for (int i = 0; i < from.points; ++i) total *= std::max(1, to.points);
  if (total > 4e6) fail(Errc::resource_cap, "too many point functions to scan");
  if (to.points == 0) return out;  // no functions from a nonempty space
  std::vector<int> g(from.points, 0);
  while (true) {
    bool cont = true;
    for (uint64_t v : to.opens) {
      uint64_t pre = 0;
      for (int i = 0; i < from.points; ++i)
        if ((v >> g[i]) & 1) pre |= uint64_t{1} << i;
      if (!from.is_open(pre)) {
        cont = false;
        break;
      }
    }
    if (cont) out.push_back(g);
    int k = from.points - 1;
    while (k >= 0 && g[k] == to.points - 1) g[k--] = 0;
    if (k < 0) break;
    ++g[k];
  }
  return out;
}

std::vector<int> mediating_map(const Frame& f, const GroundJoinFamily& j,
                               const Spectrum& spec, const Preinterpretation& p) {
  validate_preinterpretation(f, j, p);
  const FiniteSpace& x = *p.space;
  std::vector<int> med(x.points);
  for (int y = 0; y < x.points; ++y) {
    Bits filt(f.size);
    for (int l = 0; l < f.size; ++l)
      if ((p.assign[l] >> y) & 1) filt.set(l);
    int k = find_point(spec.pts, filt);
    if (k < 0)
      fail(Errc::shadow_mismatch,
           "element filter of a space point is not a point of the spectrum");
    med[y] = k;
  }
  // Factorization: pulling each basic open back along the map recovers the
  // assignment.
  for (int l = 0; l < f.size; ++l) {
    uint64_t pulled = 0;
    for (int y = 0; y < x.points; ++y)
      if ((spec.basic[l] >> med[y]) & 1) pulled |= uint64_t{1} << y;
    if (pulled != p.assign[l])
      fail(Errc::shadow_mismatch, "mediating map does not factor the assignment");
  }
  // Uniqueness among all continuous maps into the spectrum.
  int hits = 0;
  for (const std::vector<int>& g : continuous_maps(x, spec.space)) {
    bool factors = true;
    for (int l = 0; l < f.size && factors; ++l) {
      uint64_t pulled = 0;
      for (int y = 0; y < x.points; ++y)
        if ((spec.basic[l] >> g[y]) & 1) pulled |= uint64_t{1} << y;
      if (pulled != p.assign[l]) factors = false;
    }
    if (factors) {
      ++hits;
      if (g != med)
        fail(Errc::shadow_mismatch, "a second continuous map factors the assignment");
    }
  }
  if (hits != 1)
    fail(Errc::shadow_mismatch, "mediating map not found by the exhaustive scan");
  return med;
}

BooleanPoints boolean_valued_points(const Frame& l, const Frame& b) {
  if (!is_boolean_frame(b))
    fail(Errc::not_boolean, "value frame has a non-complemented element");
  BooleanPoints res;
  res.atom_list = atoms(b).elements();
  res.maps = enumerate_frame_maps(l, b);
  std::vector<PointFilter> cp = classical_points(l);
  int k = int(res.atom_list.size());
  for (const FrameMap& f : res.maps) {
    std::vector<int> tup(k);
    for (int t = 0; t < k; ++t) {
      Bits members(l.size);
      for (int e = 0; e < l.size; ++e)
        if (b.leq(res.atom_list[t], f.img[e])) members.set(e);
      int idx = find_point(cp, members);
      if (idx < 0)
        fail(Errc::shadow_mismatch, "atom slice of a Boolean-valued point is not a point");
      tup[t] = idx;
    }
    res.decode.push_back(std::move(tup));
  }
  // Bijection with |points|^k tuples: counts match and decode is injective,
  // and every tuple is realized by the atomwise join reconstruction.
  double expected = 1;
  for (int t = 0; t < k; ++t) expected *= double(cp.size());
  res.bijective = double(res.maps.size()) == expected;
  std::vector<std::vector<int>> seen = res.decode;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) res.bijective = false;
  if (res.bijective && k > 0 && !cp.empty()) {
    std::vector<int> tup(k, 0);
    while (true) {
      std::vector<int32_t> img(l.size);
      for (int e = 0; e < l.size; ++e) {
        int acc = b.bottom;
        for (int t = 0; t < k; ++t)
          if (cp[tup[t]].members.test(e)) acc = b.join(acc, res.atom_list[t]);
        img[e] = acc;
      }
      bool found = false;
      for (size_t m = 0; m < res.maps.size() && !found; ++m)
        if (res.maps[m].img == img && res.decode[m] == tup) found = true;
      if (!found) {
        res.bijective = false;
        break;
      }
      int t = k - 1;
      while (t >= 0 && tup[t] == int(cp.size()) - 1) tup[t--] = 0;
      if (t < 0) break;
      ++tup[t];
    }
  }
  return res;
}

SoberReport soberify(const FiniteSpace& x) {
  SoberReport rep;
  Frame f = opens_frame(x);
  rep.spectrum = classical_spectrum(f);
  rep.unit.assign(x.points, -1);
  std::vector<bool> hit(rep.spectrum.pts.size(), false);
  rep.injective = true;
  for (int y = 0; y < x.points; ++y) {
    Bits nbh(f.size);
    for (int l = 0; l < f.size; ++l)
      if ((x.opens[l] >> y) & 1) nbh.set(l);
    int k = find_point(rep.spectrum.pts, nbh);
    if (k < 0)
      fail(Errc::shadow_mismatch, "open neighborhood filter of a point is not a point");
    rep.unit[y] = k;
    if (hit[k]) {
      rep.injective = false;
      if (rep.witness.empty()) rep.witness = "two points share every open set";
    }
    hit[k] = true;
  }
  rep.surjective = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
  if (!rep.surjective && rep.witness.empty())
    rep.witness = "a spectrum point is hit by no space point";
  rep.sober = rep.injective && rep.surjective;
  if (rep.sober) {
    // The unit is automatically a homeomorphism: each basic open pulls back
    // to the corresponding open; certify it.
    for (int l = 0; l < f.size; ++l) {
      uint64_t pulled = 0;
      for (int y = 0; y < x.points; ++y)
        if ((rep.spectrum.basic[l] >> rep.unit[y]) & 1) pulled |= uint64_t{1} << y;
      if (pulled != x.opens[l])
        fail(Errc::shadow_mismatch, "unit bijection is not a homeomorphism");
    }
  }
  return rep;
}

AdjunctionReport adjunction_check(const Frame& l, const FiniteSpace& y) {
  AdjunctionReport rep;
  Frame oy = opens_frame(y);
  Spectrum sl = classical_spectrum(l);
  std::vector<FrameMap> hom = enumerate_frame_maps(l, oy);
  std::vector<std::vector<int>> cont = continuous_maps(y, sl.space);
  rep.frame_map_count = hom.size();
  rep.continuous_count = cont.size();
  rep.bijective = hom.size() == cont.size();
  // Round trips: a continuous map pulls basics back to opens, giving a
  // frame map; a frame map sends a point to its element filter.
  for (size_t ci = 0; ci < cont.size() && rep.bijective; ++ci) {
    std::vector<int32_t> img(l.size);
    for (int e = 0; e < l.size; ++e) {
      uint64_t pre = 0;
      for (int p = 0; p < y.points; ++p)
        if ((sl.basic[e] >> cont[ci][p]) & 1) pre |= uint64_t{1} << p;
      int idx = y.open_index(pre);
      if (idx < 0) {
        rep.bijective = false;
        break;
      }
      img[e] = idx;
    }
    if (!rep.bijective) break;
    size_t hi = hom.size();
    for (size_t i = 0; i < hom.size(); ++i)
      if (hom[i].img == img) {
        hi = i;
        break;
      }
    if (hi == hom.size()) {
      rep.bijective = false;
      break;
    }
    // Back: the paired frame map must reproduce the same point function.
    for (int p = 0; p < y.points && rep.bijective; ++p) {
      Bits filt(l.size);
      for (int e = 0; e < l.size; ++e)
        if ((y.opens[img[e]] >> p) & 1) filt.set(e);
      int k = find_point(sl.pts, filt);
      if (k != cont[ci][p]) rep.bijective = false;
    }
  }
  // Injectivity of the translation over all frame maps: distinct frame maps
  // give distinct point functions.
  if (rep.bijective) {
    std::vector<std::vector<int>> images;
    for (const FrameMap& h : hom) {
      std::vector<int> pf(y.points);
      for (int p = 0; p < y.points; ++p) {
        Bits filt(l.size);
        for (int e = 0; e < l.size; ++e)
          if ((y.opens[h.img[e]] >> p) & 1) filt.set(e);
        int k = find_point(sl.pts, filt);
        if (k < 0) {
          rep.bijective = false;
          break;
        }
        pf[p] = k;
      }
      images.push_back(std::move(pf));
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      rep.bijective = false;
  }
  return rep;
}

}  // namespace loctk
