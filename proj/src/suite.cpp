#include "loctk/suite.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "loctk/coproduct.hpp"
#include "loctk/error.hpp"
#include "loctk/frame_map.hpp"
#include "loctk/points.hpp"
#include "loctk/properties.hpp"
#include "loctk/ring.hpp"

namespace loctk {

const CheckResult* SuiteResult::find(const std::string& id) const {
  for (const CheckResult& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

namespace {

using Clock = std::chrono::steady_clock;
using Outcome = std::pair<bool, std::string>;

int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

uint64_t transfer_mask(uint64_t mask, const std::vector<int>& via) {
  uint64_t out = 0;
  for (size_t i = 0; i < via.size(); ++i)
    if (mask >> i & 1) out |= uint64_t{1} << via[i];
  return out;
}

uint64_t preimage_mask(uint64_t open_to, const std::vector<int>& phi) {
  uint64_t out = 0;
  for (size_t p = 0; p < phi.size(); ++p)
    if (open_to >> phi[p] & 1) out |= uint64_t{1} << p;
  return out;
}

bool injective_fn(const std::vector<int>& phi) {
  std::set<int> seen(phi.begin(), phi.end());
  return seen.size() == phi.size();
}

bool surjective_fn(const std::vector<int>& phi, int codomain) {
  std::set<int> seen(phi.begin(), phi.end());
  return int(seen.size()) == codomain;
}

// phi maps points of `from` into points of `to`; embedding means injective
// with the topology of `from` induced from `to`.
bool is_embedding(const std::vector<int>& phi, const FiniteSpace& from,
                  const FiniteSpace& to) {
  if (!injective_fn(phi)) return false;
  std::set<uint64_t> pre;
  for (uint64_t v : to.opens) pre.insert(preimage_mask(v, phi));
  for (uint64_t u : from.opens)
    if (!pre.count(u)) return false;
  return true;
}

bool forward_open(const std::vector<int>& phi, const FiniteSpace& from,
                  const FiniteSpace& to) {
  for (uint64_t u : from.opens)
    if (!to.is_open(transfer_mask(u, phi))) return false;
  return true;
}

bool is_open_embedding(const std::vector<int>& phi, const FiniteSpace& from,
                       const FiniteSpace& to) {
  return injective_fn(phi) && forward_open(phi, from, to);
}

std::set<std::vector<uint64_t>> point_key_set(const std::vector<PointFilter>& pts) {
  std::set<std::vector<uint64_t>> out;
  for (const PointFilter& p : pts) out.insert(p.members.words());
  return out;
}

// Element index of a subset mask in a powerset frame, which lays subsets
// out by (cardinality, value).
std::vector<int32_t> boolean_restriction(int from_atoms, int to_atoms) {
  auto order = [](int k) {
    std::vector<uint64_t> masks(size_t(1) << k);
    for (size_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::sort(masks.begin(), masks.end(), canon_less64);
    return masks;
  };
  std::vector<uint64_t> fo = order(from_atoms), to = order(to_atoms);
  std::vector<int32_t> to_idx(size_t(1) << to_atoms);
  for (size_t i = 0; i < to.size(); ++i) to_idx[to[i]] = int32_t(i);
  uint64_t keep = (uint64_t{1} << to_atoms) - 1;
  std::vector<int32_t> img(fo.size());
  for (size_t i = 0; i < fo.size(); ++i) img[i] = to_idx[fo[i] & keep];
  return img;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SuiteResult run_suite(const SuiteOptions& opt) {
  // The corpus needs room: squares of eight-element frames have 512
  // C-ideals, and their spectra products have as many opens.
  ScopedLimits room(Limits{4096, 4096, 16, 64});

  SuiteResult res;
  Clock::time_point suite_start = Clock::now();

  Corpus corpus;
  bool corpus_ok = true;
  {
    CheckResult c;
    c.id = "A0";
    c.name = "corpus integrity";
    Clock::time_point t0 = Clock::now();
    try {
      corpus = build_corpus(opt.corpus);
      if (opt.inject_defect) {
        size_t victim = 0;
        for (size_t i = 0; i < corpus.frames.size(); ++i)
          if (corpus.frames[i].frame.size > corpus.frames[victim].frame.size)
            victim = i;
        Frame& f = corpus.frames[victim].frame;
        if (f.size >= 2) f.join_t[size_t(f.bottom) * f.size + f.top] = f.bottom;
      }
      for (const NamedFrame& nf : corpus.frames) {
        try {
          validate_frame(nf.frame);
        } catch (const ToolError& e) {
          fail(e.code(), nf.name + ": " + e.detail());
        }
      }
      for (const NamedSpace& ns : corpus.spaces_all)
        make_space(ns.space.points, ns.space.opens, ns.space.names, false);
      for (const NamedRing& nr : corpus.rings)
        make_ring(nr.ring.size, nr.ring.add_t, nr.ring.mul_t, nr.ring.names);
      c.pass = true;
      c.detail = std::to_string(corpus.frames.size()) + " frames, " +
                 std::to_string(corpus.rings.size()) + " rings, " +
                 std::to_string(corpus.spaces_all.size()) + " spaces";
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
      corpus_ok = false;
    }
    c.millis = ms_since(t0);
    res.checks.push_back(std::move(c));
  }

  size_t nf = corpus.frames.size();

  // Classical spectra and separation verdicts are shared across checks;
  // they are computed on first use so any internal mismatch surfaces inside
  // the check that asked.
  std::vector<std::unique_ptr<Spectrum>> spec_cache(nf);
  auto spec_of = [&](size_t i) -> const Spectrum& {
    if (!spec_cache[i])
      spec_cache[i] =
          std::make_unique<Spectrum>(classical_spectrum(corpus.frames[i].frame));
    return *spec_cache[i];
  };
  std::vector<std::optional<Verdict>> tu_cache(nf);
  auto tu_of = [&](size_t i) -> const Verdict& {
    if (!tu_cache[i]) tu_cache[i] = is_TU(corpus.frames[i].frame);
    return *tu_cache[i];
  };

  auto run = [&](const char* id, const char* name, auto&& body) {
    CheckResult c;
    c.id = id;
    c.name = name;
    Clock::time_point t0 = Clock::now();
    if (!corpus_ok) {
      c.pass = false;
      c.detail = "not run: corpus integrity failed";
    } else {
      try {
        Outcome o = body();
        c.pass = o.first;
        c.detail = o.second;
      } catch (const std::exception& e) {
        c.pass = false;
        c.detail = e.what();
      }
    }
    c.millis = ms_since(t0);
    res.checks.push_back(std::move(c));
  };

  run("A1", "spatial product oracle", [&]() -> Outcome {
    int pairs = 0, largest = 0;
    for (const NamedSpace& nx : corpus.spaces_t0)
      for (const NamedSpace& ny : corpus.spaces_t0) {
        const FiniteSpace& X = nx.space;
        const FiniteSpace& Y = ny.space;
        Frame lx = opens_frame(X), ly = opens_frame(Y);
        Spectrum sx = classical_spectrum(lx), sy = classical_spectrum(ly);
        CoproductFrame cp = coproduct(lx, ly);
        FiniteSpace prod = product_space(sx.space, sy.space);
        Frame lp = opens_frame(prod);
        int spy = sy.space.points;
        std::vector<uint64_t> cross(size_t(lx.size) * ly.size, 0);
        for (int a = 0; a < lx.size; ++a)
          for (int b = 0; b < ly.size; ++b) {
            uint64_t m = 0;
            for (int x = 0; x < sx.space.points; ++x) {
              if (!(sx.basic[a] >> x & 1)) continue;
              for (int y = 0; y < spy; ++y)
                if (sy.basic[b] >> y & 1) m |= uint64_t{1} << (x * spy + y);
            }
            cross[size_t(a) * ly.size + b] = m;
          }
        FrameMap nu;
        nu.dom = &cp.base;
        nu.cod = &lp;
        nu.img.assign(cp.base.size, 0);
        bool ok = true;
        for (int u = 0; u < cp.base.size && ok; ++u) {
          uint64_t m = 0;
          cp.ideals[u].for_each([&](int bit) { m |= cross[bit]; });
          int oi = prod.open_index(m);
          if (oi < 0) ok = false;
          nu.img[u] = oi < 0 ? 0 : oi;
        }
        if (!ok)
          return {false,
                  nx.name + " x " + ny.name + ": image of a C-ideal is not open"};
        validate_frame_map(nu);
        if (!map_classify(nu).bijective)
          return {false, nx.name + " x " + ny.name + ": natural map not bijective"};
        ++pairs;
        largest = std::max(largest, cp.base.size);
      }
    return {true, std::to_string(pairs) + " space pairs, largest coproduct " +
                      std::to_string(largest)};
  });

  run("A2", "Boolean-valued point counts", [&]() -> Outcome {
    size_t total = 0;
    for (size_t i = 0; i < nf; ++i) {
      const Frame& f = corpus.frames[i].frame;
      size_t npts = spec_of(i).pts.size();
      for (int k = 0; k <= 3; ++k) {
        BooleanPoints bp = boolean_valued_points(f, boolean_frame(k));
        size_t expected = 1;
        for (int e = 0; e < k; ++e) expected *= npts;
        if (bp.maps.size() != expected)
          return {false, corpus.frames[i].name + ": " +
                             std::to_string(bp.maps.size()) + " maps into 2^" +
                             std::to_string(k) + ", expected " +
                             std::to_string(expected)};
        if (!bp.bijective)
          return {false, corpus.frames[i].name +
                             ": decoding is not a bijection at k=" +
                             std::to_string(k)};
        total += bp.maps.size();
      }
    }
    return {true, std::to_string(total) + " maps decoded across " +
                      std::to_string(nf) + " frames"};
  });

  run("A3", "T1 shadow", [&]() -> Outcome {
    int holders = 0;
    for (size_t i = 0; i < nf; ++i) {
      const Verdict& tu = tu_of(i);
      bool t1 = space_separation(spec_of(i).space).t1;
      if (tu.holds != t1)
        return {false, corpus.frames[i].name + ": antichain criterion says " +
                           std::to_string(tu.holds) + " but the spectrum T1 flag is " +
                           std::to_string(t1)};
      if (tu.holds) ++holders;
    }
    return {true, std::to_string(holders) + " of " + std::to_string(nf) +
                      " frames are totally unordered"};
  });

  run("A4", "T2 shadow", [&]() -> Outcome {
    int holders = 0;
    for (size_t i = 0; i < nf; ++i) {
      const std::string& nm = corpus.frames[i].name;
      Verdict h = is_I_hausdorff(corpus.frames[i].frame);
      Verdict r = is_regular(corpus.frames[i].frame);
      if (r.holds && !h.holds)
        return {false, nm + ": regular but not strongly Hausdorff"};
      if (h.holds && !tu_of(i).holds)
        return {false, nm + ": strongly Hausdorff but not totally unordered"};
      if (h.holds) ++holders;
    }
    return {true, std::to_string(holders) + " of " + std::to_string(nf) +
                      " frames are strongly Hausdorff"};
  });

  run("A5", "T3 shadow", [&]() -> Outcome {
    int holders = 0;
    for (size_t i = 0; i < nf; ++i) {
      Verdict r = is_regular(corpus.frames[i].frame);
      bool t3 = space_separation(spec_of(i).space).t3;
      if (r.holds != t3)
        return {false, corpus.frames[i].name + ": regularity says " +
                           std::to_string(r.holds) + " but the spectrum T3 flag is " +
                           std::to_string(t3)};
      if (r.holds) ++holders;
    }
    return {true, std::to_string(holders) + " of " + std::to_string(nf) +
                      " frames are regular"};
  });

  run("A6", "structure transfer", [&]() -> Outcome {
    size_t maps_seen = 0;
    for (size_t i = 0; i < nf; ++i) {
      const Frame& f = corpus.frames[i].frame;
      const Spectrum& s = spec_of(i);
      for (int l = 0; l < f.size; ++l)
        for (int m = 0; m < f.size; ++m) {
          bool below = f.leq(l, m);
          bool mask_below = (s.basic[l] & ~s.basic[m]) == 0;
          if (below != mask_below)
            return {false, corpus.frames[i].name + ": order of " + f.names[l] +
                               ", " + f.names[m] + " disagrees with basic opens"};
        }
    }
    for (size_t i = 0; i < nf; ++i)
      for (size_t j = 0; j < nf; ++j) {
        const Frame& dom = corpus.frames[i].frame;
        const Frame& cod = corpus.frames[j].frame;
        const Spectrum& sd = spec_of(i);
        const Spectrum& sc = spec_of(j);
        std::vector<FrameMap> maps = enumerate_frame_maps(dom, cod);
        std::vector<std::vector<int>> pt;
        pt.reserve(maps.size());
        for (const FrameMap& fm : maps) pt.push_back(interpret_map(fm, sd, sc));
        maps_seen += maps.size();
        std::string tag =
            corpus.frames[i].name + " -> " + corpus.frames[j].name + ": ";
        for (size_t a = 0; a < maps.size(); ++a)
          for (size_t b = a + 1; b < maps.size(); ++b)
            if (pt[a] == pt[b])
              return {false, tag + "distinct maps induce the same point map"};
        for (size_t a = 0; a < maps.size(); ++a) {
          MapClass cls = map_classify(maps[a]);
          bool surj_pts = surjective_fn(pt[a], int(sd.pts.size()));
          if (!cls.injective && surj_pts)
            return {false, tag + "non-injective map with surjective point map"};
          bool emb = is_embedding(pt[a], sc.space, sd.space);
          if (cls.surjective != emb)
            return {false, tag + "surjectivity (" + std::to_string(cls.surjective) +
                               ") disagrees with point-map embedding (" +
                               std::to_string(emb) + ")"};
          bool homeo_via = cls.bijective;
          bool pt_homeo = injective_fn(pt[a]) && surj_pts &&
                          forward_open(pt[a], sc.space, sd.space);
          if (homeo_via != pt_homeo)
            return {false, tag + "isomorphism flag (" + std::to_string(homeo_via) +
                               ") disagrees with point homeomorphism (" +
                               std::to_string(pt_homeo) + ")"};
        }
      }
    return {true, std::to_string(maps_seen) + " frame maps transferred"};
  });

  run("A7", "relative spectrum", [&]() -> Outcome {
    for (size_t i = 0; i < nf; ++i) {
      const Frame& f = corpus.frames[i].frame;
      GroundJoinFamily full = full_join_family(f);
      std::vector<PointFilter> rel = relative_points(f, full);
      const std::vector<PointFilter>& cls = spec_of(i).pts;
      if (rel.size() != cls.size())
        return {false, corpus.frames[i].name + ": full family gives " +
                           std::to_string(rel.size()) + " points, classically " +
                           std::to_string(cls.size())};
      for (size_t k = 0; k < rel.size(); ++k)
        if (!(rel[k].members == cls[k].members))
          return {false, corpus.frames[i].name +
                             ": full-family points differ from classical points"};
    }

    // Four-element powerset with the two top covers unregistered: the top
    // filter becomes a third point.
    if (opt.corpus.max_boolean >= 2) {
      Frame b2 = boolean_frame(2);
      GroundJoinFamily full2 = full_join_family(b2);
      Bits two_atoms(4), three_low(4);
      two_atoms.set(1);
      two_atoms.set(2);
      three_low.set(0);
      three_low.set(1);
      three_low.set(2);
      GroundJoinFamily restricted;
      restricted.frame_size = full2.frame_size;
      for (const JoinEntry& e : full2.entries)
        if (!(e.target == b2.top && (e.parts == two_atoms || e.parts == three_low)))
          restricted.entries.push_back(e);
      if (full2.entries.size() != restricted.entries.size() + 2)
        return {false, "expected to drop exactly two registered joins"};
      std::vector<PointFilter> rp = relative_points(b2, restricted);
      if (rp.size() != 3)
        return {false, "restricted family yields " + std::to_string(rp.size()) +
                           " points, expected 3"};
      int generic = 0;
      for (const PointFilter& p : rp)
        if (p.least == b2.top) ++generic;
      if (generic != 1) return {false, "restricted family misses the top filter"};
      std::set<std::vector<uint64_t>> rel_keys = point_key_set(rp);
      for (const PointFilter& p : classical_points(b2))
        if (!rel_keys.count(p.members.words()))
          return {false, "restricted family lost a classical point"};
    }

    // Monotonicity: fewer registered joins can only add points.
    std::mt19937_64 rng(opt.seed);
    int trials = opt.mono_trials;
    for (int t = 0; t < trials; ++t) {
      const Frame& f = corpus.frames[t % nf].frame;
      GroundJoinFamily full = full_join_family(f);
      GroundJoinFamily big, small;
      big.frame_size = small.frame_size = full.frame_size;
      for (const JoinEntry& e : full.entries) {
        if (rng() & 1) continue;
        big.entries.push_back(e);
        if (rng() & 1) small.entries.push_back(e);
      }
      std::set<std::vector<uint64_t>> big_pts = point_key_set(relative_points(f, big));
      std::set<std::vector<uint64_t>> small_pts =
          point_key_set(relative_points(f, small));
      for (const std::vector<uint64_t>& key : big_pts)
        if (!small_pts.count(key))
          return {false, corpus.frames[t % nf].name +
                             ": registering fewer joins removed a point (trial " +
                             std::to_string(t) + ")"};
    }
    return {true, std::to_string(trials) + " monotonicity trials"};
  });

  run("A8", "interpretation is universal", [&]() -> Outcome {
    size_t checked = 0;
    for (size_t i = 0; i < nf; ++i) {
      const Frame& f = corpus.frames[i].frame;
      GroundJoinFamily full = full_join_family(f);
      Spectrum spec = spectrum_space(f, full);
      for (const NamedSpace& ns : corpus.spaces_all) {
        Frame oy = opens_frame(ns.space);
        for (const FrameMap& p : enumerate_frame_maps(f, oy)) {
          Preinterpretation pre;
          pre.space = &ns.space;
          pre.assign.resize(f.size);
          for (int l = 0; l < f.size; ++l) pre.assign[l] = ns.space.opens[p.img[l]];
          validate_preinterpretation(f, full, pre);
          mediating_map(f, full, spec, pre);
          ++checked;
        }
      }
    }
    return {true, std::to_string(checked) + " preinterpretations mediated"};
  });

  run("A9", "spectrum adjunction", [&]() -> Outcome {
    size_t total = 0;
    for (size_t i = 0; i < nf; ++i)
      for (const NamedSpace& ns : corpus.spaces_all) {
        AdjunctionReport rep = adjunction_check(corpus.frames[i].frame, ns.space);
        if (!rep.bijective)
          return {false, corpus.frames[i].name + " against " + ns.name + ": " +
                             std::to_string(rep.frame_map_count) + " frame maps vs " +
                             std::to_string(rep.continuous_count) +
                             " continuous maps"};
        total += rep.frame_map_count;
      }
    return {true, std::to_string(total) + " hom pairs matched"};
  });

  run("A10", "open maps", [&]() -> Outcome {
    size_t open_count = 0, emb_checked = 0;
    for (size_t i = 0; i < nf; ++i)
      for (size_t j = 0; j < nf; ++j) {
        const Frame& dom = corpus.frames[i].frame;
        const Frame& cod = corpus.frames[j].frame;
        std::string tag =
            corpus.frames[i].name + " -> " + corpus.frames[j].name + ": ";
        for (const FrameMap& fm : enumerate_frame_maps(dom, cod)) {
          bool open = is_open_map(fm);
          if (open) ++open_count;
          if (!tu_of(i).holds) continue;
          MapClass cls = map_classify(fm);
          std::vector<int> phi = interpret_map(fm, spec_of(i), spec_of(j));
          bool lhs = open && cls.surjective;
          bool rhs = is_open_embedding(phi, spec_of(j).space, spec_of(i).space);
          if (lhs != rhs)
            return {false, tag + "open+surjective is " + std::to_string(lhs) +
                               " but the point map open-embedding flag is " +
                               std::to_string(rhs)};
          ++emb_checked;
        }
      }
    return {true, std::to_string(open_count) + " open maps, " +
                      std::to_string(emb_checked) + " embedding comparisons"};
  });

  run("A11", "compactness", [&]() -> Outcome {
    for (size_t i = 0; i < nf; ++i) {
      Verdict v = is_compact(corpus.frames[i].frame, full_join_family(corpus.frames[i].frame));
      if (!v.holds)
        return {false, corpus.frames[i].name + ": " + v.witness};
    }
    std::mt19937_64 rng(opt.seed ^ 0x9E3779B97F4A7C15ull);
    for (int t = 0; t < opt.family_trials; ++t) {
      const Frame& f = corpus.frames[t % nf].frame;
      GroundJoinFamily full = full_join_family(f);
      GroundJoinFamily sub;
      sub.frame_size = full.frame_size;
      for (const JoinEntry& e : full.entries)
        if (rng() & 1) sub.entries.push_back(e);
      Verdict v = is_compact(f, sub);
      if (!v.holds)
        return {false, corpus.frames[t % nf].name +
                           ": restricted family broke compactness (trial " +
                           std::to_string(t) + "): " + v.witness};
    }
    return {true, std::to_string(opt.family_trials) + " restricted-family trials"};
  });

  run("A12", "connectedness probe", [&]() -> Outcome {
    std::vector<const Frame*> tests;
    for (const NamedFrame& nfr : corpus.frames)
      if (nfr.frame.size <= 8) tests.push_back(&nfr.frame);
    int degenerate = 0;
    for (size_t i = 0; i < nf; ++i) {
      Verdict conn = is_connected(corpus.frames[i].frame);
      if (conn.degenerate) {
        ++degenerate;
        continue;  // the one-element frame answers every probe vacuously
      }
      Verdict probe = p_connected_probe(corpus.frames[i].frame, tests);
      if (conn.holds != probe.holds)
        return {false, corpus.frames[i].name + ": connectedness says " +
                           std::to_string(conn.holds) + " but the probe says " +
                           std::to_string(probe.holds)};
    }
    return {true, std::to_string(tests.size()) + " probe frames, " +
                      std::to_string(degenerate) + " degenerate skipped"};
  });

  run("A13", "directed colimit of spectra", [&]() -> Outcome {
    if (opt.corpus.max_boolean < 3)
      return {true, "not exercised at these bounds"};
    DirectedSystem sys;
    sys.index = make_poset(3, {{0, 1}, {1, 2}});
    sys.frames.push_back(boolean_frame(1));
    sys.frames.push_back(boolean_frame(2));
    sys.frames.push_back(boolean_frame(3));
    sys.maps.assign(9, {});
    sys.maps[sys.pair_slot(0, 1)] = boolean_restriction(2, 1);
    sys.maps[sys.pair_slot(1, 2)] = boolean_restriction(3, 2);
    sys.maps[sys.pair_slot(0, 2)] = boolean_restriction(3, 1);

    std::vector<Spectrum> sp;
    for (const Frame& f : sys.frames) sp.push_back(classical_spectrum(f));

    // Stage maps must be open surjections of frames inducing open
    // embeddings of spectra.
    std::vector<std::vector<int>> emb(9);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        FrameMap pij;
        pij.dom = &sys.frames[j];
        pij.cod = &sys.frames[i];
        pij.img = sys.maps[sys.pair_slot(i, j)];
        validate_frame_map(pij);
        if (!map_classify(pij).surjective || !is_open_map(pij))
          return {false, "stage map " + std::to_string(j) + " -> " +
                             std::to_string(i) + " is not an open surjection"};
        emb[sys.pair_slot(i, j)] = interpret_map(pij, sp[j], sp[i]);
        if (!is_open_embedding(emb[sys.pair_slot(i, j)], sp[i].space, sp[j].space))
          return {false, "induced point map " + std::to_string(i) + " -> " +
                             std::to_string(j) + " is not an open embedding"};
      }

    LimitFrame lim = frame_inverse_limit(sys);
    if (!frame_isomorphic(lim.base, sys.frames[2]))
      return {false, "limit frame is not the final stage"};
    Spectrum slim = classical_spectrum(lim.base);

    // Colimit of the spectra: disjoint stage points glued along the
    // embeddings, with the final topology.
    int offs[3], total = 0;
    for (int i = 0; i < 3; ++i) {
      offs[i] = total;
      total += int(sp[i].pts.size());
    }
    UnionFind uf(total);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (size_t p = 0; p < sp[i].pts.size(); ++p)
          uf.unite(offs[i] + int(p), offs[j] + emb[sys.pair_slot(i, j)][p]);
    std::vector<int> cls(total, -1);
    int nc = 0;
    for (int v = 0; v < total; ++v) {
      int r = uf.find(v);
      if (cls[r] < 0) cls[r] = nc++;
      cls[v] = cls[r];
    }
    if (nc > 20) return {false, "colimit unexpectedly large"};
    std::vector<uint64_t> opens;
    for (uint64_t u = 0; u < (uint64_t{1} << nc); ++u) {
      bool open = true;
      for (int i = 0; i < 3 && open; ++i) {
        uint64_t stage = 0;
        for (size_t p = 0; p < sp[i].pts.size(); ++p)
          if (u >> cls[offs[i] + int(p)] & 1) stage |= uint64_t{1} << p;
        open = sp[i].space.is_open(stage);
      }
      if (open) opens.push_back(u);
    }
    std::vector<std::string> cnames(nc);
    for (int k = 0; k < nc; ++k) cnames[k] = "c" + std::to_string(k);
    FiniteSpace colim = make_space(nc, opens, cnames, false);

    // Cocone into the spectrum of the limit, one leg per stage.
    std::vector<std::vector<int>> leg(3);
    for (int i = 0; i < 3; ++i) {
      FrameMap proj;
      proj.dom = &lim.base;
      proj.cod = &sys.frames[i];
      proj.img.resize(lim.base.size);
      for (int k = 0; k < lim.base.size; ++k) proj.img[k] = lim.threads[k][i];
      validate_frame_map(proj);
      leg[i] = interpret_map(proj, slim, sp[i]);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (size_t p = 0; p < sp[i].pts.size(); ++p)
          if (leg[i][p] != leg[j][emb[sys.pair_slot(i, j)][p]])
            return {false, "cocone legs do not commute"};
    std::vector<int> psi(nc, -1);
    for (int i = 0; i < 3; ++i)
      for (size_t p = 0; p < sp[i].pts.size(); ++p) {
        int c = cls[offs[i] + int(p)];
        if (psi[c] >= 0 && psi[c] != leg[i][p])
          return {false, "glued points map to different limit points"};
        psi[c] = leg[i][p];
      }
    if (!injective_fn(psi) || int(slim.pts.size()) != nc)
      return {false, "colimit and limit spectrum differ in size"};
    if (!forward_open(psi, colim, slim.space))
      return {false, "a colimit open does not transfer to the limit spectrum"};
    for (uint64_t v : slim.space.opens)
      if (!colim.is_open(preimage_mask(v, psi)))
        return {false, "a limit-spectrum open does not pull back to the colimit"};
    return {true, std::to_string(nc) + " colimit points match the limit spectrum"};
  });

  run("A14", "ring spectra", [&]() -> Outcome {
    for (const NamedRing& nr : corpus.rings) {
      PrimeFilterCorrespondence pc = prime_filter_correspondence(nr.ring);
      if (!pc.certified)
        return {false, nr.name + ": correspondence not certified"};
      SoberReport sr = soberify(pc.zar.space);
      if (!sr.sober) return {false, nr.name + ": Zariski space not sober: " + sr.witness};
      for (int a = 0; a < nr.ring.size; ++a) {
        Bits g(nr.ring.size);
        g.set(a);
        radical(nr.ring, g);  // cross-checks two routes internally
      }
    }
    if (opt.corpus.max_ring >= 12) {
      ZariskiSpace z12 = zariski_space(ring_cyclic(12));
      if (z12.primes.size() != 2 || z12.space.opens.size() != 4)
        return {false, "Z12 spectrum: " + std::to_string(z12.primes.size()) +
                           " points, " + std::to_string(z12.space.opens.size()) +
                           " opens"};
    }
    for (int i = 2; i <= opt.corpus.max_cyclic_factor; ++i)
      for (int j = i; j <= opt.corpus.max_cyclic_factor; ++j) {
        FiniteRing a = ring_cyclic(i), b = ring_cyclic(j);
        ZariskiSpace za = zariski_space(a), zb = zariski_space(b);
        ZariskiSpace zp = zariski_space(ring_product(a, b));
        if (!homeomorphic(zp.space, disjoint_union_space(za.space, zb.space)))
          return {false, "Z" + std::to_string(i) + "xZ" + std::to_string(j) +
                             ": product spectrum is not the disjoint sum"};
      }
    return {true, std::to_string(corpus.rings.size()) + " rings certified"};
  });

  res.all_pass = true;
  for (const CheckResult& c : res.checks)
    if (!c.pass) res.all_pass = false;
  res.total_millis = ms_since(suite_start);
  return res;
}

}  // namespace loctk
