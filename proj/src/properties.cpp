#include "loctk/properties.hpp"

#include <algorithm>

#include "loctk/error.hpp"
#include "loctk/frame_map.hpp"

namespace loctk {

// The one-element frame makes every separation question collapse: all of
// them hold vacuously, flagged so callers can report the case apart.
bool degenerate_verdict(const Frame& f, Verdict& v) {
  if (f.size != 1) return false;
  v.holds = true;
  v.degenerate = true;
  return true;
}

Verdict is_TU(const Frame& f) {
  Verdict v;
  if (degenerate_verdict(f, v)) return v;
  std::vector<PointFilter> pts = classical_points(f);
  v.holds = true;
  for (size_t i = 0; i < pts.size() && v.holds; ++i)
    for (size_t k = 0; k < pts.size(); ++k) {
      if (i == k) continue;
      if (pts[i].members.subset_of(pts[k].members)) {
        v.holds = false;
        v.witness = "point at " + f.names[pts[i].least] + " lies inside point at " +
                    f.names[pts[k].least];
        break;
      }
    }
  // Probe: pointwise-comparable distinct maps into small Boolean frames.
  bool probe = true;
  std::string probe_w;
  for (int k = 0; k <= 3 && probe; ++k) {
    Frame b = boolean_frame(k);
    std::vector<FrameMap> maps = enumerate_frame_maps(f, b);
    for (size_t i = 0; i < maps.size() && probe; ++i)
      for (size_t l = 0; l < maps.size(); ++l) {
        if (i == l) continue;
        bool le = true;
        for (int e = 0; e < f.size && le; ++e)
          if (!b.leq(maps[i].img[e], maps[l].img[e])) le = false;
        if (le) {
          probe = false;
          probe_w = "ordered map pair into the Boolean frame on " +
                    std::to_string(k) + " atoms";
          break;
        }
      }
  }
  if (probe != v.holds)
    fail(Errc::shadow_mismatch, "antichain criterion says " + std::to_string(v.holds) +
                                    " but the map probe says " + std::to_string(probe));
  if (!v.holds && v.witness.empty()) v.witness = probe_w;
  return v;
}

Verdict is_I_hausdorff(const Frame& f) {
  {
    Verdict v;
    if (degenerate_verdict(f, v)) return v;
  }
  CoproductFrame c = coproduct(f, f);
  int d = diagonal_complement(c);
  int n = f.size;
  bool unique_form = true, swallows = true;
  std::string w1, w2;
  for (int u = 0; u < c.base.size; ++u) {
    if (!c.base.leq(d, u)) continue;
    int matches = 0;
    for (int l = 0; l < n; ++l) {
      Bits form(n * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (f.leq(f.meet(a, b), l)) form.set(size_t(a) * n + b);
      if (form == c.ideals[u]) ++matches;
    }
    if (matches != 1 && unique_form) {
      unique_form = false;
      w1 = "C-ideal above the diagonal complement matches " + std::to_string(matches) +
           " elements";
    }
    for (int a = 0; a < n && swallows; ++a)
      for (int b = 0; b < n; ++b) {
        int m = f.meet(a, b);
        if (c.ideals[u].test(size_t(m) * n + m) && !c.ideals[u].test(size_t(a) * n + b)) {
          swallows = false;
          w2 = "holds the squared meet of (" + f.names[a] + ", " + f.names[b] +
               ") but not the pair";
          break;
        }
      }
  }
  // Point criterion: some pair of distinct points meets everywhere.
  bool points_ok = true;
  std::string w3;
  std::vector<PointFilter> pts = classical_points(f);
  for (size_t i = 0; i < pts.size() && points_ok; ++i)
    for (size_t k = i + 1; k < pts.size(); ++k) {
      bool all_nonzero = true;
      pts[i].members.for_each([&](int a) {
        if (!all_nonzero) return;
        pts[k].members.for_each([&](int b) {
          if (all_nonzero && f.meet(a, b) == f.bottom) all_nonzero = false;
        });
      });
      if (all_nonzero) {
        points_ok = false;
        w3 = "points at " + f.names[pts[i].least] + " and " + f.names[pts[k].least] +
             " meet everywhere";
        break;
      }
    }
  if (unique_form != swallows || swallows != points_ok)
    fail(Errc::shadow_mismatch,
         "separation criteria disagree: unique-form=" + std::to_string(unique_form) +
             " swallowing=" + std::to_string(swallows) +
             " points=" + std::to_string(points_ok));
  Verdict v;
  v.holds = unique_form;
  if (!v.holds) v.witness = !w1.empty() ? w1 : (!w2.empty() ? w2 : w3);
  return v;
}

Verdict is_regular(const Frame& f) {
  Verdict v;
  if (degenerate_verdict(f, v)) return v;
  v.holds = true;
  for (int l = 0; l < f.size; ++l) {
    Bits below(f.size);
    for (int a = 0; a < f.size; ++a)
      if (well_below(f, a, l)) below.set(a);
    if (join_all(f, below) != l) {
      v.holds = false;
      v.witness = f.names[l] + " is not the join of what lies way inside it";
      break;
    }
  }
  return v;
}

Verdict is_normal(const Frame& f) {
  Verdict v;
  if (degenerate_verdict(f, v)) return v;
  v.holds = true;
  for (int a = 0; a < f.size && v.holds; ++a)
    for (int b = 0; b < f.size; ++b) {
      if (f.join(a, b) != f.top) continue;
      bool split = false;
      for (int u = 0; u < f.size && !split; ++u)
        for (int w = 0; w < f.size && !split; ++w)
          if (f.meet(u, w) == f.bottom && f.join(a, w) == f.top && f.join(b, u) == f.top)
            split = true;
      if (!split) {
        v.holds = false;
        v.witness = "cover by " + f.names[a] + " and " + f.names[b] + " does not split";
        break;
      }
    }
  return v;
}

Verdict is_compact(const Frame& f, const GroundJoinFamily& j) {
  validate_family(f, j);
  {
    Verdict v;
    if (degenerate_verdict(f, v)) return v;
  }
  bool subcovers = true;
  std::string w1;
  for (const JoinEntry& e : j.entries) {
    if (e.target != f.top) continue;
    // Greedy minimal subcover; the full finite part list always works, so
    // only a broken entry could fail here.
    Bits keep = e.parts;
    e.parts.for_each([&](int p) {
      Bits trial = keep;
      trial.reset(p);
      if (join_all(f, trial) == f.top) keep = trial;
    });
    if (join_all(f, keep) != f.top) {
      subcovers = false;
      w1 = "registered cover of top has no finite subcover";
      break;
    }
  }
  // Maximal ideals are the down-sets of elements covered only by top.
  bool ideals_ok = true;
  std::string w2;
  for (int m = 0; m < f.size && ideals_ok; ++m) {
    if (m == f.top || f.up[m].count() != 2) continue;  // not a coatom
    for (const JoinEntry& e : j.entries) {
      bool all_in = true;
      e.parts.for_each([&](int p) {
        if (all_in && !f.leq(p, m)) all_in = false;
      });
      if (all_in && !f.leq(e.target, m)) {
        ideals_ok = false;
        w2 = "maximal ideal at " + f.names[m] + " misses a registered join onto " +
             f.names[e.target];
        break;
      }
    }
  }
  if (subcovers != ideals_ok)
    fail(Errc::shadow_mismatch, "subcover and maximal-ideal criteria disagree");
  Verdict v;
  v.holds = subcovers;
  v.witness = !w1.empty() ? w1 : w2;
  return v;
}

Verdict is_connected(const Frame& f) {
  Verdict v;
  if (f.size == 1) {
    v.degenerate = true;
    v.witness = "one-element frame";
    return v;
  }
  Bits comp = complemented_elements(f);
  v.holds = true;
  comp.for_each([&](int a) {
    if (a != f.bottom && a != f.top && v.holds) {
      v.holds = false;
      v.witness = f.names[a] + " is complemented";
    }
  });
  return v;
}

Verdict p_connected_probe(const Frame& f, const std::vector<const Frame*>& tests) {
  Verdict v;
  v.holds = true;
  for (size_t t = 0; t < tests.size() && v.holds; ++t) {
    const Frame& m = *tests[t];
    CoproductFrame c = coproduct(f, m);
    Bits comp = complemented_elements(c.base);
    Bits mcomp = complemented_elements(m);
    comp.for_each([&](int u) {
      if (!v.holds) return;
      bool from_right = false;
      mcomp.for_each([&](int b) {
        if (!from_right && c.inj_right[b] == u) from_right = true;
      });
      if (!from_right) {
        v.holds = false;
        v.witness = "complemented element outside the right factor, probe frame " +
                    std::to_string(t);
      }
    });
  }
  return v;
}

SeparationFlags space_separation(const FiniteSpace& x) {
  SeparationFlags s;
  s.t0 = space_T0(x);
  s.t1 = true;
  for (int a = 0; a < x.points && s.t1; ++a)
    for (int b = 0; b < x.points; ++b) {
      if (a == b) continue;
      bool sep = false;
      for (uint64_t u : x.opens)
        if (((u >> a) & 1) && !((u >> b) & 1)) {
          sep = true;
          break;
        }
      if (!sep) {
        s.t1 = false;
        break;
      }
    }
  s.t2 = true;
  for (int a = 0; a < x.points && s.t2; ++a)
    for (int b = a + 1; b < x.points; ++b) {
      bool sep = false;
      for (uint64_t u : x.opens) {
        if (!((u >> a) & 1)) continue;
        for (uint64_t w : x.opens)
          if (((w >> b) & 1) && !(u & w)) {
            sep = true;
            break;
          }
        if (sep) break;
      }
      if (!sep) {
        s.t2 = false;
        break;
      }
    }
  bool reg = true;
  uint64_t full = x.full_mask();
  for (int a = 0; a < x.points && reg; ++a)
    for (uint64_t u : x.opens) {
      uint64_t closed = full & ~u;  // an arbitrary closed set
      if ((closed >> a) & 1) continue;
      bool sep = false;
      for (uint64_t g : x.opens) {
        if (!((g >> a) & 1)) continue;
        for (uint64_t h : x.opens)
          if ((closed & ~h) == 0 && !(g & h)) {
            sep = true;
            break;
          }
        if (sep) break;
      }
      if (!sep) {
        reg = false;
        break;
      }
    }
  s.t3 = s.t1 && reg;
  return s;
}

}  // namespace loctk
