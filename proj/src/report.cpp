#include "loctk/report.hpp"

#include <algorithm>
#include <sstream>

#include "loctk/coproduct.hpp"
#include "loctk/error.hpp"
#include "loctk/properties.hpp"
#include "loctk/ring.hpp"

namespace loctk {

namespace {

const Workspace::FrameEntry& need_frame(const Workspace& w, const std::string& name) {
  int i = w.frame_index(name);
  if (i < 0) fail(Errc::unresolved_reference, "unknown frame '" + name + "'");
  return w.frames[i];
}

// Resolves the family for a command: a named declaration, or the exhaustive
// family of the frame when no name is given.
GroundJoinFamily resolve_family(const Workspace& w, const std::string& frame,
                                const std::string& joins) {
  const Workspace::FrameEntry& fe = need_frame(w, frame);
  if (joins.empty()) return full_join_family(fe.frame);
  int j = w.joins_index(joins);
  if (j < 0) fail(Errc::unresolved_reference, "unknown joins declaration '" + joins + "'");
  if (w.joins[j].frame != w.frame_index(frame))
    fail(Errc::domain_mismatch, "joins '" + joins + "' is declared on frame '" +
                                    w.frames[w.joins[j].frame].name + "', not on '" + frame + "'");
  return workspace_family(w, w.joins[j]);
}

Json name_list(const Frame& f, const Bits& s) {
  Json out = Json::array();
  for (int i = 0; i < f.size; ++i)
    if (s.test(i)) out.push_back(f.names[i]);
  return out;
}

Json space_summary(const FiniteSpace& x) {
  SeparationFlags sep = space_separation(x);
  Json out;
  out["points"] = x.points;
  out["opens"] = x.opens.size();
  out["t0"] = sep.t0;
  out["t1"] = sep.t1;
  out["t2"] = sep.t2;
  out["t3"] = sep.t3;
  return out;
}

// The canonical comparison map from a coproduct into the opens of the
// product of the two spectra: each generating cell (a, b) goes to the
// rectangle (points holding a) x (points holding b), and a C-ideal goes to
// the union of its cells' rectangles.  True when that map is a bijection
// onto the opens of the product space.
bool spatial_product_iso(const Frame& l, const Frame& r) {
  CoproductFrame cop = coproduct(l, r);
  Spectrum sl = classical_spectrum(l);
  Spectrum sr = classical_spectrum(r);
  FiniteSpace prod = product_space(sl.space, sr.space);
  int ny = sr.space.points;
  std::vector<uint64_t> rect(size_t(l.size) * r.size, 0);
  for (int a = 0; a < l.size; ++a)
    for (int b = 0; b < r.size; ++b) {
      uint64_t m = 0;
      for (int i = 0; i < sl.space.points; ++i) {
        if (!(sl.basic[a] >> i & 1)) continue;
        for (int j = 0; j < ny; ++j)
          if (sr.basic[b] >> j & 1) m |= uint64_t{1} << (i * ny + j);
      }
      rect[size_t(a) * r.size + b] = m;
    }
  std::vector<uint64_t> image(cop.base.size, 0);
  for (int c = 0; c < cop.base.size; ++c) {
    uint64_t m = 0;
    for (int a = 0; a < l.size; ++a)
      for (int b = 0; b < r.size; ++b)
        if (cop.ideals[c].test(a * r.size + b)) m |= rect[size_t(a) * r.size + b];
    image[c] = m;
  }
  if (image.size() != prod.opens.size()) return false;
  std::vector<uint64_t> sorted = image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (uint64_t m : image)
    if (!prod.is_open(m)) return false;
  return true;
}

void render(std::ostringstream& os, const Json& j, int indent) {
  std::string pad(size_t(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        os << pad << k << ":\n";
        render(os, v, indent + 1);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) {
      os << pad << "(none)\n";
      return;
    }
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        render(os, v, indent + 1);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

Json check_report(const Workspace& w) {
  Json doc;
  doc["command"] = "check";
  Json counts;
  counts["posets"] = w.posets.size();
  counts["spaces"] = w.spaces.size();
  counts["frames"] = w.frames.size();
  counts["rings"] = w.rings.size();
  counts["maps"] = w.maps.size();
  counts["joins"] = w.joins.size();
  doc["counts"] = counts;

  Json decls = Json::array();
  auto names_of = [](const auto& entries) {
    std::vector<std::string> out;
    for (const auto& e : entries) out.push_back(e.name);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& n : names_of(w.posets)) {
    const Poset& p = w.posets[w.poset_index(n)].poset;
    Json d;
    d["kind"] = "poset";
    d["name"] = n;
    d["elements"] = p.size;
    decls.push_back(d);
  }
  for (const auto& n : names_of(w.spaces)) {
    const FiniteSpace& x = w.spaces[w.space_index(n)].space;
    Json d;
    d["kind"] = "space";
    d["name"] = n;
    d["points"] = x.points;
    d["opens"] = x.opens.size();
    d["t0"] = space_T0(x);
    decls.push_back(d);
  }
  for (const auto& n : names_of(w.frames)) {
    const Frame& f = w.frames[w.frame_index(n)].frame;
    Json d;
    d["kind"] = "frame";
    d["name"] = n;
    d["elements"] = f.size;
    d["atoms"] = atoms(f).count();
    d["boolean"] = is_boolean_frame(f);
    decls.push_back(d);
  }
  for (const auto& n : names_of(w.rings)) {
    const FiniteRing& r = w.rings[w.ring_index(n)].ring;
    Json d;
    d["kind"] = "ring";
    d["name"] = n;
    d["elements"] = r.size;
    decls.push_back(d);
  }
  for (const auto& n : names_of(w.maps)) {
    const Workspace::MapEntry& m = w.maps[w.map_index(n)];
    FrameMap fm = workspace_map(w, m);
    MapClass cls = map_classify(fm);
    Json d;
    d["kind"] = "map";
    d["name"] = n;
    d["from"] = w.frames[m.from].name;
    d["to"] = w.frames[m.to].name;
    d["injective"] = cls.injective;
    d["surjective"] = cls.surjective;
    d["open"] = is_open_map(fm);
    decls.push_back(d);
  }
  for (const auto& n : names_of(w.joins)) {
    const Workspace::JoinsEntry& je = w.joins[w.joins_index(n)];
    Json d;
    d["kind"] = "joins";
    d["name"] = n;
    d["frame"] = w.frames[je.frame].name;
    d["form"] = je.kind == Workspace::JoinsEntry::Kind::full ? "full"
                : je.kind == Workspace::JoinsEntry::Kind::full_except ? "full except"
                                                                      : "only";
    d["listed"] = je.entries.size();
    decls.push_back(d);
  }
  doc["declarations"] = decls;
  return doc;
}

Json analyze_report(const Workspace& w, const std::string& frame, const std::string& joins) {
  const Frame& f = need_frame(w, frame).frame;
  GroundJoinFamily fam = resolve_family(w, frame, joins);
  Json doc;
  doc["command"] = "analyze";
  doc["frame"] = frame;
  doc["elements"] = f.size;
  doc["bottom"] = f.names[f.bottom];
  doc["top"] = f.names[f.top];
  doc["atoms"] = name_list(f, atoms(f));
  doc["complemented"] = name_list(f, complemented_elements(f));
  doc["boolean"] = is_boolean_frame(f);

  Json jj;
  jj["name"] = joins.empty() ? "(full)" : joins;
  jj["entries"] = fam.entries.size();
  doc["joins"] = jj;

  Json props;
  props["tu"] = is_TU(f).holds;
  props["i_hausdorff"] = is_I_hausdorff(f).holds;
  props["regular"] = is_regular(f).holds;
  props["normal"] = is_normal(f).holds;
  props["compact"] = is_compact(f, fam).holds;
  Verdict conn = is_connected(f);
  props["connected"] = conn.holds;
  props["degenerate"] = conn.degenerate;
  doc["properties"] = props;

  Spectrum spec = spectrum_space(f, fam);
  Json sp = space_summary(spec.space);
  sp["sober"] = soberify(spec.space).sober;
  doc["spectrum"] = sp;
  return doc;
}

Json points_report(const Workspace& w, const std::string& frame, const std::string& joins) {
  const Frame& f = need_frame(w, frame).frame;
  GroundJoinFamily fam = resolve_family(w, frame, joins);
  Spectrum spec = spectrum_space(f, fam);
  Json doc;
  doc["command"] = "points";
  doc["frame"] = frame;
  doc["joins"] = joins.empty() ? "(full)" : joins;
  doc["count"] = spec.pts.size();
  Json pts = Json::array();
  for (const PointFilter& p : spec.pts) {
    Json e;
    e["least"] = f.names[p.least];
    e["members"] = name_list(f, p.members);
    pts.push_back(e);
  }
  doc["points"] = pts;
  doc["space"] = space_summary(spec.space);
  return doc;
}

Json coproduct_report(const Workspace& w, const std::string& left, const std::string& right,
                      bool verify_spatial) {
  const Frame& l = need_frame(w, left).frame;
  const Frame& r = need_frame(w, right).frame;
  CoproductFrame cop = coproduct(l, r);
  Json doc;
  doc["command"] = "coproduct";
  doc["left"] = left;
  doc["right"] = right;
  doc["left_elements"] = l.size;
  doc["right_elements"] = r.size;
  doc["elements"] = cop.base.size;
  doc["boolean"] = is_boolean_frame(cop.base);
  Json sc;
  sc["ran"] = verify_spatial;
  if (verify_spatial) sc["isomorphic"] = spatial_product_iso(l, r);
  doc["spatial_check"] = sc;
  return doc;
}

Json maps_report(const Workspace& w, const std::string& from, const std::string& to) {
  const Frame& dom = need_frame(w, from).frame;
  const Frame& cod = need_frame(w, to).frame;
  std::vector<FrameMap> all = enumerate_frame_maps(dom, cod);
  Json doc;
  doc["command"] = "maps";
  doc["from"] = from;
  doc["to"] = to;
  doc["count"] = all.size();
  Json arr = Json::array();
  for (const FrameMap& fm : all) {
    Json e;
    Json img;
    for (int i = 0; i < dom.size; ++i) img[dom.names[i]] = cod.names[fm.img[i]];
    e["images"] = img;
    MapClass cls = map_classify(fm);
    e["injective"] = cls.injective;
    e["surjective"] = cls.surjective;
    e["open"] = is_open_map(fm);
    arr.push_back(e);
  }
  doc["maps"] = arr;
  return doc;
}

Json ring_report(const Workspace& w, const std::string& ring) {
  int i = w.ring_index(ring);
  if (i < 0) fail(Errc::unresolved_reference, "unknown ring '" + ring + "'");
  const FiniteRing& r = w.rings[i].ring;
  ZariskiSpace zar = zariski_space(r);
  Json doc;
  doc["command"] = "spec";
  doc["ring"] = ring;
  doc["elements"] = r.size;
  std::vector<Ideal> pr = prime_ideals(r);
  Json primes = Json::array();
  for (const Ideal& p : pr) {
    Json e;
    Json members = Json::array();
    for (int a = 0; a < r.size; ++a)
      if (p.members.test(a)) members.push_back(r.names[a]);
    e["members"] = members;
    e["maximal"] = p.maximal;
    primes.push_back(e);
  }
  doc["primes"] = primes;
  Json sp = space_summary(zar.space);
  sp["sober"] = soberify(zar.space).sober;
  doc["space"] = sp;
  PrimeFilterCorrespondence cor = prime_filter_correspondence(r);
  Json c;
  c["certified"] = cor.certified;
  c["spectrum_points"] = cor.spec.pts.size();
  doc["correspondence"] = c;
  return doc;
}

Json suite_report(const SuiteOptions& opt, const SuiteResult& result) {
  Json doc;
  doc["command"] = "suite";
  Json o;
  o["max_poset"] = opt.corpus.max_poset;
  o["max_chain"] = opt.corpus.max_chain;
  o["max_boolean"] = opt.corpus.max_boolean;
  o["max_ring"] = opt.corpus.max_ring;
  o["max_cyclic_factor"] = opt.corpus.max_cyclic_factor;
  o["max_space_points"] = opt.corpus.max_space_points;
  o["mono_trials"] = opt.mono_trials;
  o["family_trials"] = opt.family_trials;
  o["seed"] = opt.seed;
  o["inject_defect"] = opt.inject_defect;
  doc["options"] = o;
  Json checks = Json::array();
  for (const CheckResult& c : result.checks) {
    Json e;
    e["id"] = c.id;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  doc["checks"] = checks;
  doc["all_pass"] = result.all_pass;
  return doc;
}

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace loctk
