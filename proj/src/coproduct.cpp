#include "loctk/coproduct.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "loctk/error.hpp"

namespace loctk {

namespace {

std::vector<Bits> to_rows(const Bits& flat, int nl, int nr) {
  std::vector<Bits> rows(nl, Bits(nr));
  flat.for_each([&](int bit) { rows[bit / nr].set(bit % nr); });
  return rows;
}

Bits to_flat(const std::vector<Bits>& rows, int nl, int nr) {
  Bits flat(nl * nr);
  for (int a = 0; a < nl; ++a)
    rows[a].for_each([&](int b) { flat.set(size_t(a) * nr + b); });
  return flat;
}

}  // namespace

Bits c_ideal_closure(const Frame& l, const Frame& r, Bits seed) {
  int nl = l.size, nr = r.size;
  std::vector<Bits> rows = to_rows(seed, nl, nr);
  // Bottom cross.
  rows[l.bottom] = Bits::filled(nr);
  for (int a = 0; a < nl; ++a) rows[a].set(r.bottom);
  bool changed = true;
  while (changed) {
    changed = false;
    // Right-sided join saturation and downward closure within each row.
    for (int a = 0; a < nl; ++a) {
      Bits want = r.down[join_all(r, rows[a])];
      if (want != rows[a]) {
        rows[a] = std::move(want);
        changed = true;
      }
    }
    // Downward closure across rows, highest row index first.
    for (int a = nl - 1; a >= 0; --a)
      for (int a2 = a - 1; a2 >= 0; --a2)
        if (l.leq(a2, a) && !rows[a].subset_of(rows[a2])) {
          rows[a2] |= rows[a];
          changed = true;
        }
    // Left-sided join saturation per column, with downward closure built in.
    for (int b = 0; b < nr; ++b) {
      Bits col(nl);
      for (int a = 0; a < nl; ++a)
        if (rows[a].test(b)) col.set(a);
      int m = join_all(l, col);
      l.down[m].for_each([&](int a) {
        if (!rows[a].test(b)) {
          rows[a].set(b);
          changed = true;
        }
      });
    }
  }
  return to_flat(rows, nl, nr);
}

CoproductFrame coproduct(const Frame& l, const Frame& r) {
  int nl = l.size, nr = r.size;
  CoproductFrame c;
  c.left = l;
  c.right = r;
  std::vector<Bits> pool;
  std::unordered_set<Bits, BitsHash> seen;
  auto add = [&](Bits b) {
    if (seen.insert(b).second) {
      pool.push_back(std::move(b));
      if (int(pool.size()) > limits().max_coproduct)
        fail(Errc::resource_cap, "coproduct exceeds " +
                                     std::to_string(limits().max_coproduct) +
                                     " elements");
    }
  };
  std::vector<Bits> principal(size_t(nl) * nr);
  for (int a = 0; a < nl; ++a)
    for (int b = 0; b < nr; ++b) {
      Bits seed(nl * nr);
      seed.set(size_t(a) * nr + b);
      principal[size_t(a) * nr + b] = c_ideal_closure(l, r, std::move(seed));
      add(principal[size_t(a) * nr + b]);
    }
  // Close under pairwise meet and pairwise join.  Meets of C-ideals are
  // plain intersections; joins need resaturation.
  size_t fresh_from = 0;
  while (fresh_from < pool.size()) {
    size_t hi = pool.size();
    for (size_t i = fresh_from; i < hi; ++i)
      for (size_t j = 0; j <= i; ++j) {
        add(pool[i] & pool[j]);
        add(c_ideal_closure(l, r, pool[i] | pool[j]));
      }
    fresh_from = hi;
  }
  std::sort(pool.begin(), pool.end(), canon_less);
  int n = int(pool.size());
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pool[i].subset_of(pool[j])) rel.push_back({i, j});
  c.base = build_frame_from_order(make_poset(n, rel), limits().max_coproduct);
  c.ideals = std::move(pool);
  auto index_of = [&](const Bits& b) {
    auto it = std::lower_bound(c.ideals.begin(), c.ideals.end(), b, canon_less);
    if (it == c.ideals.end() || *it != b)
      fail(Errc::shadow_mismatch, "generated C-ideal missing from the pool");
    return int(it - c.ideals.begin());
  };
  c.cells.resize(size_t(nl) * nr);
  for (size_t k = 0; k < principal.size(); ++k) c.cells[k] = index_of(principal[k]);
  c.inj_left.resize(nl);
  c.inj_right.resize(nr);
  for (int a = 0; a < nl; ++a) c.inj_left[a] = c.cell(a, r.top);
  for (int b = 0; b < nr; ++b) c.inj_right[b] = c.cell(l.top, b);
  FrameMap il{&c.left, &c.base, c.inj_left};
  FrameMap ir{&c.right, &c.base, c.inj_right};
  validate_frame_map(il);
  validate_frame_map(ir);
  return c;
}

FrameMap copair(const CoproductFrame& c, const FrameMap& h_left, const FrameMap& h_right) {
  if (!frame_equal(*h_left.dom, c.left) || !frame_equal(*h_right.dom, c.right))
    fail(Errc::domain_mismatch, "legs do not start at the coproduct factors");
  if (!frame_equal(*h_left.cod, *h_right.cod))
    fail(Errc::domain_mismatch, "legs end in different frames");
  const Frame& m = *h_left.cod;
  int nr = c.right.size;
  FrameMap h{&c.base, h_left.cod, {}};
  h.img.resize(c.base.size);
  for (int u = 0; u < c.base.size; ++u) {
    int acc = m.bottom;
    c.ideals[u].for_each([&](int bit) {
      acc = m.join(acc, m.meet(h_left.img[bit / nr], h_right.img[bit % nr]));
    });
    h.img[u] = acc;
  }
  validate_frame_map(h);
  for (int a = 0; a < c.left.size; ++a)
    if (h.img[c.inj_left[a]] != h_left.img[a])
      fail(Errc::shadow_mismatch, "copair disagrees with the left leg");
  for (int b = 0; b < c.right.size; ++b)
    if (h.img[c.inj_right[b]] != h_right.img[b])
      fail(Errc::shadow_mismatch, "copair disagrees with the right leg");
  // Uniqueness certificate: principal ideals are meets of injection values,
  // and every element is the join of the principals it contains, so a frame
  // map agreeing on the injections is forced everywhere.
  for (int a = 0; a < c.left.size; ++a)
    for (int b = 0; b < nr; ++b)
      if (c.cell(a, b) != c.base.meet(c.inj_left[a], c.inj_right[b]))
        fail(Errc::shadow_mismatch, "principal element is not a meet of injections");
  for (int u = 0; u < c.base.size; ++u) {
    int acc = c.base.bottom;
    c.ideals[u].for_each([&](int bit) { acc = c.base.join(acc, c.cells[bit]); });
    if (acc != u)
      fail(Errc::shadow_mismatch, "element is not the join of its principal parts");
  }
  return h;
}

int diagonal_complement(const CoproductFrame& c) {
  if (!frame_equal(c.left, c.right))
    fail(Errc::not_square, "diagonal needs both factors equal");
  int n = c.left.size;
  Bits seed(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (c.left.meet(a, b) == c.left.bottom) seed.set(size_t(a) * n + b);
  Bits d = c_ideal_closure(c.left, c.right, std::move(seed));
  for (int u = 0; u < c.base.size; ++u)
    if (c.ideals[u] == d) return u;
  fail(Errc::shadow_mismatch, "diagonal complement missing from the coproduct");
}

LimitFrame frame_inverse_limit(const DirectedSystem& sys) {
  const Poset& ix = sys.index;
  int n = ix.size;
  if (n == 0) fail(Errc::not_directed, "empty index");
  if (int(sys.frames.size()) != n)
    fail(Errc::incoherent_system, "frame list does not match the index");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool bounded = false;
      for (int k = 0; k < n && !bounded; ++k)
        if (ix.leq(i, k) && ix.leq(j, k)) bounded = true;
      if (!bounded)
        fail(Errc::not_directed, "indices " + ix.names[i] + " and " + ix.names[j] +
                                     " have no upper bound");
    }
  auto conn = [&](int i, int j) -> const std::vector<int32_t>& {
    return sys.maps[sys.pair_slot(i, j)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !ix.leq(i, j)) continue;
      if (int(conn(i, j).size()) != sys.frames[j].size)
        fail(Errc::incoherent_system, "missing or malformed connecting map " +
                                          ix.names[j] + " -> " + ix.names[i]);
      FrameMap p{&sys.frames[j], &sys.frames[i], conn(i, j)};
      validate_frame_map(p);
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (!(i != j && j != k && i != k && ix.leq(i, j) && ix.leq(j, k))) continue;
        for (int x = 0; x < sys.frames[k].size; ++x)
          if (conn(i, j)[conn(j, k)[x]] != conn(i, k)[x])
            fail(Errc::incoherent_system, "maps through " + ix.names[j] +
                                              " do not compose to the direct map");
      }
  // A finite directed poset has a greatest element; a thread is determined
  // by its component there, and every component choice extends coherently.
  int mx = -1;
  for (int i = 0; i < n; ++i)
    if (ix.down[i].count() == n) mx = i;
  if (mx < 0) fail(Errc::not_directed, "no greatest index");
  LimitFrame lim;
  for (int x = 0; x < sys.frames[mx].size; ++x) {
    std::vector<int32_t> t(n);
    t[mx] = x;
    for (int i = 0; i < n; ++i)
      if (i != mx) t[i] = conn(i, mx)[x];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && ix.leq(i, j) && conn(i, j)[t[j]] != t[i])
          fail(Errc::incoherent_system, "section through the greatest index is not a thread");
    lim.threads.push_back(std::move(t));
  }
  int tn = int(lim.threads.size());
  std::vector<std::pair<int, int>> rel;
  for (int s = 0; s < tn; ++s)
    for (int t = 0; t < tn; ++t) {
      bool le = true;
      for (int i = 0; i < n && le; ++i)
        if (!sys.frames[i].leq(lim.threads[s][i], lim.threads[t][i])) le = false;
      if (le) rel.push_back({s, t});
    }
  lim.base = build_frame_from_order(make_poset(tn, rel), limits().max_coproduct);
  for (int s = 0; s < tn; ++s)
    for (int t = 0; t < tn; ++t) {
      bool le = true;
      for (int i = 0; i < n && le; ++i)
        if (!sys.frames[i].leq(lim.threads[s][i], lim.threads[t][i])) le = false;
      if (lim.base.leq(s, t) != le)
        fail(Errc::shadow_mismatch, "thread layout desynchronized from the base frame");
    }
  // Joins and meets must be the pointwise ones.
  for (int s = 0; s < tn; ++s)
    for (int t = 0; t < tn; ++t)
      for (int i = 0; i < n; ++i) {
        const Frame& fi = sys.frames[i];
        if (lim.threads[lim.base.join(s, t)][i] != fi.join(lim.threads[s][i], lim.threads[t][i]) ||
            lim.threads[lim.base.meet(s, t)][i] != fi.meet(lim.threads[s][i], lim.threads[t][i]))
          fail(Errc::shadow_mismatch, "thread lattice operations are not pointwise");
      }
  return lim;
}

}  // namespace loctk
