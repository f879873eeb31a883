#include "loctk/poset.hpp"

#include <algorithm>
#include <numeric>

#include "loctk/error.hpp"

namespace loctk {

Poset make_poset(int n, const std::vector<std::pair<int, int>>& rel,
                 std::vector<std::string> names) {
  if (n < 0) fail(Errc::not_a_poset, "negative carrier size");
  Poset p;
  p.size = n;
  p.up.assign(n, Bits(n));
  for (int i = 0; i < n; ++i) p.up[i].set(i);
  for (auto [a, b] : rel) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::not_a_poset, "relation mentions element out of range");
    p.up[a].set(b);
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.up[i].test(k)) p.up[i] |= p.up[k];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.up[i].test(j) && p.up[j].test(i))
        fail(Errc::not_a_poset, "cycle through " + std::to_string(i) + " and " +
                                    std::to_string(j));
  p.down.assign(n, Bits(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.up[j].test(i)) p.down[i].set(j);
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  }
  if (int(names.size()) != n)
    fail(Errc::not_a_poset, "name list does not match carrier size");
  p.names = std::move(names);
  return p;
}

std::vector<int> linear_extension(const Poset& p) {
  int n = p.size;
  std::vector<int> indeg(n, 0), order;
  for (int i = 0; i < n; ++i) indeg[i] = p.down[i].count() - 1;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && indeg[i] == 0) {
        pick = i;
        break;
      }
    order.push_back(pick);
    done[pick] = true;
    for (int j = 0; j < n; ++j)
      if (!done[j] && p.leq(pick, j)) --indeg[j];
  }
  return order;
}

std::vector<std::pair<int, int>> cover_relation(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool gap = false;
      for (int c = 0; c < p.size && !gap; ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) gap = true;
      if (!gap) covers.push_back({a, b});
    }
  return covers;
}

namespace {

bool iso_extend(const Poset& a, const Poset& b, std::vector<int>& img,
                std::vector<bool>& used, int k) {
  if (k == a.size) return true;
  for (int cand = 0; cand < b.size; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < k && ok; ++prev) {
      if (a.leq(prev, k) != b.leq(img[prev], cand)) ok = false;
      if (ok && a.leq(k, prev) != b.leq(cand, img[prev])) ok = false;
    }
    if (!ok) continue;
    img[k] = cand;
    used[cand] = true;
    if (iso_extend(a, b, img, used, k + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const Poset& a, const Poset& b) {
  if (a.size != b.size) return false;
  std::vector<int> degs_a, degs_b;
  for (int i = 0; i < a.size; ++i) degs_a.push_back(a.up[i].count() * 64 + a.down[i].count());
  for (int i = 0; i < b.size; ++i) degs_b.push_back(b.up[i].count() * 64 + b.down[i].count());
  std::sort(degs_a.begin(), degs_a.end());
  std::sort(degs_b.begin(), degs_b.end());
  if (degs_a != degs_b) return false;
  std::vector<int> img(a.size, -1);
  std::vector<bool> used(b.size, false);
  return iso_extend(a, b, img, used, 0);
}

std::vector<Poset> all_posets_up_to(int max_size) {
  std::vector<Poset> out;
  for (int n = 0; n <= max_size; ++n) {
    // Enumerate strict relations on pairs i < j only: every finite poset is
    // isomorphic to one whose order extends the index order, so restricting
    // to upward pairs still hits every isomorphism class.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    int m = int(pairs.size());
    std::vector<Poset> classes;
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
      std::vector<std::pair<int, int>> rel;
      for (int t = 0; t < m; ++t)
        if ((mask >> t) & 1) rel.push_back(pairs[t]);
      Poset p = make_poset(n, rel);
      // Keep only transitively closed masks' canonical representatives.
      bool fresh = true;
      for (const Poset& q : classes)
        if (poset_isomorphic(p, q)) {
          fresh = false;
          break;
        }
      if (fresh) classes.push_back(std::move(p));
    }
    for (auto& p : classes) out.push_back(std::move(p));
  }
  return out;
}

Poset product_poset(const Poset& a, const Poset& b) {
  int n = a.size * b.size;
  std::vector<std::pair<int, int>> rel;
  std::vector<std::string> names;
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) names.push_back(a.names[i] + "." + b.names[j]);
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j)
      for (int k = 0; k < a.size; ++k)
        for (int l = 0; l < b.size; ++l)
          if (a.leq(i, k) && b.leq(j, l)) rel.push_back({i * b.size + j, k * b.size + l});
  return make_poset(n, rel, std::move(names));
}

}  // namespace loctk
