#include "loctk/space.hpp"

#include <algorithm>
#include <bit>

#include "loctk/error.hpp"

namespace loctk {

bool FiniteSpace::is_open(uint64_t s) const {
  return std::find(opens.begin(), opens.end(), s) != opens.end();
}

int FiniteSpace::open_index(uint64_t s) const {
  auto it = std::find(opens.begin(), opens.end(), s);
  return it == opens.end() ? -1 : int(it - opens.begin());
}

FiniteSpace make_space(int n, std::vector<uint64_t> opens,
                       std::vector<std::string> names, bool complete) {
  if (n < 0 || n > limits().max_points)
    fail(Errc::resource_cap, "space on " + std::to_string(n) +
                                 " points exceeds the cap of " +
                                 std::to_string(limits().max_points));
  FiniteSpace x;
  x.points = n;
  uint64_t full = x.full_mask();
  for (uint64_t s : opens)
    if (s & ~full) fail(Errc::invalid_declaration, "open set mentions a point out of range");
  opens.push_back(0);
  opens.push_back(full);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  if (complete) {
    // Close under union and intersection.
    bool grew = true;
    while (grew) {
      grew = false;
      size_t m = opens.size();
      for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
          for (uint64_t c : {opens[i] | opens[j], opens[i] & opens[j]}) {
            if (std::find(opens.begin(), opens.end(), c) == opens.end()) {
              opens.push_back(c);
              grew = true;
            }
          }
        }
    }
  } else {
    for (size_t i = 0; i < opens.size(); ++i)
      for (size_t j = i + 1; j < opens.size(); ++j) {
        if (!std::count(opens.begin(), opens.end(), opens[i] | opens[j]))
          fail(Errc::invalid_declaration, "opens not closed under union");
        if (!std::count(opens.begin(), opens.end(), opens[i] & opens[j]))
          fail(Errc::invalid_declaration, "opens not closed under intersection");
      }
  }
  std::sort(opens.begin(), opens.end(), canon_less64);
  x.opens = std::move(opens);
  if (names.empty())
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  if (int(names.size()) != n)
    fail(Errc::invalid_declaration, "point name list does not match point count");
  x.names = std::move(names);
  return x;
}

FiniteSpace discrete_space(int n) {
  std::vector<uint64_t> opens;
  if (n > 20) fail(Errc::resource_cap, "discrete space too large to enumerate");
  for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) opens.push_back(s);
  return make_space(n, std::move(opens));
}

bool specializes(const FiniteSpace& x, int a, int b) {
  for (uint64_t u : x.opens)
    if (((u >> a) & 1) && !((u >> b) & 1)) return false;
  return true;
}

Poset specialization_order(const FiniteSpace& x) {
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < x.points; ++a)
    for (int b = 0; b < x.points; ++b)
      if (a != b && specializes(x, a, b)) rel.push_back({a, b});
  return make_poset(x.points, rel, x.names);
}

bool space_T0(const FiniteSpace& x) {
  for (int a = 0; a < x.points; ++a)
    for (int b = a + 1; b < x.points; ++b)
      if (specializes(x, a, b) && specializes(x, b, a)) return false;
  return true;
}

namespace {

std::vector<Bits> preorder_rows(const FiniteSpace& x) {
  std::vector<Bits> rows(x.points, Bits(x.points));
  for (int a = 0; a < x.points; ++a)
    for (int b = 0; b < x.points; ++b)
      if (specializes(x, a, b)) rows[a].set(b);
  return rows;
}

bool preorder_iso_extend(const std::vector<Bits>& a, const std::vector<Bits>& b,
                         std::vector<int>& img, std::vector<bool>& used, int k) {
  int n = int(a.size());
  if (k == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = a[k].test(k) == b[cand].test(cand);
    for (int prev = 0; prev < k && ok; ++prev) {
      if (a[prev].test(k) != b[img[prev]].test(cand)) ok = false;
      if (ok && a[k].test(prev) != b[cand].test(img[prev])) ok = false;
    }
    if (!ok) continue;
    img[k] = cand;
    used[cand] = true;
    if (preorder_iso_extend(a, b, img, used, k + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

// Finite spaces are determined by their specialization preorders (every
// finite topology consists of all up-sets of its preorder), so
// homeomorphism reduces to preorder isomorphism.
bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  if (a.points != b.points || a.opens.size() != b.opens.size()) return false;
  auto ra = preorder_rows(a), rb = preorder_rows(b);
  std::vector<int> img(a.points, -1);
  std::vector<bool> used(b.points, false);
  return preorder_iso_extend(ra, rb, img, used, 0);
}

FiniteSpace product_space(const FiniteSpace& a, const FiniteSpace& b) {
  long long n = (long long)a.points * b.points;
  if (n > limits().max_points)
    fail(Errc::resource_cap, "product space exceeds the point cap");
  std::vector<uint64_t> boxes;
  for (uint64_t u : a.opens)
    for (uint64_t v : b.opens) {
      uint64_t s = 0;
      for (int i = 0; i < a.points; ++i)
        if ((u >> i) & 1)
          for (int j = 0; j < b.points; ++j)
            if ((v >> j) & 1) s |= uint64_t{1} << (i * b.points + j);
      boxes.push_back(s);
    }
  std::vector<std::string> names;
  for (int i = 0; i < a.points; ++i)
    for (int j = 0; j < b.points; ++j) names.push_back(a.names[i] + "." + b.names[j]);
  return make_space(int(n), std::move(boxes), std::move(names), /*complete=*/true);
}

FiniteSpace disjoint_union_space(const FiniteSpace& a, const FiniteSpace& b) {
  int n = a.points + b.points;
  if (n > limits().max_points)
    fail(Errc::resource_cap, "sum space exceeds the point cap");
  std::vector<uint64_t> opens;
  for (uint64_t u : a.opens)
    for (uint64_t v : b.opens) opens.push_back(u | (v << a.points));
  std::vector<std::string> names;
  for (auto& s : a.names) names.push_back("l." + s);
  for (auto& s : b.names) names.push_back("r." + s);
  return make_space(n, std::move(opens), std::move(names));
}

FiniteSpace downset_space(const Poset& p) {
  if (p.size > limits().max_points || p.size > 20)
    fail(Errc::resource_cap, "carrier exceeds the point cap");
  std::vector<uint64_t> opens;
  for (uint64_t s = 0; s < (uint64_t{1} << p.size); ++s) {
    bool closed = true;
    for (int i = 0; i < p.size && closed; ++i)
      if ((s >> i) & 1)
        p.down[i].for_each([&](int j) {
          if (!((s >> j) & 1)) closed = false;
        });
    if (closed) opens.push_back(s);
  }
  return make_space(p.size, std::move(opens), p.names);
}

std::vector<FiniteSpace> all_spaces_up_to(int max_points, bool t0_only) {
  std::vector<FiniteSpace> out;
  for (int n = 0; n <= max_points; ++n) {
    std::vector<FiniteSpace> classes;
    int m = n * n - n;  // off-diagonal pairs
    if (m > 20) fail(Errc::resource_cap, "too many preorders to enumerate");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) pairs.push_back({i, j});
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
      auto rel = [&](int i, int j) {
        if (i == j) return true;
        for (int t = 0; t < m; ++t)
          if (pairs[t] == std::make_pair(i, j)) return bool((mask >> t) & 1);
        return false;
      };
      bool trans = true;
      for (int i = 0; i < n && trans; ++i)
        for (int j = 0; j < n && trans; ++j)
          for (int k = 0; k < n && trans; ++k)
            if (rel(i, j) && rel(j, k) && !rel(i, k)) trans = false;
      if (!trans) continue;
      if (t0_only) {
        bool anti = true;
        for (int i = 0; i < n && anti; ++i)
          for (int j = i + 1; j < n && anti; ++j)
            if (rel(i, j) && rel(j, i)) anti = false;
        if (!anti) continue;
      }
      // Opens are the sets closed under passing from x to any y with x -> y.
      std::vector<uint64_t> opens;
      for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
        bool up = true;
        for (int i = 0; i < n && up; ++i)
          if ((s >> i) & 1)
            for (int j = 0; j < n && up; ++j)
              if (rel(i, j) && !((s >> j) & 1)) up = false;
        if (up) opens.push_back(s);
      }
      FiniteSpace x = make_space(n, std::move(opens));
      bool fresh = true;
      for (const FiniteSpace& y : classes)
        if (homeomorphic(x, y)) {
          fresh = false;
          break;
        }
      if (fresh) classes.push_back(std::move(x));
    }
    for (auto& x : classes) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace loctk
