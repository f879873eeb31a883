#include "loctk/frame.hpp"

#include <algorithm>

#include "loctk/error.hpp"
#include "loctk/space.hpp"

namespace loctk {

int Frame::heyting(int a, int b) const {
  std::call_once(hey_->once, [this] {
    auto& t = hey_->t;
    t.assign(size_t(size) * size, 0);
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        int acc = bottom;
        for (int c = 0; c < size; ++c)
          if (leq(meet(c, x), y)) acc = join(acc, c);
        t[size_t(x) * size + y] = acc;
      }
  });
  return hey_->t[size_t(a) * size + b];
}

namespace {

// Least element of a nonempty upper/lower bound set, which must be a
// least/greatest bound for the lattice to exist.  Index order extends the
// lattice order, so a least element is the first index (and a greatest the
// last); the subset check certifies it really is a bound of all the others.
int least_of(const std::vector<Bits>& up, const Bits& s) {
  int m = s.first();
  if (m < 0 || !s.subset_of(up[m])) return -1;
  return m;
}

int greatest_of(const std::vector<Bits>& down, const Bits& s) {
  int m = -1;
  s.for_each([&](int i) { m = i; });
  if (m < 0 || !s.subset_of(down[m])) return -1;
  return m;
}

}  // namespace

Frame build_frame_from_order(const Poset& p, int cap) {
  if (cap <= 0) cap = limits().max_elements;
  if (p.size > cap)
    fail(Errc::resource_cap, "order has " + std::to_string(p.size) +
                                 " elements, cap is " + std::to_string(cap));
  if (p.size == 0) fail(Errc::not_a_lattice, "empty carrier has no top or bottom");
  int n = p.size;
  std::vector<int> ext = linear_extension(p);
  Frame f;
  f.size = n;
  f.up.assign(n, Bits(n));
  f.down.assign(n, Bits(n));
  f.names.resize(n);
  for (int i = 0; i < n; ++i) {
    f.names[i] = p.names[ext[i]];
    for (int j = 0; j < n; ++j) {
      if (p.leq(ext[i], ext[j])) f.up[i].set(j);
      if (p.leq(ext[j], ext[i])) f.down[i].set(j);
    }
  }
  f.bottom = 0;
  f.top = n - 1;
  if (f.up[0].count() != n)
    fail(Errc::not_a_lattice, "no bottom element");
  if (f.down[n - 1].count() != n)
    fail(Errc::not_a_lattice, "no top element");
  f.join_t.assign(size_t(n) * n, 0);
  f.meet_t.assign(size_t(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int j = least_of(f.up, f.up[a] & f.up[b]);
      if (j < 0)
        fail(Errc::not_a_lattice, "elements " + f.names[a] + " and " + f.names[b] +
                                      " have no least upper bound");
      int m = greatest_of(f.down, f.down[a] & f.down[b]);
      if (m < 0)
        fail(Errc::not_a_lattice, "elements " + f.names[a] + " and " + f.names[b] +
                                      " have no greatest lower bound");
      f.join_t[size_t(a) * n + b] = f.join_t[size_t(b) * n + a] = j;
      f.meet_t[size_t(a) * n + b] = f.meet_t[size_t(b) * n + a] = m;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c)))
          fail(Errc::not_distributive,
               "meet over join fails at (" + f.names[a] + ", " + f.names[b] + ", " +
                   f.names[c] + ")");
  return f;
}

void validate_frame(const Frame& f) {
  int n = f.size;
  if (n <= 0) fail(Errc::not_a_lattice, "empty carrier");
  if (int(f.up.size()) != n || int(f.down.size()) != n ||
      int(f.join_t.size()) != n * n || int(f.meet_t.size()) != n * n)
    fail(Errc::not_a_lattice, "table sizes disagree with the carrier");
  for (int a = 0; a < n; ++a) {
    if (!f.leq(a, a)) fail(Errc::not_a_poset, "order not reflexive");
    for (int b = 0; b < n; ++b) {
      if (f.leq(a, b) != f.down[b].test(a))
        fail(Errc::not_a_poset, "up and down views disagree");
      if (a < b && f.leq(a, b) && f.leq(b, a))
        fail(Errc::not_a_poset, "order not antisymmetric");
      if (f.leq(a, b) && b < a)
        fail(Errc::not_a_poset, "element layout is not a linear extension");
      if (f.leq(a, b) && !f.up[b].subset_of(f.up[a]))
        fail(Errc::not_a_poset, "order not transitive");
    }
  }
  if (f.bottom != 0 || f.top != n - 1 || f.up[0].count() != n || f.down[n - 1].count() != n)
    fail(Errc::not_a_lattice, "endpoints misplaced");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int j = f.join(a, b), m = f.meet(a, b);
      Bits ub = f.up[a] & f.up[b];
      Bits lb = f.down[a] & f.down[b];
      if (!ub.test(j) || !ub.subset_of(f.up[j]))
        fail(Errc::not_a_lattice, "join table wrong at (" + f.names[a] + ", " + f.names[b] + ")");
      if (!lb.test(m) || !lb.subset_of(f.down[m]))
        fail(Errc::not_a_lattice, "meet table wrong at (" + f.names[a] + ", " + f.names[b] + ")");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f.meet(a, f.join(b, c)) != f.join(f.meet(a, b), f.meet(a, c)))
          fail(Errc::not_distributive,
               "meet over join fails at (" + f.names[a] + ", " + f.names[b] + ", " +
                   f.names[c] + ")");
}

Frame chain_frame(int n) {
  if (n < 1) fail(Errc::not_a_lattice, "a chain needs at least one element");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.push_back({i, i + 1});
  return build_frame_from_order(make_poset(n, rel));
}

Frame boolean_frame(int k) {
  if (k < 0 || k > 16) fail(Errc::resource_cap, "atom count out of range");
  long long n = 1ll << k;
  std::vector<uint64_t> subsets;
  for (uint64_t s = 0; s < uint64_t(n); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), canon_less64);
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((subsets[a] & ~subsets[b]) == 0) rel.push_back({a, b});
  return build_frame_from_order(make_poset(int(n), rel));
}

std::vector<Bits> all_downsets(const Poset& p) {
  if (p.size > 20) fail(Errc::resource_cap, "too many subsets to scan");
  std::vector<Bits> out;
  for (uint64_t s = 0; s < (uint64_t{1} << p.size); ++s) {
    bool closed = true;
    for (int i = 0; i < p.size && closed; ++i) {
      if (!((s >> i) & 1)) continue;
      p.down[i].for_each([&](int j) {
        if (!((s >> j) & 1)) closed = false;
      });
    }
    if (!closed) continue;
    Bits b(p.size);
    for (int i = 0; i < p.size; ++i)
      if ((s >> i) & 1) b.set(i);
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), canon_less);
  return out;
}

Frame downset_frame(const Poset& p) {
  std::vector<Bits> ds = all_downsets(p);
  int n = int(ds.size());
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ds[a].subset_of(ds[b])) rel.push_back({a, b});
  return build_frame_from_order(make_poset(n, rel));
}

Frame opens_frame(const FiniteSpace& x) {
  int n = int(x.opens.size());
  std::vector<std::pair<int, int>> rel;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((x.opens[a] & ~x.opens[b]) == 0) rel.push_back({a, b});
  return build_frame_from_order(make_poset(n, rel));
}

int join_all(const Frame& f, const Bits& s) {
  int acc = f.bottom;
  s.for_each([&](int i) { acc = f.join(acc, i); });
  return acc;
}

int meet_all(const Frame& f, const Bits& s) {
  Bits lower = Bits::filled(f.size);
  s.for_each([&](int i) { lower &= f.down[i]; });
  return join_all(f, lower);
}

bool well_below(const Frame& f, int a, int b) {
  for (int c = 0; c < f.size; ++c)
    if (f.meet(a, c) == f.bottom && f.join(b, c) == f.top) return true;
  return false;
}

Bits complemented_elements(const Frame& f) {
  Bits out(f.size);
  for (int a = 0; a < f.size; ++a)
    for (int b = 0; b < f.size; ++b)
      if (f.meet(a, b) == f.bottom && f.join(a, b) == f.top) {
        out.set(a);
        break;
      }
  return out;
}

bool is_boolean_frame(const Frame& f) {
  return complemented_elements(f).count() == f.size;
}

Bits atoms(const Frame& f) {
  Bits out(f.size);
  for (int a = 0; a < f.size; ++a)
    if (a != f.bottom && f.down[a].count() == 2) out.set(a);
  return out;
}

Bits prime_elements(const Frame& f) {
  Bits out(f.size);
  for (int p = 0; p < f.size; ++p) {
    if (p == f.top) continue;
    bool prime = true;
    for (int a = 0; a < f.size && prime; ++a)
      for (int b = 0; b < f.size && prime; ++b)
        if (f.leq(f.meet(a, b), p) && !f.leq(a, p) && !f.leq(b, p)) prime = false;
    if (prime) out.set(p);
  }
  return out;
}

bool frame_equal(const Frame& a, const Frame& b) {
  return a.size == b.size && a.up == b.up && a.join_t == b.join_t &&
         a.meet_t == b.meet_t;
}

Poset frame_order(const Frame& f) {
  Poset p;
  p.size = f.size;
  p.up = f.up;
  p.down = f.down;
  p.names = f.names;
  return p;
}

bool frame_isomorphic(const Frame& a, const Frame& b) {
  if (a.size != b.size) return false;
  return poset_isomorphic(frame_order(a), frame_order(b));
}

}  // namespace loctk
