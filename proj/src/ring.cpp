#include "loctk/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "loctk/error.hpp"

namespace loctk {

int FiniteRing::neg(int a) const {
  for (int b = 0; b < size; ++b)
    if (add(a, b) == zero) return b;
  fail(Errc::not_a_ring, "element " + name(a) + " has no additive inverse");
}

FiniteRing make_ring(int n, std::vector<int32_t> add, std::vector<int32_t> mul,
                     std::vector<std::string> names) {
  if (n < 1) fail(Errc::not_a_ring, "a ring needs at least one element");
  if (n > limits().max_elements)
    fail(Errc::resource_cap, "ring with " + std::to_string(n) +
                                 " elements exceeds the cap of " +
                                 std::to_string(limits().max_elements));
  if (add.size() != size_t(n) * n || mul.size() != size_t(n) * n)
    fail(Errc::not_a_ring, "operation tables must be " + std::to_string(n) +
                               "x" + std::to_string(n));
  for (int32_t v : add)
    if (v < 0 || v >= n) fail(Errc::not_a_ring, "addition table entry out of range");
  for (int32_t v : mul)
    if (v < 0 || v >= n) fail(Errc::not_a_ring, "multiplication table entry out of range");

  FiniteRing r;
  r.size = n;
  r.add_t = std::move(add);
  r.mul_t = std::move(mul);
  if (names.empty()) {
    names.resize(n);
    for (int i = 0; i < n; ++i) names[i] = "r" + std::to_string(i);
  }
  if (names.size() != size_t(n))
    fail(Errc::not_a_ring, "expected " + std::to_string(n) + " element names");
  r.names = std::move(names);

  auto nm = [&](int i) { return r.names[i]; };

  // Locate the additive identity first; everything else names it in witnesses.
  int zero = -1;
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = r.add(z, a) == a;
    if (ok) {
      zero = z;
      break;
    }
  }
  if (zero < 0) fail(Errc::not_a_ring, "no additive identity");
  r.zero = zero;

  int one = -1;
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = r.mul(u, a) == a;
    if (ok) {
      one = u;
      break;
    }
  }
  if (one < 0) fail(Errc::not_a_ring, "no multiplicative identity");
  r.one = one;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a))
        fail(Errc::not_a_ring, "addition not commutative at " + nm(a) + ", " + nm(b));
      if (r.mul(a, b) != r.mul(b, a))
        fail(Errc::not_a_ring, "multiplication not commutative at " + nm(a) + ", " + nm(b));
    }
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n && !inv; ++b) inv = r.add(a, b) == zero;
    if (!inv) fail(Errc::not_a_ring, "no additive inverse for " + nm(a));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          fail(Errc::not_a_ring, "addition not associative at " + nm(a) + ", " +
                                     nm(b) + ", " + nm(c));
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          fail(Errc::not_a_ring, "multiplication not associative at " + nm(a) +
                                     ", " + nm(b) + ", " + nm(c));
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          fail(Errc::not_a_ring, "distributivity fails at " + nm(a) + ", " +
                                     nm(b) + ", " + nm(c));
      }
  return r;
}

FiniteRing ring_cyclic(int n) {
  if (n < 1) fail(Errc::not_a_ring, "modulus must be positive");
  std::vector<int32_t> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) {
      add[size_t(a) * n + b] = int32_t((a + b) % n);
      mul[size_t(a) * n + b] = int32_t((a * b) % n);
    }
  }
  return make_ring(n, std::move(add), std::move(mul), std::move(names));
}

FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b) {
  int n = a.size * b.size;
  if (n > limits().max_elements)
    fail(Errc::resource_cap, "product ring with " + std::to_string(n) +
                                 " elements exceeds the cap");
  auto id = [&](int i, int j) { return i * b.size + j; };
  std::vector<int32_t> add(size_t(n) * n), mul(size_t(n) * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      names[id(i, j)] = "(" + a.names[i] + "," + b.names[j] + ")";
      for (int k = 0; k < a.size; ++k)
        for (int l = 0; l < b.size; ++l) {
          add[size_t(id(i, j)) * n + id(k, l)] = int32_t(id(a.add(i, k), b.add(j, l)));
          mul[size_t(id(i, j)) * n + id(k, l)] = int32_t(id(a.mul(i, k), b.mul(j, l)));
        }
    }
  return make_ring(n, std::move(add), std::move(mul), std::move(names));
}

namespace {

// Additive order plus a couple of multiplicative flags; cheap invariant that
// any isomorphism must respect.
struct ElemProfile {
  int add_order = 0;
  bool idempotent = false;
  bool unit = false;
  bool operator==(const ElemProfile&) const = default;
};

ElemProfile profile_of(const FiniteRing& r, int a) {
  ElemProfile p;
  int acc = a, k = 1;
  while (acc != r.zero) {
    acc = r.add(acc, a);
    ++k;
  }
  p.add_order = k;
  p.idempotent = r.mul(a, a) == a;
  for (int b = 0; b < r.size; ++b)
    if (r.mul(a, b) == r.one) {
      p.unit = true;
      break;
    }
  return p;
}

}  // namespace

bool ring_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  if (a.size != b.size) return false;
  std::vector<ElemProfile> pa(a.size), pb(b.size);
  for (int i = 0; i < a.size; ++i) pa[i] = profile_of(a, i);
  for (int i = 0; i < b.size; ++i) pb[i] = profile_of(b, i);
  auto key = [](const ElemProfile& p) {
    return p.add_order * 4 + (p.idempotent ? 2 : 0) + (p.unit ? 1 : 0);
  };
  std::vector<int> ka, kb;
  for (auto& p : pa) ka.push_back(key(p));
  for (auto& p : pb) kb.push_back(key(p));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  if (ka != kb) return false;

  std::vector<int> img(a.size, -1);
  std::vector<char> used(b.size, 0);
  img[a.zero] = b.zero;
  used[b.zero] = 1;
  if (a.one != a.zero) {
    if (b.one == b.zero) return false;
    img[a.one] = b.one;
    used[b.one] = 1;
  }
  struct Ctx {
    const FiniteRing &a, &b;
    const std::vector<ElemProfile> &pa, &pb;
    std::vector<int>& img;
    std::vector<char>& used;
    bool go(int k) {
      int n = a.size;
      if (k == n) return true;
      if (img[k] >= 0) return go(k + 1);
      for (int cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        if (!(pa[k] == pb[cand])) continue;
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
          if (img[j] < 0) continue;
          int s = a.add(k, j);
          if (img[s] >= 0 && b.add(cand, img[j]) != img[s]) ok = false;
          int m = a.mul(k, j);
          if (ok && img[m] >= 0 && b.mul(cand, img[j]) != img[m]) ok = false;
        }
        if (!ok) continue;
        img[k] = cand;
        used[cand] = 1;
        if (go(k + 1)) return true;
        img[k] = -1;
        used[cand] = 0;
      }
      return false;
    }
  } ctx{a, b, pa, pb, img, used};
  return ctx.go(0);
}

Bits ideal_generated(const FiniteRing& r, const Bits& gens) {
  Bits cur(r.size);
  cur.set(r.zero);
  cur |= gens;
  bool grew = true;
  while (grew) {
    grew = false;
    Bits next = cur;
    cur.for_each([&](int x) {
      for (int s = 0; s < r.size; ++s) next.set(r.mul(s, x));
    });
    cur.for_each([&](int x) {
      next.for_each([&](int y) { next.set(r.add(x, y)); });
    });
    if (next != cur) {
      cur = next;
      grew = true;
    }
  }
  return cur;
}

std::vector<Bits> all_ideals(const FiniteRing& r) {
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> pool;
  Bits zero_ideal(r.size);
  zero_ideal.set(r.zero);
  pool.push_back(zero_ideal);
  seen.insert(zero_ideal);
  for (size_t i = 0; i < pool.size(); ++i) {
    Bits base = pool[i];
    for (int x = 0; x < r.size; ++x) {
      if (base.test(x)) continue;
      Bits g = base;
      g.set(x);
      Bits grown = ideal_generated(r, g);
      if (seen.insert(grown).second) pool.push_back(grown);
    }
  }
  std::sort(pool.begin(), pool.end(), canon_less);
  return pool;
}

std::vector<Ideal> prime_ideals(const FiniteRing& r) {
  std::vector<Bits> ideals = all_ideals(r);
  std::vector<Ideal> out;
  for (const Bits& m : ideals) {
    if (m.test(r.one)) continue;  // proper only
    bool prime = true;
    for (int a = 0; a < r.size && prime; ++a) {
      if (m.test(a)) continue;
      for (int b = a; b < r.size && prime; ++b) {
        if (m.test(b)) continue;
        if (m.test(r.mul(a, b))) prime = false;
      }
    }
    if (prime) out.push_back(Ideal{m, true, false});
  }
  // Maximality among proper ideals, not just among primes.
  std::vector<Bits> proper;
  for (const Bits& m : ideals)
    if (!m.test(r.one)) proper.push_back(m);
  for (Ideal& id : out) {
    id.maximal = true;
    for (const Bits& j : proper)
      if (id.members != j && id.members.subset_of(j)) {
        id.maximal = false;
        break;
      }
  }
  return out;
}

Bits radical(const FiniteRing& r, const Bits& gens) {
  Bits ideal = ideal_generated(r, gens);

  // Route one: scan powers.  Distinct powers of an element number at most
  // the ring size, so exponents up to that bound decide membership.
  Bits by_powers(r.size);
  for (int a = 0; a < r.size; ++a) {
    int p = a;
    for (int k = 1; k <= r.size; ++k) {
      if (ideal.test(p)) {
        by_powers.set(a);
        break;
      }
      p = r.mul(p, a);
    }
  }

  // Route two: intersect the primes above the ideal.
  Bits by_primes(r.size);
  for (int a = 0; a < r.size; ++a) by_primes.set(a);
  for (const Ideal& pr : prime_ideals(r))
    if (ideal.subset_of(pr.members)) by_primes &= pr.members;

  if (by_powers != by_primes)
    fail(Errc::shadow_mismatch,
         "radical computed by power scan disagrees with the intersection of primes");
  return by_powers;
}

ZariskiSpace zariski_space(const FiniteRing& r) {
  ZariskiSpace z;
  auto primes = prime_ideals(r);
  if (primes.size() > 64)
    fail(Errc::resource_cap, "more than 64 prime ideals");
  std::vector<std::string> names;
  for (const Ideal& p : primes) {
    z.primes.push_back(p.members);
    std::string nm = "P{";
    bool first = true;
    p.members.for_each([&](int a) {
      if (!first) nm += ",";
      nm += r.names[a];
      first = false;
    });
    nm += "}";
    names.push_back(nm);
  }
  int np = int(z.primes.size());
  z.basic.assign(r.size, 0);
  for (int a = 0; a < r.size; ++a)
    for (int i = 0; i < np; ++i)
      if (!z.primes[i].test(a)) z.basic[a] |= uint64_t{1} << i;
  std::vector<uint64_t> seeds(z.basic.begin(), z.basic.end());
  z.space = make_space(np, seeds, names, true);
  return z;
}

PrimeFilterCorrespondence prime_filter_correspondence(const FiniteRing& r) {
  PrimeFilterCorrespondence c;
  c.zar = zariski_space(r);
  c.opens = opens_frame(c.zar.space);
  c.family = full_join_family(c.opens);
  c.spec = spectrum_space(c.opens, c.family);

  int np = int(c.zar.primes.size());
  int npts = int(c.spec.pts.size());
  if (npts != np)
    fail(Errc::shadow_mismatch,
         "spectrum has " + std::to_string(npts) + " points but the ring has " +
             std::to_string(np) + " primes");

  c.point_to_prime.assign(npts, -1);
  c.prime_to_point.assign(np, -1);

  // Filter to prime: the elements whose basic open the filter misses.
  for (int j = 0; j < npts; ++j) {
    Bits ideal(r.size);
    for (int a = 0; a < r.size; ++a) {
      int oi = c.zar.space.open_index(c.zar.basic[a]);
      if (oi < 0)
        fail(Errc::shadow_mismatch, "a basic open is missing from the topology");
      if (!c.spec.pts[j].members.test(oi)) ideal.set(a);
    }
    for (int k = 0; k < np; ++k)
      if (c.zar.primes[k] == ideal) {
        c.point_to_prime[j] = k;
        break;
      }
    if (c.point_to_prime[j] < 0)
      fail(Errc::shadow_mismatch,
           "a spectrum point translates to a non-prime subset");
  }

  // Prime to filter: the opens containing that point of the space.
  for (int k = 0; k < np; ++k) {
    Bits want(c.opens.size);
    for (int oi = 0; oi < int(c.zar.space.opens.size()); ++oi)
      if (c.zar.space.opens[oi] >> k & 1) want.set(oi);
    for (int j = 0; j < npts; ++j)
      if (c.spec.pts[j].members == want) {
        c.prime_to_point[k] = j;
        break;
      }
    if (c.prime_to_point[k] < 0)
      fail(Errc::shadow_mismatch,
           "the neighbourhood filter of a prime is not a spectrum point");
  }

  for (int j = 0; j < npts; ++j)
    if (c.prime_to_point[c.point_to_prime[j]] != j)
      fail(Errc::shadow_mismatch, "prime/filter translations are not mutually inverse");
  for (int k = 0; k < np; ++k)
    if (c.point_to_prime[c.prime_to_point[k]] != k)
      fail(Errc::shadow_mismatch, "filter/prime translations are not mutually inverse");

  // Homeomorphism, checked constructively: pushing each open of either
  // space through the pairing lands exactly on an open of the other.
  auto transfer = [&](uint64_t mask, const std::vector<int>& via) {
    uint64_t out = 0;
    for (int i = 0; i < int(via.size()); ++i)
      if (mask >> i & 1) out |= uint64_t{1} << via[i];
    return out;
  };
  for (uint64_t o : c.spec.space.opens)
    if (!c.zar.space.is_open(transfer(o, c.point_to_prime)))
      fail(Errc::shadow_mismatch, "a spectrum open does not transfer to a Zariski open");
  for (uint64_t o : c.zar.space.opens)
    if (!c.spec.space.is_open(transfer(o, c.prime_to_point)))
      fail(Errc::shadow_mismatch, "a Zariski open does not transfer to a spectrum open");

  c.certified = true;
  return c;
}

}  // namespace loctk
