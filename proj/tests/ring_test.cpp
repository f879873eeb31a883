#include <doctest.h>

#include "loctk/error.hpp"
#include "loctk/ring.hpp"

using namespace loctk;

TEST_CASE("cyclic rings split over coprime factors and only those") {
  FiniteRing z6 = ring_cyclic(6);
  FiniteRing z2xz3 = ring_product(ring_cyclic(2), ring_cyclic(3));
  CHECK(ring_isomorphic(z6, z2xz3));

  FiniteRing z4 = ring_cyclic(4);
  FiniteRing z2xz2 = ring_product(ring_cyclic(2), ring_cyclic(2));
  CHECK(!ring_isomorphic(z4, z2xz2));  // x+x = 0 everywhere only on the right
}

TEST_CASE("ring axioms are actually enforced") {
  // a 2-element table with a broken distributive law: or for addition
  std::vector<int32_t> bad_add = {0, 1, 1, 1};
  std::vector<int32_t> mul = {0, 0, 0, 1};
  CHECK_THROWS_WITH_AS((void)make_ring(2, bad_add, mul, {}),
                       doctest::Contains("NotARing"), ToolError);
  // xor for addition is the field with two elements
  FiniteRing f2 = make_ring(2, {0, 1, 1, 0}, {0, 0, 0, 1});
  CHECK(ring_isomorphic(f2, ring_cyclic(2)));
}

TEST_CASE("ideal generation absorbs products and sums") {
  FiniteRing z12 = ring_cyclic(12);
  Bits gens(12);
  gens.set(8);
  Bits ideal = ideal_generated(z12, gens);
  // (8) = {0, 4, 8}: multiples of gcd(8, 12)
  CHECK(ideal.count() == 3);
  CHECK(ideal.test(0));
  CHECK(ideal.test(4));
  CHECK(ideal.test(8));
  ideal.for_each([&](int a) {
    for (int r = 0; r < 12; ++r) CHECK(ideal.test(z12.mul(r, a)));
    ideal.for_each([&](int b) { CHECK(ideal.test(z12.add(a, b))); });
  });
}

TEST_CASE("ideal census of small cyclic rings") {
  CHECK(all_ideals(ring_cyclic(1)).size() == 1);   // zero ring: only itself
  CHECK(all_ideals(ring_cyclic(12)).size() == 6);  // one per divisor of 12
  CHECK(all_ideals(ring_cyclic(7)).size() == 2);   // a field: zero and all
}

TEST_CASE("prime ideals of the integers mod 12") {
  FiniteRing z12 = ring_cyclic(12);
  std::vector<Ideal> primes = prime_ideals(z12);
  REQUIRE(primes.size() == 2);
  for (const Ideal& p : primes) {
    CHECK(p.prime);
    CHECK(p.maximal);
    CHECK((p.members.count() == 6 || p.members.count() == 4));  // (2) or (3)
  }
  CHECK(primes[0].members != primes[1].members);
}

TEST_CASE("radicals by power and by prime intersection") {
  FiniteRing z4 = ring_cyclic(4);
  Bits zero4(4);
  Bits r4 = radical(z4, zero4);
  CHECK(r4.count() == 2);  // {0, 2}: the nilpotents
  CHECK(r4.test(2));

  FiniteRing z12 = ring_cyclic(12);
  Bits four(12);
  four.set(4);
  Bits r12 = radical(z12, four);
  CHECK(r12.count() == 6);  // rad(4) = (2)
  for (int a = 0; a < 12; a += 2) CHECK(r12.test(a));
}

TEST_CASE("zariski spaces of small rings") {
  ZariskiSpace z6 = zariski_space(ring_cyclic(6));
  CHECK(z6.space.points == 2);
  CHECK(z6.space.opens.size() == 4);  // two isolated points

  ZariskiSpace z4 = zariski_space(ring_cyclic(4));
  CHECK(z4.space.points == 1);

  ZariskiSpace z1 = zariski_space(ring_cyclic(1));
  CHECK(z1.space.points == 0);  // the zero ring has empty spectrum

  // basic opens: basic[0] is empty, basic[1] is everything
  FiniteRing z6r = ring_cyclic(6);
  CHECK(z6.basic[z6r.zero] == 0);
  CHECK(z6.basic[z6r.one] == z6.space.full_mask());
}

TEST_CASE("spectrum points match prime ideals") {
  for (int n : {1, 2, 4, 6, 12}) {
    PrimeFilterCorrespondence c = prime_filter_correspondence(ring_cyclic(n));
    CHECK(c.certified);
    CHECK(c.spec.pts.size() == c.zar.primes.size());
    for (size_t i = 0; i < c.prime_to_point.size(); ++i)
      CHECK(c.point_to_prime[c.prime_to_point[i]] == int(i));
  }
  PrimeFilterCorrespondence pc =
      prime_filter_correspondence(ring_product(ring_cyclic(2), ring_cyclic(2)));
  CHECK(pc.certified);
  CHECK(pc.zar.primes.size() == 2);
}
