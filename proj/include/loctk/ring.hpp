#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loctk/bits.hpp"
#include "loctk/frame.hpp"
#include "loctk/points.hpp"
#include "loctk/space.hpp"

namespace loctk {

// Finite commutative ring with identity, fully tabulated and validated.
struct FiniteRing {
  int size = 0;
  std::vector<int32_t> add_t, mul_t;  // flattened size x size
  int zero = 0, one = 0;
  std::vector<std::string> names;

  int add(int a, int b) const { return add_t[size_t(a) * size + b]; }
  int mul(int a, int b) const { return mul_t[size_t(a) * size + b]; }
  int neg(int a) const;
  const std::string& name(int i) const { return names[i]; }
};

// Validates every axiom by exhaustive scan: commutativity, associativity,
// identities, additive inverses, distributivity.
FiniteRing make_ring(int n, std::vector<int32_t> add, std::vector<int32_t> mul,
                     std::vector<std::string> names = {});

FiniteRing ring_cyclic(int n);  // integers mod n; n = 1 gives the zero ring
FiniteRing ring_product(const FiniteRing& a, const FiniteRing& b);

bool ring_isomorphic(const FiniteRing& a, const FiniteRing& b);

struct Ideal {
  Bits members;
  bool prime = false;
  bool maximal = false;
};

// Smallest ideal containing the generators: closes under addition and under
// multiplication by every ring element.  Finite additive order makes
// negation come free.
Bits ideal_generated(const FiniteRing& r, const Bits& gens);

// Every ideal, by breadth-first generator extension, in canonical order.
std::vector<Bits> all_ideals(const FiniteRing& r);

// Proper ideals whose complement is closed under multiplication, flagged
// with maximality; canonical order.
std::vector<Ideal> prime_ideals(const FiniteRing& r);

// Radical of the ideal generated by gens, computed two independent ways and
// cross-checked: a power of each member falls into the ideal (exponents up
// to the ring size), and the intersection of the primes above it.
Bits radical(const FiniteRing& r, const Bits& gens);

struct ZariskiSpace {
  FiniteSpace space;            // one point per prime ideal
  std::vector<Bits> primes;     // the prime ideals, canonical order
  std::vector<uint64_t> basic;  // basic[a]: primes not containing a
};
ZariskiSpace zariski_space(const FiniteRing& r);

// Pairs the points of the spectrum frame of the Zariski space with the
// prime ideals, certifying the two translations are mutually inverse and
// mutually continuous.
struct PrimeFilterCorrespondence {
  ZariskiSpace zar;
  Frame opens;                      // opens frame of the Zariski space
  GroundJoinFamily family;          // full join family on it
  Spectrum spec;                    // its relative spectrum
  std::vector<int> point_to_prime;  // per spectrum point
  std::vector<int> prime_to_point;
  bool certified = false;
};
PrimeFilterCorrespondence prime_filter_correspondence(const FiniteRing& r);

}  // namespace loctk
