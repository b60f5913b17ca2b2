#include <catch2/catch_amalgamated.hpp>

#include "preop/ring.hpp"
#include "preop/rng.hpp"

using namespace preop;

TEST_CASE("desuspended degree", "[ring]") {
  CHECK(ddeg(1) == 0);
  CHECK(ddeg(2) == 1);
  CHECK(ddeg(0) == -1);
}

TEST_CASE("koszul sign basics", "[ring]") {
  const Ring z = Ring::integers();
  CHECK(z.koszul_sign(0, 5) == 1);
  CHECK(z.koszul_sign(1, 1) == -1);
  CHECK(z.koszul_sign(-1, 3) == -1);
  CHECK(z.koszul_sign(-1, -1) == -1);
  CHECK(z.koszul_sign(-2, 7) == 1);
}

TEST_CASE("koszul sign is multiplicative in the second argument", "[ring]") {
  const Ring z = Ring::integers();
  for (long long a = -6; a <= 6; ++a)
    for (long long b = -6; b <= 6; ++b)
      for (long long c = -6; c <= 6; ++c)
        CHECK(z.mul(z.koszul_sign(a, b), z.koszul_sign(a, c)) == z.koszul_sign(a, b + c));
}

TEST_CASE("ring axioms hold on sampled scalars", "[ring]") {
  for (const Ring& ring : {Ring::integers(), Ring::mod_p(2), Ring::mod_p(3)}) {
    SplitMix64 rng(42);
    for (int t = 0; t < 200; ++t) {
      const Int a = ring.from_int(rng.in_range(-50, 50));
      const Int b = ring.from_int(rng.in_range(-50, 50));
      const Int c = ring.from_int(rng.in_range(-50, 50));
      CHECK(ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)));
      CHECK(ring.add(a, b) == ring.add(b, a));
      CHECK(ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)));
      CHECK(ring.mul(a, b) == ring.mul(b, a));
      CHECK(ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c)));
      CHECK(ring.add(a, ring.zero()) == a);
      CHECK(ring.mul(a, ring.one()) == a);
      CHECK(ring.is_zero(ring.add(a, ring.neg(a))));
    }
  }
}

TEST_CASE("mod-p representatives are canonical", "[ring]") {
  const Ring z3 = Ring::mod_p(3);
  CHECK(z3.canon(Int(-1)) == 2);
  CHECK(z3.canon(Int(7)) == 1);
  CHECK(z3.minus_one() == 2);
  CHECK(z3.equal(Int(5), Int(-1)));

  const Ring z2 = Ring::mod_p(2);
  CHECK(z2.koszul_sign(1, 1) == 1);  // p = 2 erases all signs
}

TEST_CASE("ring parsing and naming", "[ring]") {
  CHECK(Ring::parse("z").kind() == Ring::Kind::integers);
  CHECK(Ring::parse("zmod:5").modulus() == 5);
  CHECK(Ring::parse("zmod:5").name() == "zmod:5");
  CHECK(Ring::integers().name() == "z");
  CHECK_THROWS_AS(Ring::parse("q"), ConfigError);
  CHECK_THROWS_AS(Ring::parse("zmod:abc"), ConfigError);
  CHECK_THROWS_AS(Ring::mod_p(4), ConfigError);
  CHECK_THROWS_AS(Ring::mod_p(1), ConfigError);
  CHECK_THROWS_AS(Ring::mod_p(-7), ConfigError);
}

TEST_CASE("splitmix64 is stable and deterministic", "[rng]") {
  SplitMix64 a(1234);
  SplitMix64 b(1234);
  for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());

  // published reference values for seed 1234567
  SplitMix64 c(1234567);
  CHECK(c.next() == 6457827717110365317ull);
  CHECK(c.next() == 3203168211198807973ull);

  SplitMix64 d(7);
  for (int k = 0; k < 1000; ++k) {
    const long long v = d.in_range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
