#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "torusfib/mcg.hpp"

using namespace torusfib;

namespace {

HomologyClass random_primitive(std::mt19937_64& rng, long limit) {
  for (;;) {
    HomologyClass c{static_cast<long>(rng() % (2 * limit + 1)) - limit,
                    static_cast<long>(rng() % (2 * limit + 1)) - limit};
    if (is_primitive(c)) return c;
  }
}

// Independent expansion of the quadratic form <e(g), g> on the three basis
// evaluations g = (1,0), (0,1), (1,1); used as the oracle for discriminant().
Int discriminant_by_sampling(const MCGElement& e) {
  auto form = [&](long p, long q) {
    HomologyClass g{p, q};
    return pairing(apply(e.mat, g), g);
  };
  Int A = form(1, 0);
  Int C = form(0, 1);
  Int B = form(1, 1) - A - C;
  return B * B - 4 * A * C;
}

}  // namespace

TEST_CASE("twist matrices") {
  MCGElement t = twist(u_class(), 1);
  CHECK(t.mat == Mat2{1, 0, 1, 1});
  CHECK(t.ab == 1);

  MCGElement t9 = twist(u_class(), -9);
  CHECK(t9.mat == Mat2{1, 0, -9, 1});
  CHECK(t9.ab == -9);

  MCGElement id = twist(HomologyClass{3, -2}, 0);
  CHECK(id == identity_element());

  CHECK_THROWS_AS(twist(HomologyClass{2, 4}, 1), std::invalid_argument);
}

TEST_CASE("twist matrices have determinant 1 and realize the twist action") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    HomologyClass c = random_primitive(rng, 20);
    long m = static_cast<long>(rng() % 19) - 9;
    MCGElement e = twist(c, m);
    REQUIRE(det(e.mat) == 1);
    HomologyClass g = random_primitive(rng, 20);
    REQUIRE(apply(e.mat, g) == dehn_twist_action(c, m, g));
  }
}

TEST_CASE("delta acts trivially on homology but is not a twist power") {
  CHECK(delta().mat == mat2_identity());
  CHECK(delta().ab == 12);
  CHECK(compose(delta(), delta()) == MCGElement{mat2_identity(), 24});
  // tau_u^12 acts non-trivially on homology, so it differs from delta
  CHECK_FALSE(equals(delta(), twist(u_class(), 12)));
}

TEST_CASE("group operations") {
  MCGElement x = compose(twist(HomologyClass{2, -1}, 3), delta());
  CHECK(compose(x, inverse(x)) == identity_element());
  CHECK(compose(inverse(x), x) == identity_element());
  CHECK(compose(twist(u_class(), 1), twist(u_class(), 1)) ==
        twist(u_class(), 2));
  CHECK(compose(delta(), twist(u_class(), -9)) ==
        MCGElement{Mat2{1, 0, -9, 1}, 3});
}

TEST_CASE("conjugate_twist") {
  auto [c1, p1] = conjugate_twist(twist(u_class(), 1), v_class(), 1);
  CHECK(c1 == HomologyClass{1, 1});
  CHECK(p1 == 1);

  auto [c2, p2] = conjugate_twist(identity_element(), HomologyClass{3, 5}, 4);
  CHECK(c2 == HomologyClass{3, 5});
  CHECK(p2 == 4);

  CHECK(conjugate_twist(twist(u_class(), -2), HomologyClass{1, 3}, 7).first ==
        HomologyClass{1, 1});

  // phi tau_c^k phi^{-1} = tau_{phi(c)}^k as group elements
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    MCGElement phi = twist(random_primitive(rng, 9),
                           static_cast<long>(rng() % 9) - 4);
    HomologyClass c = random_primitive(rng, 9);
    long k = static_cast<long>(rng() % 9) - 4;
    auto [image, power] = conjugate_twist(phi, c, k);
    REQUIRE(compose(phi, compose(twist(c, k), inverse(phi))) ==
            twist(image, power));
  }
}

TEST_CASE("discriminant examples") {
  CHECK(discriminant(twist(u_class(), 1)) == 0);
  // two curves meeting once, single twists: parabolic-free value -3
  CHECK(discriminant(compose(twist(u_class(), 1), twist(v_class(), 1))) == -3);
  // powers (2,3) at |pairing| = 2: 4*9*16 - 4*6*4 = 480
  HomologyClass c1{2, 1}, c2{0, 1};
  REQUIRE(pairing(c1, c2) * pairing(c1, c2) == 4);
  CHECK(discriminant(compose(twist(c1, 2), twist(c2, 3))) == 480);
}

TEST_CASE("discriminant formula for products of two twist powers") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    HomologyClass c1 = random_primitive(rng, 12);
    HomologyClass c2 = random_primitive(rng, 12);
    Int m = static_cast<long>(rng() % 12) + 1;
    Int n = static_cast<long>(rng() % 12) + 1;
    Int a = pairing(c1, c2);
    MCGElement e = compose(twist(c1, m), twist(c2, n));
    Int expected = m * m * n * n * a * a * a * a - 4 * m * n * a * a;
    REQUIRE(discriminant(e) == expected);
    REQUIRE(discriminant(e) == discriminant_by_sampling(e));
  }
}

TEST_CASE("discriminant is a conjugation invariant") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    MCGElement e = compose(twist(random_primitive(rng, 9), 2),
                           twist(random_primitive(rng, 9), 3));
    MCGElement phi = compose(twist(random_primitive(rng, 9),
                                   static_cast<long>(rng() % 7) - 3),
                             twist(random_primitive(rng, 9),
                                   static_cast<long>(rng() % 7) - 3));
    MCGElement conj = compose(phi, compose(e, inverse(phi)));
    REQUIRE(discriminant(conj) == discriminant(e));
  }
}

TEST_CASE("abelianization of twists") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    long n = static_cast<long>(rng() % 25) - 12;
    REQUIRE(twist(random_primitive(rng, 30), n).ab == n);
  }
}
