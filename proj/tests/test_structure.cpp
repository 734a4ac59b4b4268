#include <cmath>

#include "doctest.h"
#include "sphmc/structure.hpp"
#include "sphmc/verify.hpp"
#include "sphmc/wigner.hpp"

using namespace sphmc;

TEST_CASE("harmonic index validation") {
  CHECK(HarmonicIndex::make(3, -3).valid());
  CHECK_THROWS_AS(HarmonicIndex::make(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(HarmonicIndex::make(-1, 0), std::invalid_argument);
  CHECK(HarmonicIndex{4, 1}.eigenvalue() == -20);
  CHECK(to_string(HarmonicIndex{3, -2}) == "(3,-2)");
}

TEST_CASE("L123 prefactor") {
  CHECK(l123(1, 1, 1) == SignedSqrtRational(1, BigRational(108)));
  CHECK(l123(2, 1, 2).as_rational() == 30);
  CHECK(l123(1, 2, 2).as_rational() == 30);
  CHECK(l123(3, 2, 4).to_double() == doctest::Approx(150.59880477613358));
  CHECK_THROWS_AS(l123(0, 2, 2), std::invalid_argument);
}

TEST_CASE("structure constant values") {
  // {Y10, Y11} = -i sqrt(3/4pi) Y11.
  const auto g = g_real(1, 0, 1, 1, 1, -1);
  CHECK(std::abs(g.to_double()) == doctest::Approx(std::sqrt(3 / (4 * M_PI))));
  CHECK(g.squared_over_pi() == BigRational(3, 4));
  CHECK(g_real(2, 1, 2, -1, 1, 0).to_double() == doctest::Approx(-0.48860251190291992));
  CHECK(g_real(3, 2, 2, -1, 4, -1).to_double() == doctest::Approx(1.6688952945311364));
  // (3 2 2; 2 -1 -1) vanishes although every selection rule holds.
  CHECK(g_real(3, 2, 2, -1, 2, -1).is_zero());
}

TEST_CASE("structure constant zeros") {
  CHECK(g_real(2, 1, 2, 1, 2, -2).is_zero());  // even degree sum
  CHECK(g_real(1, 0, 1, 0, 1, 0).is_zero());
  CHECK(g_real(3, 1, 1, 0, 1, -1).is_zero());  // outside the strict triangle
  CHECK(g_real(2, 1, 2, 1, 3, 1).is_zero());   // orders do not cancel
  CHECK(g_real(2, 3, 2, 0, 3, -3).is_zero());  // column bound
}

TEST_CASE("bracket expansion") {
  const auto e = bracket_expand({1, 0}, {1, 1});
  REQUIRE(e.terms.size() == 1);
  CHECK(e.m3 == 1);
  CHECK(e.terms.at(1).imag() == doctest::Approx(-std::sqrt(3 / (4 * M_PI))));
  CHECK(e.terms.at(1).norm_over_pi() == BigRational(3, 4));

  const auto f = bracket_expand({2, 1}, {3, -1});
  CHECK(f.m3 == 0);
  for (const auto& [l3, t] : f.terms) {
    CHECK(l3 >= 2);
    CHECK(l3 <= 4);
    CHECK((2 + 3 + l3) % 2 == 1);
  }
  CHECK(f.terms.count(2) == 1);
  CHECK(f.terms.count(4) == 1);

  CHECK(bracket_expand({0, 0}, {3, 1}).empty());
  CHECK(bracket_expand({2, 1}, {2, 1}).empty());
}

TEST_CASE("bracket is antisymmetric") {
  for (int l1 = 1; l1 <= 3; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 1; l2 <= 3; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const auto ab = bracket_expand({l1, m1}, {l2, m2});
          const auto ba = bracket_expand({l2, m2}, {l1, m1});
          REQUIRE(ab.terms.size() == ba.terms.size());
          for (const auto& [l3, t] : ab.terms)
            CHECK(t.imag() == doctest::Approx(-ba.terms.at(l3).imag()));
        }
}

TEST_CASE("symmetry validation") {
  for (int l : {1, 3, 5}) {
    const auto r = validate_symmetries(l);
    CHECK(r.checks > 0);
    CHECK(r.ok());
  }
  CHECK(check_structure_zeros(6).ok());
  CHECK(check_bracket_antisymmetry(5).ok());
}
