#include <cmath>
#include <random>

#include "doctest.h"
#include "sphmc/exact.hpp"

using namespace sphmc;

namespace {

long ulp_distance(double a, double b) {
  if (a == b) return 0;
  long n = 0;
  for (double x = a; x != b && n < 100; ++n) x = std::nextafter(x, b);
  return n;
}

}  // namespace

TEST_CASE("factorial values") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  for (unsigned n = 1; n <= 200; ++n) CHECK(factorial(n) / factorial(n - 1) == n);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == BigRational(-1, 2));
  CHECK(parse_rational("-2.983") == BigRational(-2983, 1000));
  CHECK(parse_rational("1e-3") == BigRational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational("+.5") == BigRational(1, 2));
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e", "--1", "1/2/3", "0.5/2"})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("rational_from_double is exact") {
  CHECK(rational_from_double(0.5) == BigRational(1, 2));
  CHECK(rational_from_double(-3.0) == -3);
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(rational_from_double(INFINITY), std::invalid_argument);
}

TEST_CASE("rational arithmetic laws on random triples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    BigRational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("to_double rounds and flags overflow") {
  CHECK(to_double(BigRational(1, 3)) == 1.0 / 3.0);
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
  CHECK_THROWS_AS(to_double(BigRational(huge)), std::overflow_error);
  CHECK(to_double_times_pi(BigRational(1), 2) == M_PI);
  CHECK(to_double_times_pi(BigRational(1), -1) == doctest::Approx(1 / std::sqrt(M_PI)).epsilon(1e-15));
  CHECK_THROWS_AS(to_double_times_pi(BigRational(1), 3), std::invalid_argument);
}

TEST_CASE("signed square root construction") {
  CHECK_THROWS_AS(SignedSqrtRational(2, BigRational(1)), std::invalid_argument);
  CHECK_THROWS_AS(SignedSqrtRational(1, BigRational(-1)), std::invalid_argument);
  CHECK_THROWS_AS(SignedSqrtRational(0, BigRational(1)), std::invalid_argument);
  CHECK_THROWS_AS(SignedSqrtRational(1, BigRational(0)), std::invalid_argument);
  CHECK(SignedSqrtRational(0, BigRational(0)).is_zero());
  CHECK(SignedSqrtRational(1, BigRational(2, 4)).radicand() == BigRational(1, 2));
  CHECK(SignedSqrtRational::from_rational(BigRational(-3, 2)) ==
        SignedSqrtRational(-1, BigRational(9, 4)));
}

TEST_CASE("ssr_mul") {
  const SignedSqrtRational half(1, BigRational(1, 2)), two(1, BigRational(2));
  CHECK(ssr_mul(half, two) == SignedSqrtRational(1, BigRational(1)));
  CHECK(ssr_mul(SignedSqrtRational(-1, BigRational(3)), SignedSqrtRational(1, BigRational(3))) ==
        SignedSqrtRational(-1, BigRational(9)));
  CHECK(ssr_mul(SignedSqrtRational::zero(), SignedSqrtRational(1, BigRational(7))).is_zero());
  auto x = half;
  x *= -two;
  CHECK(x == SignedSqrtRational(-1, BigRational(1)));
}

TEST_CASE("ssr_to_float") {
  CHECK(ssr_to_float(SignedSqrtRational(1, BigRational(4))) == 2.0);
  CHECK(ssr_to_float(SignedSqrtRational(-1, BigRational(5))) == -2.2360679774997896964);
  CHECK(ssr_to_float(SignedSqrtRational::zero()) == 0.0);
  // Factorial ratios far outside the double range still convert.
  const BigRational r(factorial(200), factorial(198));
  CHECK(ssr_to_float(SignedSqrtRational(1, r)) == doctest::Approx(std::sqrt(200.0 * 199.0)));
  BigInt huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 700);
  CHECK_THROWS_AS(ssr_to_float(SignedSqrtRational(1, BigRational(huge))), std::overflow_error);
}

TEST_CASE("square of a product agrees with its float within 4 ulp") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(1, 100000), den(1, 100000);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int i = 0; i < 300; ++i) {
    const SignedSqrtRational a(sign(rng) ? 1 : -1, BigRational(num(rng), den(rng)));
    const auto sq = ssr_mul(a, a);
    CHECK(sq.square() == a.square() * a.square());
    CHECK(ulp_distance(ssr_to_float(sq), to_double(a.square())) <= 4);
  }
}

TEST_CASE("perfect squares print as rationals") {
  CHECK(SignedSqrtRational(-1, BigRational(9)).to_string() == "-3");
  CHECK(SignedSqrtRational(1, BigRational(9, 4)).to_string() == "3/2");
  CHECK(SignedSqrtRational(-1, BigRational(1, 5)).to_string() == "-sqrt(1/5)");
  CHECK(SignedSqrtRational::zero().to_string() == "0");
  CHECK(SignedSqrtRational(1, BigRational(9)).as_rational() == 3);
  CHECK_THROWS_AS(SignedSqrtRational(1, BigRational(2)).as_rational(), std::domain_error);
}

TEST_CASE("sum_to_double mixes powers of pi") {
  const std::vector<PiTerm> terms{{BigRational(-12), SignedSqrtRational::one(), -2},
                                  {BigRational(1), SignedSqrtRational::one(), 0},
                                  {BigRational(2), SignedSqrtRational(1, BigRational(3, 4)), -1}};
  const double expect = -12 / M_PI + 1 + 2 * std::sqrt(0.75 / M_PI);
  CHECK(sum_to_double(terms) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(sum_to_double({}) == 0.0);
  const std::vector<PiTerm> bad{{BigRational(1), SignedSqrtRational::one(), 5}};
  CHECK_THROWS_AS(sum_to_double(bad), std::invalid_argument);
}
