#pragma once

/**
 * @file exact.hpp
 * @brief Exact arithmetic substrate: big integers, big rationals, memoized
 * factorials and signed square roots of rationals.
 *
 * Every Wigner symbol and structure constant handled by this library has the
 * form s * sqrt(p/q) with s in {-1, 0, +1} and p/q a nonnegative rational.
 * SignedSqrtRational stores exactly that; products and squares stay inside
 * the representation, sums in general do not and are never attempted.
 */

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace sphmc {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// n!, memoized. The table grows on demand and is shared between threads.
const BigInt& factorial(unsigned n);

/// Exact rational from an int64.
BigRational rational(std::int64_t num, std::int64_t den = 1);

/// Parse "p", "p/q", or a finite decimal ("-2.983", "1e-3") into an exact
/// rational. Throws std::invalid_argument on malformed input.
BigRational parse_rational(std::string_view text);

/// The exact dyadic rational equal to a finite double.
BigRational rational_from_double(double x);

/// "p/q", or "p" when q = 1.
std::string to_string(const BigRational& q);

/// Nearest double to q (round-half-even). Throws std::overflow_error when
/// |q| exceeds the double range.
double to_double(const BigRational& q);

/// Nearest double to q * pi^pi_power for pi_power in {-1, -1/2, 0, 1} given
/// as twice the exponent (so -2 means 1/pi). Evaluated at 256-bit precision.
double to_double_times_pi(const BigRational& q, int twice_pi_power);

/// -1, 0 or +1.
int sign_of(const BigRational& q);

/// Value sign * sqrt(radicand), sign in {-1, 0, +1}, radicand >= 0 and
/// sign == 0 exactly when radicand == 0.
class SignedSqrtRational {
 public:
  SignedSqrtRational() = default;

  /// Throws std::invalid_argument unless sign is in {-1,0,1}, radicand >= 0
  /// and (sign == 0) == (radicand == 0).
  SignedSqrtRational(int sign, BigRational radicand);

  static SignedSqrtRational zero() { return {}; }
  static SignedSqrtRational one() { return {1, BigRational(1)}; }
  /// q = sign(q) * sqrt(q^2).
  static SignedSqrtRational from_rational(const BigRational& q);
  /// +sqrt(q) for q >= 0.
  static SignedSqrtRational sqrt_of(const BigRational& q);

  int sign() const { return sign_; }
  const BigRational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// sign^2 * radicand.
  BigRational square() const { return radicand_; }

  SignedSqrtRational operator-() const;
  friend SignedSqrtRational operator*(const SignedSqrtRational& a,
                                      const SignedSqrtRational& b);
  SignedSqrtRational& operator*=(const SignedSqrtRational& b);
  friend bool operator==(const SignedSqrtRational& a,
                         const SignedSqrtRational& b);

  /// Nearest double to the value; overflow throws std::overflow_error.
  double to_double() const;
  /// The value times pi^(twice_pi_power / 2), rounded once.
  double to_double_times_pi(int twice_pi_power) const;

  /// The rational value, when the radicand is a perfect square.
  bool is_rational() const;
  BigRational as_rational() const;

  /// "-sqrt(1/5)", "0", "+sqrt(3/4)", or "-3" for perfect squares.
  std::string to_string() const;

 private:
  int sign_ = 0;
  BigRational radicand_{0};
};

/// coefficient * root * pi^(twice_pi_power / 2), twice_pi_power in [-2, 2].
struct PiTerm {
  BigRational coefficient;
  SignedSqrtRational root = SignedSqrtRational::one();
  int twice_pi_power = 0;
};

/// Nearest double to a sum of PiTerms, accumulated at 256 bits and rounded
/// once.
double sum_to_double(std::span<const PiTerm> terms);

SignedSqrtRational ssr_mul(const SignedSqrtRational& a,
                           const SignedSqrtRational& b);
double ssr_to_float(const SignedSqrtRational& a);

}  // namespace sphmc
