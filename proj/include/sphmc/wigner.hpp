#pragma once

// Exact Wigner 3j symbols for integer angular momenta.
//
// threej() evaluates the Racah alternating sum entirely in rational
// arithmetic. The closed forms below are independent evaluation paths kept
// for cross-validation; they return std::nullopt outside their domain and
// the caller falls back to threej().

#include <optional>

#include "sphmc/exact.hpp"

namespace sphmc {

/// Arguments (l1 l2 l3; m1 m2 m3) of a 3j symbol.
class ThreeJArgs {
 public:
  /// Throws std::invalid_argument if a degree is negative or |m_i| > l_i.
  ThreeJArgs(int l1, int l2, int l3, int m1, int m2, int m3);

  /// Accepts any integers; out-of-range columns make the symbol zero.
  static ThreeJArgs checked(int l1, int l2, int l3, int m1, int m2, int m3);

  int l1, l2, l3, m1, m2, m3;

  /// Every |m_i| <= l_i and every l_i >= 0.
  bool columns_valid() const { return columns_valid_; }
  /// m1 + m2 + m3 == 0 and |l1 - l2| <= l3 <= l1 + l2.
  bool selection_rules_hold() const;

 private:
  ThreeJArgs() = default;
  bool columns_valid_ = true;
};

/// The triangle condition |a - b| <= c <= a + b.
bool triangle(int a, int b, int c);

/// Exact value via the Racah formula; zero whenever the selection rules or
/// column bounds fail.
SignedSqrtRational threej(const ThreeJArgs& args);
SignedSqrtRational threej(int l1, int l2, int l3, int m1, int m2, int m3);

/// (l1 m l3; m1 -m m-m1), the second column stretched (order = -degree).
/// Requires m >= 0, |m1| <= l1, |m - m1| <= l3 and the triangle condition.
std::optional<SignedSqrtRational> threej_closed_stretched(int l1, int m, int l3, int m1);

/// (l1 l2 l3; 1 -1 0) for l1 + l2 + l3 odd, l1, l2 >= 1 and the triangle
/// condition.
std::optional<SignedSqrtRational> threej_closed_110(int l1, int l2, int l3);

/// (l1 l2 l3; 1 1 -2) from (l2 l3 l1; 1 -1 0):
///   (-1)^(l1+l2+l3) (l1-l2)(l1+l2+1) / sqrt(l1(l1+1)(l3(l3+1)-2))
///     * (l2 l3 l1; 1 -1 0)
/// Valid for l1 + l2 + l3 odd, l1, l2 >= 1, l3 >= 2 and the triangle
/// condition.
std::optional<SignedSqrtRational> threej_recursive_112(int l1, int l2, int l3);

/// C^{l3 m3}_{l1 m1 l2 m2} = (-1)^(l3+m3) sqrt(2 l3 + 1) (l1 l2 l3; -m1 -m2 m3).
SignedSqrtRational clebsch_gordan(int l1, int m1, int l2, int m2, int l3, int m3);

}  // namespace sphmc
