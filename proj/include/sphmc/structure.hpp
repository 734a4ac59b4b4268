#pragma once

// Structure constants of the Lie algebra of divergence-free vector fields on
// the 2-sphere in the complex spherical-harmonic basis.
//
// Conventions:
//   {f, g} = f_lambda g_mu - f_mu g_lambda
//   {Y_{l1 m1}, Y_{l2 m2}} = sum_{l3} G^{l3 m3}_{l1 m1 l2 m2} Y_{l3 m3},  m3 = m1 + m2
//   G^{l3 m3}_{l1 m1 l2 m2} = -i (-1)^m3 g^{l3 -m3}_{l1 m1 l2 m2}
//   g^{l3 m3}_{l1 m1 l2 m2} = -(1/sqrt(4 pi)) L123 (l1 l2 l3; m1 m2 m3) (l1 l2 l3; 1 -1 0)
// with g forced to zero when l1 + l2 + l3 is even.
//
// Every g is an exact SignedSqrtRational times pi^(-1/2); the pi factor is
// implicit in StructureConstant::reduced and every g^2 is rational / pi.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "sphmc/exact.hpp"

namespace sphmc {

/// Degree/order pair labelling Y_{lm}.
struct HarmonicIndex {
  int l = 0;
  int m = 0;

  /// Throws std::invalid_argument unless l >= 0 and |m| <= l.
  static HarmonicIndex make(int l, int m);

  bool valid() const;
  /// Laplacian eigenvalue -l(l+1).
  long eigenvalue() const { return -static_cast<long>(l) * (l + 1); }

  friend auto operator<=>(const HarmonicIndex&, const HarmonicIndex&) = default;
};

std::string to_string(const HarmonicIndex& idx);

/// g^{upper}_{lower1 lower2}; value = reduced / sqrt(pi).
struct StructureConstant {
  HarmonicIndex upper;
  HarmonicIndex lower1;
  HarmonicIndex lower2;
  SignedSqrtRational reduced;

  bool is_zero() const { return reduced.is_zero(); }
  /// g^2 = squared_over_pi() / pi.
  BigRational squared_over_pi() const { return reduced.square(); }
  double to_double() const { return reduced.to_double_times_pi(-1); }
};

/// sqrt[(2l1+1)(2l2+1)(2l3+1) l1(l1+1) l2(l2+1)]. Requires l1, l2 >= 1.
SignedSqrtRational l123(int l1, int l2, int l3);

/// Real structure constant g^{l3 m3}_{l1 m1 l2 m2}; exact zero whenever a
/// selection rule (orders, triangle, parity, column bounds) fails.
StructureConstant g_real(int l1, int m1, int l2, int m2, int l3, int m3);

/// The coefficient -i * phase * reduced / sqrt(pi) of Y_{l3, m1+m2} in a
/// Poisson bracket, phase in {-1, +1}.
struct BracketTerm {
  int l3 = 0;
  int phase = 1;
  SignedSqrtRational reduced;

  /// Imaginary part of the coefficient (the real part is zero).
  double imag() const { return -phase * reduced.to_double_times_pi(-1); }
  /// |coefficient|^2 as a multiple of 1/pi.
  BigRational norm_over_pi() const { return reduced.square(); }
};

/// Harmonic expansion of {Y_a, Y_b}: nonzero terms only, keyed by l3.
struct BracketExpansion {
  HarmonicIndex input1;
  HarmonicIndex input2;
  int m3 = 0;
  std::map<int, BracketTerm> terms;

  bool empty() const { return terms.empty(); }
};

/// {Y_a, Y_b} expanded over l3 in [|l1-l2|+1, l1+l2-1]. Degree-zero inputs
/// give the empty expansion.
BracketExpansion bracket_expand(const HarmonicIndex& a, const HarmonicIndex& b);

struct SymmetryReport {
  long checks = 0;
  long failures = 0;
  std::vector<std::string> failed;  // first few failing tuples

  bool ok() const { return failures == 0; }
};

/// Exhaustively checks, for all degrees <= l_max and all admissible orders,
/// the cyclic symmetry of g, the sign flip under negating all orders, and
/// the sign flip under swapping the lower indices.
SymmetryReport validate_symmetries(int l_max);

}  // namespace sphmc
