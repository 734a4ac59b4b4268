#pragma once

// The Misiolek criterion on the sphere in every form used here: flat,
// linear combinations, Coriolis-extended, zonal critical ratios,
// Rossby-Haurwitz waves and the conjugate-time estimate.
//
// Exact values are sums of three kinds of term:
//   flat / pi              (squares of structure constants)
//   delta                  (rational)
//   a * slope / sqrt(pi)   (Coriolis, slope a SignedSqrtRational)
// pi is transcendental, so such a sum vanishes only when every part does.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sphmc/exact.hpp"
#include "sphmc/structure.hpp"

namespace sphmc {

/// Raised when an input violates the hypothesis of the identity being
/// evaluated (as opposed to a malformed argument).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// g^2 * weight contribution of one output degree l3.
struct MCSummand {
  HarmonicIndex probe;
  int l3 = 0;
  BigRational g_squared;  // times 1/pi, already scaled by any |x|^2
  long weight = 0;        // l1(l1+1) - l3(l3+1)
};

struct MCReport {
  HarmonicIndex a;
  HarmonicIndex b;
  std::vector<MCSummand> summands;
  BigRational flat{0};   // coefficient of 1/pi
  BigRational delta{0};  // -m1^2 when l1 = l2 and m1 = m2 (Coriolis form only)
  bool rotating = false;
  BigRational rotation{0};
  SignedSqrtRational slope;  // times pi^(-1/2)

  /// Exact value as a list of terms.
  std::vector<PiTerm> terms() const;
  /// flat / pi + delta, the part that does not depend on the rotation.
  std::vector<PiTerm> static_terms() const;
  double value() const;
  /// Exact sign.
  int sign() const;
  /// sum of g_squared * weight == flat.
  bool consistent() const;
};

/// MC(e_a, e_b) = sum_l3 (g^{l3, -(m1+m2)}_{l1 m1 l2 m2})^2 (l1(l1+1) - l3(l3+1)).
/// Requires a.l, b.l >= 1.
MCReport mc_flat(const HarmonicIndex& a, const HarmonicIndex& b);

/// mc_flat(a, b) == mc_flat(-a, -b) with all orders negated.
bool mc_symmetry_negate(const HarmonicIndex& a, const HarmonicIndex& b);

struct ComplexRational {
  BigRational re{0};
  BigRational im{0};

  BigRational norm() const { return re * re + im * im; }
};

/// MC(e_a, e_base + sum_j x_j e_j) through the decoupling identity
/// MC(e_a, e_base) + sum_j |x_j|^2 MC(e_a, e_j). Throws HypothesisError when
/// two of the probe orders coincide.
MCReport mc_combination(const HarmonicIndex& a, const HarmonicIndex& base,
                        const std::vector<std::pair<ComplexRational, HarmonicIndex>>& perturbations);

/// Coriolis-extended criterion:
///   mc_flat - m1^2 delta(m1,m2) delta(l1,l2) + a (-1)^m2 m2 g^{l2,-m2}_{l1 m1 l2 m2}.
MCReport mc_coriolis(const HarmonicIndex& a_idx, const HarmonicIndex& b_idx,
                     const BigRational& rotation);
MCReport mc_coriolis(const HarmonicIndex& a_idx, const HarmonicIndex& b_idx, double rotation);

enum class CellStatus { ok, undefined, not_applicable };

std::string to_string(CellStatus status);

/// One entry of the zonal critical-ratio table.
struct CriticalCell {
  int l1 = 0;
  int l2 = 0;
  int m2 = 0;
  CellStatus status = CellStatus::undefined;
  std::string reason;  // why a cell is undefined or not applicable
  /// -MC(e_{l1 0}, e_{l2 m2}) / ((-1)^m2 m2 g^{l2,-m2}_{l1 0 l2 m2}), exact.
  std::optional<PiTerm> exact;
  std::optional<double> ratio;
  /// ">" when the denominator is positive (a > ratio gives MC > 0), else "<".
  std::string direction;
  BigRational flat{0};
  SignedSqrtRational denominator;  // times pi^(-1/2)
};

/// Throws std::invalid_argument for m2 < 1 or l1, l2 < 1.
CriticalCell critical_ratio(int l1, int l2, int m2);

struct CriticalRatioTable {
  int l1 = 0;
  int l2_max = 0;
  /// Row-major: l2 = 1..l2_max, m2 = 1..l2_max.
  std::vector<CriticalCell> cells;

  const CriticalCell& at(int l2, int m2) const;
};

CriticalRatioTable critical_table(int l1, int l2_max);

/// A Y_{l1 m1}(lambda - omega t, mu) - C mu.
struct RHWave {
  ComplexRational A;
  BigRational C{0};
  HarmonicIndex wave;
  BigRational omega{0};
  BigRational alpha2{0};
  BigRational rotation{0};

  /// Builds the wave with omega chosen so that
  /// omega (l1(l1+1) + alpha2) = l1(l1+1) C - 2 C + a.
  static RHWave solution(ComplexRational A, BigRational C, HarmonicIndex wave,
                         BigRational alpha2, BigRational rotation);

  /// omega (l1(l1+1) + alpha2) - (l1(l1+1) C - 2 C + a); zero for a solution.
  BigRational residual() const;
};

struct RHWReport {
  RHWave wave;
  HarmonicIndex probe;
  MCReport flat;          // MC(e_{l1 m1}, e_{l2 m2})
  BigRational amplitude;  // |A|^2
  BigRational zonal;      // C^2 m2^2 (2 - l2(l2+1))
  BigRational delta;      // -|A|^2 m1^2 delta(l1,l2) delta(m1,m2)
  BigRational coriolis;   // -a m2^2 C

  /// Without rotation: |A|^2 flat / pi + zonal.
  BigRational plain_over_pi() const { return amplitude * flat.flat; }
  BigRational plain_rational() const { return zonal; }
  /// With rotation: adds delta and coriolis.
  BigRational extended_rational() const { return zonal + delta + coriolis; }

  double plain_value() const;
  double extended_value() const;
  int plain_sign() const;
  int extended_sign() const;
};

/// Throws HypothesisError when m1 = 0.
RHWReport rhw_mc(const RHWave& wave, const HarmonicIndex& probe);

struct ThresholdReport {
  int l1 = 0, m1 = 0, m = 0;
  BigRational K{0};
  MCReport denominator;  // MC(e_{l1 m1}, e_{m,-m})
  PiTerm exact;          // pi m^2 (m(m+1) - 2 - K) / flat
  double value = 0.0;
};

/// Minimal |A|^2 / C^2 for a positive criterion with a = -K C. Requires
/// 2 <= m <= m1 <= l1, else HypothesisError.
ThresholdReport rhw_threshold(int l1, int m1, int m, const BigRational& K);

/// pi / sqrt(kappa * v_norm). Throws std::invalid_argument unless both are
/// positive and finite.
double conjugate_time(double kappa, double v_norm);

/// ||e_{lm}||^2 = l(l+1).
long harmonic_norm_squared(const HarmonicIndex& idx);

struct TheoremScanReport {
  int l_max = 0;
  long part_i_checks = 0;
  long part_ii_checks = 0;
  long zonal_checks = 0;
  long chain_checks = 0;
  long extended_checks = 0;
  long extended_positive = 0;
  std::vector<MCReport> falsifications;  // nonpositive part i / ii instances
  std::vector<MCReport> zonal_violations;
  std::vector<std::string> chain_violations;

  bool ok() const {
    return falsifications.empty() && zonal_violations.empty() && chain_violations.empty();
  }
};

/// Checks parts i and ii of the positivity theorem on exact values, the
/// monotone ratio chains of its proof, and nonpositivity along zonal flows.
/// The extended range m1 < m <= 2 m1 - 2 is counted but not asserted.
TheoremScanReport theorem_scan(int l_max);

}  // namespace sphmc
