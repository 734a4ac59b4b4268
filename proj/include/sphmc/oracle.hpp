#pragma once

// Independent floating-point verification path: spherical harmonics sampled
// on a Gauss-Legendre x uniform-longitude grid, Poisson brackets from
// analytic derivatives, and brute-force projection onto the harmonic basis.
// Nothing here touches the Wigner or structure-constant code.

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sphmc/structure.hpp"

namespace sphmc::oracle {

using complex = std::complex<double>;

/// Gauss-Legendre nodes/weights on (-1, 1), computed by Newton iteration.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n);

/// Tensor grid sized to integrate exactly every product that arises from
/// brackets of harmonics with degree <= l_max projected onto degree
/// <= 2 l_max: N_mu = 2 l_max + 2 Gauss nodes, N_lambda = 4 l_max + 4.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(int l_max);

  int l_max() const { return l_max_; }
  std::size_t n_mu() const { return mu_.size(); }
  std::size_t n_lambda() const { return lambda_.size(); }
  std::size_t size() const { return n_mu() * n_lambda(); }
  std::span<const double> mu() const { return mu_; }
  std::span<const double> mu_weights() const { return weights_; }
  std::span<const double> lambda() const { return lambda_; }
  double lambda_weight() const { return lambda_weight_; }

  /// Flat index, mu-major.
  std::size_t at(std::size_t i_mu, std::size_t i_lambda) const {
    return i_mu * n_lambda() + i_lambda;
  }

 private:
  int l_max_;
  std::vector<double> mu_, weights_, lambda_;
  double lambda_weight_;
};

/// Complex samples on a grid, optionally with analytic d/dlambda and d/dmu.
struct GridFunction {
  int l_max = 0;
  std::vector<complex> value;
  std::vector<complex> d_lambda;
  std::vector<complex> d_mu;

  bool has_derivatives() const { return !d_lambda.empty() && !d_mu.empty(); }
};

/// P^m_l(mu), 0 <= m <= l, without the Condon-Shortley phase:
/// (1-mu^2)^(m/2) / (2^l l!) d^(l+m)/dmu^(l+m) (mu^2-1)^l.
double legendre_p(int l, int m, double mu);

/// sqrt((2l+1)/(4pi) (l-m)!/(l+m)!) P^m_l(mu) and its mu-derivative,
/// evaluated by a normalized recurrence (no factorial overflow).
/// Requires |mu| < 1 for the derivative.
std::pair<double, double> normalized_legendre(int l, int m, double mu);

/// Y_{lm}(lambda, mu) with the Condon-Shortley phase (-1)^m on m >= 0 only.
complex ylm_eval(const HarmonicIndex& idx, double lambda, double mu);

/// Y_{lm} sampled on the grid with both derivatives.
GridFunction ylm_field(const QuadratureGrid& grid, const HarmonicIndex& idx);

/// The coordinate function mu with derivatives (0, 1).
GridFunction mu_field(const QuadratureGrid& grid);

/// Linear combination sum_j c_j f_j (value and derivatives).
GridFunction combine(std::span<const std::pair<complex, GridFunction>> terms);

/// {f, g} = f_lambda g_mu - f_mu g_lambda, pointwise. Values only.
GridFunction poisson_bracket(const GridFunction& f, const GridFunction& g);

/// int f conj(g) dlambda dmu.
complex inner_conj(const QuadratureGrid& grid, const GridFunction& f, const GridFunction& g);
/// int f g dlambda dmu (no conjugation).
complex inner_plain(const QuadratureGrid& grid, const GridFunction& f, const GridFunction& g);

/// Brute-force G^{l3 m3}_{l1 m1 l2 m2}: projection of {Y1, Y2} onto Y3.
/// Throws std::invalid_argument when a degree exceeds the grid's range.
complex oracle_structure_coeff(const QuadratureGrid& grid, int l1, int m1, int l2, int m2,
                               int l3, int m3);

/// Misiolek criterion for f = Y_a, g = sum_j c_j Y_{b_j} evaluated straight
/// from <Delta{f,g},{f,g}> - <{Delta f,g},{f,g}> with the conjugated pairing.
double oracle_mc(const QuadratureGrid& grid, const HarmonicIndex& a,
                 std::span<const std::pair<complex, HarmonicIndex>> g_terms);

}  // namespace sphmc::oracle
