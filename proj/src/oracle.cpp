#include "sphmc/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sphmc::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

int cs_phase(int m) { return (m > 0 && m % 2 != 0) ? -1 : 1; }

void require_resolution(const QuadratureGrid& grid, int l_bracket, int l_target) {
  if (l_bracket > grid.l_max() || l_target > 2 * grid.l_max())
    throw std::invalid_argument("degree exceeds the quadrature grid's exact range");
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("need at least one node");
  std::vector<double> x(n), w(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0, p1 = z;
      dp = static_cast<double>(n) * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

QuadratureGrid::QuadratureGrid(int l_max) : l_max_(l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be nonnegative");
  std::tie(mu_, weights_) = gauss_legendre(static_cast<std::size_t>(2 * l_max + 2));
  const std::size_t n_lambda = static_cast<std::size_t>(4 * l_max + 4);
  lambda_weight_ = 2.0 * kPi / static_cast<double>(n_lambda);
  lambda_.resize(n_lambda);
  for (std::size_t j = 0; j < n_lambda; ++j) lambda_[j] = lambda_weight_ * static_cast<double>(j);
}

double legendre_p(int l, int m, double mu) {
  if (m < 0 || m > l) throw std::invalid_argument("legendre_p requires 0 <= m <= l");
  // P^m_m = (2m-1)!! (1-mu^2)^(m/2), then upward in l.
  double pmm = 1.0;
  const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
  for (int k = 1; k <= m; ++k) pmm *= (2.0 * k - 1.0) * s;
  if (l == m) return pmm;
  double p_prev = pmm, p = mu * (2.0 * m + 1.0) * pmm;
  for (int k = m + 2; k <= l; ++k) {
    const double next = ((2.0 * k - 1.0) * mu * p - (k + m - 1.0) * p_prev) / (k - m);
    p_prev = p;
    p = next;
  }
  return p;
}

std::pair<double, double> normalized_legendre(int l, int m, double mu) {
  if (m < 0 || m > l) throw std::invalid_argument("normalized_legendre requires 0 <= m <= l");
  const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
  double pmm = 1.0 / std::sqrt(4.0 * kPi);
  for (int k = 1; k <= m; ++k) pmm *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;

  // Upward to degree l + 1; at_l trails p by one degree.
  double at_l = pmm;
  double p = std::sqrt(2.0 * m + 3.0) * mu * pmm;
  for (int k = m + 2; k <= l + 1; ++k) {
    const double a = std::sqrt((4.0 * k * k - 1.0) / (double(k) * k - double(m) * m));
    const double b = std::sqrt((double(k - 1) * (k - 1) - double(m) * m) /
                               (4.0 * double(k - 1) * (k - 1) - 1.0));
    const double next = a * (mu * p - b * at_l);
    at_l = p;
    p = next;
  }
  const double at_l1 = p;

  const double ratio =
      std::sqrt((2.0 * l + 1.0) * (l + m + 1.0) * (l - m + 1.0) / (2.0 * l + 3.0));
  const double deriv = ((l + 1.0) * mu * at_l - ratio * at_l1) / (1.0 - mu * mu);
  return {at_l, deriv};
}

complex ylm_eval(const HarmonicIndex& idx, double lambda, double mu) {
  if (!idx.valid()) throw std::invalid_argument("invalid harmonic index");
  const int am = std::abs(idx.m);
  const double p = normalized_legendre(idx.l, am, mu).first;
  return static_cast<double>(cs_phase(idx.m)) * p * std::polar(1.0, idx.m * lambda);
}

GridFunction ylm_field(const QuadratureGrid& grid, const HarmonicIndex& idx) {
  if (!idx.valid()) throw std::invalid_argument("invalid harmonic index");
  GridFunction f;
  f.l_max = grid.l_max();
  f.value.resize(grid.size());
  f.d_lambda.resize(grid.size());
  f.d_mu.resize(grid.size());
  const int am = std::abs(idx.m);
  const double phase = cs_phase(idx.m);
  for (std::size_t i = 0; i < grid.n_mu(); ++i) {
    const auto [p, dp] = normalized_legendre(idx.l, am, grid.mu()[i]);
    for (std::size_t j = 0; j < grid.n_lambda(); ++j) {
      const complex e = std::polar(phase, idx.m * grid.lambda()[j]);
      const std::size_t k = grid.at(i, j);
      f.value[k] = p * e;
      f.d_lambda[k] = complex(0.0, idx.m) * p * e;
      f.d_mu[k] = dp * e;
    }
  }
  return f;
}

GridFunction mu_field(const QuadratureGrid& grid) {
  GridFunction f;
  f.l_max = grid.l_max();
  f.value.resize(grid.size());
  f.d_lambda.assign(grid.size(), 0.0);
  f.d_mu.assign(grid.size(), 1.0);
  for (std::size_t i = 0; i < grid.n_mu(); ++i)
    for (std::size_t j = 0; j < grid.n_lambda(); ++j) f.value[grid.at(i, j)] = grid.mu()[i];
  return f;
}

GridFunction combine(std::span<const std::pair<complex, GridFunction>> terms) {
  if (terms.empty()) throw std::invalid_argument("empty combination");
  GridFunction out;
  out.l_max = terms.front().second.l_max;
  const std::size_t n = terms.front().second.value.size();
  out.value.assign(n, 0.0);
  out.d_lambda.assign(n, 0.0);
  out.d_mu.assign(n, 0.0);
  for (const auto& [c, f] : terms) {
    if (f.value.size() != n || !f.has_derivatives())
      throw std::invalid_argument("combination needs same-grid fields with derivatives");
    for (std::size_t k = 0; k < n; ++k) {
      out.value[k] += c * f.value[k];
      out.d_lambda[k] += c * f.d_lambda[k];
      out.d_mu[k] += c * f.d_mu[k];
    }
  }
  return out;
}

GridFunction poisson_bracket(const GridFunction& f, const GridFunction& g) {
  if (!f.has_derivatives() || !g.has_derivatives())
    throw std::invalid_argument("poisson_bracket needs derivative fields");
  if (f.value.size() != g.value.size()) throw std::invalid_argument("grid mismatch");
  GridFunction out;
  out.l_max = f.l_max;
  out.value.resize(f.value.size());
  for (std::size_t k = 0; k < f.value.size(); ++k)
    out.value[k] = f.d_lambda[k] * g.d_mu[k] - f.d_mu[k] * g.d_lambda[k];
  return out;
}

complex inner_conj(const QuadratureGrid& grid, const GridFunction& f, const GridFunction& g) {
  complex sum = 0.0;
  for (std::size_t i = 0; i < grid.n_mu(); ++i) {
    complex row = 0.0;
    for (std::size_t j = 0; j < grid.n_lambda(); ++j) {
      const std::size_t k = grid.at(i, j);
      row += f.value[k] * std::conj(g.value[k]);
    }
    sum += grid.mu_weights()[i] * row;
  }
  return sum * grid.lambda_weight();
}

complex inner_plain(const QuadratureGrid& grid, const GridFunction& f, const GridFunction& g) {
  complex sum = 0.0;
  for (std::size_t i = 0; i < grid.n_mu(); ++i) {
    complex row = 0.0;
    for (std::size_t j = 0; j < grid.n_lambda(); ++j) {
      const std::size_t k = grid.at(i, j);
      row += f.value[k] * g.value[k];
    }
    sum += grid.mu_weights()[i] * row;
  }
  return sum * grid.lambda_weight();
}

complex oracle_structure_coeff(const QuadratureGrid& grid, int l1, int m1, int l2, int m2,
                               int l3, int m3) {
  require_resolution(grid, std::max(l1, l2), l3);
  const auto bracket = poisson_bracket(ylm_field(grid, HarmonicIndex::make(l1, m1)),
                                       ylm_field(grid, HarmonicIndex::make(l2, m2)));
  return inner_conj(grid, bracket, ylm_field(grid, HarmonicIndex::make(l3, m3)));
}

double oracle_mc(const QuadratureGrid& grid, const HarmonicIndex& a,
                 std::span<const std::pair<complex, HarmonicIndex>> g_terms) {
  int l_top = a.l;
  std::vector<std::pair<complex, GridFunction>> fields;
  for (const auto& [c, idx] : g_terms) {
    l_top = std::max(l_top, idx.l);
    fields.emplace_back(c, ylm_field(grid, idx));
  }
  require_resolution(grid, l_top, 2 * l_top);
  const auto f = ylm_field(grid, a);
  const auto bracket = poisson_bracket(f, combine(fields));

  // <Delta B, B> from the spectrum of B; <B, B> directly on the grid.
  double laplace_term = 0.0;
  for (int l3 = 0; l3 <= 2 * l_top; ++l3)
    for (int m3 = -l3; m3 <= l3; ++m3) {
      const complex c = inner_conj(grid, bracket, ylm_field(grid, HarmonicIndex{l3, m3}));
      laplace_term -= static_cast<double>(l3) * (l3 + 1) * std::norm(c);
    }
  const double norm = inner_conj(grid, bracket, bracket).real();
  const double lap_f = static_cast<double>(a.l) * (a.l + 1);
  // {Delta f, g} = -l(l+1) {f, g}
  return laplace_term + lap_f * norm;
}

}  // namespace sphmc::oracle
