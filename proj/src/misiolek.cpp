#include "sphmc/misiolek.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <set>

namespace sphmc {

namespace {

long eig(long l) { return l * (l + 1); }

int parity(long n) { return (n % 2 == 0) ? 1 : -1; }

void require_positive_degree(const HarmonicIndex& idx, const char* what) {
  if (!idx.valid()) throw std::invalid_argument(std::string("invalid ") + what + " index");
  if (idx.l < 1) throw std::invalid_argument(std::string(what) + " degree must be >= 1");
}

int sign_of_terms(const std::vector<PiTerm>& terms) {
  bool any = false;
  for (const auto& t : terms)
    if (!t.root.is_zero() && sgn(t.coefficient) != 0) any = true;
  if (!any) return 0;
  // The terms carry distinct powers of pi; a nonzero combination cannot
  // cancel, so the 256-bit sum has the exact sign.
  const double v = sum_to_double(terms);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// (-1)^m2 m2 g^{l2,-m2}_{l1 m1 l2 m2}
SignedSqrtRational coriolis_slope(const HarmonicIndex& a, const HarmonicIndex& b) {
  const auto g = g_real(a.l, a.m, b.l, b.m, b.l, -b.m);
  if (g.is_zero() || b.m == 0) return SignedSqrtRational::zero();
  return SignedSqrtRational::from_rational(BigRational(parity(b.m) * b.m)) * g.reduced;
}

}  // namespace

std::vector<PiTerm> MCReport::static_terms() const {
  return {PiTerm{flat, SignedSqrtRational::one(), -2}, PiTerm{delta, SignedSqrtRational::one(), 0}};
}

std::vector<PiTerm> MCReport::terms() const {
  auto t = static_terms();
  if (rotating) t.push_back(PiTerm{rotation, slope, -1});
  return t;
}

double MCReport::value() const { return sum_to_double(terms()); }

int MCReport::sign() const { return sign_of_terms(terms()); }

bool MCReport::consistent() const {
  BigRational total(0);
  for (const auto& s : summands) total += s.g_squared * s.weight;
  return total == flat;
}

MCReport mc_flat(const HarmonicIndex& a, const HarmonicIndex& b) {
  require_positive_degree(a, "first");
  require_positive_degree(b, "second");
  MCReport r;
  r.a = a;
  r.b = b;
  const int m3 = a.m + b.m;
  for (int l3 = std::abs(a.l - b.l) + 1; l3 <= a.l + b.l - 1; ++l3) {
    const auto g = g_real(a.l, a.m, b.l, b.m, l3, -m3);
    if (g.is_zero()) continue;
    MCSummand s{b, l3, g.squared_over_pi(), eig(a.l) - eig(l3)};
    r.flat += s.g_squared * s.weight;
    r.summands.push_back(std::move(s));
  }
  return r;
}

bool mc_symmetry_negate(const HarmonicIndex& a, const HarmonicIndex& b) {
  return mc_flat(a, b).flat == mc_flat({a.l, -a.m}, {b.l, -b.m}).flat;
}

MCReport mc_combination(
    const HarmonicIndex& a, const HarmonicIndex& base,
    const std::vector<std::pair<ComplexRational, HarmonicIndex>>& perturbations) {
  std::set<int> orders{base.m};
  for (const auto& [x, idx] : perturbations) {
    require_positive_degree(idx, "perturbation");
    if (!orders.insert(idx.m).second)
      throw HypothesisError("perturbation orders must differ from the base order and each other");
  }
  MCReport r = mc_flat(a, base);
  for (const auto& [x, idx] : perturbations) {
    const BigRational w = x.norm();
    if (sgn(w) == 0) continue;
    for (auto s : mc_flat(a, idx).summands) {
      s.g_squared *= w;
      r.flat += s.g_squared * s.weight;
      r.summands.push_back(std::move(s));
    }
  }
  return r;
}

MCReport mc_coriolis(const HarmonicIndex& a_idx, const HarmonicIndex& b_idx,
                     const BigRational& rotation) {
  MCReport r = mc_flat(a_idx, b_idx);
  if (a_idx == b_idx) r.delta = -BigRational(a_idx.m * a_idx.m);
  r.rotating = true;
  r.rotation = rotation;
  r.slope = coriolis_slope(a_idx, b_idx);
  return r;
}

MCReport mc_coriolis(const HarmonicIndex& a_idx, const HarmonicIndex& b_idx, double rotation) {
  return mc_coriolis(a_idx, b_idx, rational_from_double(rotation));
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::ok: return "ok";
    case CellStatus::undefined: return "undefined";
    case CellStatus::not_applicable: return "not-applicable";
  }
  return "unknown";
}

CriticalCell critical_ratio(int l1, int l2, int m2) {
  if (l1 < 1 || l2 < 1) throw std::invalid_argument("critical_ratio requires l1, l2 >= 1");
  if (m2 < 1) throw std::invalid_argument("critical_ratio requires m2 >= 1");
  CriticalCell cell;
  cell.l1 = l1;
  cell.l2 = l2;
  cell.m2 = m2;
  if (m2 > l2) {
    cell.status = CellStatus::not_applicable;
    cell.reason = "order exceeds degree";
    return cell;
  }
  const HarmonicIndex a{l1, 0}, b{l2, m2};
  cell.denominator = coriolis_slope(a, b);
  if (cell.denominator.is_zero()) {
    cell.status = CellStatus::undefined;
    if (l1 % 2 == 0)
      cell.reason = "parity";
    else if (l1 > 2 * l2 - 1)
      cell.reason = "triangle";
    else
      cell.reason = "zero 3j symbol";
    return cell;
  }
  cell.flat = mc_flat(a, b).flat;
  cell.status = CellStatus::ok;
  // -flat / (pi * s sqrt(r) / sqrt(pi)) = -flat * s sqrt(1/r) / sqrt(pi)
  const BigRational inv = 1 / cell.denominator.radicand();
  cell.exact = PiTerm{-cell.flat, SignedSqrtRational(cell.denominator.sign(), inv), -1};
  cell.ratio = sum_to_double(std::span<const PiTerm>(&*cell.exact, 1));
  cell.direction = cell.denominator.sign() > 0 ? ">" : "<";
  return cell;
}

const CriticalCell& CriticalRatioTable::at(int l2, int m2) const {
  if (l2 < 1 || l2 > l2_max || m2 < 1 || m2 > l2_max)
    throw std::out_of_range("cell outside the table");
  return cells[static_cast<std::size_t>((l2 - 1) * l2_max + (m2 - 1))];
}

CriticalRatioTable critical_table(int l1, int l2_max) {
  if (l1 < 1) throw std::invalid_argument("critical_table requires l1 >= 1");
  if (l2_max < 1) throw std::invalid_argument("critical_table requires l2_max >= 1");
  CriticalRatioTable t{l1, l2_max, {}};
  t.cells.reserve(static_cast<std::size_t>(l2_max) * l2_max);
  for (int l2 = 1; l2 <= l2_max; ++l2)
    for (int m2 = 1; m2 <= l2_max; ++m2) t.cells.push_back(critical_ratio(l1, l2, m2));
  return t;
}

RHWave RHWave::solution(ComplexRational A, BigRational C, HarmonicIndex wave, BigRational alpha2,
                        BigRational rotation) {
  if (!wave.valid()) throw std::invalid_argument("invalid wave index");
  if (sgn(alpha2) < 0) throw std::invalid_argument("alpha^2 must be nonnegative");
  RHWave w{std::move(A), std::move(C), wave, BigRational(0), std::move(alpha2), std::move(rotation)};
  const BigRational lam(eig(wave.l));
  if (sgn(lam + w.alpha2) == 0) throw std::invalid_argument("degenerate dispersion relation");
  w.omega = (lam * w.C - 2 * w.C + w.rotation) / (lam + w.alpha2);
  w.omega.canonicalize();
  return w;
}

BigRational RHWave::residual() const {
  const BigRational lam(eig(wave.l));
  BigRational r = omega * (lam + alpha2) - (lam * C - 2 * C + rotation);
  r.canonicalize();
  return r;
}

double RHWReport::plain_value() const {
  const std::vector<PiTerm> t{{plain_over_pi(), SignedSqrtRational::one(), -2},
                              {plain_rational(), SignedSqrtRational::one(), 0}};
  return sum_to_double(t);
}

double RHWReport::extended_value() const {
  const std::vector<PiTerm> t{{plain_over_pi(), SignedSqrtRational::one(), -2},
                              {extended_rational(), SignedSqrtRational::one(), 0}};
  return sum_to_double(t);
}

int RHWReport::plain_sign() const {
  return sign_of_terms({{plain_over_pi(), SignedSqrtRational::one(), -2},
                        {plain_rational(), SignedSqrtRational::one(), 0}});
}

int RHWReport::extended_sign() const {
  return sign_of_terms({{plain_over_pi(), SignedSqrtRational::one(), -2},
                        {extended_rational(), SignedSqrtRational::one(), 0}});
}

RHWReport rhw_mc(const RHWave& wave, const HarmonicIndex& probe) {
  require_positive_degree(wave.wave, "wave");
  if (wave.wave.m == 0) throw HypothesisError("the wave order m1 must be nonzero");
  require_positive_degree(probe, "probe");
  RHWReport r{wave, probe, mc_flat(wave.wave, probe), wave.A.norm(), 0, 0, 0};
  const BigRational m2sq(static_cast<long>(probe.m) * probe.m);
  r.zonal = wave.C * wave.C * m2sq * (2 - eig(probe.l));
  if (wave.wave == probe) r.delta = -r.amplitude * (static_cast<long>(wave.wave.m) * wave.wave.m);
  r.coriolis = -wave.rotation * m2sq * wave.C;
  return r;
}

ThresholdReport rhw_threshold(int l1, int m1, int m, const BigRational& K) {
  if (!(2 <= m && m <= m1 && m1 <= l1))
    throw HypothesisError("threshold requires 2 <= m <= m1 <= l1");
  ThresholdReport r;
  r.l1 = l1;
  r.m1 = m1;
  r.m = m;
  r.K = K;
  r.denominator = mc_flat({l1, m1}, {m, -m});
  if (sgn(r.denominator.flat) <= 0)
    throw HypothesisError("denominator criterion is not positive");
  const BigRational mm(static_cast<long>(m) * m);
  BigRational q = mm * (eig(m) - 2 - K) / r.denominator.flat;
  q.canonicalize();
  r.exact = PiTerm{q, SignedSqrtRational::one(), 2};
  r.value = sum_to_double(std::span<const PiTerm>(&r.exact, 1));
  return r;
}

double conjugate_time(double kappa, double v_norm) {
  if (!(kappa > 0) || !(v_norm > 0) || !std::isfinite(kappa) || !std::isfinite(v_norm))
    throw std::invalid_argument("kappa and the norm must be positive and finite");
  return std::numbers::pi / std::sqrt(kappa * v_norm);
}

long harmonic_norm_squared(const HarmonicIndex& idx) {
  if (!idx.valid()) throw std::invalid_argument("invalid harmonic index");
  return eig(idx.l);
}

namespace {

// Ratio of the summand at l1 - j to the magnitude of the summand at l1 + j,
// or nullopt when either structure constant vanishes.
std::optional<BigRational> paired_ratio(const HarmonicIndex& a, int m, int j) {
  const int m3 = a.m - m;
  const auto lo = g_real(a.l, a.m, m, -m, a.l - j, -m3);
  const auto hi = g_real(a.l, a.m, m, -m, a.l + j, -m3);
  if (lo.is_zero() || hi.is_zero()) return std::nullopt;
  BigRational r = lo.squared_over_pi() * (eig(a.l) - eig(a.l - j)) /
                  (hi.squared_over_pi() * (eig(a.l + j) - eig(a.l)));
  r.canonicalize();
  return r;
}

void check_chain(TheoremScanReport& rep, const HarmonicIndex& a, int m) {
  // Even m pairs l1 -+ (2k+1), k = 0..(m-2)/2; odd m pairs l1 -+ 2k,
  // k = 1..(m-1)/2. The chain must start above 1 and increase.
  std::vector<int> offsets;
  if (m % 2 == 0)
    for (int k = 0; 2 * k + 1 <= m - 1; ++k) offsets.push_back(2 * k + 1);
  else
    for (int k = 1; 2 * k <= m - 1; ++k) offsets.push_back(2 * k);
  std::optional<BigRational> prev;
  for (int j : offsets) {
    if (a.l - j < 0) break;
    const auto r = paired_ratio(a, m, j);
    if (!r) {
      prev.reset();
      continue;
    }
    ++rep.chain_checks;
    const bool ok = prev ? (*r > *prev) : (*r > 1);
    if (!ok && rep.chain_violations.size() < 32)
      rep.chain_violations.push_back("l1=" + std::to_string(a.l) + " m1=" + std::to_string(a.m) +
                                     " m=" + std::to_string(m) + " offset=" + std::to_string(j) +
                                     " ratio=" + r->get_str());
    prev = r;
  }
}

}  // namespace

TheoremScanReport theorem_scan(int l_max) {
  if (l_max < 3) throw std::invalid_argument("theorem_scan requires l_max >= 3");
  TheoremScanReport rep;
  rep.l_max = l_max;
  for (int l1 = 2; l1 <= l_max; ++l1)
    for (int m1 = 2; m1 <= l1; ++m1) {
      const HarmonicIndex a{l1, m1};
      for (int m = 2; m <= m1; ++m) {
        auto r = mc_flat(a, {m, -m});
        ++rep.part_i_checks;
        if (sgn(r.flat) <= 0) rep.falsifications.push_back(std::move(r));
        check_chain(rep, a, m);
      }
      for (int m = m1 + 1; m <= 2 * m1 - 2; ++m) {
        ++rep.extended_checks;
        if (sgn(mc_flat(a, {m, -m}).flat) > 0) ++rep.extended_positive;
      }
    }
  for (int l1 = 3; l1 <= l_max; ++l1)
    for (int l2 = 2; l2 < l1; ++l2) {
      auto r = mc_flat({l1, 1}, {l2, 1});
      ++rep.part_ii_checks;
      if (sgn(r.flat) <= 0) rep.falsifications.push_back(std::move(r));
    }
  for (int l1 = 1; l1 <= l_max; ++l1)
    for (int l2 = 1; l2 <= l_max; ++l2)
      for (int m2 = -l2; m2 <= l2; ++m2) {
        auto r = mc_flat({l1, 0}, {l2, m2});
        ++rep.zonal_checks;
        if (sgn(r.flat) > 0) rep.zonal_violations.push_back(std::move(r));
      }
  return rep;
}

}  // namespace sphmc
