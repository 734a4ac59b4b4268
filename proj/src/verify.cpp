#include "sphmc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "sphmc/misiolek.hpp"
#include "sphmc/oracle.hpp"
#include "sphmc/structure.hpp"
#include "sphmc/wigner.hpp"

namespace sphmc {

namespace {

constexpr std::size_t kMaxMessages = 20;

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  for (int x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

int parity(long n) { return (n % 2 == 0) ? 1 : -1; }

SuiteResult make_result(std::string name, int lmax) {
  SuiteResult r;
  r.name = std::move(name);
  r.lmax = lmax;
  return r;
}

SignedSqrtRational scaled(const SignedSqrtRational& x, int s) { return s > 0 ? x : -x; }

}  // namespace

void SuiteResult::check(bool ok, const std::string& what) {
  ++checks;
  if (ok) return;
  ++failures;
  if (messages.size() < kMaxMessages) messages.push_back(what);
}

void SuiteResult::merge(const SuiteResult& other) {
  checks += other.checks;
  failures += other.failures;
  max_dev = std::max(max_dev, other.max_dev);
  for (const auto& m : other.messages)
    if (messages.size() < kMaxMessages) messages.push_back(other.name + ": " + m);
}

const std::vector<PublishedCell>& published_table() {
  static const std::vector<PublishedCell> cells{
      {3, 2, 1, 2.983, false},   {3, 2, 2, -19.39, true},
      {3, 3, 1, 12.20, false},   {3, 3, 2, 30.53, false},  {3, 3, 3, -20.35, true},
      {3, 4, 1, 41.51, false},   {3, 4, 2, 43.87, false},  {3, 4, 3, 73.68, false},
      {3, 4, 4, -24.43, true},   {3, 5, 1, 80.5, false},   {3, 5, 2, 77.62, false},
      {3, 5, 3, 78.54, false},   {3, 5, 4, 192.4, false},  {3, 5, 5, -31.31, true},
      {5, 3, 1, 19.41, false},   {5, 3, 2, -71.19, true},  {5, 3, 3, 170.4, false},
      {5, 4, 1, 45.64, false},   {5, 4, 2, 269.0, false},  {5, 4, 3, -60.40, true},
      {5, 4, 4, 125.4, false},   {5, 5, 1, 101.6, false},  {5, 5, 2, 226.5, false},
      {5, 5, 3, -616.9, true},   {5, 5, 4, -72.31, true},  {5, 5, 5, 123.5, false},
      {7, 4, 1, 71.66, false},   {7, 4, 2, -205.5, true},  {7, 4, 3, 276.7, false},
      {7, 4, 4, -1279, true},    {7, 5, 1, 127.8, false},  {7, 5, 2, 4792, false},
      {7, 5, 3, -171.4, true},   {7, 5, 4, 182.1, false},  {7, 5, 5, -713.5, true},
      {7, 6, 1, 234.1, false},   {7, 6, 2, 881.2, false},  {7, 6, 3, -475.7, true},
      {7, 6, 4, -245.1, true},   {7, 6, 5, 175.2, false},  {7, 6, 6, -569.9, true},
  };
  return cells;
}

const std::vector<std::pair<int, int>>& published_zero_rows() {
  static const std::vector<std::pair<int, int>> rows{{5, 2}, {7, 2}, {7, 3}};
  return rows;
}

SuiteResult check_threej_selection(int lmax) {
  SuiteResult r = make_result("threej-selection", lmax);
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int l2 = 0; l2 <= lmax; ++l2)
      for (int l3 = 0; l3 <= lmax; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2)
            for (int m3 : {-m1 - m2 - 1, -m1 - m2, -m1 - m2 + 1}) {
              if (std::abs(m3) > l3) continue;
              if (m1 + m2 + m3 == 0 && triangle(l1, l2, l3)) continue;
              r.check(threej(l1, l2, l3, m1, m2, m3).is_zero(),
                      "nonzero outside selection rules " + tuple_str({l1, l2, l3, m1, m2, m3}));
            }
  return r;
}

SuiteResult check_threej_symmetries(int lmax) {
  SuiteResult r = make_result("threej-symmetry", lmax);
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int l2 = 0; l2 <= lmax; ++l2)
      for (int l3 = std::abs(l1 - l2); l3 <= std::min(lmax, l1 + l2); ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            const auto v = threej(l1, l2, l3, m1, m2, m3);
            const int p = parity(l1 + l2 + l3);
            const auto t = tuple_str({l1, l2, l3, m1, m2, m3});
            r.check(threej(l2, l1, l3, m2, m1, m3) == scaled(v, p), "swap 12 " + t);
            r.check(threej(l1, l3, l2, m1, m3, m2) == scaled(v, p), "swap 23 " + t);
            r.check(threej(l2, l3, l1, m2, m3, m1) == v, "cyclic " + t);
            r.check(threej(l1, l2, l3, -m1, -m2, -m3) == scaled(v, p), "negate " + t);
          }
  return r;
}

SuiteResult check_closed_forms(int lmax) {
  SuiteResult r = make_result("closed-forms", lmax);
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int m = 0; m <= lmax; ++m)
      for (int l3 = 0; l3 <= lmax; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1) {
          const auto c = threej_closed_stretched(l1, m, l3, m1);
          const bool in_domain = std::abs(m - m1) <= l3 && triangle(l1, m, l3);
          if (!in_domain) {
            r.check(!c.has_value(), "stretched accepted " + tuple_str({l1, m, l3, m1}));
            continue;
          }
          r.check(c.has_value() && *c == threej(l1, m, l3, m1, -m, m - m1),
                  "stretched " + tuple_str({l1, m, l3, m1}));
        }
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int l2 = 0; l2 <= lmax; ++l2)
      for (int l3 = 0; l3 <= lmax; ++l3) {
        const bool odd = (l1 + l2 + l3) % 2 != 0;
        const bool base = l1 >= 1 && l2 >= 1 && triangle(l1, l2, l3) && odd;
        const auto c110 = threej_closed_110(l1, l2, l3);
        if (base)
          r.check(c110.has_value() && *c110 == threej(l1, l2, l3, 1, -1, 0),
                  "110 " + tuple_str({l1, l2, l3}));
        else
          r.check(!c110.has_value(), "110 accepted " + tuple_str({l1, l2, l3}));

        const auto c112 = threej_recursive_112(l1, l2, l3);
        if (base && l3 >= 2) {
          r.check(c112.has_value() && *c112 == threej(l1, l2, l3, 1, 1, -2),
                  "112 " + tuple_str({l1, l2, l3}));
          if (l1 == l2) r.check(c112 && c112->is_zero(), "112 equal degrees " + tuple_str({l1, l2, l3}));
        } else {
          r.check(!c112.has_value(), "112 accepted " + tuple_str({l1, l2, l3}));
        }
      }
  return r;
}

SuiteResult check_orthogonality(int lmax) {
  SuiteResult r = make_result("orthogonality", lmax);
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int l2 = 0; l2 <= lmax; ++l2)
      for (int l3 = std::abs(l1 - l2); l3 <= std::min(lmax, l1 + l2); ++l3)
        for (int m3 = -l3; m3 <= l3; ++m3) {
          BigRational sum(0);
          for (int m1 = -l1; m1 <= l1; ++m1) sum += threej(l1, l2, l3, m1, -m1 - m3, m3).square();
          r.check(sum * (2 * l3 + 1) == 1, "orthogonality " + tuple_str({l1, l2, l3, m3}));
        }
  return r;
}

SuiteResult check_structure_symmetries(int lmax) {
  SuiteResult r = make_result("structure-symmetry", lmax);
  const auto rep = validate_symmetries(lmax);
  r.checks = rep.checks;
  r.failures = rep.failures;
  r.messages = rep.failed;
  return r;
}

SuiteResult check_structure_zeros(int lmax) {
  SuiteResult r = make_result("structure-zeros", lmax);
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int l2 = 0; l2 <= lmax; ++l2)
      for (int l3 = 0; l3 <= lmax; ++l3) {
        const bool inside = l3 >= std::abs(l1 - l2) + 1 && l3 <= l1 + l2 - 1;
        const bool odd = (l1 + l2 + l3) % 2 != 0;
        if (inside && odd) continue;
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const int m3 = -m1 - m2;
            if (std::abs(m3) > l3) continue;
            r.check(g_real(l1, m1, l2, m2, l3, m3).is_zero(),
                    std::string(inside ? "parity " : "range ") + tuple_str({l1, m1, l2, m2, l3, m3}));
          }
      }
  return r;
}

SuiteResult check_bracket_antisymmetry(int lmax) {
  SuiteResult r = make_result("bracket-antisymmetry", lmax);
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 0; l2 <= lmax; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const auto ab = bracket_expand({l1, m1}, {l2, m2});
          const auto ba = bracket_expand({l2, m2}, {l1, m1});
          bool ok = ab.terms.size() == ba.terms.size();
          for (const auto& [l3, t] : ab.terms) {
            const auto it = ba.terms.find(l3);
            ok = ok && it != ba.terms.end() && it->second.phase == t.phase &&
                 it->second.reduced == -t.reduced;
          }
          if (l1 == l2 && m1 == m2) ok = ok && ab.empty();
          r.check(ok, "bracket " + tuple_str({l1, m1, l2, m2}));
        }
  return r;
}

SuiteResult check_oracle_harmonics(int lmax) {
  using namespace oracle;
  SuiteResult r = make_result("oracle-harmonics", lmax);
  const QuadratureGrid grid(lmax);
  std::vector<HarmonicIndex> idx;
  std::vector<GridFunction> fields;
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) {
      idx.push_back({l, m});
      fields.push_back(ylm_field(grid, {l, m}));
    }
  auto dev = [&](double d, double tol, const std::string& what) {
    r.max_dev = std::max(r.max_dev, d);
    r.check(d <= tol, what + " deviation " + std::to_string(d));
  };
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto t = tuple_str({idx[i].l, idx[i].m, idx[j].l, idx[j].m});
      const double delta = i == j ? 1.0 : 0.0;
      dev(std::abs(inner_conj(grid, fields[i], fields[j]) - delta), 1e-12, "orthonormal " + t);
      const bool pair = idx[i].l == idx[j].l && idx[i].m == -idx[j].m;
      const double expect = pair ? parity(idx[i].m) : 0.0;
      dev(std::abs(inner_plain(grid, fields[i], fields[j]) - expect), 1e-12, "plain pairing " + t);
    }

  std::mt19937_64 rng(20240501);
  std::uniform_real_distribution<double> lam(0.0, 2 * M_PI), mu(-0.999, 0.999);
  for (const auto& h : idx)
    for (int k = 0; k < 8; ++k) {
      const double x = lam(rng), y = mu(rng);
      const auto lhs = std::conj(ylm_eval(h, x, y));
      const auto rhs = static_cast<double>(parity(h.m)) * ylm_eval({h.l, -h.m}, x, y);
      dev(std::abs(lhs - rhs), 1e-12, "conjugation " + tuple_str({h.l, h.m}));
    }

  const auto mu_f = mu_field(grid);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto b = poisson_bracket(mu_f, fields[i]);
    const auto self = poisson_bracket(fields[i], fields[i]);
    double d1 = 0, d2 = 0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      d1 = std::max(d1, std::abs(b.value[k] + std::complex<double>(0, idx[i].m) * fields[i].value[k]));
      d2 = std::max(d2, std::abs(self.value[k]));
    }
    dev(d1, 1e-10, "{mu,Y} " + tuple_str({idx[i].l, idx[i].m}));
    dev(d2, 1e-12, "{Y,Y} " + tuple_str({idx[i].l, idx[i].m}));
  }
  return r;
}

SuiteResult check_oracle_structure(int lmax) {
  using namespace oracle;
  SuiteResult r = make_result("oracle-structure", lmax);
  const QuadratureGrid grid(lmax);
  std::vector<HarmonicIndex> idx;
  std::vector<GridFunction> fields;
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) {
      idx.push_back({l, m});
      fields.push_back(ylm_field(grid, {l, m}));
    }
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const auto bracket = poisson_bracket(fields[i], fields[j]);
      for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto [l1, m1] = idx[i];
        const auto [l2, m2] = idx[j];
        const auto [l3, m3] = idx[k];
        const auto projected = inner_conj(grid, bracket, fields[k]);
        // G = -i (-1)^m3 g^{l3,-m3}
        const double g = g_real(l1, m1, l2, m2, l3, -m3).to_double();
        const std::complex<double> expect(0.0, -parity(m3) * g);
        const double d = std::abs(projected - expect);
        r.max_dev = std::max(r.max_dev, d);
        r.check(d <= 1e-9, "G " + tuple_str({l1, m1, l2, m2, l3, m3}) + " deviation " +
                               std::to_string(d));
      }
    }
  return r;
}

SuiteResult check_oracle_mc(int lmax) {
  using namespace oracle;
  SuiteResult r = make_result("oracle-mc", lmax);
  const QuadratureGrid grid(lmax);
  const int top = std::min(lmax, 4);
  auto dev = [&](double exact, double approx, const std::string& what) {
    const double d = std::abs(exact - approx) / std::max(1.0, std::abs(exact));
    r.max_dev = std::max(r.max_dev, d);
    r.check(d <= 1e-9, what + " deviation " + std::to_string(d));
  };
  for (int l1 = 1; l1 <= top; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 1; l2 <= top; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2) {
          const std::vector<std::pair<complex, HarmonicIndex>> g{{1.0, {l2, m2}}};
          dev(mc_flat({l1, m1}, {l2, m2}).value(), oracle_mc(grid, {l1, m1}, g),
              "MC " + tuple_str({l1, m1, l2, m2}));
        }
  if (lmax < 4) return r;
  // Decoupling of a linear combination with distinct orders.
  const HarmonicIndex a{3, 2}, base{2, -2};
  const std::vector<std::pair<ComplexRational, HarmonicIndex>> pert{
      {{BigRational(1, 2), BigRational(-1, 3)}, {3, -1}}, {{BigRational(2), BigRational(0)}, {4, 1}}};
  std::vector<std::pair<complex, HarmonicIndex>> g{{1.0, base}};
  for (const auto& [x, h] : pert) g.push_back({{x.re.get_d(), x.im.get_d()}, h});
  dev(mc_combination(a, base, pert).value(), oracle_mc(grid, a, g), "combination");
  return r;
}

SuiteResult check_vanishing(int lmax) {
  SuiteResult r = make_result("vanishing", lmax);
  for (int l = 1; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m)
      for (int m2 = -1; m2 <= 1; ++m2) {
        r.check(sgn(mc_flat({l, m}, {1, m2}).flat) == 0, "MC(e_lm, e_1m2) " + tuple_str({l, m, m2}));
        r.check(sgn(mc_flat({1, m2}, {l, m}).flat) <= 0, "MC(e_1m1, e_lm) " + tuple_str({m2, l, m}));
      }
  return r;
}

SuiteResult check_negate_symmetry(int lmax) {
  SuiteResult r = make_result("negate-symmetry", lmax);
  for (int l1 = 1; l1 <= lmax; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int l2 = 1; l2 <= lmax; ++l2)
        for (int m2 = -l2; m2 <= l2; ++m2)
          r.check(mc_symmetry_negate({l1, m1}, {l2, m2}), "negate " + tuple_str({l1, m1, l2, m2}));
  return r;
}

SuiteResult check_theorem(int lmax) {
  SuiteResult r = make_result("theorem", lmax);
  const auto rep = theorem_scan(lmax);
  r.checks = rep.part_i_checks + rep.part_ii_checks + rep.zonal_checks + rep.chain_checks;
  r.failures = static_cast<long>(rep.falsifications.size() + rep.zonal_violations.size() +
                                 rep.chain_violations.size());
  for (const auto& f : rep.falsifications)
    if (r.messages.size() < kMaxMessages)
      r.messages.push_back("nonpositive MC" + tuple_str({f.a.l, f.a.m, f.b.l, f.b.m}) + " = " +
                           f.flat.get_str() + "/pi");
  for (const auto& f : rep.zonal_violations)
    if (r.messages.size() < kMaxMessages)
      r.messages.push_back("positive zonal MC" + tuple_str({f.a.l, f.a.m, f.b.l, f.b.m}));
  for (const auto& m : rep.chain_violations)
    if (r.messages.size() < kMaxMessages) r.messages.push_back("chain " + m);
  r.messages.push_back("extended range (not asserted): " + std::to_string(rep.extended_positive) +
                       " of " + std::to_string(rep.extended_checks) + " positive");
  return r;
}

SuiteResult check_table_reproduction() {
  SuiteResult r = make_result("table", 7);
  for (const auto& p : published_table()) {
    const auto c = critical_ratio(p.l1, p.l2, p.m2);
    const auto t = tuple_str({p.l1, p.l2, p.m2});
    if (c.status != CellStatus::ok) {
      r.check(false, "cell " + t + " is " + to_string(c.status));
      continue;
    }
    const double rel = std::abs(*c.ratio - p.value) / std::abs(p.value);
    r.max_dev = std::max(r.max_dev, rel);
    r.check(rel <= 5e-3, "cell " + t + " = " + std::to_string(*c.ratio) + " vs " +
                             std::to_string(p.value));
    r.check(c.direction == (p.red ? "<" : ">"), "direction " + t);
    r.check((*c.ratio < 0) == (p.value < 0), "sign " + t);
  }
  for (const auto& [l1, l2] : published_zero_rows())
    for (int m2 = 1; m2 <= l2; ++m2)
      r.check(critical_ratio(l1, l2, m2).status == CellStatus::undefined,
              "zero cell " + tuple_str({l1, l2, m2}));
  for (int l1 : {3, 5, 7}) {
    const auto table = critical_table(l1, 6);
    for (const auto& c : table.cells)
      if (c.m2 > c.l2)
        r.check(c.status == CellStatus::not_applicable, "blank cell " + tuple_str({l1, c.l2, c.m2}));
  }
  for (int l1 : {2, 4, 6})
    for (const auto& c : critical_table(l1, 6).cells)
      if (c.m2 <= c.l2)
        r.check(c.status == CellStatus::undefined, "even l1 cell " + tuple_str({l1, c.l2, c.m2}));
  return r;
}

SuiteResult check_coriolis_boundary() {
  SuiteResult r = make_result("coriolis", 7);
  for (const auto& p : published_table()) {
    const HarmonicIndex a{p.l1, 0}, b{p.l2, p.m2};
    const auto t = tuple_str({p.l1, p.l2, p.m2});
    const auto r0 = mc_coriolis(a, b, BigRational(0));
    const auto r1 = mc_coriolis(a, b, BigRational(1));
    const auto r2 = mc_coriolis(a, b, BigRational(2));
    // Equal static parts and a common slope make the value affine in a.
    const bool affine = r0.flat == r1.flat && r1.flat == r2.flat && r0.delta == r1.delta &&
                        r1.delta == r2.delta && r0.slope == r1.slope && r1.slope == r2.slope &&
                        !r0.slope.is_zero();
    r.check(affine, "affinity " + t);
    const double v0 = r0.value(), v1 = r1.value(), v2 = r2.value();
    r.check(std::abs((v2 - v1) - (v1 - v0)) <= 1e-12 * std::max({1.0, std::abs(v0), std::abs(v2)}),
            "collinear " + t);

    const auto c = critical_ratio(p.l1, p.l2, p.m2);
    const BigRational above = rational_from_double(*c.ratio * (1 + 1e-6));
    const BigRational below = rational_from_double(*c.ratio * (1 - 1e-6));
    // The larger rotation satisfies ">" cells, the smaller one "<" cells.
    const bool ratio_positive = *c.ratio > 0;
    const BigRational& larger = ratio_positive ? above : below;
    const BigRational& smaller = ratio_positive ? below : above;
    const auto& inside = c.direction == ">" ? larger : smaller;
    const auto& outside = c.direction == ">" ? smaller : larger;
    r.check(mc_coriolis(a, b, inside).sign() > 0, "positive side " + t);
    r.check(mc_coriolis(a, b, outside).sign() < 0, "negative side " + t);
  }
  return r;
}

SuiteResult check_rhw_identities() {
  SuiteResult r = make_result("rhw", 5);
  const std::vector<HarmonicIndex> waves{{3, 2}, {5, 3}, {4, -1}, {6, 5}};
  const std::vector<BigRational> Ks{BigRational(0), BigRational(1, 2), BigRational(2), BigRational(7)};
  const std::vector<BigRational> Cs{BigRational(1), BigRational(-3, 2), BigRational(5, 7)};
  const std::vector<ComplexRational> As{{BigRational(1), BigRational(0)},
                                        {BigRational(2, 3), BigRational(-5, 4)}};
  for (const auto& w : waves)
    for (const auto& K : Ks)
      for (const auto& C : Cs)
        for (const auto& A : As)
          for (int m2 : {-1, 1}) {
            RHWave wave{A, C, w, BigRational(0), BigRational(0), -K * C};
            const auto rep = rhw_mc(wave, {1, m2});
            const std::string t = "wave" + tuple_str({w.l, w.m, m2}) + " K=" + K.get_str() +
                                  " C=" + C.get_str();
            r.check(sgn(rep.plain_over_pi()) == 0 && rep.extended_rational() == K * C * C,
                    "KC^2 " + t);
          }
  for (const auto& w : waves)
    for (int l2 = 2; l2 <= 5; ++l2)
      for (int m2 = -l2; m2 <= l2; ++m2) {
        if (w == HarmonicIndex{l2, m2}) continue;
        const BigRational K(3, 2), C(-2);
        const RHWave rot{{BigRational(1), BigRational(1)}, C, w, 0, 0, -K * C};
        const auto rep = rhw_mc(rot, {l2, m2});
        r.check(rep.extended_rational() - rep.plain_rational() == K * m2 * m2 * C * C,
                "excess " + tuple_str({w.l, w.m, l2, m2}));
      }
  for (const auto& [l1, m1, m] : {std::tuple{3, 2, 2}, {5, 3, 2}, {5, 3, 3}})
    for (const auto& K : {BigRational(0), BigRational(1), BigRational(3, 2)})
      for (const auto& C : {BigRational(1), BigRational(-2)}) {
        const auto th = rhw_threshold(l1, m1, m, K);
        const std::string t = tuple_str({l1, m1, m}) + " K=" + K.get_str();
        r.check(th.value > 0, "threshold positive " + t);
        for (const double eps : {1e-6, -1e-6}) {
          const double amp = std::sqrt(th.value * (1 + eps)) * std::abs(C.get_d());
          RHWave wave{{rational_from_double(amp), BigRational(0)}, C, {l1, m1}, 0, 0, -K * C};
          const auto rep = rhw_mc(wave, {m, -m});
          r.check(rep.extended_sign() == (eps > 0 ? 1 : -1),
                  std::string(eps > 0 ? "above " : "below ") + t);
        }
      }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"wigner", "structure", "oracle", "theorem", "table"};
  return names;
}

int default_lmax(const std::string& suite) {
  if (suite == "oracle") return 6;
  if (suite == "table") return 7;
  return 12;
}

SuiteResult run_suite(const std::string& suite, std::optional<int> lmax) {
  const int L = lmax.value_or(default_lmax(suite));
  if (L < 0) throw std::invalid_argument("lmax must be nonnegative");
  SuiteResult r = make_result(suite, L);
  if (suite == "wigner") {
    for (const auto& part : {check_threej_selection(L), check_threej_symmetries(L),
                             check_closed_forms(L), check_orthogonality(L)})
      r.merge(part);
  } else if (suite == "structure") {
    for (const auto& part : {check_structure_symmetries(L), check_structure_zeros(L),
                             check_bracket_antisymmetry(L)})
      r.merge(part);
  } else if (suite == "oracle") {
    for (const auto& part :
         {check_oracle_harmonics(L), check_oracle_structure(L), check_oracle_mc(L)})
      r.merge(part);
  } else if (suite == "theorem") {
    if (L < 3) throw std::invalid_argument("the theorem suite needs lmax >= 3");
    for (const auto& part : {check_theorem(L), check_vanishing(L), check_negate_symmetry(L),
                             check_rhw_identities()})
      r.merge(part);
  } else if (suite == "table") {
    for (const auto& part : {check_table_reproduction(), check_coriolis_boundary()}) r.merge(part);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return r;
}

std::string suite_json(const SuiteResult& r) {
  nlohmann::json j;
  j["suite"] = r.name;
  j["lmax"] = r.lmax;
  j["checks"] = r.checks;
  j["failures"] = r.failures;
  j["max_dev"] = r.max_dev;
  j["ok"] = r.ok();
  j["messages"] = r.messages;
  return j.dump();
}

}  // namespace sphmc
