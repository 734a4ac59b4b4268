#include <cmath>

#include "doctest.h"
#include "sphmc/misiolek.hpp"
#include "sphmc/oracle.hpp"

using namespace sphmc;

namespace {

double oracle_value(const HarmonicIndex& a, const HarmonicIndex& b) {
  const oracle::QuadratureGrid grid(std::max(a.l, b.l));
  const std::vector<std::pair<oracle::complex, HarmonicIndex>> g{{1.0, b}};
  return oracle::oracle_mc(grid, a, g);
}

}  // namespace

TEST_CASE("flat criterion agrees with quadrature") {
  for (auto [a, b] : std::vector<std::pair<HarmonicIndex, HarmonicIndex>>{
           {{3, 2}, {2, -2}}, {{5, 1}, {4, 1}}, {{4, 0}, {3, 2}}, {{6, 3}, {3, -3}}, {{2, 1}, {5, -1}}}) {
    const auto r = mc_flat(a, b);
    CHECK(r.consistent());
    CHECK(r.value() == doctest::Approx(oracle_value(a, b)).epsilon(1e-11));
  }
}

TEST_CASE("flat criterion structure") {
  const auto r = mc_flat({3, 2}, {2, -2});
  CHECK(r.sign() == 1);
  CHECK(r.delta == 0);
  CHECK_FALSE(r.rotating);
  REQUIRE(r.terms().size() == 2);
  CHECK(r.terms()[0].twice_pi_power == -2);
  CHECK(r.terms()[1].coefficient == 0);
  CHECK(mc_coriolis({3, 2}, {2, -2}, BigRational(1)).terms().size() == 3);
  for (const auto& s : r.summands) CHECK(s.weight == 12 - s.l3 * (s.l3 + 1));
  CHECK_THROWS_AS(mc_flat({0, 0}, {2, 1}), std::invalid_argument);
}

TEST_CASE("probes of degree one give zero") {
  for (int l1 = 1; l1 <= 6; ++l1)
    for (int m1 = -l1; m1 <= l1; ++m1)
      for (int m2 = -1; m2 <= 1; ++m2) {
        const auto r = mc_flat({l1, m1}, {1, m2});
        CHECK(r.flat == 0);
        CHECK(r.sign() == 0);
      }
  for (int l2 = 1; l2 <= 6; ++l2)
    for (int m2 = -l2; m2 <= l2; ++m2)
      CHECK(mc_flat({1, 0}, {l2, m2}).sign() <= 0);
}

TEST_CASE("negating every order preserves the criterion") {
  CHECK(mc_symmetry_negate({4, 3}, {3, -1}));
  CHECK(mc_symmetry_negate({2, 0}, {5, 4}));
}

TEST_CASE("decoupling over distinct orders") {
  const std::vector<std::pair<ComplexRational, HarmonicIndex>> pert{
      {{BigRational(1, 2), BigRational(1)}, {3, 1}}, {{BigRational(2), BigRational(0)}, {4, 0}}};
  const auto r = mc_combination({3, 2}, {2, -2}, pert);
  const BigRational expect = mc_flat({3, 2}, {2, -2}).flat + BigRational(5, 4) * mc_flat({3, 2}, {3, 1}).flat +
                             4 * mc_flat({3, 2}, {4, 0}).flat;
  CHECK(r.flat == expect);
  CHECK(r.consistent());

  const oracle::QuadratureGrid grid(4);
  const std::vector<std::pair<oracle::complex, HarmonicIndex>> g{
      {1.0, {2, -2}}, {{0.5, 1.0}, {3, 1}}, {2.0, {4, 0}}};
  CHECK(r.value() == doctest::Approx(oracle::oracle_mc(grid, {3, 2}, g)).epsilon(1e-11));

  const std::vector<std::pair<ComplexRational, HarmonicIndex>> clash{
      {{BigRational(1), BigRational(0)}, {4, -2}}};
  CHECK_THROWS_AS(mc_combination({3, 2}, {2, -2}, clash), HypothesisError);
}

TEST_CASE("a large enough perturbation flips the sign") {
  const auto base = mc_flat({3, 2}, {2, -2}).flat;
  const auto pert = mc_flat({3, 2}, {3, 0}).flat;
  REQUIRE(pert < 0);
  const double limit = std::sqrt(BigRational(-base / pert).get_d());
  for (double f : {1 - 1e-6, 1 + 1e-6}) {
    const ComplexRational x{rational_from_double(limit * f), BigRational(0)};
    CHECK(mc_combination({3, 2}, {2, -2}, {{x, {3, 0}}}).sign() == (f < 1 ? 1 : -1));
  }
}

TEST_CASE("Coriolis term is affine in the rotation") {
  const HarmonicIndex a{3, 0}, b{2, 1};
  const auto r0 = mc_coriolis(a, b, BigRational(0));
  const auto r1 = mc_coriolis(a, b, BigRational(1));
  const auto r7 = mc_coriolis(a, b, BigRational(7, 3));
  CHECK(r0.slope == r1.slope);
  CHECK(r7.value() == doctest::Approx(r0.value() + BigRational(7, 3).get_d() * (r1.value() - r0.value())));
  CHECK(r0.value() == doctest::Approx(mc_flat(a, b).value()));
}

TEST_CASE("Coriolis boundary for the e_30 flow") {
  CHECK(mc_coriolis({3, 0}, {2, 1}, 2.98).sign() == -1);
  CHECK(mc_coriolis({3, 0}, {2, 1}, 2.99).sign() == 1);
}

TEST_CASE("diagonal Coriolis correction") {
  const auto r = mc_coriolis({3, 2}, {3, 2}, BigRational(0));
  CHECK(r.delta == -4);
  CHECK(mc_coriolis({3, 2}, {4, 2}, BigRational(0)).delta == 0);
}

TEST_CASE("critical ratios") {
  const auto c = critical_ratio(3, 2, 1);
  CHECK(c.status == CellStatus::ok);
  CHECK(c.direction == ">");
  CHECK(*c.ratio == doctest::Approx(2.9850).epsilon(2e-4));
  const auto d = critical_ratio(3, 2, 2);
  CHECK(d.direction == "<");
  CHECK(*d.ratio == doctest::Approx(-19.40).epsilon(5e-4));

  // The flat value plus the ratio times the slope vanishes.
  CHECK(mc_coriolis({3, 0}, {2, 1}, *c.ratio).value() == doctest::Approx(0.0).scale(1.0));

  CHECK(critical_ratio(3, 2, 3).status == CellStatus::not_applicable);
  CHECK(critical_ratio(4, 2, 1).status == CellStatus::undefined);
  CHECK(critical_ratio(4, 2, 1).reason == "parity");
  CHECK(critical_ratio(5, 1, 1).reason == "triangle");
  CHECK_THROWS_AS(critical_ratio(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(critical_ratio(0, 2, 1), std::invalid_argument);
}

TEST_CASE("degree-one zonal flows") {
  for (int l2 = 1; l2 <= 6; ++l2)
    for (int m2 = 1; m2 <= l2; ++m2) {
      const auto c = critical_ratio(1, l2, m2);
      REQUIRE(c.status == CellStatus::ok);
      CHECK(*c.ratio == doctest::Approx(std::sqrt(3 / (4 * M_PI)) * (l2 * (l2 + 1) - 2)).scale(1.0));
    }
}

TEST_CASE("critical tables") {
  const auto even = critical_table(4, 5);
  CHECK(even.cells.size() == 25);
  for (const auto& c : even.cells) CHECK(c.status != CellStatus::ok);

  const auto t = critical_table(3, 5);
  int ok = 0;
  for (const auto& c : t.cells) ok += c.status == CellStatus::ok;
  CHECK(ok == 14);
  CHECK(t.at(2, 1).ratio == critical_ratio(3, 2, 1).ratio);
  CHECK_THROWS(t.at(6, 1));
}

TEST_CASE("Rossby-Haurwitz dispersion relation") {
  const auto w = RHWave::solution({BigRational(1), BigRational(0)}, BigRational(2), {3, 2},
                                  BigRational(1, 2), BigRational(-3));
  CHECK(w.residual() == 0);
  CHECK(w.omega == BigRational(12 * 2 - 4 - 3) / BigRational(25, 2));
}

TEST_CASE("Rossby-Haurwitz criterion") {
  // Degree-one probe: only the Coriolis and zonal parts survive.
  for (int K : {0, 1, 2, 5})
    for (int m2 : {-1, 1}) {
      const RHWave w{{BigRational(3), BigRational(-1)}, BigRational(2), {3, 2}, 0, 0, BigRational(-K * 2)};
      const auto r = rhw_mc(w, {1, m2});
      CHECK(r.plain_over_pi() == 0);
      CHECK(r.extended_rational() == K * 4);
    }
  // Zonal part alone.
  const RHWave zonal{{}, BigRational(1), {3, 2}, 0, 0, 0};
  CHECK(rhw_mc(zonal, {4, 2}).plain_rational() == -72);
  CHECK(rhw_mc(zonal, {4, 2}).plain_sign() == -1);
  // Wave part alone reduces to the flat criterion.
  const RHWave wave{{BigRational(1), BigRational(1)}, 0, {3, 2}, 0, 0, 0};
  CHECK(rhw_mc(wave, {2, -2}).plain_over_pi() == 2 * mc_flat({3, 2}, {2, -2}).flat);

  const RHWave zonal_wave{{BigRational(1), BigRational(0)}, BigRational(1), {3, 0}, 0, 0, 0};
  CHECK_THROWS_AS(rhw_mc(zonal_wave, {2, 1}), HypothesisError);
}

TEST_CASE("Rossby-Haurwitz amplitude threshold") {
  const auto t = rhw_threshold(3, 2, 2, BigRational(0));
  const BigRational flat = mc_flat({3, 2}, {2, -2}).flat;
  CHECK(t.value == doctest::Approx(M_PI * 4 * 4 / flat.get_d()));
  for (double f : {1 - 1e-6, 1 + 1e-6}) {
    const RHWave w{{rational_from_double(std::sqrt(t.value * f)), BigRational(0)}, BigRational(1), {3, 2}, 0, 0, 0};
    CHECK(rhw_mc(w, {2, -2}).plain_sign() == (f > 1 ? 1 : -1));
  }
  CHECK_THROWS_AS(rhw_threshold(3, 2, 3, BigRational(0)), HypothesisError);
  CHECK_THROWS_AS(rhw_threshold(3, 1, 1, BigRational(0)), HypothesisError);
  CHECK(rhw_threshold(5, 3, 3, BigRational(1)).value > 0);
}

TEST_CASE("conjugate time") {
  CHECK(conjugate_time(1.0, M_PI * M_PI) == doctest::Approx(1.0));
  CHECK(conjugate_time(4.0, 1.0) == doctest::Approx(M_PI / 2));
  CHECK_THROWS_AS(conjugate_time(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(conjugate_time(1.0, -2.0), std::invalid_argument);
  CHECK(harmonic_norm_squared({3, 1}) == 12);
}

TEST_CASE("positivity theorem on small degrees") {
  const auto r = theorem_scan(6);
  CHECK(r.ok());
  CHECK(r.part_i_checks > 0);
  CHECK(r.part_ii_checks > 0);
  CHECK(r.chain_checks > 0);
  CHECK_THROWS_AS(theorem_scan(2), std::invalid_argument);
}
