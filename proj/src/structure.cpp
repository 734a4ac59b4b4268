#include "sphmc/structure.hpp"

#include <cstdlib>
#include <stdexcept>

#include "sphmc/wigner.hpp"

namespace sphmc {

HarmonicIndex HarmonicIndex::make(int l, int m) {
  HarmonicIndex idx{l, m};
  if (!idx.valid())
    throw std::invalid_argument("invalid harmonic index (l=" + std::to_string(l) +
                                ", m=" + std::to_string(m) + ")");
  return idx;
}

bool HarmonicIndex::valid() const { return l >= 0 && std::abs(m) <= l; }

std::string to_string(const HarmonicIndex& idx) {
  return "(" + std::to_string(idx.l) + "," + std::to_string(idx.m) + ")";
}

SignedSqrtRational l123(int l1, int l2, int l3) {
  if (l1 < 1 || l2 < 1 || l3 < 0) throw std::invalid_argument("l123 requires l1, l2 >= 1");
  const long a = l1, b = l2, c = l3;
  const BigInt product = BigInt((2 * a + 1) * (2 * b + 1) * (2 * c + 1)) * BigInt(a * (a + 1)) *
                         BigInt(b * (b + 1));
  return SignedSqrtRational::sqrt_of(BigRational(product));
}

StructureConstant g_real(int l1, int m1, int l2, int m2, int l3, int m3) {
  StructureConstant g{{l3, m3}, {l1, m1}, {l2, m2}, SignedSqrtRational::zero()};
  if (!g.upper.valid() || !g.lower1.valid() || !g.lower2.valid()) return g;
  if (l1 < 1 || l2 < 1) return g;  // the skew gradient of a constant vanishes
  if ((l1 + l2 + l3) % 2 == 0 || m1 + m2 + m3 != 0 || !triangle(l1, l2, l3)) return g;

  static const SignedSqrtRational minus_half(-1, BigRational(1, 4));
  g.reduced = minus_half * l123(l1, l2, l3) * threej(l1, l2, l3, m1, m2, m3) *
              threej(l1, l2, l3, 1, -1, 0);
  return g;
}

BracketExpansion bracket_expand(const HarmonicIndex& a, const HarmonicIndex& b) {
  if (!a.valid() || !b.valid()) throw std::invalid_argument("invalid harmonic index");
  BracketExpansion out{a, b, a.m + b.m, {}};
  if (a.l == 0 || b.l == 0) return out;
  const int phase = (out.m3 % 2 == 0) ? 1 : -1;
  for (int l3 = std::abs(a.l - b.l) + 1; l3 <= a.l + b.l - 1; ++l3) {
    const auto g = g_real(a.l, a.m, b.l, b.m, l3, -out.m3);
    if (!g.is_zero()) out.terms.emplace(l3, BracketTerm{l3, phase, g.reduced});
  }
  return out;
}

SymmetryReport validate_symmetries(int l_max) {
  if (l_max < 0) throw std::invalid_argument("l_max must be nonnegative");
  SymmetryReport report;
  auto record = [&](bool ok, const char* what, int l1, int m1, int l2, int m2, int l3, int m3) {
    ++report.checks;
    if (ok) return;
    ++report.failures;
    if (report.failed.size() < 16)
      report.failed.push_back(std::string(what) + " l1=" + std::to_string(l1) +
                              " m1=" + std::to_string(m1) + " l2=" + std::to_string(l2) +
                              " m2=" + std::to_string(m2) + " l3=" + std::to_string(l3) +
                              " m3=" + std::to_string(m3));
  };

  for (int l1 = 0; l1 <= l_max; ++l1)
    for (int l2 = 0; l2 <= l_max; ++l2)
      for (int l3 = 0; l3 <= l_max; ++l3)
        for (int m1 = -l1; m1 <= l1; ++m1)
          for (int m2 = -l2; m2 <= l2; ++m2)
            for (int m3 = -l3; m3 <= l3; ++m3) {
              const auto g = g_real(l1, m1, l2, m2, l3, m3).reduced;
              const auto c1 = g_real(l3, m3, l1, m1, l2, m2).reduced;
              const auto c2 = g_real(l2, m2, l3, m3, l1, m1).reduced;
              const auto neg = g_real(l1, -m1, l2, -m2, l3, -m3).reduced;
              const auto swap = g_real(l2, m2, l1, m1, l3, m3).reduced;
              record(g == c1, "cyclic", l1, m1, l2, m2, l3, m3);
              record(g == c2, "cyclic2", l1, m1, l2, m2, l3, m3);
              record(neg == -g, "negate", l1, m1, l2, m2, l3, m3);
              record(swap == -g, "swap", l1, m1, l2, m2, l3, m3);
            }
  return report;
}

}  // namespace sphmc
