#include "sphmc/wigner.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sphmc {

namespace {

int parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

const BigInt& fact(long n) {
  if (n < 0) throw std::logic_error("factorial of a negative argument");
  return factorial(static_cast<unsigned>(n));
}

}  // namespace

ThreeJArgs::ThreeJArgs(int l1_, int l2_, int l3_, int m1_, int m2_, int m3_)
    : l1(l1_), l2(l2_), l3(l3_), m1(m1_), m2(m2_), m3(m3_) {
  if (l1 < 0 || l2 < 0 || l3 < 0) throw std::invalid_argument("negative degree in 3j symbol");
  if (std::abs(m1) > l1 || std::abs(m2) > l2 || std::abs(m3) > l3)
    throw std::invalid_argument("order exceeds degree in 3j symbol");
}

ThreeJArgs ThreeJArgs::checked(int l1, int l2, int l3, int m1, int m2, int m3) {
  ThreeJArgs a;
  a.l1 = l1, a.l2 = l2, a.l3 = l3, a.m1 = m1, a.m2 = m2, a.m3 = m3;
  a.columns_valid_ = l1 >= 0 && l2 >= 0 && l3 >= 0 && std::abs(m1) <= l1 &&
                     std::abs(m2) <= l2 && std::abs(m3) <= l3;
  return a;
}

bool triangle(int a, int b, int c) { return std::abs(a - b) <= c && c <= a + b; }

bool ThreeJArgs::selection_rules_hold() const {
  return m1 + m2 + m3 == 0 && triangle(l1, l2, l3);
}

SignedSqrtRational threej(const ThreeJArgs& a) {
  if (!a.columns_valid() || !a.selection_rules_hold()) return SignedSqrtRational::zero();

  const long j1 = a.l1, j2 = a.l2, j3 = a.l3;
  const long m1 = a.m1, m2 = a.m2, m3 = a.m3;

  // Racah: sum over k of (-1)^k / [k! (A-k)! (B-k)! (C-k)! (D+k)! (E+k)!]
  const long A = j1 + j2 - j3, B = j1 - m1, C = j2 + m2;
  const long D = j3 - j2 + m1, E = j3 - j1 - m2;
  const long kmin = std::max({0L, -D, -E});
  const long kmax = std::min({A, B, C});
  if (kmin > kmax) return SignedSqrtRational::zero();

  // Horner over successive term ratios t_{k+1}/t_k, then scale by t_kmin.
  BigRational sum(1);
  for (long k = kmax - 1; k >= kmin; --k) {
    BigRational ratio(BigInt(-(A - k) * (B - k) * (C - k)),
                      BigInt((k + 1) * (D + k + 1) * (E + k + 1)));
    ratio.canonicalize();
    sum = 1 + ratio * sum;
  }
  const BigInt first_den =
      fact(kmin) * fact(A - kmin) * fact(B - kmin) * fact(C - kmin) * fact(D + kmin) * fact(E + kmin);
  sum /= first_den;
  if (kmin % 2 != 0) sum = -sum;
  if (sgn(sum) == 0) return SignedSqrtRational::zero();

  BigRational radicand(fact(j1 + j2 - j3) * fact(j1 - j2 + j3) * fact(-j1 + j2 + j3) *
                           fact(j1 + m1) * fact(j1 - m1) * fact(j2 + m2) * fact(j2 - m2) *
                           fact(j3 + m3) * fact(j3 - m3),
                       fact(j1 + j2 + j3 + 1));
  radicand.canonicalize();
  radicand *= sum * sum;
  return {parity_sign(j1 - j2 - m3) * sign_of(sum), radicand};
}

SignedSqrtRational threej(int l1, int l2, int l3, int m1, int m2, int m3) {
  return threej(ThreeJArgs::checked(l1, l2, l3, m1, m2, m3));
}

std::optional<SignedSqrtRational> threej_closed_stretched(int l1, int m, int l3, int m1) {
  if (l1 < 0 || m < 0 || l3 < 0 || std::abs(m1) > l1 || std::abs(m - m1) > l3 ||
      !triangle(l1, m, l3))
    return std::nullopt;
  const long L1 = l1, M = m, L3 = l3, M1 = m1;
  BigRational radicand(fact(2 * M) * fact(L1 + L3 - M) * fact(L3 - M1 + M) * fact(L1 + M1),
                       fact(L1 + L3 + M + 1) * fact(L1 - L3 + M) * fact(-L1 + L3 + M) *
                           fact(L3 + M1 - M) * fact(L1 - M1));
  radicand.canonicalize();
  return SignedSqrtRational(parity_sign(L1 - M1), radicand);
}

std::optional<SignedSqrtRational> threej_closed_110(int l1, int l2, int l3) {
  if (l1 < 1 || l2 < 1 || l3 < 0 || !triangle(l1, l2, l3) || (l1 + l2 + l3) % 2 == 0)
    return std::nullopt;
  const long L1 = l1, L2 = l2, L3 = l3;
  const long J = L1 + L2 + L3 + 1;
  const long h = J / 2;
  BigRational radicand(BigInt((J + 1) * (J - 2 * L3) * (J - 2 * L1) * (J - 2 * L2 - 1)),
                       BigInt(L1 * (L1 + 1) * L2 * (L2 + 1)));
  radicand.canonicalize();
  BigRational factorials(fact(J - 2 * L3) * fact(J - 2 * L1) * fact(J - 2 * L2 - 2), fact(J + 1));
  factorials.canonicalize();
  const BigInt outer_den = 2 * fact(h - L3) * fact(h - L1) * fact(h - L2 - 1);
  BigRational outer(fact(h), outer_den);
  outer.canonicalize();
  radicand *= factorials * outer * outer;
  return SignedSqrtRational(parity_sign(h), radicand);
}

std::optional<SignedSqrtRational> threej_recursive_112(int l1, int l2, int l3) {
  if (l1 < 1 || l2 < 1 || l3 < 2 || !triangle(l1, l2, l3) || (l1 + l2 + l3) % 2 == 0)
    return std::nullopt;
  const auto base = threej_closed_110(l2, l3, l1);
  if (!base) return std::nullopt;
  const long L1 = l1, L2 = l2, L3 = l3;
  const auto factor = SignedSqrtRational::from_rational(
      BigRational(parity_sign(L1 + L2 + L3) * (L1 - L2) * (L1 + L2 + 1)));
  BigRational inv(1, L1 * (L1 + 1) * (L3 * (L3 + 1) - 2));
  inv.canonicalize();
  return factor * SignedSqrtRational::sqrt_of(inv) * *base;
}

SignedSqrtRational clebsch_gordan(int l1, int m1, int l2, int m2, int l3, int m3) {
  const auto symbol = threej(ThreeJArgs::checked(l1, l2, l3, -m1, -m2, m3));
  if (symbol.is_zero() || l3 < 0) return SignedSqrtRational::zero();
  const auto scale = SignedSqrtRational(parity_sign(long{l3} + m3), BigRational(2 * l3 + 1));
  return scale * symbol;
}

}  // namespace sphmc
