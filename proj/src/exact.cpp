#include "sphmc/exact.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace sphmc {

namespace {

constexpr mpfr_prec_t kWorkingPrecision = 256;

/// RAII wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = kWorkingPrecision) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

double checked(double d) {
  if (!std::isfinite(d)) throw std::overflow_error("value exceeds double range");
  return d;
}

}  // namespace

const BigInt& factorial(unsigned n) {
  // std::deque keeps references stable across push_back.
  static std::deque<BigInt> table{BigInt(1)};
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (n < table.size()) return table[n];
  }
  std::unique_lock lock(mutex);
  while (table.size() <= n) {
    const auto k = static_cast<unsigned long>(table.size());
    table.push_back(table.back() * k);
  }
  return table[n];
}

BigRational rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  q.canonicalize();
  return q;
}

BigRational parse_rational(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigRational num = parse_rational(text.substr(0, slash));
    const BigRational den = parse_rational(text.substr(slash + 1));
    if (den == 0 || num.get_den() != 1 || den.get_den() != 1) throw fail();
    BigRational q = num / den;
    q.canonicalize();
    return q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  std::string digits;
  long scale = 0;  // value = digits * 10^scale
  bool seen_digit = false, seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) exp_negative = text[i++] == '-';
    if (i == text.size()) throw fail();
    long exponent = 0;
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])) || exponent > 100000) throw fail();
      exponent = exponent * 10 + (text[i] - '0');
    }
    scale += exp_negative ? -exponent : exponent;
  }

  BigInt mantissa(digits);
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  BigRational q = scale >= 0 ? BigRational(mantissa * power) : BigRational(mantissa, power);
  q.canonicalize();
  return negative ? BigRational(-q) : q;
}

BigRational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  BigRational q(x);  // mpq_set_d is exact
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

double to_double(const BigRational& q) {
  Mpfr x(53);
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  return checked(mpfr_get_d(x.get(), MPFR_RNDN));
}

double to_double_times_pi(const BigRational& q, int twice_pi_power) {
  Mpfr x, pi;
  mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  switch (twice_pi_power) {
    case 0:
      break;
    case 2:
      mpfr_mul(x.get(), x.get(), pi.get(), MPFR_RNDN);
      break;
    case -2:
      mpfr_div(x.get(), x.get(), pi.get(), MPFR_RNDN);
      break;
    case -1:
      mpfr_sqrt(pi.get(), pi.get(), MPFR_RNDN);
      mpfr_div(x.get(), x.get(), pi.get(), MPFR_RNDN);
      break;
    case 1:
      mpfr_sqrt(pi.get(), pi.get(), MPFR_RNDN);
      mpfr_mul(x.get(), x.get(), pi.get(), MPFR_RNDN);
      break;
    default:
      throw std::invalid_argument("unsupported power of pi");
  }
  return checked(mpfr_get_d(x.get(), MPFR_RNDN));
}

int sign_of(const BigRational& q) {
  const int s = sgn(q);
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

SignedSqrtRational::SignedSqrtRational(int sign, BigRational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
  radicand_.canonicalize();
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("sign must be -1, 0 or +1");
  if (radicand_ < 0) throw std::invalid_argument("negative radicand");
  if ((sign_ == 0) != (radicand_ == 0))
    throw std::invalid_argument("sign is zero exactly when the radicand is zero");
}

SignedSqrtRational SignedSqrtRational::from_rational(const BigRational& q) {
  return {sign_of(q), BigRational(q * q)};
}

SignedSqrtRational SignedSqrtRational::sqrt_of(const BigRational& q) {
  return {sign_of(q), q};
}

SignedSqrtRational SignedSqrtRational::operator-() const {
  SignedSqrtRational r = *this;
  r.sign_ = -r.sign_;
  return r;
}

SignedSqrtRational operator*(const SignedSqrtRational& a, const SignedSqrtRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.sign_ * b.sign_, BigRational(a.radicand_ * b.radicand_)};
}

SignedSqrtRational& SignedSqrtRational::operator*=(const SignedSqrtRational& b) {
  *this = *this * b;
  return *this;
}

bool operator==(const SignedSqrtRational& a, const SignedSqrtRational& b) {
  return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
}

double SignedSqrtRational::to_double() const { return to_double_times_pi(0); }

double SignedSqrtRational::to_double_times_pi(int twice_pi_power) const {
  if (is_zero()) return 0.0;
  Mpfr x, pi;
  mpfr_set_q(x.get(), radicand_.get_mpq_t(), MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  // sqrt(r) * pi^(t/2) = sqrt(r * pi^t)
  switch (twice_pi_power) {
    case 0:
      break;
    case -1:
      mpfr_div(x.get(), x.get(), pi.get(), MPFR_RNDN);
      break;
    case 1:
      mpfr_mul(x.get(), x.get(), pi.get(), MPFR_RNDN);
      break;
    default:
      throw std::invalid_argument("unsupported power of pi");
  }
  mpfr_sqrt(x.get(), x.get(), MPFR_RNDN);
  if (sign_ < 0) mpfr_neg(x.get(), x.get(), MPFR_RNDN);
  return checked(mpfr_get_d(x.get(), MPFR_RNDN));
}

bool SignedSqrtRational::is_rational() const {
  return mpz_perfect_square_p(radicand_.get_num_mpz_t()) &&
         mpz_perfect_square_p(radicand_.get_den_mpz_t());
}

BigRational SignedSqrtRational::as_rational() const {
  if (!is_rational()) throw std::domain_error("radicand is not a perfect square");
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), radicand_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), radicand_.get_den_mpz_t());
  BigRational q(num * sign_, den);
  q.canonicalize();
  return q;
}

std::string SignedSqrtRational::to_string() const {
  if (is_zero()) return "0";
  const std::string s = sign_ < 0 ? "-" : "+";
  if (is_rational()) return as_rational().get_str();
  return s + "sqrt(" + radicand_.get_str() + ")";
}

double sum_to_double(std::span<const PiTerm> terms) {
  Mpfr total, term, pi, root_pi;
  mpfr_set_zero(total.get(), 1);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_sqrt(root_pi.get(), pi.get(), MPFR_RNDN);
  for (const auto& t : terms) {
    if (t.root.is_zero() || sgn(t.coefficient) == 0) continue;
    mpfr_set_q(term.get(), t.root.radicand().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(term.get(), term.get(), MPFR_RNDN);
    if (t.root.sign() < 0) mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    Mpfr q;
    mpfr_set_q(q.get(), t.coefficient.get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), q.get(), MPFR_RNDN);
    switch (t.twice_pi_power) {
      case -2: mpfr_div(term.get(), term.get(), pi.get(), MPFR_RNDN); break;
      case -1: mpfr_div(term.get(), term.get(), root_pi.get(), MPFR_RNDN); break;
      case 0: break;
      case 1: mpfr_mul(term.get(), term.get(), root_pi.get(), MPFR_RNDN); break;
      case 2: mpfr_mul(term.get(), term.get(), pi.get(), MPFR_RNDN); break;
      default: throw std::invalid_argument("unsupported power of pi");
    }
    mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
  }
  return checked(mpfr_get_d(total.get(), MPFR_RNDN));
}

SignedSqrtRational ssr_mul(const SignedSqrtRational& a, const SignedSqrtRational& b) {
  return a * b;
}

double ssr_to_float(const SignedSqrtRational& a) { return a.to_double(); }

}  // namespace sphmc
