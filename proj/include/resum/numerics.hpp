#pragma once

// Scalar arithmetic: exact rationals (GMP), arbitrary-precision binary
// floats (MPFR), Gamma-function ratios and the working-precision policy.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

namespace resum {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Build a canonical rational p/q.
BigRat make_rat(const BigInt& p, const BigInt& q = 1);
/// Parse "p/q" or "p"; the result is canonicalized.
BigRat parse_rat(const std::string& text);
std::string rat_to_string(const BigRat& r);

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

/// Arbitrary-precision real with an explicit precision in bits.
///
/// Binary operations round to the larger of the two operand precisions.
/// A default-constructed value is an exact zero at minimal precision, so it
/// never lowers the precision of anything it is combined with.
class BigFloat {
 public:
  using prec_t = mpfr_prec_t;

  BigFloat();
  BigFloat(long value, prec_t prec);
  BigFloat(double value, prec_t prec);
  BigFloat(const BigInt& value, prec_t prec);
  BigFloat(const BigRat& value, prec_t prec);
  static BigFloat from_string(const std::string& text, prec_t prec);
  static BigFloat zero(prec_t prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  prec_t precision() const { return mpfr_get_prec(v_); }
  /// Copy rounded (or widened) to the given precision.
  BigFloat with_precision(prec_t prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Binary exponent e with 0.5 <= |x| 2^-e < 1; zero maps to a large negative value.
  long exponent2() const;

  /// Decimal rendering with `digits` significant digits, round-half-even.
  std::string to_string(int digits) const;
  /// Decimal rendering with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }

  friend BigFloat operator*(const BigFloat& lhs, long rhs);
  friend BigFloat operator/(const BigFloat& lhs, long rhs);
  friend BigFloat operator*(const BigFloat& lhs, const BigRat& rhs);
  friend BigFloat operator+(const BigFloat& lhs, const BigRat& rhs);

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, long b);

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pow(const BigFloat& base, long exponent);
/// base^(p/q) for base > 0.
BigFloat pow(const BigFloat& base, const BigRat& exponent);
BigFloat round_to_integer(const BigFloat& x);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat const_pi(BigFloat::prec_t prec);
BigFloat const_euler(BigFloat::prec_t prec);
BigFloat ldexp(const BigFloat& x, long e);

/// Gamma(x); throws PoleError at non-positive integers.
BigFloat gamma(const BigFloat& x);
/// log|Gamma(x)| together with the sign of Gamma(x).
std::pair<BigFloat, int> lgamma_signed(const BigFloat& x);
/// Gamma(a) / (Gamma(b) Gamma(c)).
///
/// A pole of Gamma(b) or Gamma(c) with finite numerator gives an exact zero.
/// Evaluated through log-Gamma with sign tracking; when all three arguments
/// are integers the result is snapped to the nearest integer if it lies within
/// 2^-(prec-16) of it. Throws IndeterminateError when Gamma(a) and a
/// denominator factor are both at poles, PoleError when only Gamma(a) is.
BigFloat gamma_ratio(const BigFloat& a, const BigFloat& b, const BigFloat& c);

/// Exact value of Gamma(j + 1/2) / sqrt(pi) for any integer j.
BigRat half_gamma_over_sqrt_pi(long j);

/// Coefficient that is either exact or an arbitrary-precision float.
///
/// Arithmetic stays exact while both operands are exact; mixing with a float
/// promotes to the float's precision.
class Scalar {
 public:
  Scalar() : v_(BigRat(0)) {}
  Scalar(BigRat r) : v_(std::move(r)) {}  // NOLINT: implicit by design of the coefficient algebra
  Scalar(BigFloat f) : v_(std::move(f)) {}  // NOLINT
  Scalar(long v) : v_(BigRat(v)) {}  // NOLINT

  bool is_exact() const { return std::holds_alternative<BigRat>(v_); }
  const BigRat& rat() const { return std::get<BigRat>(v_); }
  const BigFloat& flt() const { return std::get<BigFloat>(v_); }
  bool is_zero() const;
  int sign() const;
  BigFloat to_float(BigFloat::prec_t prec) const;
  /// Float precision if inexact, else 0.
  BigFloat::prec_t precision() const;
  std::string to_string(int digits) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

 private:
  std::variant<BigRat, BigFloat> v_;
};

/// Working precision as a function of the truncation order.
struct PrecisionPolicy {
  long base_bits = 64;
  long per_order_bits = 12;
  bool guard_check = false;

  BigFloat::prec_t working_bits(long order) const;
  /// Default policy, honouring RESUM_PRECISION_BITS as a fixed override.
  static PrecisionPolicy from_env();
  long fixed_bits = 0;  ///< nonzero: ignore the order and use this many bits
};

/// Number of leading decimal digits on which two values agree (relative).
int agreeing_digits(const BigFloat& a, const BigFloat& b);

}  // namespace resum
