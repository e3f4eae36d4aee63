#include "resum/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "resum/errors.hpp"

namespace resum {

namespace {

using prec_t = BigFloat::prec_t;

prec_t clamp_prec(prec_t p) { return std::max<prec_t>(p, MPFR_PREC_MIN); }

}  // namespace

BigRat make_rat(const BigInt& p, const BigInt& q) {
  if (q == 0) throw DomainError("rational with zero denominator");
  BigRat r(p, q);
  r.canonicalize();
  return r;
}

BigRat parse_rat(const std::string& text) {
  BigRat r;
  if (r.set_str(text, 10) != 0) throw DomainError("cannot parse rational '" + text + "'");
  if (r.get_den() == 0) throw DomainError("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const BigRat& r) { return r.get_str(10); }

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

BigFloat::BigFloat() {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const BigInt& value, prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigRat& value, prec_t prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat BigFloat::from_string(const std::string& text, prec_t prec) {
  BigFloat r = zero(prec);
  if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0) {
    throw DomainError("cannot parse number '" + text + "'");
  }
  return r;
}

BigFloat BigFloat::zero(prec_t prec) { return BigFloat(0L, prec); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs; leave `other` as a valid minimal-precision zero.
  v_[0] = other.v_[0];
  mpfr_init2(other.v_, MPFR_PREC_MIN);
  mpfr_set_zero(other.v_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(prec_t prec) const {
  BigFloat r = zero(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent2() const {
  if (is_zero()) return -(1L << 40);
  return mpfr_get_exp(v_);
}

std::string BigFloat::to_string(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
  if (is_zero()) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<size_t>(digits - 1), '0');
  }
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!mant.empty() && mant[0] == '-') {
    sign_str = "-";
    mant.erase(0, 1);
  }
  // value = 0.mant * 10^e10
  std::string out;
  if (e10 > -25 && e10 <= 40) {
    if (e10 <= 0) {
      out = "0." + std::string(static_cast<size_t>(-e10), '0') + mant;
    } else if (static_cast<size_t>(e10) >= mant.size()) {
      out = mant + std::string(static_cast<size_t>(e10) - mant.size(), '0');
    } else {
      out = mant.substr(0, static_cast<size_t>(e10)) + "." + mant.substr(static_cast<size_t>(e10));
    }
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(static_cast<long>(e10) - 1);
  }
  return sign_str + out;
}

std::string BigFloat::to_fixed(int decimals) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RNf", std::max(decimals, 0), v_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

#define RESUM_BINOP(op, fn)                                                   \
  BigFloat& BigFloat::operator op(const BigFloat& rhs) {                      \
    prec_t p = std::max(precision(), rhs.precision());                        \
    if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);                  \
    fn(v_, v_, rhs.v_, MPFR_RNDN);                                            \
    return *this;                                                             \
  }

RESUM_BINOP(+=, mpfr_add)
RESUM_BINOP(-=, mpfr_sub)
RESUM_BINOP(*=, mpfr_mul)
RESUM_BINOP(/=, mpfr_div)
#undef RESUM_BINOP

BigFloat operator*(const BigFloat& lhs, long rhs) {
  BigFloat r = BigFloat::zero(lhs.precision());
  mpfr_mul_si(r.v_, lhs.v_, rhs, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& lhs, long rhs) {
  BigFloat r = BigFloat::zero(lhs.precision());
  mpfr_div_si(r.v_, lhs.v_, rhs, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& lhs, const BigRat& rhs) {
  BigFloat r = BigFloat::zero(lhs.precision());
  mpfr_mul_q(r.v_, lhs.v_, rhs.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& lhs, const BigRat& rhs) {
  BigFloat r = BigFloat::zero(lhs.precision());
  mpfr_add_q(r.v_, lhs.v_, rhs.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define RESUM_UNARY(name, fn)                      \
  BigFloat name(const BigFloat& x) {               \
    BigFloat r = BigFloat::zero(x.precision());    \
    fn(r.get(), x.get(), MPFR_RNDN);               \
    return r;                                      \
  }

RESUM_UNARY(abs, mpfr_abs)
RESUM_UNARY(sqrt, mpfr_sqrt)
RESUM_UNARY(exp, mpfr_exp)
RESUM_UNARY(round_to_integer, mpfr_rint)
#undef RESUM_UNARY

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0) throw DomainError("log of a non-positive number");
  BigFloat r = BigFloat::zero(x.precision());
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r = BigFloat::zero(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, long exponent) {
  BigFloat r = BigFloat::zero(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, const BigRat& exponent) {
  if (exponent.get_den() == 1 && exponent.get_num().fits_slong_p()) {
    return pow(base, exponent.get_num().get_si());
  }
  if (base.sign() <= 0) throw DomainError("fractional power of a non-positive number");
  prec_t p = base.precision();
  BigFloat r = BigFloat::zero(p);
  if (exponent.get_den().fits_ulong_p() && exponent.get_num().fits_slong_p()) {
    // x^(p/q) = (x^(1/q))^p keeps the rounding error to a few ulp.
    BigFloat root = BigFloat::zero(p + 32);
    mpfr_rootn_ui(root.get(), base.with_precision(p + 32).get(), exponent.get_den().get_ui(), MPFR_RNDN);
    mpfr_pow_si(r.get(), root.get(), exponent.get_num().get_si(), MPFR_RNDN);
    return r;
  }
  return pow(base, BigFloat(exponent, p + 32)).with_precision(p);
}

BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }
BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat const_pi(prec_t prec) {
  BigFloat r = BigFloat::zero(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigFloat const_euler(prec_t prec) {
  BigFloat r = BigFloat::zero(prec);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r = BigFloat::zero(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
  return r;
}

int agreeing_digits(const BigFloat& a, const BigFloat& b) {
  prec_t p = std::max(a.precision(), b.precision());
  int cap = static_cast<int>(static_cast<double>(p) * 0.30103);
  BigFloat diff = abs(a - b);
  if (diff.is_zero()) return cap;
  BigFloat scale = max(abs(a), abs(b));
  if (scale.is_zero()) return cap;
  double rel = std::log10(std::fabs((diff / scale).to_double()));
  if (!std::isfinite(rel)) {
    // Below double range: fall back to the binary exponents.
    rel = static_cast<double>(diff.exponent2() - scale.exponent2()) * 0.30103;
  }
  int d = static_cast<int>(std::floor(-rel));
  return std::clamp(d, 0, cap);
}

prec_t PrecisionPolicy::working_bits(long order) const {
  if (fixed_bits > 0) return fixed_bits;
  return std::max<long>(base_bits + per_order_bits * std::max(order, 0L), 64);
}

PrecisionPolicy PrecisionPolicy::from_env() {
  PrecisionPolicy p;
  if (const char* env = std::getenv("RESUM_PRECISION_BITS")) {
    char* end = nullptr;
    long bits = std::strtol(env, &end, 10);
    if (end != env && bits >= 64) p.fixed_bits = bits;
  }
  return p;
}

}  // namespace resum
