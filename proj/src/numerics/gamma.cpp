#include <algorithm>
#include <cstdlib>

#include "resum/errors.hpp"
#include "resum/numerics.hpp"

namespace resum {

namespace {

bool at_pole(const BigFloat& x) { return x.is_integer() && x.sign() <= 0; }

long magnitude_bits(const BigFloat& x) {
  if (x.is_zero()) return 0;
  return std::max(0L, x.exponent2());
}

}  // namespace

BigFloat gamma(const BigFloat& x) {
  if (at_pole(x)) throw PoleError("Gamma has a pole at " + x.to_string(20));
  BigFloat r = BigFloat::zero(x.precision());
  mpfr_gamma(r.get(), x.get(), MPFR_RNDN);
  return r;
}

std::pair<BigFloat, int> lgamma_signed(const BigFloat& x) {
  if (at_pole(x)) throw PoleError("log-Gamma has a pole at " + x.to_string(20));
  BigFloat r = BigFloat::zero(x.precision());
  int sign = 1;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return {std::move(r), sign};
}

BigFloat gamma_ratio(const BigFloat& a, const BigFloat& b, const BigFloat& c) {
  const auto prec = std::max({a.precision(), b.precision(), c.precision()});
  const bool pa = at_pole(a);
  const bool pden = at_pole(b) || at_pole(c);
  if (pa && pden) throw IndeterminateError("Gamma ratio with poles in numerator and denominator");
  if (pa) throw PoleError("Gamma ratio numerator at a pole");
  if (pden) return BigFloat::zero(prec);

  // exp() of the log-Gamma sum amplifies absolute error by its magnitude;
  // widen the working precision accordingly.
  const long mag = std::max({magnitude_bits(a), magnitude_bits(b), magnitude_bits(c)});
  const auto work = prec + 32 + 2 * mag + 16;
  auto [la, sa] = lgamma_signed(a.with_precision(work));
  auto [lb, sb] = lgamma_signed(b.with_precision(work));
  auto [lc, sc] = lgamma_signed(c.with_precision(work));
  BigFloat r = exp(la - lb - lc);
  if (sa * sb * sc < 0) r = -r;
  r = r.with_precision(prec);

  if (a.is_integer() && b.is_integer() && c.is_integer()) {
    BigFloat n = round_to_integer(r);
    BigFloat tol = ldexp(max(abs(n), BigFloat(1L, prec)), -(static_cast<long>(prec) - 16));
    if (abs(r - n) <= tol) r = n;
  }
  return r;
}

BigRat half_gamma_over_sqrt_pi(long j) {
  if (j >= 0) {
    const auto uj = static_cast<unsigned long>(j);
    BigInt den = factorial(uj);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * uj);
    return make_rat(factorial(2 * uj), den);
  }
  // Gamma(1/2 - m) / sqrt(pi) = (-4)^m m! / (2m)!
  const auto m = static_cast<unsigned long>(-j);
  BigInt num = factorial(m);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * m);
  if (m % 2 == 1) num = -num;
  return make_rat(num, factorial(2 * m));
}

}  // namespace resum
