#include "resum/transform.hpp"

#include "resum/errors.hpp"

namespace resum {

namespace {

bool is_half_integer(const BigRat& s) { return s.get_den() == 2; }

long to_long(const BigRat& integral) { return integral.get_num().get_si(); }

}  // namespace

BigRat half_integer_binom_times_pi(long N, const BigRat& s) {
  if (!is_half_integer(s)) throw DomainError("half_integer_binom_times_pi needs a half-integer s");
  // Gamma(s+1) = h(s+1/2) sqrt(pi),  Gamma(N-s+1) = h(N-s+1/2) sqrt(pi)
  const long j1 = to_long(BigRat(s + BigRat(1, 2)));
  const long j2 = to_long(BigRat(N - s + BigRat(1, 2)));
  BigRat den = half_gamma_over_sqrt_pi(j1) * half_gamma_over_sqrt_pi(j2);
  return BigRat(factorial(static_cast<unsigned long>(N)) / den);
}

Scalar binom_factor(long N, const BigRat& s, BigFloat::prec_t prec) {
  if (N < 0) throw RangeError("binom_factor needs N >= 0");
  if (s.get_den() == 1) {
    if (s < 0 || s > N) return Scalar(BigRat(0));
    return Scalar(BigRat(binomial(static_cast<unsigned long>(N), s.get_num().get_ui())));
  }
  if (is_half_integer(s)) {
    const BigRat r = half_integer_binom_times_pi(N, s);
    return Scalar((BigFloat(r, prec + 16) / const_pi(prec + 16)).with_precision(prec));
  }
  const BigFloat sf(s, prec + 32);
  const BigFloat n1(N + 1, prec + 32);
  return Scalar(gamma_ratio(n1, sf + BigRat(1), n1 - sf).with_precision(prec));
}

GenSeries binomial_transform(const GenSeries& s, const TransformSpec& spec, BigFloat::prec_t prec) {
  if (s.order() != spec.N) {
    throw DomainError("binomial transform order " + std::to_string(spec.N) + " does not match series order " +
                      std::to_string(s.order()));
  }
  const GenSeries f = s.folded();
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Scalar b = binom_factor(spec.N, t.exponent, prec);
    if (b.is_zero()) continue;
    terms.push_back(Term{t.exponent, t.coeff * b});
  }
  return GenSeries(std::move(terms), spec.N);
}

BigRat lde_factor(long N, long n) {
  if (n < 0 || n > N) throw RangeError("lde_factor needs 0 <= n <= N");
  const auto nm = factorial(static_cast<unsigned long>(N - n));
  if (n % 2 == 1) {
    const auto a = static_cast<unsigned long>(N + (n + 1) / 2 - 1);
    const auto b = static_cast<unsigned long>((3 * n + 1) / 2 - 1);
    return make_rat(factorial(a), factorial(b) * nm);
  }
  // Both Gamma arguments are half-integers; the sqrt(pi) factors cancel.
  const BigRat top = half_gamma_over_sqrt_pi(N + n / 2);
  const BigRat bottom = half_gamma_over_sqrt_pi(3 * n / 2);
  return BigRat(top / (bottom * nm));
}

BigFloat factor_ratio(long N, long n, BigFloat::prec_t prec) {
  const BigRat c = lde_factor(N, n);
  const Scalar b = binom_factor(N, make_rat(3 * n - 1, 2), prec);
  return (b / Scalar(c)).to_float(prec);
}

}  // namespace resum
