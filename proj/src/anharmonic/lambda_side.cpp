#include "resum/anharmonic.hpp"
#include "resum/errors.hpp"
#include "resum/pade.hpp"
#include "resum/polyroot.hpp"
#include "resum/transform.hpp"

namespace resum::anharmonic {

namespace {

using prec_t = BigFloat::prec_t;

prec_t resolve(prec_t prec, long N) { return prec > 0 ? prec : PrecisionPolicy::from_env().working_bits(N); }

/// Multiplies the coefficient of g^n by prod_i (1 + n / theta_i).
GenSeries reduce(const GenSeries& s, const std::vector<Scalar>& thetas) {
  std::vector<Term> terms;
  for (const auto& t : s.terms()) {
    Scalar c = t.coeff;
    for (const auto& th : thetas) c = c * (Scalar(1L) + Scalar(t.exponent) / th);
    terms.push_back(Term{t.exponent, c});
  }
  return GenSeries(std::move(terms), s.order());
}

Poly to_float(const Poly& p, prec_t prec) {
  std::vector<Scalar> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x.to_float(prec));
  return Poly(std::move(c));
}

std::vector<BigFloat> positive_zeros(const Poly& p, prec_t prec) {
  if (p.degree() < 1) return {};
  return positive_real_roots(all_roots(p, prec), default_real_tolerance(prec));
}

}  // namespace

GenSeries lambda_transform(long N) {
  const PerturbSeries a = bender_wu(N);
  std::vector<Term> terms;
  for (long n = 0; n <= N; ++n) {
    terms.push_back(Term{BigRat(n), Scalar(BigRat(a.coeffs[static_cast<std::size_t>(n)] *
                                                  binomial(static_cast<unsigned long>(N), static_cast<unsigned long>(n))))});
  }
  return GenSeries(std::move(terms), N);
}

std::vector<BigRat> theta_ladder(long count) {
  std::vector<BigRat> out;
  for (long k = 1; static_cast<long>(out.size()) < count; ++k) {
    if (k % 6 == 1 || k % 6 == 5) out.push_back(make_rat(k, 3));
  }
  return out;
}

Estimate estimate_theta1_from(const GenSeries& transformed, prec_t prec) {
  const long N = transformed.order();
  if (N < 4 || N % 2 != 0) throw RangeError("theta_1 estimate needs an even order N >= 4");
  prec = resolve(prec, N);
  const ReductionOp leading{{make_rat(-1, 3)}};
  const GenSeries num = apply_reduction(leading, log_derivative(transformed));
  const GenSeries den = apply_reduction(leading, transformed);
  const GenSeries q = taylor_div(num, den, N);
  PadeOptions opts;
  opts.prec = prec;
  opts.allow_deflation = false;
  const PadeApprox p = pade(q, N / 2, N / 2, opts);
  Estimate e;
  e.value = (-limit_at_infinity(p)).to_float(prec);
  e.location_t = BigFloat::zero(prec);
  e.criterion = Criterion::pade_limit;
  e.first_deriv = BigFloat::zero(prec);
  e.second_deriv = BigFloat::zero(prec);
  e.order_N = N;
  return e;
}

Estimate estimate_theta1(long N, prec_t prec) { return estimate_theta1_from(lambda_transform(N), prec); }

Estimate estimate_E_lambda(long N, const std::vector<Scalar>& thetas, prec_t prec) {
  if (N < 2) throw RangeError("estimate_E_lambda needs N >= 2");
  for (const auto& th : thetas) {
    if (th.sign() <= 0) throw DomainError("reduction exponents must be positive");
  }
  prec = resolve(prec, N);

  PadeOptions opts;
  opts.prec = prec;
  const PadeApprox pa = pade(reduce(lambda_transform(N), thetas), N / 2, N / 2, opts);
  const Poly a = to_float(pa.numer, prec);
  const Poly b = to_float(pa.denom, prec);

  // F(g) = K a / (b g^(1/3)). The transform sends lambda^(1/3) to
  // binom(N, 1/3) g^(1/3), and each reduction factor multiplies that term
  // by 1 + 1/(3 theta).
  Scalar norm = binom_factor(N, make_rat(1, 3), prec);
  for (const auto& th : thetas) norm = norm * (Scalar(1L) + Scalar(1L) / (Scalar(3L) * th));
  const BigFloat K = BigFloat(1L, prec) / norm.to_float(prec);

  // g F' = K s1 / (3 b^2 g^(1/3)),  g (g F')' = K s2 / (9 b^3 g^(1/3)).
  const Poly a1 = euler_derivative(a);
  const Poly b1 = euler_derivative(b);
  const Poly s1 = Scalar(3L) * (a1 * b) - Scalar(3L) * (a * b1) - a * b;
  const Poly s2 = Scalar(3L) * (euler_derivative(s1) * b) - Scalar(6L) * (s1 * b1) - s1 * b;

  const BigRat third = make_rat(1, 3);
  auto cube_root_g = [&](const BigFloat& g) { return pow(g, third); };
  auto F = [&](const BigFloat& g) { return K * evaluate(a, g) / (evaluate(b, g) * cube_root_g(g)); };
  auto d1 = [&](const BigFloat& g) {
    const BigFloat bg = evaluate(b, g);
    return K * evaluate(s1, g) / (BigFloat(3L, prec) * bg * bg * cube_root_g(g));
  };
  auto d2 = [&](const BigFloat& g) {
    const BigFloat bg = evaluate(b, g);
    return K * evaluate(s2, g) / (BigFloat(9L, prec) * bg * bg * bg * cube_root_g(g));
  };

  const ZeroSelection sel = select_extremum(positive_zeros(s1, prec), positive_zeros(s2, prec), d1, d2);
  Estimate e;
  e.location_t = sel.t;
  e.criterion = sel.criterion;
  e.value = F(sel.t);
  e.first_deriv = d1(sel.t);
  e.second_deriv = d2(sel.t);
  e.order_N = N;
  e.L = static_cast<long>(thetas.size());
  e.pole_on_axis = !positive_zeros(b, prec).empty();
  return e;
}

}  // namespace resum::anharmonic
