#include "resum/laplace.hpp"

#include <algorithm>
#include <cmath>

#include "resum/errors.hpp"
#include "resum/polyroot.hpp"
#include "resum/quadrature.hpp"
#include "resum/transform.hpp"

namespace resum::laplace {

namespace {

using prec_t = BigFloat::prec_t;

void require_order(long N) {
  if (N < 1) throw RangeError("Laplace model needs N >= 1");
}

/// Dense polynomial from a series with integer exponents >= 0.
Poly to_poly(const GenSeries& s) {
  const GenSeries f = s.folded();
  if (f.is_zero()) return Poly();
  const long top = f.terms().back().exponent.get_num().get_si();
  std::vector<Scalar> c(static_cast<std::size_t>(top) + 1);
  for (const auto& t : f.terms()) c[t.exponent.get_num().get_ui()] = t.coeff;
  return Poly(std::move(c));
}

}  // namespace

GenSeries asymptotic_coeffs(long N) {
  require_order(N);
  std::vector<Term> terms;
  BigInt fact = 1;
  for (long k = 1; k <= N; ++k) {
    fact *= k;
    terms.push_back(Term{BigRat(k), Scalar(BigRat(k % 2 == 1 ? fact : BigInt(-fact)))});
  }
  return GenSeries(std::move(terms), N);
}

GenSeries fbar_poly(long N) {
  return binomial_transform(asymptotic_coeffs(N), TransformSpec{N}, 64);
}

GenSeries fbar_closed_form(long N) {
  require_order(N);
  std::vector<Term> terms;
  // N!/(N-k)! built up as a falling product.
  BigInt falling = 1;
  for (long k = 1; k <= N; ++k) {
    falling *= N - k + 1;
    terms.push_back(Term{BigRat(k), Scalar(BigRat(k % 2 == 1 ? falling : BigInt(-falling)))});
  }
  return GenSeries(std::move(terms), N);
}

BigFloat fbar_exact(const BigFloat& t, long N, long terms) {
  if (t.sign() <= 0) throw DomainError("fbar_exact needs t > 0");
  require_order(N);
  const prec_t prec = t.precision() + 16;
  const BigFloat tt = t.with_precision(prec);
  BigFloat term(1L, prec);
  BigFloat sum = term;
  const BigFloat last_growth = BigFloat(1L, prec) / tt - BigFloat(N, prec);
  for (long k = 1;; ++k) {
    if (terms > 0 && k >= terms) break;
    term = -term / (tt * BigFloat(N + k, prec));
    sum += term;
    if (terms == 0 && BigFloat(k, prec) > last_growth && !sum.is_zero() &&
        term.exponent2() < sum.exponent2() - static_cast<long>(prec)) {
      break;
    }
  }
  return sum.with_precision(t.precision());
}

BigFloat fbar_quadrature(const BigFloat& t, long N) {
  if (t.sign() <= 0) throw DomainError("fbar_quadrature needs t > 0");
  require_order(N);
  const prec_t prec = t.precision() + 32;
  const BigFloat tt = t.with_precision(prec);
  const BigFloat one(1L, prec);
  auto integrand = [&](const BigFloat& s) { return pow(one - s, N - 1) * exp(-s / tt); };
  const BigFloat value = integrate(integrand, BigFloat::zero(prec), one, prec) * N;
  return value.with_precision(t.precision());
}

BigFloat f_oracle(const BigFloat& M) {
  if (M.sign() <= 0) throw DomainError("f_oracle needs M > 0");
  const prec_t prec = M.precision() + 32;
  const BigFloat m = M.with_precision(prec);
  const BigFloat one(1L, prec);
  auto integrand = [&](const BigFloat& u) {
    const BigFloat v = one - u;
    if (v.is_zero() || u.is_zero()) return BigFloat::zero(prec);
    return m * u * exp(-m * u / v) / (v * v);
  };
  return integrate(integrand, BigFloat::zero(prec), one, prec).with_precision(M.precision());
}

GenSeries psi(long N, long L) {
  if (L < 0) throw RangeError("psi needs L >= 0");
  ReductionOp op;
  for (long p = 1; p <= L; ++p) op.exponents.emplace_back(p);
  return apply_reduction(op, fbar_poly(N));
}

BigFloat psi_exact(const BigFloat& t, long N, long L) {
  if (t.sign() <= 0) throw DomainError("psi_exact needs t > 0");
  require_order(N);
  const prec_t prec = t.precision() + 32;
  const BigFloat tt = t.with_precision(prec);
  BigFloat term(1L, prec);
  BigFloat sum(1L, prec);  // k = 0 keeps factor 1
  const double growth = std::max(1.0, 1.0 / tt.to_double() - static_cast<double>(N));
  for (long k = 1; k < 1000000; ++k) {
    term = -term / (tt * BigFloat(N + k, prec));
    BigRat factor(1);
    for (long p = 1; p <= L; ++p) factor *= BigRat(1) - make_rat(k, p);
    if (factor != 0) sum += term * factor;
    // |factor| <= k^L bounds the remaining tail once terms decrease.
    const double bound = static_cast<double>(term.exponent2()) + static_cast<double>(L) * std::log2(k + 1.0);
    if (static_cast<double>(k) > growth + L && bound < static_cast<double>(sum.exponent2() - static_cast<long>(prec))) break;
  }
  return sum.with_precision(t.precision());
}

Estimate pms_estimate(long N, long L, prec_t prec) {
  if (prec == 0) prec = PrecisionPolicy::from_env().working_bits(N);
  const Poly p = to_poly(psi(N, L));
  const Poly dp = derivative(p);
  const Poly ddp = derivative(dp);
  if (dp.degree() < 1) throw NoStationaryPoint("psi has no stationary point");
  const RootSet rs = all_roots(dp, prec);
  const std::vector<BigFloat> ts = positive_real_roots(rs, default_real_tolerance(prec));

  struct Cand {
    Estimate e;
    BigFloat score;
  };
  std::vector<Cand> cands;
  const BigFloat two(2L, prec);
  for (const auto& t : ts) {
    Estimate e;
    e.value = evaluate(p, t);
    if (e.value.sign() <= 0 || e.value >= two) continue;
    e.location_t = t;
    e.criterion = Criterion::stationary;
    e.first_deriv = t * evaluate(dp, t);
    e.second_deriv = e.first_deriv + t * t * evaluate(ddp, t);
    e.order_N = N;
    e.L = L;
    BigFloat score = abs(e.second_deriv);
    cands.push_back({std::move(e), std::move(score)});
  }
  if (cands.empty()) {
    throw NoStationaryPoint("no stationary point with value in (0, 2) for N=" + std::to_string(N) +
                            ", L=" + std::to_string(L));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (cands[i].score < cands[best].score) best = i;
  }
  const BigFloat slack = cands[best].score * BigFloat(1.001, prec);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].score <= slack && cands[i].e.location_t > cands[best].e.location_t) best = i;
  }
  return cands[best].e;
}

std::vector<BigFloat> cstar_sequence(long L, const std::vector<long>& orders, prec_t prec) {
  if (orders.empty()) throw RangeError("cstar_sequence needs at least one order");
  std::vector<BigFloat> out;
  out.reserve(orders.size());
  for (long N : orders) out.push_back(pms_estimate(N, L, prec).location_t * N);
  return out;
}

BigFloat c_max(prec_t prec) {
  const prec_t work = prec + 16;
  const BigFloat one(1L, work);
  BigFloat c(3.5, work);
  for (int it = 0; it < 200; ++it) {
    const BigFloat g = log(c) - one - one / c;
    const BigFloat dg = one / c + one / (c * c);
    const BigFloat step = g / dg;
    c -= step;
    if (step.is_zero() || step.exponent2() < c.exponent2() - static_cast<long>(work) + 2) break;
  }
  return c.with_precision(prec);
}

BigFloat extrapolate_pair(const BigFloat& v1, long N1, const BigFloat& v2, long N2) {
  if (N1 == N2) throw DegenerateError("extrapolate_pair needs two distinct orders");
  // v N = A N - A B, so A = (v1 N1 - v2 N2) / (N1 - N2).
  return (v1 * N1 - v2 * N2) / (N1 - N2);
}

}  // namespace resum::laplace
