#include "resum/errors.hpp"
#include "resum/series.hpp"
#include "resum/transform.hpp"
#include "support.hpp"

using namespace resum;
using testing::close;
using testing::num;
using testing::rel_close;

namespace {

GenSeries poly_series(const std::vector<long>& coeffs, long start = 0) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) terms.push_back(Term{BigRat(start + static_cast<long>(k)), Scalar(coeffs[k])});
  return GenSeries(std::move(terms), static_cast<long>(coeffs.size()) - 1 + start);
}

bool same(const GenSeries& a, const GenSeries& b) {
  const GenSeries d = a - b;
  for (const auto& t : d.terms()) {
    if (!t.coeff.is_zero()) return false;
  }
  return true;
}

GenSeries random_series(int terms) {
  std::uniform_int_distribution<int> coeff(-20, 20), num_(-12, 12), den(1, 4);
  std::vector<Term> out;
  for (int i = 0; i < terms; ++i) out.push_back(Term{make_rat(num_(testing::rng()), den(testing::rng())), Scalar(static_cast<long>(coeff(testing::rng())))});
  return GenSeries(std::move(out), terms);
}

}  // namespace

TEST_CASE("evaluate") {
  const GenSeries s({Term{BigRat(1), Scalar(-2L)}, Term{BigRat(2), Scalar(2L)}});
  CHECK(evaluate(s, BigFloat(1L, 128)).is_zero());
  CHECK(evaluate(poly_series({0, -2, 2}), num("0.5")) == num("-0.5"));
  CHECK(evaluate(GenSeries(), num("0.3")).is_zero());
}

TEST_CASE("log_derivative") {
  const GenSeries d = log_derivative(poly_series({0, -2, 2}));
  CHECK(same(d, poly_series({0, -2, 4})));
  CHECK(log_derivative(poly_series({7})).is_zero());
  const GenSeries power({Term{make_rat(5, 3), Scalar(1L)}});
  CHECK(log_derivative(power).coeff_at(make_rat(5, 3)).rat() == make_rat(5, 3));
}

TEST_CASE("log_derivative is linear") {
  for (int i = 0; i < 20; ++i) {
    const GenSeries a = random_series(6), b = random_series(5);
    const Scalar x(make_rat(3, 7)), y(-5L);
    CHECK(same(log_derivative(x * a + y * b), x * log_derivative(a) + y * log_derivative(b)));
  }
}

TEST_CASE("log_derivative matches a finite difference") {
  const GenSeries s({Term{make_rat(-1, 2), Scalar(3L)}, Term{BigRat(1), Scalar(-2L)}, Term{make_rat(5, 2), Scalar(make_rat(1, 7))}});
  const BigFloat t = num("0.8"), h = num("1e-8");
  const BigFloat up = evaluate(s, t * exp(h)), down = evaluate(s, t * exp(-h));
  const BigFloat fd = (up - down) / (h * 2L);
  CHECK(rel_close(evaluate(log_derivative(s), t), fd, 1e-10));
}

TEST_CASE("apply_reduction") {
  const GenSeries s = poly_series({0, -2, 2});
  CHECK(same(apply_reduction(ReductionOp{}, s), s));
  CHECK(same(apply_reduction(ReductionOp{{BigRat(1)}}, s), poly_series({0, -4, 6})));

  const GenSeries with_tail({Term{BigRat(0), Scalar(1L)}, Term{BigRat(-1), Scalar(5L)}});
  CHECK(same(apply_reduction(ReductionOp{{BigRat(1)}}, with_tail), poly_series({1})));

  const GenSeries leading({Term{make_rat(1, 3), Scalar(2L)}});
  CHECK(apply_reduction(ReductionOp{{make_rat(-1, 3)}}, leading).coeff_at(make_rat(1, 3)).is_zero());

  CHECK_THROWS_AS(apply_reduction(ReductionOp{{BigRat(0)}}, s), DomainError);
}

TEST_CASE("apply_reduction annihilates exactly one exponent") {
  for (int i = 0; i < 20; ++i) {
    const GenSeries s = random_series(8);
    const BigRat p = make_rat(3, 2);
    const GenSeries r = apply_reduction(ReductionOp{{p}}, s);
    CHECK(r.coeff_at(BigRat(-p)).is_zero());
    const GenSeries flat = s.folded();
    for (const auto& t : flat.terms()) {
      const Scalar expect = t.coeff * (Scalar(1L) + Scalar(t.exponent) / Scalar(p));
      CHECK((r.coeff_at(t.exponent) - expect).is_zero());
    }
  }
}

TEST_CASE("taylor_div") {
  const GenSeries q = taylor_div(poly_series({1}), poly_series({1, 1}), 3);
  CHECK(same(q, poly_series({1, -1, 1, -1})));
  const GenSeries s = poly_series({2, 3, -1, 4});
  CHECK(same(taylor_div(s, s, 3), poly_series({1})));
  const GenSeries r = taylor_div(poly_series({0, 1}), poly_series({0, 1, 1}), 4);
  CHECK(same(r, poly_series({1, -1, 1, -1, 1})));
  CHECK_THROWS_AS(taylor_div(s, GenSeries(), 3), DivisionByZeroSeries);
}

TEST_CASE("taylor_div times the divisor gives back the dividend") {
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 20; ++i) {
    std::vector<long> a(8), b(8);
    for (auto& x : a) x = c(testing::rng());
    for (auto& x : b) x = c(testing::rng());
    b[0] = 1 + std::abs(b[0]);
    const long order = 7;
    const GenSeries q = taylor_div(poly_series(a), poly_series(b), order);
    for (long n = 0; n <= order; ++n) {
      Scalar acc(0L);
      for (long k = 0; k <= n; ++k) acc = acc + q.coeff_at(BigRat(k)) * Scalar(b[static_cast<std::size_t>(n - k)]);
      CHECK((acc - Scalar(a[static_cast<std::size_t>(n)])).is_zero());
    }
  }
}

TEST_CASE("binom_factor") {
  CHECK(binom_factor(10, BigRat(5), 128).rat() == 252);
  CHECK(binom_factor(3, BigRat(4), 128).is_zero());
  const Scalar v = binom_factor(4, make_rat(11, 2), 256);
  CHECK(v.sign() < 0);
  CHECK(close(v.to_float(256), "-0.02351726720434355", 1e-15));
}

TEST_CASE("binom_factor reflection symmetry") {
  std::uniform_int_distribution<int> n(-40, 80), d(2, 7);
  for (int i = 0; i < 40; ++i) {
    const long N = 17;
    const BigRat s = make_rat(n(testing::rng()), d(testing::rng()));
    const BigFloat a = binom_factor(N, s, 256).to_float(256);
    const BigFloat b = binom_factor(N, BigRat(N - s), 256).to_float(256);
    CHECK(abs(a - b) <= abs(a) * num("1e-60") + num("1e-70"));
  }
}

TEST_CASE("binomial_transform") {
  // 1!/M - 2!/M^2 at N=2
  const GenSeries f({Term{BigRat(1), Scalar(1L)}, Term{BigRat(2), Scalar(-2L)}}, 2);
  CHECK(same(binomial_transform(f, TransformSpec{2}, 128), poly_series({0, 2, -2})));

  const GenSeries with_mass({Term{BigRat(0), Scalar(make_rat(1, 2))}, Term{BigRat(-1), Scalar(3L)}, Term{BigRat(-2), Scalar(1L)}}, 5);
  const GenSeries out = binomial_transform(with_mass, TransformSpec{5}, 128);
  CHECK(out.size() == 1);
  CHECK(out.coeff_at(BigRat(0)).rat() == make_rat(1, 2));
}

TEST_CASE("binomial_transform scales integer exponents by binomials") {
  std::uniform_int_distribution<int> c(-50, 50);
  for (long N = 1; N <= 40; N += 3) {
    std::vector<long> a(static_cast<std::size_t>(N + 1));
    for (auto& x : a) x = c(testing::rng());
    const GenSeries out = binomial_transform(poly_series(a), TransformSpec{N}, 128);
    for (long k = 0; k <= N; ++k) {
      const Scalar v = out.coeff_at(BigRat(k));
      REQUIRE(v.is_exact());
      CHECK(v.rat() == BigRat(binomial(N, k) * a[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("binomial_transform is linear") {
  const GenSeries a = random_series(6).with_order(12), b = random_series(6).with_order(12);
  const Scalar x(make_rat(2, 9));
  const GenSeries lhs = binomial_transform(x * a + b, TransformSpec{12}, 256);
  const GenSeries rhs = x * binomial_transform(a, TransformSpec{12}, 256) + binomial_transform(b, TransformSpec{12}, 256);
  const GenSeries diff = lhs - rhs;
  for (const auto& t : diff.terms()) CHECK(abs(t.coeff.to_float(256)) < num("1e-60"));
}

TEST_CASE("lde_factor and factor_ratio") {
  for (long N = 1; N <= 12; ++N) {
    const BigRat c0 = BigRat(factorial(2 * N)) / (BigRat(BigInt(1) << (2 * N)) * factorial(N) * factorial(N));
    CHECK(lde_factor(N, 0) == c0);
    CHECK(lde_factor(N, 1) == N);
    CHECK(factor_ratio(N, 1, 128) == 1L);
  }
  for (long N = 0; N <= 60; ++N) {
    for (long n = 0; n <= N; ++n) REQUIRE(lde_factor(N, n) > 0);
  }
  CHECK(factor_ratio(3, 3, 128).is_zero());
  const long big = 10000;
  CHECK(close(factor_ratio(big, 2, 256), BigFloat(1L, 256) - BigFloat(10L, 256) / big, 1e-3));
}
