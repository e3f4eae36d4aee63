#include "resum/errors.hpp"
#include "resum/laplace.hpp"
#include "resum/pade.hpp"
#include "support.hpp"

using namespace resum;
using testing::close;
using testing::num;

namespace {

GenSeries dense(const std::vector<BigRat>& c) {
  std::vector<Scalar> s(c.begin(), c.end());
  return GenSeries::on_grid(s, BigRat(0), BigRat(1), static_cast<long>(c.size()) - 1);
}

std::vector<long> coeffs_of(const Poly& p) {
  std::vector<long> out;
  for (const auto& c : p.coeffs()) {
    REQUIRE(c.is_exact());
    REQUIRE(c.rat().get_den() == 1);
    out.push_back(c.rat().get_num().get_si());
  }
  return out;
}

/// f_N(M) reduced by factors (1 - p^-1 d/dlog M), p = 1..L, as a series in 1/M.
GenSeries reduced_f(long N, long L) {
  ReductionOp op;
  for (long p = 1; p <= L; ++p) op.exponents.emplace_back(p);
  return apply_reduction(op, laplace::asymptotic_coeffs(N));
}

/// Taylor coefficients of numer/denom up to `order`, exactly.
std::vector<BigRat> reexpand(const PadeApprox& p, long order) {
  std::vector<BigRat> out(static_cast<std::size_t>(order + 1));
  for (long n = 0; n <= order; ++n) {
    BigRat acc = n <= p.numer.degree() ? p.numer.coeff(n).rat() : BigRat(0);
    for (long k = 1; k <= std::min(n, p.denom.degree()); ++k) acc -= p.denom.coeff(k).rat() * out[static_cast<std::size_t>(n - k)];
    out[static_cast<std::size_t>(n)] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("geometric series") {
  std::vector<BigRat> c;
  for (int k = 0; k <= 6; ++k) c.push_back(k % 2 == 0 ? 1 : -1);
  const PadeApprox p = pade(dense(c), 0, 1);
  CHECK(coeffs_of(p.numer) == std::vector<long>{1});
  CHECK(coeffs_of(p.denom) == std::vector<long>{1, 1});
}

TEST_CASE("[rho/0] is the truncated series") {
  const PadeApprox p = pade(dense({3, 1, 4, 1, 5}), 3, 0);
  CHECK(coeffs_of(p.numer) == std::vector<long>{3, 1, 4, 1});
  CHECK(coeffs_of(p.denom) == std::vector<long>{1});
}

TEST_CASE("transformed Laplace series at N=10") {
  const PadeApprox p = pade(laplace::fbar_poly(10), 5, 5);
  CHECK(coeffs_of(p.numer) == std::vector<long>{0, 10, 160, 1470, 6960, 15240});
  CHECK(coeffs_of(p.denom) == std::vector<long>{1, 25, 300, 2100, 8400, 15120});
  CHECK(limit_at_infinity(p).rat() == make_rat(127, 126));
}

TEST_CASE("limit_at_infinity") {
  CHECK(limit_at_infinity(pade(dense({4, 0, 0}), 1, 1)).rat() == 4);
  CHECK_THROWS_AS(limit_at_infinity(pade(dense({1, 2, 3, 4}), 2, 1)), RangeError);
}

TEST_CASE("pade re-expansion matches the input") {
  for (long N = 4; N <= 40; N += 6) {
    const GenSeries s = laplace::fbar_poly(N);
    const long r = N / 2, t = N / 2;
    const PadeApprox p = pade(s, r, t);
    REQUIRE(p.numer.is_exact());
    const auto back = reexpand(p, r + t);
    for (long n = 0; n <= r + t; ++n) {
      const Scalar c = s.coeff_at(BigRat(n));
      CHECK(back[static_cast<std::size_t>(n)] == c.rat());
    }
  }
}

TEST_CASE("diagonal limits of the reduced asymptotic series are exact") {
  for (long N = 2; N <= 30; N += 2) {
    const BigRat n(N);
    CHECK(limit_at_infinity(pade(reduced_f(N, 0), N / 2, N / 2)).rat() == n / (n + 2));
    CHECK(limit_at_infinity(pade(reduced_f(N, 1), N / 2, N / 2)).rat() == n * (n + 6) / ((n + 2) * (n + 4)));
    CHECK(limit_at_infinity(pade(reduced_f(N, 2), N / 2, N / 2)).rat() ==
          n * (n * n + 12 * n + 44) / ((n + 2) * (n + 4) * (n + 6)));
  }
}

TEST_CASE("float path agrees with the exact path") {
  PadeOptions opts;
  opts.exact_limit = 0;
  opts.prec = 512;
  const PadeApprox f = pade(laplace::fbar_poly(20), 10, 10, opts);
  CHECK_FALSE(f.numer.is_exact());
  const BigFloat exact = limit_at_infinity(pade(laplace::fbar_poly(20), 10, 10)).to_float(512);
  CHECK(abs(limit_at_infinity(f).to_float(512) - exact) < num("1e-100", 512));
  CHECK(close(exact, "0.9999891749", 1e-9));
}

TEST_CASE("pade commutes with argument scaling") {
  const GenSeries s = laplace::fbar_poly(12);
  std::vector<Term> scaled;
  for (const auto& t : s.terms()) {
    const BigRat factor(BigInt(1) << t.exponent.get_num().get_ui());
    scaled.push_back(Term{t.exponent, t.coeff * Scalar(factor)});
  }
  const PadeApprox a = pade(GenSeries(scaled, 12), 6, 6);
  const PadeApprox b = pade(s, 6, 6);
  for (const char* x : {"0.1", "1.3", "7"}) {
    const BigFloat t = num(x);
    CHECK(abs(evaluate(a, t) - evaluate(b, t * 2L)) < num("1e-60"));
  }
}

TEST_CASE("degenerate systems") {
  // 1 + t^2: the [1/1] system is singular.
  const GenSeries s = dense({1, 0, 1});
  PadeOptions strict;
  strict.allow_deflation = false;
  CHECK_THROWS_AS(pade(s, 1, 1, strict), DegenerateError);
  const PadeApprox p = pade(s, 1, 1);
  CHECK(p.deflated);
  CHECK_THROWS_AS(pade(s, 2, 2), RangeError);
  const GenSeries frac({Term{make_rat(1, 2), Scalar(1L)}});
  CHECK_THROWS_AS(pade(frac, 0, 0), DomainError);
}

TEST_CASE("zero/pole map") {
  const PadeApprox p = pade(dense({1, -1, 1, -1}), 0, 1);
  const auto [zeros, poles] = zero_pole_map(p, 128);
  CHECK(zeros.roots.empty());
  REQUIRE(poles.roots.size() == 1);
  CHECK(poles.roots[0].re == -1L);
}

TEST_CASE("near-cancelling pairs at N=30") {
  const auto pairs = [](const GenSeries& s) {
    const auto [z, p] = zero_pole_map(pade(s, 15, 15), 512);
    return cancelling_pairs(z, p, 0.03);
  };
  CHECK(pairs(laplace::fbar_poly(30)) == 8);
  CHECK(pairs(laplace::psi(30, 1)) == 6);
}

TEST_CASE("near-diagonal stationary points at N=34") {
  const GenSeries s = laplace::fbar_poly(34);
  const Estimate hi = near_diagonal_stationary(pade(s, 18, 16), 512);
  const Estimate lo = near_diagonal_stationary(pade(s, 16, 18), 512);
  CHECK(close(hi.value, "0.9973217", 1e-5));
  CHECK(close(hi.location_t, "15.79656", 1e-5));
  CHECK(close(lo.value, "0.9973225", 1e-5));
  CHECK(close(lo.location_t, "15.80567", 1e-5));
}

TEST_CASE("monotone rational function has no stationary point") {
  // t / (1 + t) is strictly increasing on t > 0
  const PadeApprox p = pade(dense({0, 1, -1, 1}), 2, 1);
  CHECK_THROWS_AS(near_diagonal_stationary(p, 128), NoStationaryPoint);
}
