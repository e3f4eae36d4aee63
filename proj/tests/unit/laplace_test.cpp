#include <mpfr.h>

#include "resum/laplace.hpp"
#include "resum/quadrature.hpp"
#include "support.hpp"

using namespace resum;
using testing::close;
using testing::num;

namespace {

/// f(M) = 1 - M e^M E1(M), with E1(M) = -Ei(-M).
BigFloat f_closed(const BigFloat& M) {
  const auto prec = M.precision();
  BigFloat ei = BigFloat::zero(prec);
  mpfr_eint(ei.get(), (-M).get(), MPFR_RNDN);
  const BigFloat e1 = -ei;
  return BigFloat(1L, prec) - M * exp(M) * e1;
}

/// Root of log c = 1 + 1/c by plain bisection on [3, 4].
BigFloat c_max_bisection(BigFloat::prec_t prec) {
  BigFloat lo(3L, prec), hi(4L, prec);
  const BigFloat one(1L, prec);
  for (long i = 0; i < prec + 10; ++i) {
    const BigFloat mid = (lo + hi) / 2L;
    const BigFloat g = log(mid) - one - one / mid;
    if (g.sign() < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

const char* const kTable1[4][6] = {
    {"0.69276626", "0.87951576", "0.94485674", "0.97185783", "0.98441767", "0.99080598"},
    {"0.73101017", "0.91367909", "0.96853507", "0.98733751", "0.99448001", "0.99742866"},
    {"0.74556188", "0.92559505", "0.97580002", "0.99141838", "0.99672795", "0.99867246"},
    {"0.75337822", "0.93172054", "0.97928804", "0.99321942", "0.99763006", "0.99912290"},
};

}  // namespace

TEST_CASE("asymptotic coefficients") {
  const GenSeries a = laplace::asymptotic_coeffs(3);
  CHECK(a.coeff_at(BigRat(1)).rat() == 1);
  CHECK(a.coeff_at(BigRat(2)).rat() == -2);
  CHECK(a.coeff_at(BigRat(3)).rat() == 6);
  const GenSeries big = laplace::asymptotic_coeffs(300);
  for (long k = 1; k <= 300; ++k) REQUIRE(big.coeff_at(BigRat(k)).sign() == (k % 2 == 1 ? 1 : -1));
}

TEST_CASE("transformed polynomial") {
  const GenSeries f2 = laplace::fbar_poly(2);
  CHECK(f2.coeff_at(BigRat(1)).rat() == 2);
  CHECK(f2.coeff_at(BigRat(2)).rat() == -2);
  for (long N = 1; N <= 100; ++N) {
    const GenSeries a = laplace::fbar_poly(N), b = laplace::fbar_closed_form(N);
    const GenSeries d = a - b;
    for (const auto& t : d.terms()) REQUIRE(t.coeff.is_zero());
    const BigInt top = N % 2 == 1 ? BigInt(factorial(N)) : BigInt(-factorial(N));
    REQUIRE(a.coeff_at(BigRat(N)).rat() == top);
  }
}

TEST_CASE("essential singularity identity at t=0.3, N=10") {
  const BigFloat t = num("0.3", 256);
  const BigFloat lhs = laplace::fbar_exact(t, 10) - evaluate(laplace::fbar_poly(10), t);
  const BigFloat rhs = BigFloat(factorial(10), 256) * pow(-t, 10L) * exp(-BigFloat(1L, 256) / t);
  CHECK(abs(lhs - rhs) <= abs(rhs) * num("1e-30"));
}

TEST_CASE("quadrature and series forms agree") {
  for (const char* x : {"0.05", "0.3", "2"}) {
    const BigFloat t = num(x, 160);
    CHECK(abs(laplace::fbar_quadrature(t, 12) - laplace::fbar_exact(t, 12)) < num("1e-35", 160));
  }
}

TEST_CASE("large-N limit of the transformed function") {
  CHECK(close(laplace::fbar_exact(num("1", 128), 1000000), "1", 1e-6));
}

TEST_CASE("integral oracle for f(M)") {
  CHECK(close(laplace::f_oracle(num("1e-4", 128)), "1", 1e-3));
  for (const char* m : {"0.01", "1", "20"}) {
    const BigFloat M = num(m, 128);
    CHECK(abs(laplace::f_oracle(M) - f_closed(M)) < num("1e-30", 128));
  }
  // f(M) - 1 - M(log M + gamma_E) = O(M^2 log M)
  const BigFloat M = num("1e-3", 128);
  const BigFloat lead = BigFloat(1L, 128) + M * (log(M) + const_euler(128));
  CHECK(abs(laplace::f_oracle(M) - lead) < num("1e-4", 128));
}

TEST_CASE("truncated asymptotic series stays within its first omitted term") {
  const BigFloat M = num("50", 128);
  const BigFloat f = laplace::f_oracle(M);
  const BigFloat part = evaluate(laplace::asymptotic_coeffs(10), BigFloat(1L, 128) / M);
  CHECK(abs(f - part) <= BigFloat(factorial(11), 128) / pow(M, 11L));
}

TEST_CASE("optimal truncation is near k = M") {
  const BigFloat M = num("20", 128);
  const BigFloat f = laplace::f_oracle(M);
  long best_k = 0;
  BigFloat best;
  for (long k = 1; k <= 40; ++k) {
    const BigFloat err = abs(f - evaluate(laplace::asymptotic_coeffs(k), BigFloat(1L, 128) / M));
    if (best_k == 0 || err < best) {
      best = err;
      best_k = k;
    }
  }
  CHECK(std::abs(best_k - 20) <= 2);
}

TEST_CASE("reduced polynomial") {
  CHECK(laplace::psi(7, 0).coeff_at(BigRat(3)).rat() == laplace::fbar_poly(7).coeff_at(BigRat(3)).rat());
  const GenSeries p = laplace::psi(2, 1);
  CHECK(p.coeff_at(BigRat(1)).rat() == 4);
  CHECK(p.coeff_at(BigRat(2)).rat() == -6);
}

TEST_CASE("PMS estimates reproduce the printed table") {
  const long orders[4] = {10, 20, 30, 40};
  for (int i = 0; i < 4; ++i) {
    for (long L = 0; L <= 5; ++L) {
      const Estimate e = laplace::pms_estimate(orders[i], L);
      CAPTURE(orders[i]);
      CAPTURE(L);
      CHECK(close(e.value, kTable1[i][L], 1e-8));
    }
  }
}

TEST_CASE("PMS estimates increase with N") {
  for (long L = 0; L <= 5; ++L) {
    BigFloat prev = BigFloat::zero(64);
    for (long N : {10L, 20L, 30L, 40L}) {
      const BigFloat v = laplace::pms_estimate(N, L).value;
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("limiting constant") {
  const BigFloat c = laplace::c_max(256);
  CHECK(close(c, "3.591121476668622", 1e-15));
  const BigFloat one(1L, 256);
  CHECK(abs(log(c) - one - one / c) < ldexp(BigFloat(4L, 256), -256));
  CHECK(abs(c - c_max_bisection(256)) < num("1e-30"));
}

TEST_CASE("N t* grows with N") {
  const auto seq = laplace::cstar_sequence(0, {20, 40, 60});
  CHECK(seq[0] < seq[1]);
  CHECK(seq[1] < seq[2]);
  CHECK(seq[2] < laplace::c_max(64));
}

TEST_CASE("reduced function at t = c_max / N for large N") {
  const char* const extrapolated[6] = {"0.78151", "0.95212", "0.98950", "0.99771", "0.99950", "0.99989"};
  const long N = 1000000;
  const BigFloat t = laplace::c_max(128) / N;
  for (long L = 0; L <= 5; ++L) CHECK(close(laplace::psi_exact(t, N, L), extrapolated[L], 1e-2));
}

TEST_CASE("two-point extrapolation") {
  const auto model = [](long N) { return num("0.9") * (BigFloat(1L, 256) - BigFloat(3L, 256) / N); };
  CHECK(close(laplace::extrapolate_pair(model(290), 290, model(300), 300), "0.9", 1e-60));
}

TEST_CASE("adaptive quadrature") {
  const BigFloat one(1L, 256);
  const BigFloat v = integrate([](const BigFloat& x) { return exp(-x * x); }, BigFloat::zero(256), one, 256);
  BigFloat erf1 = BigFloat::zero(256);
  mpfr_erf(erf1.get(), one.get(), MPFR_RNDN);
  CHECK(abs(v - sqrt(const_pi(256)) * erf1 / 2L) < num("1e-60"));
}
