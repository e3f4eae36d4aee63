#include "resum/errors.hpp"
#include "resum/numerics.hpp"
#include "support.hpp"

using namespace resum;
using testing::close;
using testing::num;
using testing::rel_close;

TEST_CASE("gamma at simple points") {
  CHECK(gamma(BigFloat(1L, 256)) == 1L);
  const BigFloat half = num("0.5");
  CHECK(rel_close(gamma(half), sqrt(const_pi(256)), 1e-70));
  // 5.5 * 4.5 * ... * 0.5 * sqrt(pi), built without gamma
  BigFloat prod = sqrt(const_pi(256));
  for (int k = 0; k <= 5; ++k) prod *= num(std::to_string(k) + ".5");
  CHECK(rel_close(gamma(num("6.5")), prod, 1e-70));
  CHECK(close(gamma(num("6.5")), "287.88527781504433", 1e-12));
}

TEST_CASE("gamma throws at poles") {
  CHECK_THROWS_AS(gamma(BigFloat(0L, 128)), PoleError);
  CHECK_THROWS_AS(gamma(BigFloat(-3L, 128)), PoleError);
}

TEST_CASE("gamma recurrence holds for random arguments") {
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int i = 0; i < 50; ++i) {
    const BigFloat x(dist(testing::rng()), 256);
    const BigFloat lhs = gamma(x + BigFloat(1L, 256));
    const BigFloat rhs = x * gamma(x);
    CHECK(abs(lhs - rhs) <= abs(rhs) * ldexp(BigFloat(8L, 256), -256));
  }
}

TEST_CASE("gamma_ratio") {
  const auto f = [](long a, long b, long c) {
    return gamma_ratio(BigFloat(a, 256), BigFloat(b, 256), BigFloat(c, 256));
  };
  CHECK(f(11, 6, 6) == 252L);
  for (long L = 1; L <= 4; ++L) CHECK(f(21, 1 - L, 21 + L).is_zero());
  const BigFloat r = gamma_ratio(BigFloat(5L, 256), num("6.5"), num("-0.5"));
  CHECK(r.sign() < 0);
  CHECK(close(r, "-0.02351726720434355", 1e-15));
  CHECK_THROWS_AS(gamma_ratio(BigFloat(-1L, 128), BigFloat(3L, 128), BigFloat(2L, 128)), PoleError);
  CHECK_THROWS_AS(gamma_ratio(BigFloat(-1L, 128), BigFloat(-2L, 128), BigFloat(2L, 128)), IndeterminateError);
}

TEST_CASE("gamma_ratio reproduces exact binomials") {
  for (long N = 0; N <= 40; ++N) {
    for (long n = 0; n <= N; ++n) {
      const BigFloat v = gamma_ratio(BigFloat(N + 1, 256), BigFloat(n + 1, 256), BigFloat(N - n + 1, 256));
      REQUIRE(v == BigFloat(binomial(N, n), 256));
    }
  }
}

TEST_CASE("half-integer gamma is exact") {
  CHECK(half_gamma_over_sqrt_pi(0) == 1);
  CHECK(half_gamma_over_sqrt_pi(3) == make_rat(15, 8));
  CHECK(half_gamma_over_sqrt_pi(-1) == -2);
}

TEST_CASE("rationals and scalars") {
  CHECK(parse_rat("6/-4") == make_rat(-3, 2));
  CHECK(rat_to_string(make_rat(10, 4)) == "5/2");
  const Scalar a(make_rat(1, 3));
  const Scalar b = a * Scalar(3L);
  CHECK(b.is_exact());
  CHECK(b.rat() == 1);
  const Scalar c = a + Scalar(BigFloat(1L, 128));
  CHECK_FALSE(c.is_exact());
  CHECK(c.precision() == 128);
}

TEST_CASE("decimal rendering is stable across precision") {
  const BigFloat x = num("0.667986259155777108270962016919860199430404936", 512);
  const std::string shown = x.to_string(25);
  CHECK(shown.rfind("0.6679862591557771082709620", 0) == 0);
  CHECK(x.with_precision(1024).to_string(25) == shown);
  CHECK(agreeing_digits(x, x.with_precision(100)) >= 28);
}

TEST_CASE("precision policy") {
  PrecisionPolicy p;
  CHECK(p.working_bits(0) >= 64);
  CHECK(p.working_bits(300) > p.working_bits(100));
}
