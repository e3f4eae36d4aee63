#include <algorithm>

#include "resum/errors.hpp"
#include "resum/polyroot.hpp"
#include "support.hpp"

using namespace resum;
using testing::num;

namespace {

Poly from_longs(const std::vector<long>& c) {
  std::vector<Scalar> s(c.begin(), c.end());
  return Poly(std::move(s));
}

/// prod (z - r_k) for exact rational roots
Poly from_roots(const std::vector<BigRat>& roots) {
  Poly p = from_longs({1});
  for (const auto& r : roots) p = p * Poly({Scalar(BigRat(-r)), Scalar(1L)});
  return p;
}

std::vector<BigFloat> sorted_real_parts(const RootSet& rs) {
  std::vector<BigFloat> out;
  for (const auto& r : rs.roots) out.push_back(r.re);
  std::sort(out.begin(), out.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
  return out;
}

}  // namespace

TEST_CASE("Poly arithmetic and derivatives") {
  const Poly p = from_longs({1, 2, 3});
  CHECK(p.degree() == 2);
  CHECK(from_longs({1, 0, 0}).degree() == 0);
  CHECK(Poly().degree() == -1);
  CHECK(evaluate(p, num("2")) == 17L);
  CHECK(evaluate(derivative(p), num("2")) == 14L);
  CHECK(evaluate(euler_derivative(p), num("2")) == 28L);
  CHECK(evaluate(p * p, num("2")) == 289L);
}

TEST_CASE("simple roots") {
  const RootSet rs = all_roots(from_longs({-1, 0, 1}), 128);
  REQUIRE(rs.roots.size() == 2);
  const auto re = sorted_real_parts(rs);
  CHECK(re[0] == -1L);
  CHECK(re[1] == 1L);

  const RootSet cube = all_roots(from_longs({0, 0, 0, 1}), 128);
  REQUIRE(cube.roots.size() == 3);
  for (const auto& r : cube.roots) CHECK((r.re.is_zero() && r.im.is_zero()));
  CHECK(cube.residual_bound.is_zero());
}

TEST_CASE("degree-20 product with known roots") {
  std::vector<BigRat> roots;
  for (long k = 1; k <= 20; ++k) roots.push_back(make_rat(k, 10));
  const RootSet rs = all_roots(from_roots(roots), 512);
  REQUIRE(rs.roots.size() == 20);
  const auto re = sorted_real_parts(rs);
  for (long k = 1; k <= 20; ++k) {
    CHECK(abs(re[static_cast<std::size_t>(k - 1)] - BigFloat(make_rat(k, 10), 512)) < num("1e-20", 512));
  }
  for (const auto& r : rs.roots) CHECK(abs(r.im) < num("1e-20", 512));
}

TEST_CASE("Vieta relations") {
  std::uniform_int_distribution<int> c(-30, 30);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<long> co(9);
    for (auto& x : co) x = c(testing::rng());
    co.front() = co.front() == 0 ? 3 : co.front();
    co.back() = co.back() == 0 ? 2 : co.back();
    const Poly p = from_longs(co);
    const RootSet rs = all_roots(p, 256);
    const long d = p.degree();
    REQUIRE(static_cast<long>(rs.roots.size()) == d);
    BigFloat sre = BigFloat::zero(256), sim = BigFloat::zero(256);
    BigFloat pre(1L, 256), pim = BigFloat::zero(256);
    for (const auto& r : rs.roots) {
      sre += r.re;
      sim += r.im;
      const BigFloat nre = pre * r.re - pim * r.im;
      pim = pre * r.im + pim * r.re;
      pre = nre;
    }
    const BigFloat lead(co.back(), 256);
    const BigFloat sum = BigFloat(-co[co.size() - 2], 256) / lead;
    const BigFloat prod = BigFloat(d % 2 == 0 ? co[0] : -co[0], 256) / lead;
    const BigFloat tol = num("1e-15", 256);
    CHECK(abs(sre - sum) <= tol * (abs(sum) + BigFloat(1L, 256)));
    CHECK(abs(sim) <= tol);
    CHECK(abs(pre - prod) <= tol * abs(prod));
    CHECK(abs(pim) <= tol * abs(prod));
  }
}

TEST_CASE("roots are stable under doubled precision") {
  const Poly p = from_longs({7, -3, 0, 5, 1, -2, 4});
  const RootSet a = all_roots(p, 256), b = all_roots(p, 512);
  REQUIRE(a.roots.size() == b.roots.size());
  for (const auto& r : a.roots) {
    bool found = false;
    for (const auto& s : b.roots) {
      const BigFloat dist = abs(r.re - s.re) + abs(r.im - s.im);
      if (dist <= num("1e-15", 512) * (abs(s.re) + abs(s.im))) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("positive_real_roots") {
  RootSet rs;
  rs.roots = {{BigFloat(-1L, 128), BigFloat::zero(128)}, {BigFloat(1L, 128), BigFloat::zero(128)}};
  auto pos = positive_real_roots(rs, num("1e-30", 128));
  REQUIRE(pos.size() == 1);
  CHECK(pos[0] == 1L);

  rs.roots = {{BigFloat::zero(128), BigFloat(1L, 128)}, {BigFloat::zero(128), BigFloat(-1L, 128)}};
  CHECK(positive_real_roots(rs, num("0.5", 128)).empty());
}

TEST_CASE("iteration cap raises ConvergenceError") {
  std::vector<BigRat> roots;
  for (long k = 1; k <= 30; ++k) roots.push_back(make_rat(k, 1));
  CHECK_THROWS_AS(all_roots(from_roots(roots), 256, RootOptions{1}), ConvergenceError);
}
