#include "resum/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "resum/errors.hpp"

namespace resum {

namespace {

constexpr int kNodes = 24;
constexpr int kMaxDepth = 80;

struct Rule {
  std::vector<BigFloat> x;  // nodes on [-1, 1]
  std::vector<BigFloat> w;
};

/// Legendre nodes by Newton iteration on the three-term recurrence.
Rule legendre_rule(BigFloat::prec_t prec) {
  Rule r;
  const int n = kNodes;
  const BigFloat one(1L, prec);
  for (int i = 1; i <= n; ++i) {
    BigFloat x(std::cos(std::numbers::pi * (i - 0.25) / (n + 0.5)), prec);
    BigFloat dp = BigFloat::zero(prec);
    for (int it = 0; it < 200; ++it) {
      BigFloat p0 = one;
      BigFloat p1 = x;
      for (int k = 2; k <= n; ++k) {
        BigFloat p2 = (BigFloat(2L * k - 1, prec) * x * p1 - BigFloat(k - 1L, prec) * p0) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = BigFloat(static_cast<long>(n), prec) * (x * p1 - p0) / (x * x - one);
      const BigFloat dx = p1 / dp;
      x -= dx;
      if (dx.is_zero() || dx.exponent2() < -static_cast<long>(prec) + 4) break;
    }
    r.x.push_back(x);
    r.w.push_back(BigFloat(2L, prec) / ((one - x * x) * dp * dp));
  }
  return r;
}

struct Integrator {
  const std::function<BigFloat(const BigFloat&)>& f;
  const Rule& rule;
  BigFloat::prec_t prec;
  BigFloat tol;

  BigFloat panel(const BigFloat& a, const BigFloat& b) const {
    const BigFloat mid = (a + b) / 2L;
    const BigFloat half = (b - a) / 2L;
    BigFloat sum = BigFloat::zero(prec);
    for (std::size_t i = 0; i < rule.x.size(); ++i) sum += rule.w[i] * f(mid + half * rule.x[i]);
    return sum * half;
  }

  BigFloat adapt(const BigFloat& a, const BigFloat& b, const BigFloat& whole, int depth) const {
    const BigFloat mid = (a + b) / 2L;
    const BigFloat left = panel(a, mid);
    const BigFloat right = panel(mid, b);
    const BigFloat both = left + right;
    if (abs(both - whole) <= tol) return both;
    if (depth >= kMaxDepth) throw ConvergenceError("quadrature bisection depth limit reached");
    return adapt(a, mid, left, depth + 1) + adapt(mid, b, right, depth + 1);
  }
};

}  // namespace

BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a, const BigFloat& b,
                   BigFloat::prec_t prec) {
  const Rule rule = legendre_rule(prec);
  Integrator in{f, rule, prec, BigFloat::zero(prec)};
  // A coarse pass sets the error scale for the adaptive pass.
  constexpr long kStart = 16;
  const BigFloat width = (b - a) / kStart;
  std::vector<BigFloat> parts;
  BigFloat scale = BigFloat::zero(prec);
  for (long i = 0; i < kStart; ++i) {
    parts.push_back(in.panel(a + width * i, a + width * (i + 1)));
    scale += abs(parts.back());
  }
  if (scale.is_zero()) return scale;
  in.tol = ldexp(scale, -static_cast<long>(prec) + 24);
  BigFloat total = BigFloat::zero(prec);
  for (long i = 0; i < kStart; ++i) total += in.adapt(a + width * i, a + width * (i + 1), parts[static_cast<std::size_t>(i)], 0);
  return total;
}

}  // namespace resum
