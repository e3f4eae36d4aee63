#include "resum/pade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "resum/errors.hpp"

namespace resum {

namespace {

using prec_t = BigFloat::prec_t;

/// Dense coefficients c_0..c_n of the series; exponents must be integers >= 0.
std::vector<Scalar> dense_coeffs(const GenSeries& s, long n) {
  std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
  for (const auto& t : s.terms()) {
    if (t.exponent.get_den() != 1 || t.exponent < 0) {
      throw DomainError("pade needs integer exponents >= 0, got " + t.exponent.get_str());
    }
    const BigInt& k = t.exponent.get_num();
    if (k <= n) c[k.get_ui()] = t.coeff;
  }
  return c;
}

/// Fraction-free (Bareiss) elimination of a square integer system A q = b.
/// Returns false if A is singular.
bool solve_bareiss(std::vector<std::vector<BigInt>> a, std::vector<BigRat>& q) {
  const std::size_t n = a.size();
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k) std::swap(a[piv], a[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        BigInt v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  q.assign(n, BigRat(0));
  for (std::size_t i = n; i-- > 0;) {
    BigRat acc(a[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * q[j];
    q[i] = acc / a[i][i];
    q[i].canonicalize();
  }
  return true;
}

/// Gaussian elimination with full pivoting in floats. Returns false when the
/// best remaining pivot is at rounding level.
bool solve_full_pivot(std::vector<std::vector<BigFloat>> a, std::vector<BigFloat>& q, prec_t prec) {
  const std::size_t n = a.size();
  std::vector<std::size_t> col(n);
  std::iota(col.begin(), col.end(), 0);
  BigFloat scale = BigFloat::zero(prec);
  for (const auto& row : a)
    for (std::size_t j = 0; j < n; ++j) scale = max(scale, abs(row[j]));
  if (scale.is_zero()) return n == 0;
  const BigFloat tiny = ldexp(scale, -static_cast<long>(prec) + 20);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    BigFloat best = BigFloat::zero(prec);
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        BigFloat m = abs(a[i][j]);
        if (m > best) {
          best = m;
          pr = i;
          pc = j;
        }
      }
    if (best <= tiny) return false;
    std::swap(a[pr], a[k]);
    if (pc != k) {
      for (auto& row : a) std::swap(row[pc], row[k]);
      std::swap(col[pc], col[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const BigFloat f = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j <= n; ++j) a[i][j] -= f * a[k][j];
      a[i][k] = BigFloat::zero(prec);
    }
  }
  std::vector<BigFloat> y(n);
  for (std::size_t i = n; i-- > 0;) {
    BigFloat acc = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * y[j];
    y[i] = acc / a[i][i];
  }
  q.assign(n, BigFloat::zero(prec));
  for (std::size_t i = 0; i < n; ++i) q[col[i]] = y[i];
  return true;
}

/// Denominator coefficients q_1..q_tau, or nullopt-like false when singular.
bool denominator(const std::vector<Scalar>& c, long rho, long tau, bool exact, prec_t prec,
                 std::vector<Scalar>& q) {
  q.assign(1, Scalar(1L));
  if (tau == 0) return true;
  const auto T = static_cast<std::size_t>(tau);
  auto at = [&](long m) -> const Scalar* { return m < 0 ? nullptr : &c[static_cast<std::size_t>(m)]; };

  if (exact) {
    BigInt lcm = 1;
    for (long m = std::max(0L, rho - tau + 1); m <= rho + tau; ++m)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c[static_cast<std::size_t>(m)].rat().get_den_mpz_t());
    auto scaled = [&](long m) -> BigInt {
      const Scalar* s = at(m);
      if (s == nullptr || s->is_zero()) return BigInt(0);
      return BigInt(s->rat().get_num() * (lcm / s->rat().get_den()));
    };
    std::vector<std::vector<BigInt>> a(T, std::vector<BigInt>(T + 1));
    for (long i = 1; i <= tau; ++i) {
      auto& row = a[static_cast<std::size_t>(i - 1)];
      for (long j = 1; j <= tau; ++j) row[static_cast<std::size_t>(j - 1)] = scaled(rho + i - j);
      row[T] = -scaled(rho + i);
    }
    std::vector<BigRat> sol;
    if (!solve_bareiss(std::move(a), sol)) return false;
    for (auto& x : sol) q.emplace_back(std::move(x));
    return true;
  }

  auto flt = [&](long m) {
    const Scalar* s = at(m);
    return s == nullptr ? BigFloat::zero(prec) : s->to_float(prec);
  };
  std::vector<std::vector<BigFloat>> a(T, std::vector<BigFloat>(T + 1));
  for (long i = 1; i <= tau; ++i) {
    auto& row = a[static_cast<std::size_t>(i - 1)];
    for (long j = 1; j <= tau; ++j) row[static_cast<std::size_t>(j - 1)] = flt(rho + i - j);
    row[T] = -flt(rho + i);
  }
  std::vector<BigFloat> sol;
  if (!solve_full_pivot(std::move(a), sol, prec)) return false;
  for (auto& x : sol) q.emplace_back(std::move(x));
  return true;
}

}  // namespace

PadeApprox pade(const GenSeries& s, long rho, long tau, const PadeOptions& options) {
  if (rho < 0 || tau < 0) throw RangeError("pade needs rho, tau >= 0");
  const long n = rho + tau;
  if (s.order() > 0 && n > s.order()) {
    throw RangeError("pade [" + std::to_string(rho) + "/" + std::to_string(tau) + "] exceeds series order " +
                     std::to_string(s.order()));
  }
  const std::vector<Scalar> c = dense_coeffs(s, n);
  const bool exact = n <= options.exact_limit &&
                     std::all_of(c.begin(), c.end(), [](const Scalar& x) { return x.is_exact(); });
  const prec_t prec = options.prec > 0 ? options.prec : PrecisionPolicy::from_env().working_bits(s.order());

  PadeApprox out;
  out.source_order = s.order();
  long r = rho, t = tau;
  std::vector<Scalar> q;
  while (!denominator(c, r, t, exact, prec, q)) {
    if (!options.allow_deflation) {
      throw DegenerateError("singular Pade system for [" + std::to_string(rho) + "/" + std::to_string(tau) + "]");
    }
    out.deflated = true;
    if (r > 0) --r;
    --t;
  }
  std::vector<Scalar> p(static_cast<std::size_t>(r) + 1);
  for (long k = 0; k <= r; ++k) {
    Scalar acc;
    for (long j = 0; j <= std::min(k, t); ++j) {
      const Scalar& cj = c[static_cast<std::size_t>(k - j)];
      if (cj.is_zero()) continue;
      acc = acc + q[static_cast<std::size_t>(j)] * (exact ? cj : Scalar(cj.to_float(prec)));
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  out.numer = Poly(std::move(p));
  out.denom = Poly(std::move(q));
  out.rho = r;
  out.tau = t;
  return out;
}

Scalar limit_at_infinity(const PadeApprox& p) {
  if (p.rho != p.tau) throw RangeError("limit_at_infinity needs a diagonal approximant");
  const long dn = p.numer.degree();
  const long dd = p.denom.degree();
  if (dn < dd) return Scalar();
  if (dn > dd) throw RangeError("approximant diverges as t -> infinity");
  return p.numer.coeff(dn) / p.denom.coeff(dd);
}

BigFloat evaluate(const PadeApprox& p, const BigFloat& t) {
  const BigFloat den = evaluate(p.denom, t);
  if (den.is_zero()) throw PoleError("Pade approximant evaluated at a pole");
  return evaluate(p.numer, t) / den;
}

std::pair<RootSet, RootSet> zero_pole_map(const PadeApprox& p, BigFloat::prec_t prec) {
  auto roots = [&](const Poly& q) {
    if (q.degree() < 1) return RootSet{{}, BigFloat::zero(prec)};
    return all_roots(q, prec);
  };
  return {roots(p.numer), roots(p.denom)};
}

long cancelling_pairs(const RootSet& zeros, const RootSet& poles, double rel_tol, bool left_half_only) {
  struct Cand {
    double dist;
    std::size_t z, p;
  };
  std::vector<Cand> cands;
  for (std::size_t j = 0; j < poles.roots.size(); ++j) {
    const auto& pl = poles.roots[j];
    if (left_half_only && pl.re.sign() >= 0) continue;
    const double pr = pl.re.to_double(), pi = pl.im.to_double();
    const double mag = std::hypot(pr, pi);
    for (std::size_t i = 0; i < zeros.roots.size(); ++i) {
      const double d = std::hypot(zeros.roots[i].re.to_double() - pr, zeros.roots[i].im.to_double() - pi);
      if (d < rel_tol * mag) cands.push_back({d / mag, i, j});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.dist < b.dist; });
  std::vector<bool> zu(zeros.roots.size()), pu(poles.roots.size());
  long count = 0;
  for (const auto& c : cands) {
    if (zu[c.z] || pu[c.p]) continue;
    zu[c.z] = pu[c.p] = true;
    ++count;
  }
  return count;
}

Estimate near_diagonal_stationary(const PadeApprox& p, BigFloat::prec_t prec) {
  const long gap = std::abs(p.rho - p.tau);
  if (gap < 1 || gap > 2) throw RangeError("near_diagonal_stationary needs |rho - tau| in {1, 2}");
  const Poly& P = p.numer;
  const Poly& Q = p.denom;
  const Poly dP = derivative(P);
  const Poly dQ = derivative(Q);
  const Poly W = dP * Q - P * dQ;
  if (W.degree() < 1) throw NoStationaryPoint("approximant has no critical points");
  const Poly dW = derivative(W);

  const RootSet rs = all_roots(W, prec);
  const std::vector<BigFloat> crit = positive_real_roots(rs, default_real_tolerance(prec));
  const RootSet poles = Q.degree() >= 1 ? all_roots(Q, prec) : RootSet{{}, BigFloat::zero(prec)};
  const bool pole_on_axis = !positive_real_roots(poles, default_real_tolerance(prec)).empty();

  struct Cand {
    Estimate e;
    BigFloat score;
  };
  std::vector<Cand> cands;
  for (const auto& t : crit) {
    const BigFloat q = evaluate(Q, t);
    if (q.is_zero()) continue;
    const BigFloat w = evaluate(W, t);
    const BigFloat value = evaluate(P, t) / q;
    if (value.is_zero()) continue;
    const BigFloat d1 = t * w / (q * q);                                        // t R'
    const BigFloat r2 = (evaluate(dW, t) * q - w * evaluate(dQ, t) * 2L) / (q * q * q);  // R''
    const BigFloat d2 = d1 + t * t * r2;
    Estimate e;
    e.value = value;
    e.location_t = t;
    e.criterion = Criterion::plateau_top;
    e.first_deriv = d1;
    e.second_deriv = d2;
    e.order_N = p.source_order;
    e.pole_on_axis = pole_on_axis;
    cands.push_back({e, abs(d2 / value)});
  }
  if (cands.empty()) throw NoStationaryPoint("no positive real critical point");

  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i) {
    if (cands[i].score < cands[best].score) best = i;
  }
  // Near ties go to the largest t.
  const BigFloat slack = cands[best].score * BigFloat(1.001, prec);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (cands[i].score <= slack && cands[i].e.location_t > cands[best].e.location_t) best = i;
  }
  return cands[best].e;
}

}  // namespace resum
