#include "resum/polyroot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "resum/errors.hpp"

namespace resum {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_exact(); });
}

Scalar Poly::coeff(long k) const {
  if (k < 0 || k > degree()) return Scalar();
  return coeffs_[static_cast<std::size_t>(k)];
}

Poly operator+(const Poly& a, const Poly& b) {
  const long n = std::max(a.degree(), b.degree()) + 1;
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(n, 0L)));
  for (long k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Scalar(-1L) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.degree() < 0 || b.degree() < 0) return Poly();
  std::vector<Scalar> c(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (long i = 0; i <= a.degree(); ++i) {
    const Scalar& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (long j = 0; j <= b.degree(); ++j) {
      auto& slot = c[static_cast<std::size_t>(i + j)];
      slot = slot + ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return Poly(std::move(c));
}

Poly operator*(const Scalar& c, const Poly& p) {
  std::vector<Scalar> out;
  out.reserve(p.coeffs_.size());
  for (const auto& x : p.coeffs_) out.push_back(c * x);
  return Poly(std::move(out));
}

BigFloat evaluate(const Poly& p, const BigFloat& x) {
  const auto prec = x.precision();
  if (p.degree() < 0) return BigFloat::zero(prec);
  BigFloat acc = p.coeffs().back().to_float(prec);
  for (long k = p.degree() - 1; k >= 0; --k) {
    acc *= x;
    acc += p.coeffs()[static_cast<std::size_t>(k)].to_float(prec);
  }
  return acc;
}

Poly derivative(const Poly& p) {
  std::vector<Scalar> c;
  for (long k = 1; k <= p.degree(); ++k) c.push_back(Scalar(k) * p.coeff(k));
  return Poly(std::move(c));
}

Poly euler_derivative(const Poly& p) {
  std::vector<Scalar> c;
  for (long k = 0; k <= p.degree(); ++k) c.push_back(Scalar(k) * p.coeff(k));
  return Poly(std::move(c));
}

BigFloat default_real_tolerance(BigFloat::prec_t prec) {
  return ldexp(BigFloat(1L, prec), -static_cast<long>(prec / 3));
}

namespace {

using prec_t = BigFloat::prec_t;

/// log2 |x| as a double; -inf for zero.
double log2_abs(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return -HUGE_VAL;
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

double log2_abs(const BigFloat& re, const BigFloat& im) {
  const double a = log2_abs(re.get());
  const double b = log2_abs(im.get());
  const double hi = std::max(a, b);
  if (!std::isfinite(hi)) return hi;
  return hi + 0.5 * std::log2(1.0 + std::exp2(2.0 * (std::min(a, b) - hi)));
}

/// Mutable state for one Aberth sweep at a fixed precision. All temporaries
/// are allocated once per stage.
class AberthStage {
 public:
  AberthStage(const std::vector<BigFloat>& coeffs, prec_t prec)
      : prec_(prec), degree_(static_cast<long>(coeffs.size()) - 1) {
    c_.reserve(coeffs.size());
    abs_c_.reserve(coeffs.size());
    for (const auto& x : coeffs) {
      c_.push_back(x.with_precision(prec));
      abs_c_.push_back(abs(c_.back()));
    }
    for (auto* t : {&pr_, &pi_, &dr_, &di_, &t1_, &t2_, &mag_, &absz_, &nr_, &ni_, &sr_, &si_, &u_, &v_, &den_,
                    &wr_, &wi_, &qr_, &qi_})
      *t = BigFloat::zero(prec);
  }

  /// One Gauss-Seidel Aberth update of root i. Returns true when the root
  /// satisfies the convergence test at this precision.
  bool update(std::vector<Complex>& z, std::size_t i) {
    const BigFloat& x = z[i].re;
    const BigFloat& y = z[i].im;
    horner(x, y);

    const double lz = log2_abs(x, y);
    const double lp = log2_abs(pr_, pi_);
    const double tol = -static_cast<double>(prec_) + 20.0;
    // Residual at rounding level: z is an exact root of a nearby polynomial.
    const double backward = log2_abs(mag_.get()) + std::log2(static_cast<double>(degree_) + 1.0) + tol;
    if (!std::isfinite(lp) || lp <= backward) return true;

    // Newton ratio N = p / p'
    if (dr_.is_zero() && di_.is_zero()) {
      // Stationary point of p: nudge off it.
      mpfr_mul_d(z[i].re.get(), x.get(), 1.0 + 1e-3, MPFR_RNDN);
      mpfr_add_d(z[i].im.get(), y.get(), 1e-3, MPFR_RNDN);
      return false;
    }
    cdiv(pr_, pi_, dr_, di_, nr_, ni_);

    // S = sum_{j != i} 1 / (z_i - z_j)
    mpfr_set_zero(sr_.get(), 1);
    mpfr_set_zero(si_.get(), 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == i) continue;
      mpfr_sub(u_.get(), x.get(), z[j].re.get(), MPFR_RNDN);
      mpfr_sub(v_.get(), y.get(), z[j].im.get(), MPFR_RNDN);
      mpfr_sqr(t1_.get(), u_.get(), MPFR_RNDN);
      mpfr_sqr(t2_.get(), v_.get(), MPFR_RNDN);
      mpfr_add(den_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
      if (mpfr_zero_p(den_.get())) continue;
      mpfr_div(t1_.get(), u_.get(), den_.get(), MPFR_RNDN);
      mpfr_div(t2_.get(), v_.get(), den_.get(), MPFR_RNDN);
      mpfr_add(sr_.get(), sr_.get(), t1_.get(), MPFR_RNDN);
      mpfr_sub(si_.get(), si_.get(), t2_.get(), MPFR_RNDN);
    }
    // w = 1 - N S ;  delta = N / w
    mpfr_mul(t1_.get(), nr_.get(), sr_.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), ni_.get(), si_.get(), MPFR_RNDN);
    mpfr_sub(wr_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_ui_sub(wr_.get(), 1, wr_.get(), MPFR_RNDN);
    mpfr_mul(t1_.get(), nr_.get(), si_.get(), MPFR_RNDN);
    mpfr_mul(t2_.get(), ni_.get(), sr_.get(), MPFR_RNDN);
    mpfr_add(wi_.get(), t1_.get(), t2_.get(), MPFR_RNDN);
    mpfr_neg(wi_.get(), wi_.get(), MPFR_RNDN);
    if (mpfr_zero_p(wr_.get()) && mpfr_zero_p(wi_.get())) {
      qr_ = nr_;
      qi_ = ni_;
    } else {
      cdiv(nr_, ni_, wr_, wi_, qr_, qi_);
    }
    mpfr_sub(z[i].re.get(), z[i].re.get(), qr_.get(), MPFR_RNDN);
    mpfr_sub(z[i].im.get(), z[i].im.get(), qi_.get(), MPFR_RNDN);
    return log2_abs(qr_, qi_) <= lz + tol;
  }

  /// max |P(z)| / max |c_k| over the given roots.
  BigFloat residual(const std::vector<Complex>& z) {
    BigFloat norm = BigFloat::zero(prec_);
    for (const auto& a : abs_c_) norm = max(norm, a);
    BigFloat worst = BigFloat::zero(prec_);
    for (const auto& r : z) {
      horner(r.re, r.im);
      mpfr_hypot(t1_.get(), pr_.get(), pi_.get(), MPFR_RNDN);
      worst = max(worst, t1_);
    }
    return norm.is_zero() ? worst : worst / norm;
  }

 private:
  // (pr, pi) = P(z), (dr, di) = P'(z), mag = sum |c_k| |z|^k
  void horner(const BigFloat& x, const BigFloat& y) {
    mpfr_hypot(absz_.get(), x.get(), y.get(), MPFR_RNDN);
    mpfr_set(pr_.get(), c_[static_cast<std::size_t>(degree_)].get(), MPFR_RNDN);
    mpfr_set_zero(pi_.get(), 1);
    mpfr_set_zero(dr_.get(), 1);
    mpfr_set_zero(di_.get(), 1);
    mpfr_set(mag_.get(), abs_c_[static_cast<std::size_t>(degree_)].get(), MPFR_RNDN);
    for (long k = degree_ - 1; k >= 0; --k) {
      // d = d*z + p
      mpfr_mul(t1_.get(), dr_.get(), x.get(), MPFR_RNDN);
      mpfr_fms(t1_.get(), di_.get(), y.get(), t1_.get(), MPFR_RNDN);  // di*y - dr*x
      mpfr_mul(t2_.get(), dr_.get(), y.get(), MPFR_RNDN);
      mpfr_fma(t2_.get(), di_.get(), x.get(), t2_.get(), MPFR_RNDN);
      mpfr_sub(dr_.get(), pr_.get(), t1_.get(), MPFR_RNDN);
      mpfr_add(di_.get(), t2_.get(), pi_.get(), MPFR_RNDN);
      // p = p*z + c_k
      mpfr_mul(t1_.get(), pr_.get(), x.get(), MPFR_RNDN);
      mpfr_fms(t1_.get(), pi_.get(), y.get(), t1_.get(), MPFR_RNDN);
      mpfr_mul(t2_.get(), pr_.get(), y.get(), MPFR_RNDN);
      mpfr_fma(t2_.get(), pi_.get(), x.get(), t2_.get(), MPFR_RNDN);
      mpfr_sub(pr_.get(), c_[static_cast<std::size_t>(k)].get(), t1_.get(), MPFR_RNDN);
      mpfr_swap(pi_.get(), t2_.get());
      // mag = mag*|z| + |c_k|
      mpfr_fma(mag_.get(), mag_.get(), absz_.get(), abs_c_[static_cast<std::size_t>(k)].get(), MPFR_RNDN);
    }
  }

  // (or, oi) = (ar + i ai) / (br + i bi); uses u_, v_, den_ as scratch.
  void cdiv(const BigFloat& ar, const BigFloat& ai, const BigFloat& br, const BigFloat& bi, BigFloat& out_r,
            BigFloat& out_i) {
    mpfr_sqr(u_.get(), br.get(), MPFR_RNDN);
    mpfr_fma(den_.get(), bi.get(), bi.get(), u_.get(), MPFR_RNDN);
    mpfr_mul(u_.get(), ar.get(), br.get(), MPFR_RNDN);
    mpfr_fma(u_.get(), ai.get(), bi.get(), u_.get(), MPFR_RNDN);
    mpfr_mul(v_.get(), ai.get(), br.get(), MPFR_RNDN);
    mpfr_fms(v_.get(), ar.get(), bi.get(), v_.get(), MPFR_RNDN);  // ar*bi - ai*br
    mpfr_div(out_r.get(), u_.get(), den_.get(), MPFR_RNDN);
    mpfr_div(out_i.get(), v_.get(), den_.get(), MPFR_RNDN);
    mpfr_neg(out_i.get(), out_i.get(), MPFR_RNDN);
  }

  prec_t prec_;
  long degree_;
  std::vector<BigFloat> c_;
  std::vector<BigFloat> abs_c_;
  BigFloat pr_, pi_, dr_, di_, t1_, t2_, mag_, absz_, nr_, ni_, sr_, si_, u_, v_, den_, wr_, wi_, qr_, qi_;
};

/// Start points from the upper convex hull of (k, log2|c_k|).
std::vector<Complex> newton_polygon_start(const std::vector<BigFloat>& c, prec_t prec) {
  const long d = static_cast<long>(c.size()) - 1;
  std::vector<double> lg(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) lg[k] = log2_abs(c[k].get());

  std::vector<long> hull;
  for (long k = 0; k <= d; ++k) {
    if (!std::isfinite(lg[static_cast<std::size_t>(k)])) continue;
    while (hull.size() >= 2) {
      const long a = hull[hull.size() - 2];
      const long b = hull.back();
      const double cross = (lg[static_cast<std::size_t>(b)] - lg[static_cast<std::size_t>(a)]) * static_cast<double>(k - a) -
                           (lg[static_cast<std::size_t>(k)] - lg[static_cast<std::size_t>(a)]) * static_cast<double>(b - a);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }

  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(d));
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const long i = hull[h];
    const long j = hull[h + 1];
    const long cnt = j - i;
    const double log2r = (lg[static_cast<std::size_t>(i)] - lg[static_cast<std::size_t>(j)]) / static_cast<double>(cnt);
    const double whole = std::floor(log2r);
    const double frac = std::exp2(log2r - whole);
    for (long m = 0; m < cnt; ++m) {
      const double ang = two_pi * (static_cast<double>(m) / static_cast<double>(cnt)) + two_pi / static_cast<double>(d) * static_cast<double>(h) + 0.4;
      BigFloat re(frac * std::cos(ang), prec);
      BigFloat im(frac * std::sin(ang), prec);
      z.push_back(Complex{ldexp(re, static_cast<long>(whole)), ldexp(im, static_cast<long>(whole))});
    }
  }
  return z;
}

/// Pair each root with the nearest conjugate partner and make the pair
/// exactly conjugate; roots that pair with themselves become real.
void symmetrize(std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const double self = log2_abs(z[i].im.get()) + 1.0;
    std::size_t best = n;
    double best_d = self;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || done[j]) continue;
      // distance from z_i to conj(z_j)
      BigFloat dr = z[i].re - z[j].re;
      BigFloat di = z[i].im + z[j].im;
      const double dd = log2_abs(dr, di);
      if (dd < best_d) {
        best_d = dd;
        best = j;
      }
    }
    done[i] = true;
    if (best == n) {
      z[i].im = BigFloat::zero(z[i].im.precision());
      continue;
    }
    done[best] = true;
    BigFloat re = (z[i].re + z[best].re) / 2L;
    BigFloat im = (z[i].im - z[best].im) / 2L;
    z[i].re = re;
    z[i].im = im;
    z[best].re = re;
    z[best].im = -im;
  }
}

}  // namespace

RootSet all_roots(const Poly& p, prec_t prec, const RootOptions& options) {
  if (p.degree() < 1) throw DomainError("all_roots needs a polynomial of degree >= 1");

  std::vector<BigFloat> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(x.to_float(prec));
  std::size_t zeros = 0;
  while (zeros < c.size() && c[zeros].is_zero()) ++zeros;
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));

  RootSet out;
  out.residual_bound = BigFloat::zero(prec);
  const long d = static_cast<long>(c.size()) - 1;
  std::vector<Complex> z;
  if (d == 1) {
    z.push_back(Complex{-c[0] / c[1], BigFloat::zero(prec)});
  } else if (d >= 2) {
    // Warm-start at a fraction of the target precision, then refine.
    std::vector<prec_t> stages;
    if (prec > 512) stages.push_back(std::max<prec_t>(256, prec / 4));
    stages.push_back(prec);

    z = newton_polygon_start(c, stages.front());
    int iterations = 0;
    for (std::size_t s = 0; s < stages.size(); ++s) {
      const prec_t sp = stages[s];
      for (auto& r : z) {
        r.re = r.re.with_precision(sp);
        r.im = r.im.with_precision(sp);
      }
      AberthStage stage(c, sp);
      std::vector<bool> converged(z.size(), false);
      const bool final_stage = s + 1 == stages.size();
      const int cap = final_stage ? options.max_iterations : options.max_iterations / 2;
      int it = 0;
      for (; it < cap; ++it) {
        bool all = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
          if (converged[i]) continue;
          converged[i] = stage.update(z, i);
          all = all && converged[i];
        }
        if (all) break;
      }
      iterations += it;
      if (final_stage && it == cap) {
        throw ConvergenceError("Aberth iteration did not converge for degree " + std::to_string(d) + " after " +
                               std::to_string(iterations) + " iterations");
      }
    }
    symmetrize(z);
    AberthStage check(c, prec);
    out.residual_bound = check.residual(z);
  }
  for (std::size_t k = 0; k < zeros; ++k) out.roots.push_back(Complex{BigFloat::zero(prec), BigFloat::zero(prec)});
  for (auto& r : z) out.roots.push_back(std::move(r));
  return out;
}

std::vector<BigFloat> positive_real_roots(const RootSet& rs, const BigFloat& tol) {
  std::vector<BigFloat> out;
  for (const auto& r : rs.roots) {
    if (r.re.sign() <= 0) continue;
    BigFloat scale = BigFloat(1L, r.re.precision()) + abs(r.re);
    if (abs(r.im) < tol * scale) out.push_back(r.re);
  }
  std::sort(out.begin(), out.end(), [](const BigFloat& a, const BigFloat& b) { return a < b; });
  std::vector<BigFloat> dedup;
  for (auto& x : out) {
    if (!dedup.empty()) {
      BigFloat scale = BigFloat(1L, x.precision()) + abs(x);
      if (abs(x - dedup.back()) < tol * scale) continue;
    }
    dedup.push_back(std::move(x));
  }
  return dedup;
}

}  // namespace resum
