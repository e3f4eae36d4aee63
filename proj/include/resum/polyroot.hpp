#pragma once

#include <vector>

#include "resum/numerics.hpp"

namespace resum {

struct Complex {
  BigFloat re;
  BigFloat im;
};

/// Real polynomial, ascending coefficients. Trailing zero coefficients are
/// trimmed on construction so the leading coefficient is nonzero (the zero
/// polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_exact() const;
  Scalar coeff(long k) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, const Poly& p);

 private:
  std::vector<Scalar> coeffs_;
};

BigFloat evaluate(const Poly& p, const BigFloat& x);
Poly derivative(const Poly& p);
/// z d/dz: coefficient k is multiplied by k.
Poly euler_derivative(const Poly& p);

struct RootSet {
  std::vector<Complex> roots;
  /// max_i |P(root_i)| / max_k |c_k|
  BigFloat residual_bound;
};

struct RootOptions {
  int max_iterations = 500;
};

/// All complex roots by Aberth simultaneous iteration.
///
/// Roots at the origin are split off exactly. Start points come from the
/// Newton polygon of the coefficient magnitudes; iteration runs first at a
/// reduced precision and is then refined at `prec` until every Newton
/// correction is below 2^-(prec-20) relative to its root (or the residual is
/// at rounding level). Conjugate pairs are symmetrized on exit.
/// Throws ConvergenceError when the iteration cap is hit.
RootSet all_roots(const Poly& p, BigFloat::prec_t prec, const RootOptions& options = {});

/// Roots with |im| < tol (1 + |re|) and re > 0, deduplicated, ascending.
std::vector<BigFloat> positive_real_roots(const RootSet& rs, const BigFloat& tol);

/// Default tolerance for classifying a root as real at `prec` bits.
BigFloat default_real_tolerance(BigFloat::prec_t prec);

}  // namespace resum
