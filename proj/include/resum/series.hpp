#pragma once

#include <vector>

#include "resum/numerics.hpp"

namespace resum {

struct Term {
  BigRat exponent;
  Scalar coeff;
};

/// Truncated series sum_k c_k t^(e_k), times an overall t^prefactor.
///
/// Exponents are exact rationals, kept strictly increasing; zero
/// coefficients are dropped (an empty term list is the zero series).
/// `order` records the truncation order N of the expansion the series came
/// from; the binomial transform checks it.
class GenSeries {
 public:
  GenSeries() = default;
  /// Terms may arrive in any order; equal exponents are summed.
  explicit GenSeries(std::vector<Term> terms, long order = 0, BigRat prefactor = BigRat(0));

  /// Dense series sum_k coeffs[k] t^(start + k*step).
  static GenSeries on_grid(const std::vector<Scalar>& coeffs, const BigRat& start, const BigRat& step,
                           long order = 0);

  const std::vector<Term>& terms() const { return terms_; }
  const BigRat& prefactor_exponent() const { return prefactor_; }
  long order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_exact() const;

  /// Coefficient of t^e (exponent relative to the prefactor); zero if absent.
  Scalar coeff_at(const BigRat& e) const;
  /// Same series with the prefactor folded into the term exponents.
  GenSeries folded() const;
  GenSeries with_order(long order) const;

  friend GenSeries operator+(const GenSeries& a, const GenSeries& b);
  friend GenSeries operator-(const GenSeries& a, const GenSeries& b);
  friend GenSeries operator*(const Scalar& c, const GenSeries& s);

 private:
  std::vector<Term> terms_;
  long order_ = 0;
  BigRat prefactor_{0};
};

/// Product of factors (1 + p_i^-1 d/dlog t); an empty list is the identity.
struct ReductionOp {
  std::vector<BigRat> exponents;

  /// Throws DomainError if any p_i is zero.
  void validate() const;
};

/// Sum of coeff * t^exponent; requires t > 0.
BigFloat evaluate(const GenSeries& s, const BigFloat& t);
/// Term-wise (e, c) -> (e, e*c).
GenSeries log_derivative(const GenSeries& s);
/// Applies the factors in order; the factor with p annihilates exponent -p.
GenSeries apply_reduction(const ReductionOp& op, const GenSeries& s);
/// Formal quotient numer/denom on their common exponent grid, terms 0..order.
GenSeries taylor_div(const GenSeries& numer, const GenSeries& denom, long order);

/// Largest rational h such that every exponent difference is a multiple of h;
/// zero when all exponents coincide.
BigRat exponent_grid_step(const GenSeries& s);
BigRat rat_gcd(const BigRat& a, const BigRat& b);

}  // namespace resum
