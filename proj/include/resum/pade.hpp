#pragma once

#include <utility>

#include "resum/estimate.hpp"
#include "resum/polyroot.hpp"
#include "resum/series.hpp"

namespace resum {

/// numer(t) / denom(t), denom(0) = 1.
struct PadeApprox {
  Poly numer;
  Poly denom;
  long rho = 0;
  long tau = 0;
  long source_order = 0;
  /// True when the requested [rho/tau] system was singular and a lower
  /// [rho-k/tau-k] approximant was returned instead.
  bool deflated = false;
};

struct PadeOptions {
  /// Working precision for the float path; 0 picks the policy default for
  /// the source order.
  BigFloat::prec_t prec = 0;
  /// Largest rho+tau solved over the rationals.
  long exact_limit = 120;
  /// When false a singular system raises DegenerateError.
  bool allow_deflation = true;
};

/// [rho/tau] approximant of a series with integer exponents >= 0.
PadeApprox pade(const GenSeries& s, long rho, long tau, const PadeOptions& options = {});

/// Ratio of leading coefficients of a diagonal approximant.
Scalar limit_at_infinity(const PadeApprox& p);

BigFloat evaluate(const PadeApprox& p, const BigFloat& t);

/// Roots of numerator and denominator.
std::pair<RootSet, RootSet> zero_pole_map(const PadeApprox& p, BigFloat::prec_t prec);

/// Zero/pole pairs with |zero - pole| < rel_tol * |pole|, matched greedily
/// closest first. Only poles with Re < 0 count when left_half_only is set.
long cancelling_pairs(const RootSet& zeros, const RootSet& poles, double rel_tol, bool left_half_only = true);

/// Plateau top of a near-diagonal approximant: among positive real critical
/// points, the one with the smallest |second log-derivative / value|; near
/// ties go to the larger t. Throws NoStationaryPoint if there is none.
Estimate near_diagonal_stationary(const PadeApprox& p, BigFloat::prec_t prec);

}  // namespace resum
