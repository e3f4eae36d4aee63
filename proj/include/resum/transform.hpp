#pragma once

#include "resum/numerics.hpp"
#include "resum/series.hpp"

namespace resum {

/// Order-N generalized binomial transform: a term c (1/M)^s becomes
/// c * binom_factor(N, s) * t^s.
struct TransformSpec {
  long N = 0;
};

/// Gamma(N+1) / (Gamma(s+1) Gamma(N-s+1)).
///
/// Exact for integer s (zero outside [0, N]). For half-integer s the value is
/// a rational multiple of 1/pi, evaluated from that exact rational. Other s go
/// through gamma_ratio at `prec` bits.
Scalar binom_factor(long N, const BigRat& s, BigFloat::prec_t prec);

/// The exact rational r with binom_factor(N, s) = r / pi, s a half-integer.
BigRat half_integer_binom_times_pi(long N, const BigRat& s);

GenSeries binomial_transform(const GenSeries& s, const TransformSpec& spec, BigFloat::prec_t prec);

/// Linear-delta-expansion factor C_{N,n} = Gamma(N+(n+1)/2) / (Gamma((3n+1)/2) Gamma(N-n+1)).
BigRat lde_factor(long N, long n);

/// binom_factor(N, (3n-1)/2) / lde_factor(N, n).
BigFloat factor_ratio(long N, long n, BigFloat::prec_t prec);

}  // namespace resum
