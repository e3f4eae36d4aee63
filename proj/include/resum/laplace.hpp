#pragma once

#include <vector>

#include "resum/estimate.hpp"
#include "resum/series.hpp"

namespace resum::laplace {

/// Large-M expansion of f(M) = M int_0^inf w e^{-Mw}/(1+w) dw:
/// (-1)^(k+1) k! at exponent k of 1/M, k = 1..N.
GenSeries asymptotic_coeffs(long N);

/// Order-N transform of asymptotic_coeffs(N), a polynomial in t.
GenSeries fbar_poly(long N);
/// The same polynomial from the closed form -N! sum_k (-t)^k/(N-k)!.
GenSeries fbar_closed_form(long N);

/// N! sum_{k>=0} (-1)^k / ((N+k)! t^k), the entire function behind fbar_poly.
/// With terms = 0 the sum runs until the alternating tail drops below the
/// precision of t.
BigFloat fbar_exact(const BigFloat& t, long N, long terms = 0);

/// fbar_exact by quadrature: N int_0^1 (1-s)^(N-1) e^(-s/t) ds.
BigFloat fbar_quadrature(const BigFloat& t, long N);

/// f(M) by adaptive quadrature after w = u/(1-u).
BigFloat f_oracle(const BigFloat& M);

/// fbar_poly(N) reduced by the factors p_i = 1..L.
GenSeries psi(long N, long L);

/// The reduced function evaluated from the convergent large-t series of
/// fbar_exact, valid for any t > 0 and very large N.
BigFloat psi_exact(const BigFloat& t, long N, long L);

/// Plateau top of psi(N, L): a positive stationary point with value in
/// (0, 2) and the smallest |second log-derivative|; near ties (1e-3
/// relative) go to the larger t. prec = 0 uses the policy default.
Estimate pms_estimate(long N, long L, BigFloat::prec_t prec = 0);

/// N * t*(N) of pms_estimate for each order.
std::vector<BigFloat> cstar_sequence(long L, const std::vector<long>& orders, BigFloat::prec_t prec = 0);

/// Root of log c = 1 + 1/c by Newton iteration.
BigFloat c_max(BigFloat::prec_t prec);

/// A from the two-point fit v(N) = A (1 - B/N).
BigFloat extrapolate_pair(const BigFloat& v1, long N1, const BigFloat& v2, long N2);

}  // namespace resum::laplace
