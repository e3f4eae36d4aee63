#pragma once

#include <functional>
#include <string>
#include <vector>

#include "resum/estimate.hpp"
#include "resum/polyroot.hpp"
#include "resum/series.hpp"

namespace resum::anharmonic {

/// Exact ground-state energy coefficients a_0..a_N of E = sum a_n lambda^n
/// for H = p^2/2 + x^2/2 + lambda x^4.
struct PerturbSeries {
  std::vector<BigRat> coeffs;
};

/// Recursion on the wavefunction expansion coefficients. Results are cached,
/// so repeated calls at or below a previously computed order are cheap.
PerturbSeries bender_wu(long N);

/// sum_n a_n (1/m^2)^((3n-1)/2) at lambda = 1, with order N.
GenSeries mass_series(long N);

/// Binomial transform of mass_series(N): exponents (3n-1)/2 in t.
GenSeries ebar(long N, BigFloat::prec_t prec = 0);
/// Same grid, coefficients a_n times the linear-delta factor.
GenSeries elde(long N);

/// A series on the grid e0 + h k written as t^e0 P(z), z = t^h, together
/// with the polynomials of its first and second log-derivatives.
struct GridPolys {
  BigRat e0;
  BigRat h;
  Poly p, p1, p2;
};
GridPolys grid_polynomials(const GenSeries& s);

struct CenterOfZeros {
  /// Positive real zeros (as t) of the first and second log-derivatives.
  std::vector<BigFloat> real_zeros_d1;
  std::vector<BigFloat> real_zeros_d2;
  Estimate chosen;
};

struct ZeroSelection {
  BigFloat t;
  Criterion criterion;
};

/// Selection among the zeros of the first (d1) and second (d2)
/// log-derivatives of a curve.
///
/// Consecutive d2-zeros bracket one oscillation of d1; the bracket with the
/// smallest max |d1| is the quietest stretch. If d1 changes sign across it,
/// its zero inside is taken (a stationary point); otherwise the end with the
/// smaller |d1| is taken (an inflection point). With fewer than two
/// d2-zeros, the candidate with the smallest opposite-derivative magnitude
/// wins.
ZeroSelection select_center(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros,
                            const std::function<BigFloat(const BigFloat&)>& d1,
                            const std::function<BigFloat(const BigFloat&)>& d2);

/// Stationary points scored by |d2|, inflection points by |d1|; the
/// smallest score wins.
ZeroSelection select_flattest(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros,
                              const std::function<BigFloat(const BigFloat&)>& d1,
                              const std::function<BigFloat(const BigFloat&)>& d2);

/// The d1-zero with the smallest |d2|; inflection points (smallest |d1|)
/// only when d1 has no zeros.
ZeroSelection select_extremum(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros,
                              const std::function<BigFloat(const BigFloat&)>& d1,
                              const std::function<BigFloat(const BigFloat&)>& d2);

/// Largest-t point among the d1 and d2 zeros.
ZeroSelection select_largest(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros);

/// Center-of-zeros analysis of a series on a grid e0 + h k (h > 0), treated
/// as t^e0 P(z) with z = t^h. Throws NoCandidate without positive zeros.
CenterOfZeros center_of_zeros(const GenSeries& s, BigFloat::prec_t prec = 0);

enum class Scheme { binomial, lde };
Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme s);

/// Estimate of the strong-coupling constant at order N.
Estimate estimate_E(long N, Scheme scheme, BigFloat::prec_t prec = 0);

/// The k-th m^2-derivative series divided by k!, then transformed.
GenSeries alpha_series(long N, long k, BigFloat::prec_t prec = 0);
/// Strong-coupling coefficient alpha_k from the center of zeros of
/// alpha_series.
Estimate estimate_alpha(long N, long k, BigFloat::prec_t prec = 0);

/// Estimation points t* of the binomial scheme.
std::vector<std::pair<long, BigFloat>> tstar_sequence(const std::vector<long>& orders, BigFloat::prec_t prec = 0);

/// Coupling-side transform at m^2 = 1: a_n C(N, n) g^n.
GenSeries lambda_transform(long N);

/// theta_1, ..., theta_count: k/3 for k = 1, 5, 7, 11, 13, ...
std::vector<BigRat> theta_ladder(long count);

/// -lim Q[N/2/N/2] where Q = (1 - 3D)E' / (1 - 3D)E, D = d/dlog g, for a
/// coupling-side polynomial E of order N. Throws DegenerateError if the
/// Pade system is singular.
Estimate estimate_theta1_from(const GenSeries& transformed, BigFloat::prec_t prec = 0);
Estimate estimate_theta1(long N, BigFloat::prec_t prec = 0);

/// Strong-coupling constant from the coupling-side transform reduced by
/// prod (1 + theta_i^-1 D) over the given exponents, Pade-resummed on the
/// diagonal and divided by binom(N, 1/3) g^(1/3) and the factor the
/// reduction puts on g^(1/3). The estimation point is chosen by the same
/// center-of-zeros rule as the t side.
Estimate estimate_E_lambda(long N, const std::vector<Scalar>& thetas, BigFloat::prec_t prec = 0);

/// Exact constant to 38 digits, for comparison only.
BigFloat reference_E(BigFloat::prec_t prec);

}  // namespace resum::anharmonic
