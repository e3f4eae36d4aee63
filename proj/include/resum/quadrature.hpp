#pragma once

#include <functional>

#include "resum/numerics.hpp"

namespace resum {

/// Adaptive Gauss-Legendre quadrature of f over [a, b] at `prec` bits.
///
/// Panels are bisected until the two-half estimate agrees with the whole
/// panel to about 2^-(prec-24) of the running integral magnitude.
/// Throws ConvergenceError if the bisection depth limit is reached.
BigFloat integrate(const std::function<BigFloat(const BigFloat&)>& f, const BigFloat& a, const BigFloat& b,
                   BigFloat::prec_t prec);

}  // namespace resum
