#pragma once

#include <string>

#include "resum/numerics.hpp"

namespace resum {

enum class Criterion { stationary, inflection, plateau_top, pade_limit };

std::string to_string(Criterion c);

/// One estimate of an asymptotic constant, with where and how it was read off.
struct Estimate {
  BigFloat value;
  BigFloat location_t;
  Criterion criterion = Criterion::stationary;
  /// First and second log-derivatives of the approximant at location_t.
  BigFloat first_deriv;
  BigFloat second_deriv;
  long order_N = 0;
  long L = 0;
  /// Set when the approximant has a pole on the positive real axis.
  bool pole_on_axis = false;
};

}  // namespace resum
