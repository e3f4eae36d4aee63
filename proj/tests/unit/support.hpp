#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "resum/numerics.hpp"

namespace testing {

using resum::BigFloat;

inline BigFloat num(const std::string& text, BigFloat::prec_t prec = 256) { return BigFloat::from_string(text, prec); }

/// |a - b| <= tol
inline bool close(const BigFloat& a, const BigFloat& b, double tol) {
  return abs(a - b) <= BigFloat(tol, std::max(a.precision(), b.precision()));
}

inline bool close(const BigFloat& a, const std::string& b, double tol) { return close(a, num(b, a.precision()), tol); }

/// |a - b| <= tol |b|
inline bool rel_close(const BigFloat& a, const BigFloat& b, double tol) {
  return abs(a - b) <= abs(b) * BigFloat(tol, std::max(a.precision(), b.precision()));
}

/// Fixed seed so property tests are reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

}  // namespace testing
