#include <algorithm>

#include "resum/errors.hpp"
#include "resum/numerics.hpp"

namespace resum {

bool Scalar::is_zero() const { return is_exact() ? rat() == 0 : flt().is_zero(); }

int Scalar::sign() const { return is_exact() ? sgn(rat()) : flt().sign(); }

BigFloat Scalar::to_float(BigFloat::prec_t prec) const {
  return is_exact() ? BigFloat(rat(), prec) : flt().with_precision(prec);
}

BigFloat::prec_t Scalar::precision() const { return is_exact() ? 0 : flt().precision(); }

std::string Scalar::to_string(int digits) const {
  if (!is_exact()) return flt().to_string(digits);
  // Enough bits that the decimal rendering is correctly rounded.
  const auto bits = static_cast<BigFloat::prec_t>(digits * 3.33) + 64;
  return BigFloat(rat(), bits).to_string(digits);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(BigRat(-rat()));
  return Scalar(-flt());
}

namespace {

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_exact() && b.is_exact()) return Scalar(BigRat(op(a.rat(), b.rat())));
  const auto prec = std::max(a.precision(), b.precision());
  return Scalar(op(a.to_float(prec), b.to_float(prec)));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && a.rat() == 0) return a;
  if (b.is_exact() && b.rat() == 0) return b;
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DomainError("division by zero scalar");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

}  // namespace resum
