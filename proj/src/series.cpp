#include "resum/series.hpp"

#include <algorithm>
#include <map>

#include "resum/errors.hpp"

namespace resum {

namespace {

struct RatLess {
  bool operator()(const BigRat& a, const BigRat& b) const { return cmp(a, b) < 0; }
};

BigFloat::prec_t series_precision(const GenSeries& s) {
  BigFloat::prec_t p = 0;
  for (const auto& t : s.terms()) p = std::max(p, t.coeff.precision());
  return p;
}

}  // namespace

BigRat rat_gcd(const BigRat& a, const BigRat& b) {
  if (a == 0) return abs(b);
  if (b == 0) return abs(a);
  BigInt num;
  BigInt x = a.get_num() * b.get_den();
  BigInt y = b.get_num() * a.get_den();
  mpz_gcd(num.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return make_rat(num, a.get_den() * b.get_den());
}

GenSeries::GenSeries(std::vector<Term> terms, long order, BigRat prefactor)
    : order_(order), prefactor_(std::move(prefactor)) {
  std::map<BigRat, Scalar, RatLess> acc;
  for (auto& t : terms) {
    auto it = acc.find(t.exponent);
    if (it == acc.end()) {
      acc.emplace(std::move(t.exponent), std::move(t.coeff));
    } else {
      it->second = it->second + t.coeff;
    }
  }
  terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) terms_.push_back(Term{e, c});
  }
}

GenSeries GenSeries::on_grid(const std::vector<Scalar>& coeffs, const BigRat& start, const BigRat& step,
                             long order) {
  std::vector<Term> terms;
  terms.reserve(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    terms.push_back(Term{BigRat(start + step * static_cast<long>(k)), coeffs[k]});
  }
  return GenSeries(std::move(terms), order);
}

bool GenSeries::is_exact() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_exact(); });
}

Scalar GenSeries::coeff_at(const BigRat& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const BigRat& x) { return cmp(t.exponent, x) < 0; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return Scalar();
}

GenSeries GenSeries::folded() const {
  if (prefactor_ == 0) return *this;
  GenSeries out = *this;
  for (auto& t : out.terms_) t.exponent += prefactor_;
  out.prefactor_ = 0;
  return out;
}

GenSeries GenSeries::with_order(long order) const {
  GenSeries out = *this;
  out.order_ = order;
  return out;
}

GenSeries operator+(const GenSeries& a, const GenSeries& b) {
  GenSeries fa = a.folded();
  GenSeries fb = b.folded();
  std::vector<Term> terms = fa.terms_;
  terms.insert(terms.end(), fb.terms_.begin(), fb.terms_.end());
  return GenSeries(std::move(terms), std::max(a.order_, b.order_));
}

GenSeries operator-(const GenSeries& a, const GenSeries& b) { return a + Scalar(-1L) * b; }

GenSeries operator*(const Scalar& c, const GenSeries& s) {
  std::vector<Term> terms;
  terms.reserve(s.terms_.size());
  for (const auto& t : s.terms_) terms.push_back(Term{t.exponent, c * t.coeff});
  return GenSeries(std::move(terms), s.order_, s.prefactor_);
}

void ReductionOp::validate() const {
  for (const auto& p : exponents) {
    if (p == 0) throw DomainError("reduction exponent must be nonzero");
  }
}

BigRat exponent_grid_step(const GenSeries& s) {
  BigRat h(0);
  if (s.terms().empty()) return h;
  const BigRat& e0 = s.terms().front().exponent;
  for (const auto& t : s.terms()) h = rat_gcd(h, BigRat(t.exponent - e0));
  return h;
}

BigFloat evaluate(const GenSeries& s, const BigFloat& t) {
  if (t.sign() <= 0) throw DomainError("series evaluated at t <= 0");
  const auto prec = t.precision();
  if (s.is_zero()) return BigFloat::zero(prec);

  const auto& terms = s.terms();
  const BigRat& e0 = terms.front().exponent;
  BigRat h = exponent_grid_step(s);
  if (h == 0) h = 1;
  // Horner in x = t^h over the integer grid positions.
  const BigFloat x = pow(t, h);
  BigFloat acc = terms.back().coeff.to_float(prec);
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    BigRat gap = (terms[i + 1].exponent - terms[i].exponent) / h;
    const long g = gap.get_num().get_si();
    acc = (g == 1 ? acc * x : acc * pow(x, g)) + terms[i].coeff.to_float(prec);
  }
  BigRat lead = e0 + s.prefactor_exponent();
  if (lead != 0) acc *= pow(t, lead);
  return acc;
}

GenSeries log_derivative(const GenSeries& s) {
  std::vector<Term> terms;
  terms.reserve(s.size());
  for (const auto& t : s.terms()) {
    BigRat e = t.exponent + s.prefactor_exponent();
    if (e == 0) continue;
    terms.push_back(Term{t.exponent, Scalar(e) * t.coeff});
  }
  return GenSeries(std::move(terms), s.order(), s.prefactor_exponent());
}

GenSeries apply_reduction(const ReductionOp& op, const GenSeries& s) {
  op.validate();
  GenSeries out = s;
  for (const auto& p : op.exponents) {
    std::vector<Term> terms;
    terms.reserve(out.size());
    for (const auto& t : out.terms()) {
      BigRat factor = 1 + (t.exponent + out.prefactor_exponent()) / p;
      if (factor == 0) continue;
      terms.push_back(Term{t.exponent, Scalar(factor) * t.coeff});
    }
    out = GenSeries(std::move(terms), out.order(), out.prefactor_exponent());
  }
  return out;
}

GenSeries taylor_div(const GenSeries& numer, const GenSeries& denom, long order) {
  if (denom.is_zero()) throw DivisionByZeroSeries("taylor_div by the zero series");
  if (order < 0) throw RangeError("taylor_div order must be non-negative");
  const GenSeries n = numer.folded();
  const GenSeries d = denom.folded();
  const long N = std::max(numer.order(), denom.order());
  if (n.is_zero()) return GenSeries({}, N);

  const BigRat& n0 = n.terms().front().exponent;
  const BigRat& d0 = d.terms().front().exponent;
  BigRat h = rat_gcd(exponent_grid_step(n), exponent_grid_step(d));
  if (h == 0) h = 1;

  const auto len = static_cast<std::size_t>(order) + 1;
  auto dense = [&](const GenSeries& s, const BigRat& start) {
    std::vector<Scalar> v(len);
    for (const auto& t : s.terms()) {
      BigRat k = (t.exponent - start) / h;
      if (k.get_den() != 1) throw DomainError("taylor_div operands are not on a common grid");
      if (k.get_num() < static_cast<long>(len)) v[k.get_num().get_ui()] = t.coeff;
    }
    return v;
  };
  const std::vector<Scalar> nv = dense(n, n0);
  const std::vector<Scalar> dv = dense(d, d0);

  // Keep the recursion exact when it can be; otherwise run it in floats at
  // the operands' precision.
  const bool exact = n.is_exact() && d.is_exact();
  const auto prec = std::max(series_precision(n), series_precision(d));
  std::vector<Scalar> q(len);
  if (exact) {
    std::vector<BigRat> qr(len);
    const BigRat inv = 1 / dv[0].rat();
    for (std::size_t k = 0; k < len; ++k) {
      BigRat acc = nv[k].rat();
      for (std::size_t j = 1; j <= k; ++j) {
        if (dv[j].rat() != 0) acc -= dv[j].rat() * qr[k - j];
      }
      qr[k] = acc * inv;
      q[k] = Scalar(qr[k]);
    }
  } else {
    std::vector<BigFloat> nf(len), df(len), qf(len);
    for (std::size_t k = 0; k < len; ++k) {
      nf[k] = nv[k].to_float(prec);
      df[k] = dv[k].to_float(prec);
    }
    for (std::size_t k = 0; k < len; ++k) {
      BigFloat acc = nf[k];
      for (std::size_t j = 1; j <= k; ++j) {
        if (!df[j].is_zero()) acc -= df[j] * qf[k - j];
      }
      qf[k] = acc / df[0];
      q[k] = Scalar(qf[k]);
    }
  }
  return GenSeries::on_grid(q, BigRat(n0 - d0), h, N);
}

}  // namespace resum
