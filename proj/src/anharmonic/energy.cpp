#include <algorithm>
#include <optional>

#include "resum/anharmonic.hpp"
#include "resum/errors.hpp"
#include "resum/polyroot.hpp"
#include "resum/transform.hpp"

namespace resum::anharmonic {

namespace {

using prec_t = BigFloat::prec_t;
using Curve = std::function<BigFloat(const BigFloat&)>;

prec_t resolve(prec_t prec, long N) { return prec > 0 ? prec : PrecisionPolicy::from_env().working_bits(N); }

BigRat mass_exponent(long n) { return make_rat(3 * n - 1, 2); }

std::vector<BigFloat> positive_zeros(const Poly& p, prec_t prec) {
  if (p.degree() < 1) return {};
  return positive_real_roots(all_roots(p, prec), default_real_tolerance(prec));
}

/// A grid series t^e0 P(t^h) with its first and second log-derivatives.
struct GridCurve : GridPolys {
  prec_t prec;

  BigFloat at(const Poly& q, const BigFloat& t) const {
    const BigFloat z = pow(t, h);
    BigFloat v = evaluate(q, z);
    if (e0 != 0) v *= pow(t, e0);
    return v;
  }
  /// Zeros of q in z mapped back to t = z^(1/h).
  std::vector<BigFloat> zeros(const Poly& q) const {
    std::vector<BigFloat> out;
    const BigRat inv = 1 / h;
    for (const auto& z : positive_zeros(q, prec)) out.push_back(pow(z, inv));
    return out;
  }
};

GridCurve grid_curve(const GenSeries& s, prec_t prec) {
  GridCurve c;
  static_cast<GridPolys&>(c) = grid_polynomials(s);
  c.prec = prec;
  return c;
}

Estimate make_estimate(const GridCurve& c, const ZeroSelection& sel, long order) {
  Estimate e;
  e.location_t = sel.t;
  e.criterion = sel.criterion;
  e.value = c.at(c.p, sel.t);
  e.first_deriv = c.at(c.p1, sel.t);
  e.second_deriv = c.at(c.p2, sel.t);
  e.order_N = order;
  return e;
}

}  // namespace

GridPolys grid_polynomials(const GenSeries& s) {
  const GenSeries f = s.folded();
  if (f.size() < 2) throw NoCandidate("a single power has no interior stationary or inflection point");
  GridPolys c;
  c.e0 = f.terms().front().exponent;
  c.h = exponent_grid_step(f);
  const BigRat span = (f.terms().back().exponent - c.e0) / c.h;
  const auto K = static_cast<std::size_t>(span.get_num().get_ui());
  std::vector<Scalar> c0(K + 1), c1(K + 1), c2(K + 1);
  for (const auto& t : f.terms()) {
    const BigRat k = (t.exponent - c.e0) / c.h;
    const std::size_t i = k.get_num().get_ui();
    const Scalar e(t.exponent);
    c0[i] = t.coeff;
    c1[i] = t.coeff * e;
    c2[i] = c1[i] * e;
  }
  c.p = Poly(std::move(c0));
  c.p1 = Poly(std::move(c1));
  c.p2 = Poly(std::move(c2));
  return c;
}

GenSeries mass_series(long N) {
  const PerturbSeries a = bender_wu(N);
  std::vector<Term> terms;
  terms.reserve(a.coeffs.size());
  for (long n = 0; n <= N; ++n) terms.push_back(Term{mass_exponent(n), Scalar(a.coeffs[static_cast<std::size_t>(n)])});
  return GenSeries(std::move(terms), N);
}

GenSeries ebar(long N, prec_t prec) {
  return binomial_transform(mass_series(N), TransformSpec{N}, resolve(prec, N));
}

GenSeries elde(long N) {
  const PerturbSeries a = bender_wu(N);
  std::vector<Term> terms;
  for (long n = 0; n <= N; ++n) {
    terms.push_back(Term{mass_exponent(n), Scalar(BigRat(a.coeffs[static_cast<std::size_t>(n)] * lde_factor(N, n)))});
  }
  return GenSeries(std::move(terms), N);
}

ZeroSelection select_center(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros,
                            const Curve& d1, const Curve& d2) {
  if (d1_zeros.empty() && d2_zeros.empty()) throw NoCandidate("no positive real zeros of either log-derivative");

  if (d2_zeros.size() >= 2) {
    std::vector<BigFloat> v;
    v.reserve(d2_zeros.size());
    for (const auto& t : d2_zeros) v.push_back(d1(t));
    std::size_t best = 0;
    BigFloat best_amp = max(abs(v[0]), abs(v[1]));
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
      BigFloat amp = max(abs(v[i]), abs(v[i + 1]));
      if (amp < best_amp) {
        best_amp = std::move(amp);
        best = i;
      }
    }
    const BigFloat& lo = d2_zeros[best];
    const BigFloat& hi = d2_zeros[best + 1];
    if (v[best].sign() * v[best + 1].sign() < 0) {
      const BigFloat* pick = nullptr;
      BigFloat pick_score;
      for (const auto& t : d1_zeros) {
        if (t <= lo || t >= hi) continue;
        BigFloat score = abs(d2(t));
        if (pick == nullptr || score < pick_score) {
          pick = &t;
          pick_score = std::move(score);
        }
      }
      if (pick != nullptr) return {*pick, Criterion::stationary};
    }
    return {abs(v[best]) <= abs(v[best + 1]) ? lo : hi, Criterion::inflection};
  }

  // Too few d2 zeros to bracket.
  return select_flattest(d1_zeros, d2_zeros, d1, d2);
}

ZeroSelection select_flattest(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros,
                              const Curve& d1, const Curve& d2) {
  if (d1_zeros.empty() && d2_zeros.empty()) throw NoCandidate("no positive real zeros of either log-derivative");
  std::optional<ZeroSelection> out;
  BigFloat best;
  for (const auto& t : d1_zeros) {
    BigFloat score = abs(d2(t));
    if (!out || score < best) {
      best = std::move(score);
      out = ZeroSelection{t, Criterion::stationary};
    }
  }
  for (const auto& t : d2_zeros) {
    BigFloat score = abs(d1(t));
    if (!out || score < best) {
      best = std::move(score);
      out = ZeroSelection{t, Criterion::inflection};
    }
  }
  return *out;
}

ZeroSelection select_extremum(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros,
                              const Curve& d1, const Curve& d2) {
  if (!d1_zeros.empty()) return select_flattest(d1_zeros, {}, d1, d2);
  return select_flattest({}, d2_zeros, d1, d2);
}

ZeroSelection select_largest(const std::vector<BigFloat>& d1_zeros, const std::vector<BigFloat>& d2_zeros) {
  if (d1_zeros.empty() && d2_zeros.empty()) throw NoCandidate("no positive real zeros of either log-derivative");
  if (d2_zeros.empty() || (!d1_zeros.empty() && d1_zeros.back() >= d2_zeros.back())) {
    return {d1_zeros.back(), Criterion::stationary};
  }
  return {d2_zeros.back(), Criterion::inflection};
}

CenterOfZeros center_of_zeros(const GenSeries& s, prec_t prec) {
  prec = resolve(prec, s.order());
  const GridCurve c = grid_curve(s, prec);
  CenterOfZeros out;
  out.real_zeros_d1 = c.zeros(c.p1);
  out.real_zeros_d2 = c.zeros(c.p2);
  const ZeroSelection sel = select_center(
      out.real_zeros_d1, out.real_zeros_d2, [&](const BigFloat& t) { return c.at(c.p1, t); },
      [&](const BigFloat& t) { return c.at(c.p2, t); });
  out.chosen = make_estimate(c, sel, s.order());
  return out;
}

Scheme parse_scheme(const std::string& name) {
  if (name == "binomial") return Scheme::binomial;
  if (name == "lde") return Scheme::lde;
  throw DomainError("unknown scheme '" + name + "' (expected binomial or lde)");
}

std::string to_string(Scheme s) { return s == Scheme::binomial ? "binomial" : "lde"; }

Estimate estimate_E(long N, Scheme scheme, prec_t prec) {
  if (N < 1) throw RangeError("estimate_E needs N >= 1");
  prec = resolve(prec, N);
  if (scheme == Scheme::binomial) return center_of_zeros(ebar(N, prec), prec).chosen;
  const GridCurve c = grid_curve(elde(N), prec);
  const ZeroSelection sel = select_largest(c.zeros(c.p1), c.zeros(c.p2));
  return make_estimate(c, sel, N);
}

GenSeries alpha_series(long N, long k, prec_t prec) {
  if (k < 1) throw RangeError("alpha_series needs k >= 1");
  prec = resolve(prec, N);
  const PerturbSeries a = bender_wu(N);
  const BigRat kfact(factorial(static_cast<unsigned long>(k)));
  std::vector<Term> terms;
  for (long n = 0; n <= N; ++n) {
    const BigRat s = mass_exponent(n);
    BigRat c = a.coeffs[static_cast<std::size_t>(n)] / kfact;
    for (long j = 0; j < k; ++j) c *= -s - j;
    terms.push_back(Term{BigRat(s + k), Scalar(c)});
  }
  return binomial_transform(GenSeries(std::move(terms), N), TransformSpec{N}, prec);
}

Estimate estimate_alpha(long N, long k, prec_t prec) {
  prec = resolve(prec, N);
  return center_of_zeros(alpha_series(N, k, prec), prec).chosen;
}

std::vector<std::pair<long, BigFloat>> tstar_sequence(const std::vector<long>& orders, prec_t prec) {
  std::vector<std::pair<long, BigFloat>> out;
  for (long N : orders) out.emplace_back(N, estimate_E(N, Scheme::binomial, prec).location_t);
  return out;
}

BigFloat reference_E(prec_t prec) {
  return BigFloat::from_string("0.66798625915577710827096201691986019943", prec);
}

}  // namespace resum::anharmonic
