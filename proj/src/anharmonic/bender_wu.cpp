#include <mutex>

#include "resum/anharmonic.hpp"
#include "resum/errors.hpp"

// Wavefunction psi = exp(-x^2/2) sum_n lambda^n sum_m B_{n,m} x^(2m) with
// B_{0,0} = 1 and B_{n,0} = 0. Matching powers of x in the Schroedinger
// equation gives, for beta_{n,m} = m! B_{n,m},
//
//   2m beta_{n,m} = sum_{k=1}^{n-1} a_k beta_{n-k,m} + (2m+1) beta_{n,m+1}
//                   - m(m-1) beta_{n-1,m-2},       a_n = -beta_{n,1},
//
// run for m = 2n down to 1. The beta values are dyadic rationals, so they
// are kept as (odd integer) * 2^exp and the division by 2m is an exact
// division by the odd part of m plus an exponent shift.

namespace resum::anharmonic {

namespace {

struct Dyadic {
  BigInt num;  // odd, or zero
  long exp = 0;

  bool is_zero() const { return num == 0; }
  void normalize() {
    if (num == 0) {
      exp = 0;
      return;
    }
    const auto v = static_cast<long>(mpz_scan1(num.get_mpz_t(), 0));
    if (v > 0) {
      mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(v));
      exp += v;
    }
  }
  BigRat to_rat() const {
    BigRat r(num);
    if (exp >= 0) {
      mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
    } else {
      mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-exp));
    }
    return r;
  }
};

/// Sum of (signed integer or dyadic) * dyadic products at a common exponent.
class Accumulator {
 public:
  void add(const BigInt& scale, const Dyadic& x, long extra_exp) {
    if (x.is_zero() || scale == 0) return;
    terms_.push_back({scale * x.num, x.exp + extra_exp});
  }
  Dyadic finish() {
    Dyadic out;
    if (terms_.empty()) return out;
    long lo = terms_.front().exp;
    for (const auto& t : terms_) lo = std::min(lo, t.exp);
    for (const auto& t : terms_) {
      if (t.exp == lo) {
        out.num += t.num;
      } else {
        BigInt shifted;
        mpz_mul_2exp(shifted.get_mpz_t(), t.num.get_mpz_t(), static_cast<mp_bitcnt_t>(t.exp - lo));
        out.num += shifted;
      }
    }
    out.exp = lo;
    terms_.clear();
    return out;
  }

 private:
  struct Item {
    BigInt num;
    long exp;
  };
  std::vector<Item> terms_;
};

std::vector<BigRat> compute(long N) {
  std::vector<std::vector<Dyadic>> beta(static_cast<std::size_t>(N) + 1);
  std::vector<Dyadic> a(static_cast<std::size_t>(N) + 1);
  beta[0].resize(1);
  beta[0][0].num = 1;

  Accumulator acc;
  for (long n = 1; n <= N; ++n) {
    auto& row = beta[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(2 * n) + 1);
    const auto& prev = beta[static_cast<std::size_t>(n - 1)];
    for (long m = 2 * n; m >= 1; --m) {
      for (long k = 1; k <= n - 1 && 2 * (n - k) >= m; ++k) {
        const Dyadic& ak = a[static_cast<std::size_t>(k)];
        const Dyadic& b = beta[static_cast<std::size_t>(n - k)][static_cast<std::size_t>(m)];
        if (ak.is_zero() || b.is_zero()) continue;
        acc.add(ak.num, b, ak.exp);
      }
      if (m + 1 <= 2 * n) acc.add(BigInt(2 * m + 1), row[static_cast<std::size_t>(m + 1)], 0);
      if (m >= 2 && m - 2 <= 2 * (n - 1)) acc.add(BigInt(-m * (m - 1)), prev[static_cast<std::size_t>(m - 2)], 0);

      Dyadic v = acc.finish();
      // Divide by 2m = 2^(s+1) * odd.
      long odd = m;
      long s = 0;
      while (odd % 2 == 0) {
        odd /= 2;
        ++s;
      }
      if (odd != 1 && !v.is_zero()) {
        if (mpz_divisible_ui_p(v.num.get_mpz_t(), static_cast<unsigned long>(odd)) == 0) {
          throw Error("wavefunction coefficient is not dyadic at n=" + std::to_string(n));
        }
        mpz_divexact_ui(v.num.get_mpz_t(), v.num.get_mpz_t(), static_cast<unsigned long>(odd));
      }
      v.exp -= s + 1;
      v.normalize();
      row[static_cast<std::size_t>(m)] = std::move(v);
    }
    a[static_cast<std::size_t>(n)] = row[1];
    a[static_cast<std::size_t>(n)].num = -a[static_cast<std::size_t>(n)].num;
  }

  std::vector<BigRat> out(static_cast<std::size_t>(N) + 1);
  out[0] = make_rat(1, 2);
  for (long n = 1; n <= N; ++n) out[static_cast<std::size_t>(n)] = a[static_cast<std::size_t>(n)].to_rat();
  return out;
}

std::mutex cache_mutex;
std::vector<BigRat> cache;

}  // namespace

PerturbSeries bender_wu(long N) {
  if (N < 0) throw RangeError("bender_wu needs N >= 0");
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (static_cast<long>(cache.size()) <= N) cache = compute(N);
  return PerturbSeries{std::vector<BigRat>(cache.begin(), cache.begin() + N + 1)};
}

}  // namespace resum::anharmonic
