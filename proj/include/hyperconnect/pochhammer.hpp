#pragma once

#include <cmath>
#include <complex>

#include "hyperconnect/scalar.hpp"

namespace hyperconnect {

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
///
/// Computed as an iterated product in either field, never through gamma
/// functions, so it is exact on rationals and defined for every a.
template <Scalar S>
S pochhammer(const S& a, long n) {
  if (n < 0) throw DomainError("pochhammer: negative length");
  S result(1);
  S factor = a;
  for (long j = 0; j < n; ++j) {
    if (is_zero(factor)) return S(0);
    result *= factor;
    factor += S(1);
  }
  return result;
}

template <Scalar S>
S factorial(long n) {
  return pochhammer(S(1), n);
}

/// (-n)_k = (-1)^k n!/(n-k)! for k <= n, zero otherwise.
template <Scalar S>
S neg_int_pochhammer(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("neg_int_pochhammer: negative index");
  if (k > n) return S(0);
  S result(1);
  for (long j = 0; j < k; ++j) result *= S(-(n - j));
  return result;
}

/// n!/(k!(n-k)!); returns 0 when k > n.
template <Scalar S>
S binomial_coefficient(long n, long k) {
  if (n < 0 || k < 0) throw DomainError("binomial_coefficient: negative index");
  if (k > n) return S(0);
  if (k > n - k) k = n - k;
  S result(1);
  for (long j = 1; j <= k; ++j) {
    result *= S(n - k + j);
    result /= S(j);
  }
  return result;
}

/// Tag selecting the infinite q-shifted factorial.
struct infinite_t {
  explicit constexpr infinite_t() = default;
};
inline constexpr infinite_t infinite{};

/// Finite q-shifted factorial (a;q)_n = prod_{j<n} (1 - a q^j).
template <Scalar S>
S q_pochhammer(const S& a, const S& q, long n) {
  if (n < 0) throw DomainError("q_pochhammer: negative length");
  S result(1);
  S aqj = a;
  for (long j = 0; j < n; ++j) {
    S factor = S(1) - aqj;
    if (is_zero(factor)) return S(0);
    result *= factor;
    aqj *= q;
  }
  return result;
}

/// Cutoff below which |a q^j| leaves a factor equal to 1 in double precision.
inline constexpr double kInfiniteProductCutoff = 1e-17;

/// (a;q)_infinity, numeric field only. The product stops once |a q^j| drops
/// below kInfiniteProductCutoff.
inline Complex q_pochhammer(const Complex& a, const Complex& q, infinite_t) {
  if (!(std::abs(q.value()) < 1.0))
    throw DomainError("infinite q-Pochhammer needs |q| < 1");
  std::complex<double> result{1.0, 0.0};
  std::complex<double> aqj = a.value();
  for (int guard = 0; std::abs(aqj) >= kInfiniteProductCutoff; ++guard) {
    if (guard > 100000) throw ConvergenceError("infinite q-Pochhammer did not settle");
    result *= 1.0 - aqj;
    aqj *= q.value();
  }
  return Complex(result);
}

inline Rational q_pochhammer(const Rational&, const Rational&, infinite_t) {
  throw UnsupportedError("infinite q-Pochhammer products are numeric-only");
}

/// Pochhammer growth bounds used to control tails of rearranged series.
/// Each predicate reports whether the stated inequality holds at one point,
/// evaluated in long double with a relative slack of 1e-12 for rounding.
namespace bounds {

inline constexpr long double kSlack = 1e-12L;

inline long double fact(long n) {
  long double r = 1;
  for (long j = 2; j <= n; ++j) r *= j;
  return r;
}

/// |(u)_j| >= Re(u) (j-1)! for j >= 1 and Re u > 0.
inline bool rising_lower_bound(std::complex<double> u, long j) {
  if (j < 1 || !(u.real() > 0)) throw DomainError("rising_lower_bound: needs j>=1, Re u>0");
  std::complex<long double> p{1, 0};
  std::complex<long double> f{u.real(), u.imag()};
  for (long i = 0; i < j; ++i, f += 1.0L) p *= f;
  long double lhs = std::abs(p);
  long double rhs = u.real() * fact(j - 1);
  return lhs >= rhs * (1 - kSlack);
}

/// (v)_n / n! <= (1+n)^v for v >= 0.
inline bool rising_ratio_upper_bound(double v, long n) {
  if (v < 0 || n < 0) throw DomainError("rising_ratio_upper_bound: needs v>=0, n>=0");
  long double ratio = 1;
  for (long i = 0; i < n; ++i) ratio *= (v + i) / static_cast<long double>(i + 1);
  long double rhs = std::pow(static_cast<long double>(1 + n), static_cast<long double>(v));
  return ratio <= rhs * (1 + kSlack);
}

/// |(n+w)_k| <= max{1, 2^w} (n+k)!/n! for w > -1.
inline bool shifted_rising_upper_bound(long n, long k, double w) {
  if (!(w > -1) || n < 0 || k < 0) throw DomainError("shifted_rising_upper_bound: needs w>-1");
  long double lhs = 1;
  long double rhs = std::max(1.0L, std::pow(2.0L, static_cast<long double>(w)));
  for (long i = 0; i < k; ++i) {
    lhs *= n + w + i;
    rhs *= n + 1 + i;
  }
  return std::fabs(lhs) <= rhs * (1 + kSlack);
}

/// |(z+k)_{n-k}| <= (n!/k!) (1+n)^{|z|} for real z and 0 <= k <= n.
inline bool offset_rising_upper_bound(double z, long k, long n) {
  if (k < 0 || k > n) throw DomainError("offset_rising_upper_bound: needs 0<=k<=n");
  long double lhs = 1;
  long double rhs = std::pow(static_cast<long double>(1 + n), std::fabs(static_cast<long double>(z)));
  for (long i = k; i < n; ++i) {
    lhs *= z + i;
    rhs *= i + 1;
  }
  return std::fabs(lhs) <= rhs * (1 + kSlack);
}

}  // namespace bounds

}  // namespace hyperconnect
