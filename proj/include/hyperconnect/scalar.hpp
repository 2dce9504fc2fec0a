#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdio>
#include <complex>
#include <concepts>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hyperconnect/error.hpp"

namespace hyperconnect {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Every arithmetic result is canonical, so equality is structural. Parsing
/// accepts "p" or "p/q" with an optional leading sign; decimals are rejected.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    bool seen_slash = false;
    bool digit_before = false;
    bool digit_after = false;
    for (std::size_t j = i; j < s.size(); ++j) {
      char ch = s[j];
      if (ch >= '0' && ch <= '9') {
        (seen_slash ? digit_after : digit_before) = true;
      } else if (ch == '/' && !seen_slash) {
        seen_slash = true;
      } else if (ch == '.' || ch == 'e' || ch == 'E') {
        throw ParseError("decimal literal '" + s +
                         "' is not exact; write it as a fraction p/q");
      } else {
        throw ParseError("malformed rational literal '" + s + "'");
      }
    }
    if (!digit_before || (seen_slash && !digit_after))
      throw ParseError("malformed rational literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    v.canonicalize();
    return Rational(std::move(v));
  }

  const mpq_class& get() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }

  /// "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_;
};

/// Complex double whose components are always finite.
class Complex {
 public:
  Complex() = default;
  Complex(double re, double im = 0.0) : value_(re, im) { check(); }  // NOLINT
  Complex(int re) : Complex(static_cast<double>(re)) {}              // NOLINT
  Complex(long re) : Complex(static_cast<double>(re)) {}             // NOLINT
  explicit Complex(std::complex<double> v) : value_(v) { check(); }

  double real() const { return value_.real(); }
  double imag() const { return value_.imag(); }
  const std::complex<double>& value() const { return value_; }
  bool is_zero() const { return value_ == std::complex<double>{}; }

  Complex operator-() const { return Complex(-value_); }
  Complex& operator+=(const Complex& o) { value_ += o.value_; check(); return *this; }
  Complex& operator-=(const Complex& o) { value_ -= o.value_; check(); return *this; }
  Complex& operator*=(const Complex& o) { value_ *= o.value_; check(); return *this; }
  Complex& operator/=(const Complex& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    check();
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.value_ == b.value_; }
  friend std::ostream& operator<<(std::ostream& os, const Complex& c) {
    return os << '(' << c.real() << ',' << c.imag() << ')';
  }

 private:
  void check() const {
    if (!std::isfinite(value_.real()) || !std::isfinite(value_.imag()))
      throw DomainError("non-finite numeric scalar");
  }
  std::complex<double> value_{};
};

template <class S>
concept Scalar = std::same_as<S, Rational> || std::same_as<S, Complex>;

template <Scalar S>
inline constexpr bool is_exact_v = std::same_as<S, Rational>;

enum class FieldKind { exact, numeric };

/// Which coefficient field a computation runs in. Numeric comparisons use
/// |x - y| <= tol + tol * max(|x|, |y|).
struct FieldTag {
  FieldKind kind = FieldKind::exact;
  double tolerance = 0.0;

  static FieldTag exact() { return {FieldKind::exact, 0.0}; }
  static FieldTag numeric(double tol = 1e-10) {
    if (!(tol > 0.0)) throw DomainError("numeric tolerance must be positive");
    return {FieldKind::numeric, tol};
  }
  template <Scalar S>
  static FieldTag of() {
    return is_exact_v<S> ? exact() : numeric();
  }
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

inline std::string to_string(FieldKind k) { return k == FieldKind::exact ? "exact" : "numeric"; }

// ---- uniform scalar helpers --------------------------------------------

template <Scalar S>
S scalar_cast(const Rational& r) {
  if constexpr (is_exact_v<S>) return r;
  else return Complex(r.to_double());
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Complex& c) { return c.is_zero(); }

inline double magnitude(const Rational& r) { return std::fabs(r.to_double()); }
inline double magnitude(const Complex& c) { return std::abs(c.value()); }

inline std::complex<double> to_complex(const Rational& r) { return {r.to_double(), 0.0}; }
inline std::complex<double> to_complex(const Complex& c) { return c.value(); }

/// If the value is an integer m <= 0, returns m.
inline std::optional<long> nonpositive_integer(const Rational& r) {
  if (!r.is_integer() || sgn(r.get()) > 0) return std::nullopt;
  const mpz_class& num = r.get().get_num();
  if (!num.fits_slong_p()) return std::nullopt;
  return num.get_si();
}
inline std::optional<long> nonpositive_integer(const Complex& c) {
  if (c.imag() != 0.0 || c.real() > 0.0 || std::trunc(c.real()) != c.real()) return std::nullopt;
  if (c.real() < static_cast<double>(std::numeric_limits<long>::min())) return std::nullopt;
  return static_cast<long>(c.real());
}

inline std::optional<long> integer_value(const Rational& r) {
  if (!r.is_integer() || !r.get().get_num().fits_slong_p()) return std::nullopt;
  return r.get().get_num().get_si();
}
inline std::optional<long> integer_value(const Complex& c) {
  if (c.imag() != 0.0 || std::trunc(c.real()) != c.real() || std::fabs(c.real()) > 9.0e15)
    return std::nullopt;
  return static_cast<long>(c.real());
}

/// Integer power; negative exponents require a nonzero base.
template <Scalar S>
S ipow(S base, long n) {
  if (n < 0) {
    if (is_zero(base)) throw DomainError("zero raised to a negative power");
    base = S(1) / base;
    n = -n;
  }
  S result(1);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

inline bool nearly_equal(const Rational& a, const Rational& b, const FieldTag& = FieldTag::exact()) {
  return a == b;
}
inline bool nearly_equal(const Complex& a, const Complex& b,
                         const FieldTag& field = FieldTag::numeric()) {
  double tol = field.tolerance > 0 ? field.tolerance : 1e-10;
  double scale = std::max(std::abs(a.value()), std::abs(b.value()));
  return std::abs(a.value() - b.value()) <= tol + tol * scale;
}

inline Complex conj(const Complex& c) { return Complex(std::conj(c.value())); }
inline Complex exp(const Complex& c) { return Complex(std::exp(c.value())); }

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const Complex& c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
  return buf;
}

}  // namespace hyperconnect
