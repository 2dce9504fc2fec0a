#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hyperconnect/pochhammer.hpp"
#include "hyperconnect/scalar.hpp"

namespace hyperconnect {

/// Formal power series in t truncated after t^order.
///
/// The order is fixed at construction. Binary operations between series of
/// different orders truncate to the smaller order.
template <Scalar S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<S> coefficients, FieldTag field = FieldTag::of<S>())
      : coefficients_(std::move(coefficients)), field_(field) {
    if (coefficients_.empty()) throw DomainError("series needs at least one coefficient");
    if (is_exact_v<S> != (field_.kind == FieldKind::exact))
      throw FieldMismatchError("field tag does not match the coefficient type");
  }

  static TruncatedSeries zero(long order, FieldTag field = FieldTag::of<S>()) {
    check_order(order);
    return TruncatedSeries(std::vector<S>(order + 1, S(0)), field);
  }
  static TruncatedSeries constant(const S& c, long order, FieldTag field = FieldTag::of<S>()) {
    auto s = zero(order, field);
    s.coefficients_[0] = c;
    return s;
  }
  static TruncatedSeries one(long order, FieldTag field = FieldTag::of<S>()) {
    return constant(S(1), order, field);
  }
  /// c t^power, truncated (zero when power > order).
  static TruncatedSeries monomial(long power, const S& c, long order,
                                  FieldTag field = FieldTag::of<S>()) {
    auto s = zero(order, field);
    if (power <= order) s.coefficients_[power] = c;
    return s;
  }

  long order() const { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<S>& coefficients() const { return coefficients_; }
  const S& operator[](long k) const { return coefficients_.at(k); }
  S& operator[](long k) { return coefficients_.at(k); }
  const FieldTag& field() const { return field_; }

  /// Evaluates the truncated polynomial at t.
  S evaluate(const S& t) const {
    S acc(0);
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return combine(o, +1); }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return combine(o, -1); }
  TruncatedSeries& operator*=(const S& c) {
    for (auto& x : coefficients_) x *= c;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const S& c) { return a *= c; }
  friend TruncatedSeries operator*(const S& c, TruncatedSeries a) { return a *= c; }

  /// Cauchy product truncated at the smaller order.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_field(a, b);
    long n = std::min(a.order(), b.order());
    std::vector<S> out(n + 1, S(0));
    for (long i = 0; i <= n; ++i) {
      if (is_zero(a.coefficients_[i])) continue;
      for (long j = 0; i + j <= n; ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
    return TruncatedSeries(std::move(out), a.field_);
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.field_ == b.field_ && a.coefficients_ == b.coefficients_;
  }

 private:
  static void check_order(long order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
  }
  static void require_same_field(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatchError("series fields differ");
  }
  TruncatedSeries& combine(const TruncatedSeries& o, int sign) {
    require_same_field(*this, o);
    coefficients_.resize(std::min(coefficients_.size(), o.coefficients_.size()));
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
      if (sign > 0) coefficients_[k] += o.coefficients_[k];
      else coefficients_[k] -= o.coefficients_[k];
    }
    return *this;
  }

  std::vector<S> coefficients_;
  FieldTag field_;
};

enum class SeriesOp { add, sub, mul };

/// Generic entry point mirroring the operator overloads.
template <Scalar S>
TruncatedSeries<S> series_arith(SeriesOp op, const TruncatedSeries<S>& lhs,
                                const TruncatedSeries<S>& rhs) {
  switch (op) {
    case SeriesOp::add: return lhs + rhs;
    case SeriesOp::sub: return lhs - rhs;
    case SeriesOp::mul: return lhs * rhs;
  }
  throw DomainError("unknown series operation");
}

template <Scalar S>
TruncatedSeries<S> scale(const TruncatedSeries<S>& s, const S& c) {
  return s * c;
}

/// [f(t)]_M: keeps coefficients c_0..c_M.
template <Scalar S>
TruncatedSeries<S> truncate_to(const TruncatedSeries<S>& s, long m) {
  if (m < 0 || m > s.order())
    throw DomainError("truncate_to: target order outside [0, order]");
  std::vector<S> c(s.coefficients().begin(), s.coefficients().begin() + m + 1);
  return TruncatedSeries<S>(std::move(c), s.field());
}

/// t^power * s, re-expressed at `order` (coefficients beyond the input's own
/// order are zero, which is exact when s is a polynomial such as [f]_M).
template <Scalar S>
TruncatedSeries<S> shift_up(const TruncatedSeries<S>& s, long power, long order) {
  auto out = TruncatedSeries<S>::zero(order, s.field());
  for (long k = 0; k <= s.order() && k + power <= order; ++k) out[k + power] = s[k];
  return out;
}

/// Coefficientwise comparison report.
struct SeriesComparison {
  bool equal = true;
  std::optional<long> first_mismatch;
  double max_deviation = 0.0;
};

template <Scalar S>
SeriesComparison compare(const TruncatedSeries<S>& a, const TruncatedSeries<S>& b) {
  SeriesComparison out;
  long n = std::min(a.order(), b.order());
  FieldTag field = a.field();
  for (long k = 0; k <= n; ++k) {
    if constexpr (is_exact_v<S>) {
      if (a[k] != b[k]) {
        out.max_deviation = std::max(out.max_deviation, magnitude(a[k] - b[k]));
        if (!out.first_mismatch) out.first_mismatch = k;
      }
    } else {
      out.max_deviation = std::max(out.max_deviation, magnitude(a[k] - b[k]));
      if (!nearly_equal(a[k], b[k], field) && !out.first_mismatch) out.first_mismatch = k;
    }
  }
  out.equal = !out.first_mismatch.has_value();
  return out;
}

/// Coefficient sequence given by a_0 and the successive-term multiplier
/// a_{k+1}/a_k. Once a coefficient is zero the remaining ones are zero and
/// the multiplier is not consulted again (terminating series).
template <Scalar S>
struct CoefficientStream {
  S first = S(1);
  std::function<S(long)> ratio;

  std::vector<S> take(long count) const {
    std::vector<S> out;
    out.reserve(count);
    S current = first;
    for (long k = 0; k < count; ++k) {
      out.push_back(current);
      if (k + 1 < count && !is_zero(current)) current = current * ratio(k);
    }
    return out;
  }
};

/// sum_k a_k inner^k truncated at `order`, by Horner accumulation.
template <Scalar S>
TruncatedSeries<S> compose(const CoefficientStream<S>& outer, const TruncatedSeries<S>& inner,
                           long order) {
  if (!is_zero(inner[0]))
    throw DomainError("compose: inner series must have zero constant term");
  if (order > inner.order()) throw DomainError("compose: inner series order too small");
  auto a = outer.take(order + 1);
  auto inner_n = truncate_to(inner, order);
  auto acc = TruncatedSeries<S>::constant(a[order], order, inner.field());
  for (long k = order - 1; k >= 0; --k) {
    acc = acc * inner_n;
    acc[0] += a[k];
  }
  return acc;
}

/// (1 - kappa t)^(-a): coefficient of t^n is (a)_n kappa^n / n!.
template <Scalar S>
TruncatedSeries<S> binomial_power(const S& kappa, const S& a, long order,
                                  FieldTag field = FieldTag::of<S>()) {
  auto s = TruncatedSeries<S>::one(order, field);
  for (long n = 0; n < order; ++n) s[n + 1] = s[n] * kappa * (a + S(n)) / S(n + 1);
  return s;
}

/// exp(kappa t).
template <Scalar S>
TruncatedSeries<S> exp_series(const S& kappa, long order, FieldTag field = FieldTag::of<S>()) {
  auto s = TruncatedSeries<S>::one(order, field);
  for (long n = 0; n < order; ++n) s[n + 1] = s[n] * kappa / S(n + 1);
  return s;
}

/// prod_j (1 - kappa_j t).
template <Scalar S>
TruncatedSeries<S> linear_factor_product(const std::vector<S>& kappas, long order,
                                         FieldTag field = FieldTag::of<S>()) {
  auto s = TruncatedSeries<S>::one(order, field);
  for (const S& kappa : kappas) {
    for (long n = order; n >= 1; --n) s[n] -= kappa * s[n - 1];
  }
  return s;
}

/// (kappa t; q)_length as a polynomial factor product.
template <Scalar S>
TruncatedSeries<S> finite_q_product(const S& kappa, const S& q, long length, long order,
                                    FieldTag field = FieldTag::of<S>()) {
  if (length < 0) throw DomainError("finite_q_product: negative length");
  std::vector<S> kappas;
  S k = kappa;
  for (long j = 0; j < length; ++j, k *= q) kappas.push_back(k);
  return linear_factor_product(kappas, order, field);
}

/// q-binomial theorem: sum_n (a;q)_n/(q;q)_n (kappa t)^n, the expansion of
/// (a kappa t; q)_inf / (kappa t; q)_inf.
template <Scalar S>
TruncatedSeries<S> q_binomial_series(const S& a, const S& kappa, const S& q, long order,
                                     FieldTag field = FieldTag::of<S>()) {
  if (is_zero(q)) throw DomainError("q_binomial_series: q must be nonzero");
  auto s = TruncatedSeries<S>::one(order, field);
  S qn(1);  // q^n
  for (long n = 0; n < order; ++n) {
    qn *= q;  // q^{n+1}
    S den = S(1) - qn;
    if (is_zero(den)) throw PoleError("q_binomial_series: (q;q)_n vanishes (q is a root of unity)");
    s[n + 1] = s[n] * kappa * (S(1) - a * qn / q) / den;
  }
  return s;
}

/// (kappa t; q)_inf itself: sum_n (-1)^n q^{n(n-1)/2} kappa^n t^n / (q;q)_n.
template <Scalar S>
TruncatedSeries<S> q_product_series(const S& kappa, const S& q, long order,
                                    FieldTag field = FieldTag::of<S>()) {
  if (is_zero(q)) throw DomainError("q_product_series: q must be nonzero");
  auto s = TruncatedSeries<S>::one(order, field);
  S qn(1);  // q^n
  for (long n = 0; n < order; ++n) {
    S next = qn * q;
    S den = S(1) - next;
    if (is_zero(den)) throw PoleError("q_product_series: (q;q)_n vanishes");
    s[n + 1] = -s[n] * kappa * qn / den;
    qn = next;
  }
  return s;
}

}  // namespace hyperconnect
