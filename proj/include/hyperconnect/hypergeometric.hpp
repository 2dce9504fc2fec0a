#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "hyperconnect/pochhammer.hpp"
#include "hyperconnect/scalar.hpp"
#include "hyperconnect/series.hpp"

namespace hyperconnect {

/// Parameters of an ordinary (pFq) or basic (r phi s) hypergeometric series.
template <Scalar S>
struct HyperSpec {
  std::vector<S> numerator;
  std::vector<S> denominator;
  std::optional<S> base;  ///< set for basic series

  static HyperSpec ordinary(std::vector<S> num, std::vector<S> den) {
    return {std::move(num), std::move(den), std::nullopt};
  }
  static HyperSpec basic(std::vector<S> num, std::vector<S> den, S q) {
    if (is_zero(q) || !(magnitude(q) < 1.0))
      throw DomainError("basic hypergeometric base must satisfy 0 < |q| < 1");
    return {std::move(num), std::move(den), std::move(q)};
  }
  bool is_basic() const { return base.has_value(); }
};

/// How a scalar series is summed.
struct EvalMode {
  enum class Kind { terminating, truncated };
  Kind kind = Kind::terminating;
  long max_terms = 0;
  double tolerance = 0.0;

  static EvalMode terminating() { return {}; }
  static EvalMode truncated(long max_terms, double tolerance) {
    if (max_terms <= 0 || !(tolerance > 0))
      throw DomainError("truncated mode needs a positive term budget and tolerance");
    return {Kind::truncated, max_terms, tolerance};
  }
};

/// Number of consecutive sub-tolerance terms required before stopping.
inline constexpr int kQuietTermsToStop = 5;

template <Scalar S>
struct EvalResult {
  S value;
  long terms = 0;            ///< terms actually summed
  double last_term = 0.0;    ///< modulus of the last term added
  bool terminated = false;   ///< series ended by a vanishing numerator factor
};

namespace detail {

// Shared summation loop: `ratio(k)` returns t_{k+1}/t_k and is only called
// while the current term is nonzero.
template <Scalar S, class Ratio>
EvalResult<S> sum_series(Ratio&& ratio, const EvalMode& mode, std::optional<long> last_index,
                         const char* what) {
  EvalResult<S> out{S(0)};
  S term(1);
  int quiet = 0;
  for (long k = 0;; ++k) {
    out.value += term;
    out.terms = k + 1;
    out.last_term = magnitude(term);
    if (mode.kind == EvalMode::Kind::terminating) {
      if (k == *last_index) {
        out.terminated = true;
        return out;
      }
    } else {
      if (magnitude(term) < mode.tolerance * magnitude(out.value)) {
        if (++quiet >= kQuietTermsToStop) return out;
      } else {
        quiet = 0;
      }
      if (out.terms >= mode.max_terms)
        throw ConvergenceError(std::string(what) + ": no convergence within " +
                               std::to_string(mode.max_terms) + " terms (last |term| = " +
                               std::to_string(out.last_term) + ")");
    }
    term *= ratio(k);
    if (is_zero(term)) {
      out.terminated = true;
      return out;
    }
  }
}

template <Scalar S>
void check_denominator(const S& value, const char* what) {
  if (is_zero(value)) throw PoleError(std::string(what) + ": denominator parameter pole");
}

// Terms needed for an ordinary series that terminates at a nonpositive
// integer numerator.
template <Scalar S>
std::optional<long> ordinary_termination(const HyperSpec<S>& spec) {
  std::optional<long> last;
  for (const S& a : spec.numerator) {
    if (auto m = nonpositive_integer(a)) {
      long len = -*m;
      if (!last || len < *last) last = len;
    }
  }
  return last;
}

// Identify numerator parameters of the form q^{-m}.
template <Scalar S>
std::optional<long> basic_termination(const HyperSpec<S>& spec, long search_limit = 4096) {
  const S& q = *spec.base;
  std::optional<long> last;
  for (const S& a : spec.numerator) {
    S aqm = a;
    for (long m = 0; m <= search_limit; ++m) {
      bool hit;
      if constexpr (is_exact_v<S>) hit = (aqm == S(1));
      else hit = magnitude(aqm - S(1)) < 1e-13;
      if (hit) {
        if (!last || m < *last) last = m;
        break;
      }
      if (magnitude(aqm) > 1e300) break;
      aqm *= q;
    }
  }
  return last;
}

template <Scalar S>
bool q_factor_vanishes(const S& factor) {
  if constexpr (is_exact_v<S>) return is_zero(factor);
  else return magnitude(factor) < 1e-13;
}

}  // namespace detail

/// Generalized hypergeometric series sum_k prod(a)_k / prod(b)_k z^k / k!.
///
/// Terminating mode sums exactly up to the first vanishing numerator factor
/// and requires a numerator parameter in -N_0. Truncated mode stops after
/// kQuietTermsToStop consecutive terms below tol * |partial sum|.
template <Scalar S>
EvalResult<S> pfq_eval(const HyperSpec<S>& spec, const S& z, const EvalMode& mode) {
  if (spec.is_basic()) throw DomainError("pfq_eval: basic spec passed to ordinary evaluator");
  std::optional<long> last;
  if (mode.kind == EvalMode::Kind::terminating) {
    last = detail::ordinary_termination(spec);
    if (!last) throw DomainError("pfq_eval: terminating mode needs a numerator in -N_0");
  }
  auto ratio = [&](long k) {
    S num = z;
    S den(k + 1);
    for (const S& a : spec.numerator) num *= a + S(k);
    if (is_zero(num)) return S(0);
    for (const S& b : spec.denominator) {
      S f = b + S(k);
      detail::check_denominator(f, "pfq_eval");
      den *= f;
    }
    return num / den;
  };
  return detail::sum_series<S>(ratio, mode, last, "pfq_eval");
}

/// Basic hypergeometric series with the ((-1)^k q^{k(k-1)/2})^{1+s-r} factor.
template <Scalar S>
EvalResult<S> rphis_eval(const HyperSpec<S>& spec, const S& z, const EvalMode& mode) {
  if (!spec.is_basic()) throw DomainError("rphis_eval: spec has no base q");
  const S& q = *spec.base;
  long r = static_cast<long>(spec.numerator.size());
  long s = static_cast<long>(spec.denominator.size());
  long excess = 1 + s - r;
  std::optional<long> last;
  if (mode.kind == EvalMode::Kind::terminating) {
    last = detail::basic_termination(spec);
    if (!last) throw DomainError("rphis_eval: terminating mode needs a numerator q^{-m}");
  }
  auto ratio = [&, qk = S(1)](long k) mutable {
    // qk tracks q^k.
    if (k > 0) qk *= q;
    S num = z * ipow(S(-1) * qk, excess);
    for (const S& a : spec.numerator) {
      S f = S(1) - a * qk;
      if (detail::q_factor_vanishes(f)) return S(0);
      num *= f;
    }
    S den = S(1) - qk * q;
    detail::check_denominator(den, "rphis_eval");
    for (const S& b : spec.denominator) {
      S f = S(1) - b * qk;
      if (detail::q_factor_vanishes(f)) throw PoleError("rphis_eval: denominator parameter pole");
      den *= f;
    }
    return num / den;
  };
  return detail::sum_series<S>(ratio, mode, last, "rphis_eval");
}

/// Two- and three-variable series housed by the generalized generating
/// functions: Appell F1, Humbert Phi2, Lauricella F_D^(3) and Phi2^(3).
template <Scalar S>
struct MultiVarKind {
  enum class Tag { F1, Phi2, FD3, Phi2_3 };
  Tag tag;
  std::optional<S> total_numerator;  ///< (a)_{m+n(+p)} factor, F1/FD3 only
  std::vector<S> per_index;          ///< (b_i)_{m_i}
  S denominator;                     ///< (c)_{m+n(+p)}

  static MultiVarKind F1(S a, S b, S bp, S c) { return {Tag::F1, a, {b, bp}, c}; }
  static MultiVarKind Phi2(S b, S bp, S c) { return {Tag::Phi2, std::nullopt, {b, bp}, c}; }
  static MultiVarKind FD3(S a, S b1, S b2, S b3, S c) {
    return {Tag::FD3, a, {b1, b2, b3}, c};
  }
  static MultiVarKind Phi2_3(S b1, S b2, S b3, S c) {
    return {Tag::Phi2_3, std::nullopt, {b1, b2, b3}, c};
  }
  std::size_t arity() const { return per_index.size(); }
};

namespace detail {


template <Scalar S>
class MultiIndexCoefficients {
 public:
  explicit MultiIndexCoefficients(const MultiVarKind<S>& kind) : kind_(kind) {
    if (kind.total_numerator) total_num_.push_back(S(1));
    den_.push_back(S(1));
    per_index_.assign(kind.per_index.size(), std::vector<S>{S(1)});
    fact_.push_back(S(1));
  }

  // Tables grow one shell at a time; precomputing to max_degree would
  // overflow double long before a convergent sum needs those entries.
  void extend_to(long degree) {
    auto grow = [degree](std::vector<S>& t, const S& a) {
      while (static_cast<long>(t.size()) <= degree) {
        const long j = static_cast<long>(t.size()) - 1;
        t.push_back(t.back() * (a + S(j)));
      }
    };
    if (kind_.total_numerator) grow(total_num_, *kind_.total_numerator);
    grow(den_, kind_.denominator);
    for (std::size_t i = 0; i < per_index_.size(); ++i) grow(per_index_[i], kind_.per_index[i]);
    grow(fact_, S(1));
  }

  /// Coefficient of prod z_i^{idx_i}; zero when the numerator vanishes.
  S operator()(const std::vector<long>& idx) const {
    long total = 0;
    for (long i : idx) total += i;
    S num(1);
    if (kind_.total_numerator) num *= total_num_[total];
    for (std::size_t i = 0; i < idx.size(); ++i) num *= per_index_[i][idx[i]];
    if (is_zero(num)) return S(0);
    if (is_zero(den_[total])) throw PoleError("multivariable series: denominator pole");
    S den = den_[total];
    for (long i : idx) den *= fact_[i];
    return num / den;
  }

  // Highest total degree with a nonzero coefficient, if the series terminates.
  std::optional<long> terminating_degree() const {
    if (kind_.total_numerator)
      if (auto m = nonpositive_integer(*kind_.total_numerator)) return -*m;
    return std::nullopt;
  }

 private:
  MultiVarKind<S> kind_;
  std::vector<S> total_num_, den_, fact_;
  std::vector<std::vector<S>> per_index_;
};

// Calls f(idx) for every multi-index of the given arity with |idx| == degree.
template <class F>
void for_each_shell(std::size_t arity, long degree, F&& f) {
  std::vector<long> idx(arity, 0);
  auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
    if (pos + 1 == arity) {
      idx[pos] = remaining;
      f(idx);
      return;
    }
    for (long i = 0; i <= remaining; ++i) {
      idx[pos] = i;
      self(self, pos + 1, remaining - i);
    }
  };
  rec(rec, 0, degree);
}

}  // namespace detail

/// Sums a multivariable series over total-degree shells, stopping after
/// kQuietTermsToStop consecutive shells below tol * |partial sum|.
template <Scalar S>
EvalResult<S> multivar_eval(const MultiVarKind<S>& kind, const std::vector<S>& args,
                            long max_degree, double tolerance) {
  if (args.size() != kind.arity())
    throw DomainError("multivar_eval: expected " + std::to_string(kind.arity()) + " arguments");
  detail::MultiIndexCoefficients<S> coeff(kind);
  std::vector<std::vector<S>> powers;
  for (const S& z : args) {
    std::vector<S> p(max_degree + 1, S(1));
    for (long k = 1; k <= max_degree; ++k) p[k] = p[k - 1] * z;
    powers.push_back(std::move(p));
  }
  auto stop_degree = coeff.terminating_degree();
  EvalResult<S> out{S(0)};
  int quiet = 0;
  for (long d = 0; d <= max_degree; ++d) {
    coeff.extend_to(d);
    S shell(0);
    detail::for_each_shell(kind.arity(), d, [&](const std::vector<long>& idx) {
      S c = coeff(idx);
      if (is_zero(c)) return;
      for (std::size_t i = 0; i < idx.size(); ++i) c *= powers[i][idx[i]];
      shell += c;
    });
    out.value += shell;
    out.terms = d + 1;
    out.last_term = magnitude(shell);
    if (stop_degree && d >= *stop_degree) {
      out.terminated = true;
      return out;
    }
    if (magnitude(shell) < tolerance * magnitude(out.value)) {
      if (++quiet >= kQuietTermsToStop) return out;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("multivar_eval: no convergence within total degree " +
                         std::to_string(max_degree));
}

/// Shape of a series argument: lambda * t or lambda * t / (1 - t).
template <Scalar S>
struct ArgShape {
  enum class Kind { linear, mobius };
  S lambda;
  Kind kind = Kind::linear;

  static ArgShape linear(S l) { return {std::move(l), Kind::linear}; }
  static ArgShape mobius(S l) { return {std::move(l), Kind::mobius}; }

  TruncatedSeries<S> series(long order, FieldTag field = FieldTag::of<S>()) const {
    auto s = TruncatedSeries<S>::zero(order, field);
    for (long k = 1; k <= order; ++k) {
      s[k] = lambda;
      if (kind == Kind::linear) break;
    }
    return s;
  }
};

/// Coefficient stream of an ordinary or basic series (a_0 = 1).
template <Scalar S>
CoefficientStream<S> hyper_stream(const HyperSpec<S>& spec) {
  CoefficientStream<S> stream;
  if (!spec.is_basic()) {
    stream.ratio = [spec](long k) {
      S num(1);
      for (const S& a : spec.numerator) num *= a + S(k);
      if (is_zero(num)) return S(0);
      S den(k + 1);
      for (const S& b : spec.denominator) {
        S f = b + S(k);
        detail::check_denominator(f, "hypergeometric series");
        den *= f;
      }
      return num / den;
    };
  } else {
    long excess = 1 + static_cast<long>(spec.denominator.size()) -
                  static_cast<long>(spec.numerator.size());
    stream.ratio = [spec, excess](long k) {
      const S& q = *spec.base;
      S qk = ipow(q, k);
      S num = ipow(S(-1) * qk, excess);
      for (const S& a : spec.numerator) {
        S f = S(1) - a * qk;
        if (detail::q_factor_vanishes(f)) return S(0);
        num *= f;
      }
      S den = S(1) - qk * q;
      detail::check_denominator(den, "basic hypergeometric series");
      for (const S& b : spec.denominator) {
        S f = S(1) - b * qk;
        if (detail::q_factor_vanishes(f)) throw PoleError("basic series: denominator pole");
        den *= f;
      }
      return num / den;
    };
  }
  return stream;
}

/// Single-variable series lifted to a truncated series in t.
template <Scalar S>
TruncatedSeries<S> hyper_series_in_t(const HyperSpec<S>& spec, const ArgShape<S>& arg, long order,
                                     FieldTag field = FieldTag::of<S>()) {
  return compose(hyper_stream(spec), arg.series(order, field), order);
}

/// Multivariable series lifted to t: the coefficient of t^M collects every
/// multi-index whose argument powers contribute to total degree M.
template <Scalar S>
TruncatedSeries<S> hyper_series_in_t(const MultiVarKind<S>& kind,
                                     const std::vector<ArgShape<S>>& args, long order,
                                     FieldTag field = FieldTag::of<S>()) {
  if (args.size() != kind.arity())
    throw DomainError("hyper_series_in_t: argument count does not match the series kind");
  detail::MultiIndexCoefficients<S> coeff(kind);
  coeff.extend_to(order);
  // powers[i][j] = (argument i)^j as a series.
  std::vector<std::vector<TruncatedSeries<S>>> powers;
  for (const auto& a : args) {
    auto base = a.series(order, field);
    std::vector<TruncatedSeries<S>> p{TruncatedSeries<S>::one(order, field)};
    for (long j = 1; j <= order; ++j) p.push_back(p.back() * base);
    powers.push_back(std::move(p));
  }
  auto result = TruncatedSeries<S>::zero(order, field);
  for (long d = 0; d <= order; ++d) {
    detail::for_each_shell(kind.arity(), d, [&](const std::vector<long>& idx) {
      S c = coeff(idx);
      if (is_zero(c)) return;
      auto term = powers[0][idx[0]];
      for (std::size_t i = 1; i < idx.size(); ++i) term = term * powers[i][idx[i]];
      result += term * c;
    });
  }
  return result;
}

}  // namespace hyperconnect
