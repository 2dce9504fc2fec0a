#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hyperconnect/connection.hpp"

namespace hyperconnect {

/// One verification request: a registry id plus its rational parameters.
struct IdentityCase {
  std::string id;
  std::map<std::string, Rational> params;
  long order = 12;                 ///< series order, or n_max for connection cases
  FieldKind field = FieldKind::exact;
  double tolerance = 1e-10;
  long x_max = 300;                ///< last x summed by the Meixner sums
  std::vector<Rational> x_samples;  ///< connection reconstruction points
  bool as_printed = false;         ///< use a misprinted form where one is registered

  friend bool operator==(const IdentityCase&, const IdentityCase&) = default;
};

enum class Status { pass, fail, error, inconclusive };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}
inline std::optional<Status> parse_status(const std::string& s) {
  for (Status v : {Status::pass, Status::fail, Status::error, Status::inconclusive})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

struct VerificationReport {
  IdentityCase input;
  Status status = Status::error;
  double deviation = 0.0;
  std::optional<long> first_failing_order;
  std::optional<long> terms_summed;
  std::optional<double> tail_bound;
  double millis = 0.0;
  std::string message;
};

struct BatchSummary {
  long total = 0, passed = 0, failed = 0, errors = 0, inconclusive = 0;
  bool all_passed() const { return passed == total; }
};

enum class CaseKind { generating_function, chain, invariance, connection, orthogonality, check };

struct TheoremInfo {
  std::string id;
  CaseKind kind;
  std::vector<std::string> parameters;
  std::string summary;
  bool has_printed_variant = false;
};

namespace detail {

template <Scalar S>
S param(const IdentityCase& c, const std::string& name) {
  auto it = c.params.find(name);
  if (it == c.params.end()) throw DomainError(c.id + ": parameter '" + name + "' is required");
  return scalar_cast<S>(it->second);
}

inline long int_param(const IdentityCase& c, const std::string& name) {
  auto it = c.params.find(name);
  if (it == c.params.end()) throw DomainError(c.id + ": parameter '" + name + "' is required");
  auto v = integer_value(it->second);
  if (!v) throw DomainError(c.id + ": parameter '" + name + "' must be an integer");
  return *v;
}

template <Scalar S>
TruncatedSeries<S> pfq_t(std::vector<S> num, std::vector<S> den, const ArgShape<S>& arg, long order) {
  return hyper_series_in_t(HyperSpec<S>::ordinary(std::move(num), std::move(den)), arg, order);
}

template <Scalar S>
ArgShape<S> lin(S l) {
  return ArgShape<S>::linear(std::move(l));
}
template <Scalar S>
ArgShape<S> mob(S l) {
  return ArgShape<S>::mobius(std::move(l));
}

/// sum_{n<=last} coef(n) P(n) t^n at `order`, coef(n) built at order-n.
template <Scalar S, class Coef, class Poly>
TruncatedSeries<S> weighted_sum(long order, long last, Coef&& coef, Poly&& poly) {
  auto out = TruncatedSeries<S>::zero(order);
  for (long n = 0; n <= std::min(order, last); ++n) {
    auto c = coef(n, order - n);
    out += shift_up(c * poly(n), n, order);
  }
  return out;
}

inline void require_domain_meixner(const IdentityCase& c, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    const Rational& v = c.params.at(n);
    std::string s = n;
    if ((s == "alpha" || s == "beta") && nonpositive_integer(v))
      throw DomainError(c.id + ": " + s + " must lie outside -N_0");
    if ((s == "c" || s == "d") && (v.is_zero() || v == Rational(1)))
      throw DomainError(c.id + ": " + s + " must differ from 0 and 1");
  }
}

}  // namespace detail

// ---- generating-function builders ---------------------------------------

template <Scalar S>
using SeriesPair = std::pair<TruncatedSeries<S>, TruncatedSeries<S>>;

namespace detail {

template <Scalar S>
struct MeixnerSymbols {
  S x, alpha, beta, c, d, gamma;
  explicit MeixnerSymbols(const IdentityCase& k) {
    auto get = [&](const char* n, S fallback) {
      return k.params.count(n) ? param<S>(k, n) : fallback;
    };
    x = param<S>(k, "x");
    alpha = param<S>(k, "alpha");
    beta = get("beta", alpha);
    c = param<S>(k, "c");
    d = get("d", c);
    gamma = get("gamma", S(1));
  }
  S kappa() const { return d * (S(1) - c) / (c * (S(1) - d)); }
  S gauss_rate() const { return (S(1) - c) / c; }
};

// e^t 1F1(-x;alpha;t(1-c)/c)
template <Scalar S>
TruncatedSeries<S> meixner_exp_lhs(const MeixnerSymbols<S>& m, long order) {
  return exp_series(S(1), order) * pfq_t<S>({-m.x}, {m.alpha}, lin(m.gauss_rate()), order);
}

// (1-t)^(-gamma) 2F1(gamma,-x;alpha;t(1-c)/(c(1-t)))
template <Scalar S>
TruncatedSeries<S> meixner_gauss_lhs(const MeixnerSymbols<S>& m, long order) {
  return binomial_power(S(1), m.gamma, order) *
         pfq_t<S>({m.gamma, -m.x}, {m.alpha}, mob(m.gauss_rate()), order);
}

template <Scalar S>
struct KrawtchoukSymbols {
  S x, p, q, gamma;
  long N, M;
  explicit KrawtchoukSymbols(const IdentityCase& k) {
    x = param<S>(k, "x");
    p = param<S>(k, "p");
    q = k.params.count("q") ? param<S>(k, "q") : p;
    gamma = k.params.count("gamma") ? param<S>(k, "gamma") : S(1);
    N = int_param(k, "N");
    M = k.params.count("M") ? int_param(k, "M") : N;
    if (N < 0 || M < N) throw DomainError(k.id + ": needs 0 <= N <= M");
    if (is_zero(p) || is_zero(q)) throw DomainError(k.id + ": p and q must be nonzero");
  }
};

// [e^t 1F1(-x;-N;-t/p)]_N
template <Scalar S>
TruncatedSeries<S> krawtchouk_exp_lhs(const KrawtchoukSymbols<S>& k) {
  return exp_series(S(1), k.N) * pfq_t<S>({-k.x}, {S(-k.N)}, lin(S(-1) / k.p), k.N);
}

// [(1-t)^(-gamma) 2F1(gamma,-x;-N;-t/(p(1-t)))]_N
template <Scalar S>
TruncatedSeries<S> krawtchouk_gauss_lhs(const KrawtchoukSymbols<S>& k) {
  return binomial_power(S(1), k.gamma, k.N) *
         pfq_t<S>({k.gamma, -k.x}, {S(-k.N)}, mob(S(-1) / k.p), k.N);
}

}  // namespace detail

/// Builds (lhs, rhs) of a generating-function identity.
template <Scalar S>
SeriesPair<S> build_sides(const IdentityCase& c) {
  using namespace detail;
  const std::string& id = c.id;
  const bool printed = c.as_printed;
  const long N = c.order;
  if (N < 0) throw DomainError(id + ": negative order");

  if (id.rfind("meixner_", 0) == 0) {
    MeixnerSymbols<S> m(c);
    require_domain_meixner(c, {"alpha", "c"});
    if (c.params.count("beta")) require_domain_meixner(c, {"beta"});
    if (c.params.count("d")) require_domain_meixner(c, {"d"});
    const S one(1);
    auto M = [&](const S& a, const S& cc) { return [&, a, cc](long n) { return meixner(n, m.x, a, cc); }; };
    auto ratio_beta_alpha = [&](long n) {
      return pochhammer(m.beta, n) / (pochhammer(m.alpha, n) * factorial<S>(n));
    };
    // (-x, x) is the order that makes the multivariable forms hold; the
    // printed form pairs (x, -x) with (t/c, t/d).
    const S first = printed ? m.x : -m.x;
    const S second = printed ? -m.x : m.x;

    if (id == "meixner_exp_gf") {
      return {meixner_exp_lhs(m, N),
              weighted_sum<S>(N, N, [&](long n, long o) { return TruncatedSeries<S>::constant(one / factorial<S>(n), o); },
                              M(m.alpha, m.c))};
    }
    if (id == "meixner_gauss_gf") {
      return {meixner_gauss_lhs(m, N),
              weighted_sum<S>(N, N, [&](long n, long o) {
                return TruncatedSeries<S>::constant(pochhammer(m.gamma, n) / factorial<S>(n), o);
              }, M(m.alpha, m.c))};
    }
    if (id == "meixner_confluent_alpha_c") {
      const S k = m.kappa();
      auto lhs = pfq_t<S>({-m.x}, {m.alpha}, lin(m.gauss_rate()), N);
      auto rhs = weighted_sum<S>(N, N, [&](long n, long o) {
        return pfq_t<S>({m.beta + S(n)}, {m.alpha + S(n)}, lin(-k), o) * (ratio_beta_alpha(n) * ipow(k, n));
      }, M(m.beta, m.d));
      return {lhs, rhs};
    }
    if (id == "meixner_exp_alpha") {
      return {meixner_exp_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                return pfq_t<S>({m.alpha - m.beta}, {m.alpha + S(n)}, lin(one), o) * ratio_beta_alpha(n);
              }, M(m.beta, m.c))};
    }
    if (id == "meixner_exp_c_phi2") {
      return {meixner_exp_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                auto kind = MultiVarKind<S>::Phi2(first, second, m.alpha + S(n));
                return hyper_series_in_t(kind, {lin(one / m.c), lin(one / m.d)}, o) * (one / factorial<S>(n));
              }, M(m.alpha, m.d))};
    }
    if (id == "meixner_exp_alpha_c_phi2_3") {
      return {meixner_exp_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                auto kind = MultiVarKind<S>::Phi2_3(first, second, m.alpha - m.beta, m.alpha + S(n));
                return hyper_series_in_t(kind, {lin(one / m.c), lin(one / m.d), lin(one)}, o) * ratio_beta_alpha(n);
              }, M(m.beta, m.d))};
    }
    if (id == "meixner_gauss_alpha") {
      return {meixner_gauss_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                return pfq_t<S>({m.gamma + S(n), m.alpha - m.beta}, {m.alpha + S(n)}, lin(one), o) *
                       (pochhammer(m.gamma, n) * ratio_beta_alpha(n));
              }, M(m.beta, m.c))};
    }
    if (id == "meixner_gauss_alpha_c") {
      const S k = m.kappa();
      return {meixner_gauss_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                // The printed form omits (1-t)^(-gamma) from the prefactor.
                S power = printed ? S(n) : m.gamma + S(n);
                return pfq_t<S>({m.gamma + S(n), m.beta + S(n)}, {m.alpha + S(n)}, mob(-k), o) *
                       binomial_power(one, power, o) * (pochhammer(m.gamma, n) * ratio_beta_alpha(n) * ipow(k, n));
              }, M(m.beta, m.d))};
    }
    if (id == "meixner_gauss_c_appell") {
      return {meixner_gauss_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                auto kind = MultiVarKind<S>::F1(m.gamma + S(n), first, second, m.alpha + S(n));
                return hyper_series_in_t(kind, {lin(one / m.c), lin(one / m.d)}, o) *
                       (pochhammer(m.gamma, n) / factorial<S>(n));
              }, M(m.alpha, m.d))};
    }
    if (id == "meixner_gauss_alpha_c_lauricella") {
      return {meixner_gauss_lhs(m, N), weighted_sum<S>(N, N, [&](long n, long o) {
                auto kind = MultiVarKind<S>::FD3(m.gamma + S(n), first, second, m.alpha - m.beta, m.alpha + S(n));
                return hyper_series_in_t(kind, {lin(one / m.c), lin(one / m.d), lin(one)}, o) *
                       (pochhammer(m.gamma, n) * ratio_beta_alpha(n));
              }, M(m.beta, m.d))};
    }
  }

  if (id.rfind("krawtchouk_", 0) == 0) {
    KrawtchoukSymbols<S> k(c);
    const S one(1);
    const S r = k.q / k.p;
    auto K = [&](const S& p, long NN) { return [&, p, NN](long n) { return krawtchouk(n, k.x, p, NN); }; };
    auto kraw_ratio = [&](long n) {
      return neg_int_pochhammer<S>(k.M, n) / (neg_int_pochhammer<S>(k.N, n) * factorial<S>(n));
    };
    if (id == "krawtchouk_exp_gf") {
      return {krawtchouk_exp_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return TruncatedSeries<S>::constant(one / factorial<S>(n), o);
              }, K(k.p, k.N))};
    }
    if (id == "krawtchouk_gauss_gf") {
      return {krawtchouk_gauss_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return TruncatedSeries<S>::constant(pochhammer(k.gamma, n) / factorial<S>(n), o);
              }, K(k.p, k.N))};
    }
    if (id == "krawtchouk_exp_p_n") {
      return {krawtchouk_exp_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return exp_series(one, o) * pfq_t<S>({S(n - k.M)}, {S(n - k.N)}, lin(-r), o) *
                       (kraw_ratio(n) * ipow(r, n));
              }, K(k.q, k.M))};
    }
    if (id == "krawtchouk_exp_n") {
      return {krawtchouk_exp_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return pfq_t<S>({S(k.M - k.N)}, {S(n - k.N)}, lin(one), o) * kraw_ratio(n);
              }, K(k.p, k.M))};
    }
    if (id == "krawtchouk_exp_p") {
      return {krawtchouk_exp_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return exp_series(one - r, o) * (ipow(r, n) / factorial<S>(n));
              }, K(k.q, k.N))};
    }
    if (id == "krawtchouk_gauss_p_n") {
      return {krawtchouk_gauss_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return binomial_power(one, k.gamma + S(n), o) *
                       pfq_t<S>({k.gamma + S(n), S(n - k.M)}, {S(n - k.N)}, mob(-r), o) *
                       (kraw_ratio(n) * pochhammer(k.gamma, n) * ipow(r, n));
              }, K(k.q, k.M))};
    }
    if (id == "krawtchouk_gauss_n") {
      return {krawtchouk_gauss_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return pfq_t<S>({k.gamma + S(n), S(k.M - k.N)}, {S(n - k.N)}, lin(one), o) *
                       (kraw_ratio(n) * pochhammer(k.gamma, n));
              }, K(k.p, k.M))};
    }
    if (id == "krawtchouk_gauss_p") {
      return {krawtchouk_gauss_lhs(k), weighted_sum<S>(k.N, k.N, [&](long n, long o) {
                return binomial_power(one - r, k.gamma + S(n), o) *
                       (pochhammer(k.gamma, n) / factorial<S>(n) * ipow(r, n));
              }, K(k.q, k.N))};
    }
  }
  throw DomainError("unknown generating-function identity '" + id + "'");
}

// ---- registry ------------------------------------------------------------

inline const std::vector<TheoremInfo>& theorem_registry() {
  using K = CaseKind;
  static const std::vector<TheoremInfo> reg{
      {"meixner_exp_gf", K::generating_function, {"x", "alpha", "c"}, "e^t 1F1 generating function of Meixner"},
      {"meixner_gauss_gf", K::generating_function, {"x", "alpha", "c", "gamma"}, "(1-t)^-gamma 2F1 generating function of Meixner"},
      {"meixner_confluent_alpha_c", K::generating_function, {"x", "alpha", "beta", "c", "d"}, "1F1(-x;alpha;t(1-c)/c) in M_n(x;beta,d)"},
      {"meixner_exp_alpha", K::generating_function, {"x", "alpha", "beta", "c"}, "e^t 1F1 in M_n(x;beta,c), 1F1 coefficients"},
      {"meixner_exp_c_phi2", K::generating_function, {"x", "alpha", "c", "d"}, "e^t 1F1 in M_n(x;alpha,d), Humbert Phi2 coefficients", true},
      {"meixner_exp_alpha_c_phi2_3", K::generating_function, {"x", "alpha", "beta", "c", "d"}, "e^t 1F1 in M_n(x;beta,d), Phi2^(3) coefficients", true},
      {"meixner_gauss_alpha", K::generating_function, {"x", "alpha", "beta", "c", "gamma"}, "(1-t)^-gamma 2F1 in M_n(x;beta,c), 2F1 coefficients"},
      {"meixner_gauss_alpha_c", K::generating_function, {"x", "alpha", "beta", "c", "d", "gamma"}, "(1-t)^-gamma 2F1 in M_n(x;beta,d), 2F1 coefficients", true},
      {"meixner_gauss_c_appell", K::generating_function, {"x", "alpha", "c", "d", "gamma"}, "(1-t)^-gamma 2F1 in M_n(x;alpha,d), Appell F1 coefficients", true},
      {"meixner_gauss_alpha_c_lauricella", K::generating_function, {"x", "alpha", "beta", "c", "d", "gamma"}, "(1-t)^-gamma 2F1 in M_n(x;beta,d), Lauricella coefficients", true},
      {"krawtchouk_exp_gf", K::generating_function, {"x", "p", "N"}, "[e^t 1F1]_N generating function of Krawtchouk"},
      {"krawtchouk_gauss_gf", K::generating_function, {"x", "p", "N", "gamma"}, "[(1-t)^-gamma 2F1]_N generating function of Krawtchouk"},
      {"krawtchouk_exp_p_n", K::generating_function, {"x", "p", "q", "N", "M"}, "[e^t 1F1]_N in K_n(x;q,M)"},
      {"krawtchouk_exp_n", K::generating_function, {"x", "p", "N", "M"}, "[e^t 1F1]_N in K_n(x;p,M)"},
      {"krawtchouk_exp_p", K::generating_function, {"x", "p", "q", "N"}, "[e^t 1F1]_N in K_n(x;q,N)"},
      {"krawtchouk_gauss_p_n", K::generating_function, {"x", "p", "q", "N", "M", "gamma"}, "[(1-t)^-gamma 2F1]_N in K_n(x;q,M)"},
      {"krawtchouk_gauss_n", K::generating_function, {"x", "p", "N", "M", "gamma"}, "[(1-t)^-gamma 2F1]_N in K_n(x;p,M)"},
      {"krawtchouk_gauss_p", K::generating_function, {"x", "p", "q", "N", "gamma"}, "[(1-t)^-gamma 2F1]_N in K_n(x;q,N)"},

      {"chain.meixner_confluent_alpha_c.d=c", K::chain, {"x", "alpha", "beta", "c"}, "d=c turns the confluent form into e^-t times the e^t form"},
      {"chain.meixner_exp_c_phi2.d=c", K::chain, {"x", "alpha", "c"}, "d=c reduces Phi2 coefficients to the plain generating function"},
      {"chain.meixner_exp_alpha_c_phi2_3.d=c", K::chain, {"x", "alpha", "beta", "c"}, "d=c reduces Phi2^(3) coefficients to the 1F1 ones"},
      {"chain.meixner_gauss_alpha_c.d=c", K::chain, {"x", "alpha", "beta", "c", "gamma"}, "d=c reduces to the 2F1(gamma+n,alpha-beta) form"},
      {"chain.meixner_gauss_c_appell.d=c", K::chain, {"x", "alpha", "c", "gamma"}, "d=c reduces F1 coefficients to the plain generating function"},
      {"chain.meixner_gauss_alpha_c_lauricella.d=c", K::chain, {"x", "alpha", "beta", "c", "gamma"}, "d=c reduces Lauricella coefficients to the 2F1 ones"},
      {"chain.krawtchouk_exp_p_n.p=q", K::chain, {"x", "p", "N", "M"}, "p=q specialization"},
      {"chain.krawtchouk_exp_p_n.M=N", K::chain, {"x", "p", "q", "N"}, "M=N specialization"},
      {"chain.krawtchouk_gauss_p_n.p=q", K::chain, {"x", "p", "N", "M", "gamma"}, "p=q specialization"},
      {"chain.krawtchouk_gauss_p_n.M=N", K::chain, {"x", "p", "q", "N", "gamma"}, "M=N specialization"},

      {"invariance.meixner_exp_gf.alpha_to_beta", K::invariance, {"x", "alpha", "c"}, "alpha_to_beta with beta=alpha applied to the e^t generating function"},
      {"invariance.meixner_gauss_gf.alpha_to_beta", K::invariance, {"x", "alpha", "c", "gamma"}, "alpha_to_beta with beta=alpha applied to the (1-t)^-gamma generating function"},
      {"invariance.meixner_exp_gf.type_c_to_d", K::invariance, {"x", "alpha", "c"}, "type_c_to_d with d=c applied to the e^t generating function"},
      {"invariance.meixner_gauss_gf.type_c_to_d", K::invariance, {"x", "alpha", "c", "gamma"}, "type_c_to_d with d=c applied to the (1-t)^-gamma generating function"},
      {"invariance.krawtchouk_exp_gf.p_to_q_same_N", K::invariance, {"x", "p", "N"}, "p_to_q_same_N with q=p applied to the exponential generating function"},
      {"invariance.krawtchouk_gauss_gf.p_to_q_same_N", K::invariance, {"x", "p", "N", "gamma"}, "p_to_q_same_N with q=p applied to the (1-t)^-gamma generating function"},
      {"invariance.krawtchouk_exp_gf.same_p_N_to_M", K::invariance, {"x", "p", "N"}, "same_p_N_to_M with M=N applied to the exponential generating function"},
      {"invariance.krawtchouk_gauss_gf.same_p_N_to_M", K::invariance, {"x", "p", "N", "gamma"}, "same_p_N_to_M with M=N applied to the (1-t)^-gamma generating function"},

      {"meixner.alpha_c_to_beta_d", K::connection, {"alpha", "beta", "c", "d"}, "M_n(x;alpha,c) in M_k(x;beta,d)"},
      {"meixner.same_alpha_c_to_d", K::connection, {"alpha", "c", "d"}, "M_n(x;alpha,c) in M_k(x;alpha,d)"},
      {"meixner.alpha_to_beta", K::connection, {"alpha", "beta", "c"}, "M_n(x;alpha,c) in M_k(x;beta,c)"},
      {"meixner.type_c_to_d", K::connection, {"alpha", "c", "d"}, "x-dependent expansion of M_n(x;alpha,c) in M_k(x;alpha,d)"},
      {"meixner.type_alpha_c", K::connection, {"alpha", "beta", "c", "d"}, "x-dependent expansion of M_n(x;alpha,c) in M_k(x;beta,d)"},
      {"krawtchouk.p_N_to_q_M", K::connection, {"p", "q", "N", "M"}, "K_n(x;p,N) in K_k(x;q,M)"},
      {"krawtchouk.p_to_q_same_N", K::connection, {"p", "q", "N"}, "K_n(x;p,N) in K_k(x;q,N)"},
      {"krawtchouk.same_p_N_to_M", K::connection, {"p", "N", "M"}, "K_n(x;p,N) in K_k(x;p,M)"},

      {"meixner_orthogonality", K::orthogonality, {"alpha", "c", "n", "m"}, "discrete orthogonality of M_n(x;alpha,c)"},
      {"meixner_sum_exp_alpha", K::orthogonality, {"alpha", "beta", "c", "t", "n"}, "sum of 1F1(-x;alpha;t(1-c)/c) M_n(x;beta,c) against the beta,c weight"},
      {"meixner_sum_confluent_alpha_c", K::orthogonality, {"alpha", "beta", "c", "d", "t", "n"}, "sum of 1F1(-x;alpha;t(1-c)/c) M_n(x;beta,d) against the beta,d weight", true},
      {"meixner_sum_gauss_alpha", K::orthogonality, {"alpha", "beta", "c", "gamma", "t", "n"}, "sum of 2F1(gamma,-x;alpha;z) M_n(x;beta,c) against the beta,c weight"},
      {"meixner_sum_gauss_alpha_c", K::orthogonality, {"alpha", "beta", "c", "d", "gamma", "t", "n"}, "sum of 2F1(gamma,-x;alpha;z) M_n(x;beta,d) against the beta,d weight"},
      {"krawtchouk_sum_exp", K::orthogonality, {"p", "q", "N", "M", "t", "n"}, "binomial-weight sum of [e^t 1F1]_N K_n(x;q,M)"},
      {"krawtchouk_sum_gauss", K::orthogonality, {"p", "q", "N", "M", "gamma", "t", "n"}, "binomial-weight sum of [(1-t)^-gamma 2F1]_N K_n(x;q,M)"},

      {"check.power_collect_meixner", K::check, {"alpha", "beta", "c"}, "power collection equals the alpha_to_beta table"},
      {"check.linear_solve_meixner", K::check, {"alpha", "beta", "c", "d"}, "linear-solve oracle equals the Meixner closed forms"},
      {"check.linear_solve_krawtchouk", K::check, {"p", "q", "N", "M"}, "linear-solve oracle equals the Krawtchouk closed forms"},
      {"check.power_collect_al_salam_carlitz_1", K::check, {"a", "b", "q"}, "power collection agrees with the linear-solve oracle"},
      {"check.pochhammer_bounds", K::check, {}, "Pochhammer growth bounds on 100-point grids"},
      {"check.catalog", K::check, {}, "catalog completeness and expansion cross-checks"},
  };
  return reg;
}

inline const TheoremInfo& theorem_info(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  throw DomainError("unknown theorem id '" + id + "'");
}

/// Rejects unknown ids, missing and unexpected parameters.
inline void validate_case(const IdentityCase& c) {
  const auto& info = theorem_info(c.id);
  for (const auto& p : info.parameters)
    if (!c.params.count(p)) throw DomainError(c.id + ": parameter '" + p + "' is required");
  for (const auto& [name, v] : c.params)
    if (std::find(info.parameters.begin(), info.parameters.end(), name) == info.parameters.end())
      throw DomainError(c.id + " takes no parameter '" + name + "'");
  if (c.as_printed && !info.has_printed_variant)
    throw DomainError(c.id + " has no separately printed variant");
}

// ---- verification --------------------------------------------------------

namespace detail {

template <Scalar S>
void judge_series(VerificationReport& r, const TruncatedSeries<S>& lhs, const TruncatedSeries<S>& rhs,
                  double tol) {
  SeriesComparison cmp;
  if constexpr (is_exact_v<S>) {
    cmp = compare(lhs, rhs);
  } else {
    TruncatedSeries<S> l(lhs.coefficients(), FieldTag::numeric(tol));
    TruncatedSeries<S> rr(rhs.coefficients(), FieldTag::numeric(tol));
    cmp = compare(l, rr);
  }
  r.deviation = cmp.max_deviation;
  r.first_failing_order = cmp.first_mismatch;
  r.status = cmp.equal ? Status::pass : Status::fail;
  if (!cmp.equal) r.message = "coefficients differ from order " + std::to_string(*cmp.first_mismatch);
}

inline IdentityCase with(IdentityCase c, const std::string& id,
                         std::initializer_list<std::pair<const std::string, Rational>> extra) {
  c.id = id;
  for (const auto& [k, v] : extra) c.params.insert_or_assign(k, v);
  return c;
}

template <Scalar S>
void run_chain(const IdentityCase& c, VerificationReport& r) {
  const std::string& id = c.id;
  auto base = id.substr(6, id.rfind('.') - 6);
  auto spec = id.substr(id.rfind('.') + 1);
  IdentityCase general = c;
  general.id = base;
  IdentityCase target = c;
  if (spec == "d=c") {
    general.params["d"] = c.params.at("c");
    if (base == "meixner_confluent_alpha_c" || base == "meixner_exp_alpha_c_phi2_3") target.id = "meixner_exp_alpha";
    else if (base == "meixner_exp_c_phi2") target.id = "meixner_exp_gf";
    else if (base == "meixner_gauss_c_appell") target.id = "meixner_gauss_gf";
    else target.id = "meixner_gauss_alpha";
  } else if (spec == "p=q") {
    general.params["q"] = c.params.at("p");
    target.id = base == "krawtchouk_exp_p_n" ? "krawtchouk_exp_n" : "krawtchouk_gauss_n";
  } else {
    general.params["M"] = c.params.at("N");
    target.id = base == "krawtchouk_exp_p_n" ? "krawtchouk_exp_p" : "krawtchouk_gauss_p";
  }
  auto specialized = build_sides<S>(general).second;
  if (base == "meixner_confluent_alpha_c") specialized = exp_series(S(1), c.order) * specialized;
  auto displayed = build_sides<S>(target).second;
  judge_series(r, specialized, displayed, c.tolerance);
}

template <Scalar S>
void run_invariance(const IdentityCase& c, VerificationReport& r) {
  const std::string& id = c.id;
  auto first = id.find('.');
  auto last = id.rfind('.');
  std::string gf = id.substr(first + 1, last - first - 1);
  std::string rel = id.substr(last + 1);
  IdentityCase g = c;
  g.id = gf;
  auto [lhs, plain] = build_sides<S>(g);
  const S x = param<S>(c, "x");

  std::function<S(long)> expanded;
  if (gf.rfind("meixner", 0) == 0) {
    ParamSet<S> ps{{"alpha", param<S>(c, "alpha")}, {"c", param<S>(c, "c")}};
    auto relation = *parse_meixner_relation(rel);
    ps.set(relation == MeixnerRelation::alpha_to_beta ? "beta" : "d",
           relation == MeixnerRelation::alpha_to_beta ? ps.get("alpha") : ps.get("c"));
    long n_max = lhs.order();
    auto e = meixner_connection(relation, ps, n_max);
    expanded = [e, x](long n) { return reconstruct(e, family("meixner"), n, x); };
  } else {
    ParamSet<S> ps{{"p", param<S>(c, "p")}, {"N", param<S>(c, "N")}};
    auto relation = *parse_krawtchouk_relation(rel);
    ps.set(relation == KrawtchoukRelation::p_to_q_same_N ? "q" : "M",
           relation == KrawtchoukRelation::p_to_q_same_N ? ps.get("p") : ps.get("N"));
    auto e = krawtchouk_connection(relation, ps, lhs.order());
    expanded = [e, x](long n) { return reconstruct(e, family("krawtchouk"), n, x); };
  }
  // Rebuild the expansion with every P_n replaced by its connection sum.
  auto rebuilt = TruncatedSeries<S>::zero(lhs.order());
  auto unit = [&]() {
    IdentityCase u = g;
    return u;
  }();
  (void)unit;
  for (long n = 0; n <= lhs.order(); ++n) {
    // plain[n] = c_n P_n(x); recover c_n from the generating-function identity itself.
    S pn = gf.rfind("meixner", 0) == 0 ? meixner(n, x, param<S>(c, "alpha"), param<S>(c, "c"))
                                      : krawtchouk(n, x, param<S>(c, "p"), int_param(c, "N"));
    if (is_zero(pn)) {
      rebuilt[n] = plain[n];
      if (!is_zero(expanded(n))) {
        r.status = Status::fail;
        r.first_failing_order = n;
        r.message = "connection sum does not vanish where P_n does";
        return;
      }
      continue;
    }
    rebuilt[n] = plain[n] / pn * expanded(n);
  }
  judge_series(r, plain, rebuilt, c.tolerance);
  if (r.status == Status::pass) {
    auto against_lhs = compare(lhs, rebuilt);
    if (!against_lhs.equal && is_exact_v<S>) {
      r.status = Status::fail;
      r.first_failing_order = against_lhs.first_mismatch;
      r.message = "rebuilt series differs from the generating function";
    }
  }
}

template <Scalar S>
void run_connection(const IdentityCase& c, VerificationReport& r) {
  const std::string rel = c.id.substr(c.id.find('.') + 1);
  const bool meix = c.id.rfind("meixner", 0) == 0;
  ParamSet<S> ps;
  for (const auto& [k, v] : c.params) ps.set(k, scalar_cast<S>(v));
  std::vector<S> xs;
  for (const auto& x : c.x_samples) xs.push_back(scalar_cast<S>(x));
  if (xs.empty())
    for (const Rational& x : {Rational(0), Rational(1), Rational(5, 2), Rational(4), Rational(-3, 7)})
      xs.push_back(scalar_cast<S>(x));
  const long n_max = c.order;
  ConnectionExpansion<S> e = meix ? meixner_connection(*parse_meixner_relation(rel), ps, n_max)
                                  : krawtchouk_connection(*parse_krawtchouk_relation(rel), ps, n_max);
  const auto& d = family(e.family);
  r.status = Status::pass;
  for (long n = 0; n <= n_max; ++n) {
    for (const S& x : xs) {
      S want = family_eval(d, n, x, e.source);
      S got = reconstruct(e, d, n, x);
      double dev = magnitude(want - got);
      r.deviation = std::max(r.deviation, dev);
      bool ok = is_exact_v<S> ? want == got : nearly_equal(got, want, FieldTag::numeric(c.tolerance));
      if (!ok && r.status == Status::pass) {
        r.status = Status::fail;
        r.first_failing_order = n;
        r.message = "reconstruction fails at n = " + std::to_string(n) + ", x = " + to_string(x);
      }
    }
  }
}

// ---- orthogonality sums ----

struct SumOutcome {
  Complex lhs;
  Complex rhs;
  long terms = 0;
  double tail = 0.0;
};

// sum_{x<=X} term(x) with a geometric bound on the remainder.
inline std::pair<Complex, double> meixner_series_sum(const std::function<Complex(long)>& term, long x_max,
                                                     long& terms) {
  std::complex<double> sum{};
  std::vector<double> mags;
  for (long x = 0; x <= x_max; ++x) {
    Complex v = term(x);
    sum += v.value();
    mags.push_back(magnitude(v));
  }
  terms = x_max + 1;
  // Largest successive ratio over the last stretch bounds the tail
  // geometrically; a ratio at or above 1 gives no bound.
  double rho = 0.0;
  long window = std::min<long>(20, x_max);
  for (long x = x_max - window; x < x_max; ++x) {
    if (mags[x] == 0.0) continue;
    rho = std::max(rho, mags[x + 1] / mags[x]);
  }
  double tail = rho < 1.0 ? mags.back() * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  return {Complex(sum), tail};
}

inline Complex truncated_pfq(std::vector<Complex> num, std::vector<Complex> den, const Complex& z) {
  return pfq_eval(HyperSpec<Complex>::ordinary(std::move(num), std::move(den)), z,
                  EvalMode::truncated(100000, 1e-18))
      .value;
}

inline Complex terminating_pfq(std::vector<Complex> num, std::vector<Complex> den, const Complex& z) {
  return pfq_eval(HyperSpec<Complex>::ordinary(std::move(num), std::move(den)), z, EvalMode::terminating())
      .value;
}

inline SumOutcome meixner_sum(const IdentityCase& c) {
  using C = Complex;
  const std::string& id = c.id;
  auto P = [&](const char* n) { return param<C>(c, n); };
  const long n = int_param(c, "n");
  if (n < 0) throw DomainError(id + ": n must be nonnegative");
  if (c.x_max < 1) throw DomainError(id + ": x_max must be positive");
  SumOutcome out;

  if (id == "meixner_orthogonality") {
    const long m = int_param(c, "m");
    const C alpha = P("alpha"), cc = P("c");
    if (!(c.params.at("alpha") > Rational(0)) || !(c.params.at("c") > Rational(0)) || !(c.params.at("c") < Rational(1)))
      throw DomainError(id + ": needs alpha > 0 and 0 < c < 1");
    C w(1);
    std::vector<C> weights;
    for (long x = 0; x <= c.x_max; ++x) {
      weights.push_back(w);
      w = w * (alpha + C(x)) * cc / C(x + 1);
    }
    auto [s, tail] = meixner_series_sum(
        [&](long x) { return meixner(n, C(x), alpha, cc) * meixner(m, C(x), alpha, cc) * weights[x]; },
        c.x_max, out.terms);
    out.lhs = s;
    out.tail = tail;
    out.rhs = n == m ? factorial<C>(n) / (ipow(cc, n) * C(std::pow(1.0 - cc.real(), alpha.real())) *
                                         pochhammer(alpha, n))
                     : C(0);
    return out;
  }

  const C alpha = P("alpha"), beta = P("beta"), cc = P("c"), t = P("t");
  const bool has_d = c.params.count("d") > 0;
  const C d = has_d ? P("d") : cc;
  const bool gauss = c.params.count("gamma") > 0;
  const C gamma = gauss ? P("gamma") : C(1);
  for (const char* name : {"alpha", "beta"})
    if (!(c.params.at(name) > Rational(0))) throw DomainError(id + ": needs alpha, beta > 0");
  for (const char* name : {"c", "d"})
    if (c.params.count(name) && !(c.params.at(name) > Rational(0) && c.params.at(name) < Rational(1)))
      throw DomainError(id + ": needs c, d in (0,1)");

  const C one(1);
  const C z = gauss ? t * (one - cc) / (cc * (one - t)) : t * (one - cc) / cc;
  std::vector<C> weights;
  C w(1);
  for (long x = 0; x <= c.x_max; ++x) {
    weights.push_back(w);
    w = w * (beta + C(x)) * d / C(x + 1);
  }
  auto kernel = [&](long x) {
    C xv(x);
    // Pfaff: for real z in (0,1) the transformed series has argument
    // z/(z-1) < 0 and no longer cancels catastrophically for large x.
    if (gauss && z.imag() == 0.0 && z.real() > 0.0 && z.real() < 1.0)
      return C(std::pow(1.0 - z.real(), static_cast<double>(x))) *
             terminating_pfq({alpha - gamma, -xv}, {alpha}, z / (z - one));
    if (gauss) return terminating_pfq({gamma, -xv}, {alpha}, z);
    return terminating_pfq({-xv}, {alpha}, z);
  };
  auto [s, tail] = meixner_series_sum([&](long x) { return kernel(x) * meixner(n, C(x), beta, d) * weights[x]; },
                                      c.x_max, out.terms);
  out.lhs = s;
  out.tail = tail;
  auto real_pow = [](const C& base, const C& e) { return C(std::pow(base.value(), e.value())); };
  const C nn(n);
  if (id == "meixner_sum_exp_alpha") {
    out.rhs = ipow(t, n) * exp(-t) / (real_pow(one - cc, beta) * pochhammer(alpha, n) * ipow(cc, n)) *
              truncated_pfq({alpha - beta}, {alpha + nn}, t);
  } else if (id == "meixner_sum_confluent_alpha_c") {
    out.rhs = ipow(t, n) * ipow(one - cc, n) / (ipow(cc, n) * real_pow(one - d, nn + beta) * pochhammer(alpha, n)) *
              truncated_pfq({beta + nn}, {alpha + nn}, -d * t * (one - cc) / (cc * (one - d)));
    // The printed right-hand side carries an extra e^{-t}.
    if (c.as_printed) out.rhs = out.rhs * exp(-t);
  } else if (id == "meixner_sum_gauss_alpha") {
    out.rhs = real_pow(one - t, gamma) * pochhammer(gamma, n) * ipow(t, n) /
              (real_pow(one - cc, beta) * pochhammer(alpha, n) * ipow(cc, n)) *
              truncated_pfq({alpha - beta, gamma + nn}, {alpha + nn}, t);
  } else if (id == "meixner_sum_gauss_alpha_c") {
    out.rhs = pochhammer(gamma, n) / (real_pow(one - d, nn + beta) * pochhammer(alpha, n)) * ipow(z, n) *
              truncated_pfq({gamma + nn, beta + nn}, {alpha + nn}, -d * t * (one - cc) / (cc * (one - d) * (one - t)));
  } else {
    throw DomainError("unknown Meixner sum '" + id + "'");
  }
  return out;
}

template <Scalar S>
std::pair<S, S> krawtchouk_sum(const IdentityCase& c) {
  KrawtchoukSymbols<S> k([&] {
    IdentityCase kc = c;
    kc.params["x"] = Rational(0);
    return kc;
  }());
  const S t = param<S>(c, "t");
  const long n = int_param(c, "n");
  if (n < 0 || n > k.N) throw DomainError(c.id + ": needs 0 <= n <= N");
  const bool gauss = c.id == "krawtchouk_sum_gauss";
  const S one(1);
  S lhs(0);
  for (long x = 0; x <= k.M; ++x) {
    KrawtchoukSymbols<S> kx = k;
    kx.x = S(x);
    auto gf = gauss ? krawtchouk_gauss_lhs(kx) : krawtchouk_exp_lhs(kx);
    lhs += binomial_coefficient<S>(k.M, x) * ipow(k.q, x) * ipow(one - k.q, k.M - x) * gf.evaluate(t) *
           krawtchouk(n, S(x), k.q, k.M);
  }
  const long o = k.N - n;
  const S r = k.q / k.p;
  S rhs = ipow(t * (k.q - one) / k.p, n) / neg_int_pochhammer<S>(k.N, n);
  if (gauss) {
    rhs *= pochhammer(k.gamma, n) *
           (binomial_power(one, k.gamma + S(n), o) * pfq_t<S>({k.gamma + S(n), S(n - k.M)}, {S(n - k.N)}, mob(-r), o))
               .evaluate(t);
  } else {
    rhs *= (exp_series(one, o) * pfq_t<S>({S(n - k.M)}, {S(n - k.N)}, lin(-r), o)).evaluate(t);
  }
  return {lhs, rhs};
}

// ---- checks ----

template <Scalar S>
bool tables_equal(const ConnectionExpansion<S>& a, const ConnectionExpansion<S>& b, double tol, double& dev) {
  bool ok = true;
  for (long n = 0; n <= std::min(a.n_max, b.n_max); ++n)
    for (long k = 0; k <= n; ++k) {
      S x = a.coefficient(n, k), y = b.coefficient(n, k);
      dev = std::max(dev, magnitude(x - y));
      if constexpr (is_exact_v<S>) ok = ok && x == y;
      else ok = ok && nearly_equal(x, y, FieldTag::numeric(tol));
    }
  return ok;
}

inline void run_check(const IdentityCase& c, VerificationReport& r) {
  using Q = Rational;
  auto fail = [&](const std::string& why) {
    if (r.status != Status::fail) r.message = why;
    r.status = Status::fail;
  };
  r.status = Status::pass;
  const std::string& id = c.id;
  if (id == "check.power_collect_meixner") {
    const long n_max = c.order;
    ParamSet<Q> ps{{"alpha", c.params.at("alpha")}, {"beta", c.params.at("beta")}, {"c", c.params.at("c")}};
    auto closed = meixner_connection(MeixnerRelation::alpha_to_beta, ps, n_max);
    auto collected = power_collect(family("meixner"), closed.source, closed.target, n_max);
    if (collected.x_dependent) fail("power collection produced an x-dependent table");
    if (!tables_equal(closed, collected, 0, r.deviation)) fail("power collection differs from the closed form");
    return;
  }
  if (id == "check.linear_solve_meixner") {
    const long n_max = c.order;
    ParamSet<Q> ps;
    for (const auto& [k, v] : c.params) ps.set(k, v);
    for (auto rel : {MeixnerRelation::alpha_c_to_beta_d, MeixnerRelation::same_alpha_c_to_d,
                     MeixnerRelation::alpha_to_beta}) {
      auto closed = meixner_connection(rel, ps, n_max);
      auto solved = connect_linear_solve(family("meixner"), closed.source, closed.target, n_max);
      if (!tables_equal(closed, solved, 0, r.deviation)) fail("linear solve differs from " + to_string(rel));
    }
    return;
  }
  if (id == "check.linear_solve_krawtchouk") {
    ParamSet<Q> ps;
    for (const auto& [k, v] : c.params) ps.set(k, v);
    const long n_max = std::min<long>(c.order, ps.integer("N"));
    for (auto rel : {KrawtchoukRelation::p_N_to_q_M, KrawtchoukRelation::p_to_q_same_N,
                     KrawtchoukRelation::same_p_N_to_M}) {
      auto closed = krawtchouk_connection(rel, ps, n_max);
      auto solved = connect_linear_solve(family("krawtchouk"), closed.source, closed.target, n_max);
      if (!tables_equal(closed, solved, 0, r.deviation)) fail("linear solve differs from " + to_string(rel));
    }
    return;
  }
  if (id == "check.power_collect_al_salam_carlitz_1") {
    const long n_max = c.order;
    const auto& d = family("al_salam_carlitz_1");
    ParamSet<Complex> from{{"a", scalar_cast<Complex>(c.params.at("a"))}, {"q", scalar_cast<Complex>(c.params.at("q"))}};
    ParamSet<Complex> to{{"a", scalar_cast<Complex>(c.params.at("b"))}, {"q", scalar_cast<Complex>(c.params.at("q"))}};
    auto collected = power_collect(d, from, to, n_max);
    auto solved = connect_linear_solve(d, from, to, n_max);
    if (!tables_equal(collected, solved, c.tolerance, r.deviation)) fail("power collection differs from linear solve");
    return;
  }
  if (id == "check.pochhammer_bounds") {
    long checked = 0;
    auto expect = [&](bool ok, const std::string& what) {
      ++checked;
      if (!ok) fail(what);
    };
    for (int i = 0; i < 10; ++i)
      for (int j = 1; j <= 10; ++j) {
        std::complex<double> u{0.15 + 0.6 * i, -2.0 + 0.45 * i * (j % 3)};
        expect(bounds::rising_lower_bound(u, j), "|(u)_j| >= Re(u)(j-1)! violated");
      }
    for (int i = 0; i < 10; ++i)
      for (int n = 0; n < 10; ++n)
        expect(bounds::rising_ratio_upper_bound(0.37 * i, 2 * n), "(v)_n/n! <= (1+n)^v violated");
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < 10; ++k)
        expect(bounds::shifted_rising_upper_bound(i, k, -0.95 + 0.41 * k + 0.1 * i),
               "|(n+w)_k| <= max(1,2^w)(n+k)!/n! violated");
    for (int i = 0; i < 10; ++i)
      for (int k = 0; k < 10; ++k)
        expect(bounds::offset_rising_upper_bound(-4.5 + 0.93 * i, k, k + i), "(z+k)_{n-k} bound violated");
    r.terms_summed = checked;
    return;
  }
  if (id == "check.catalog") {
    static const std::vector<std::string> listed{
        "continuous_dual_hahn", "dual_hahn", "bessel", "charlier", "continuous_dual_q_hahn", "dual_q_hahn",
        "al_salam_chihara", "q_meixner_pollaczek", "big_q_laguerre", "affine_q_krawtchouk",
        "dual_q_krawtchouk", "continuous_big_q_hermite", "al_salam_carlitz_1", "al_salam_carlitz_2"};
    for (const auto& f : listed) {
      const auto& d = family(f);
      if (d.factors.empty() || !d.power_collection_list || d.free_parameters < 1 ||
          d.known_generating_functions < 1 || !d.connection_relations)
        fail(f + " is missing catalog metadata");
    }
    // Exact cross-checks.
    const Q x(4), alpha(3, 2), cc(2, 5);
    ParamSet<Q> mp{{"alpha", alpha}, {"c", cc}};
    auto ms = gf_expand(family("meixner"), x, mp, 12);
    for (long n = 0; n <= 12; ++n)
      if (ms[n] != pochhammer(alpha, n) / factorial<Q>(n) * meixner(n, x, alpha, cc))
        fail("Meixner expansion differs at order " + std::to_string(n));
    ParamSet<Q> kp{{"p", Q(1, 2)}, {"N", Q(6)}};
    for (const Q& kx : {Q(0), Q(2), Q(5, 2), Q(-3, 7)}) {
      auto ks = gf_expand(family("krawtchouk"), kx, kp, 6);
      for (long n = 0; n <= 6; ++n)
        if (ks[n] != krawtchouk(n, kx, Q(1, 2), 6) / factorial<Q>(n))
          fail("Krawtchouk expansion differs at order " + std::to_string(n));
    }
    // Numeric q-subset at order 8 against basic hypergeometric closed forms.
    using C = Complex;
    const C q(1.0 / 3.0);
    struct Probe {
      std::string id;
      ParamSet<C> ps;
      C v;
    };
    std::vector<Probe> probes{
        {"al_salam_chihara", {{"a", C(0.25)}, {"b", C(0.2)}, {"q", q}}, C(std::numbers::pi / 3)},
        {"continuous_big_q_hermite", {{"a", C(0.25)}, {"q", q}}, C(std::numbers::pi / 3)},
        {"al_salam_carlitz_1", {{"a", C(0.25)}, {"q", q}}, C(0.4)},
        {"al_salam_carlitz_2", {{"a", C(0.25)}, {"q", q}}, C(0.4)}};
    for (const auto& p : probes) {
      const auto& d = family(p.id);
      auto s = gf_expand(d, p.v, p.ps, 8);
      for (long n = 0; n <= 8; ++n) {
        C want = normalization(d, n, p.ps) * q_family_closed_form(d, n, p.v, p.ps);
        r.deviation = std::max(r.deviation, magnitude(s[n] - want));
        if (!nearly_equal(s[n], want, FieldTag::numeric(c.tolerance)))
          fail(p.id + " expansion differs from its closed form at order " + std::to_string(n));
      }
    }
    return;
  }
  throw DomainError("unknown check '" + id + "'");
}

template <Scalar S>
void run_case(const IdentityCase& c, VerificationReport& r) {
  const auto& info = theorem_info(c.id);
  switch (info.kind) {
    case CaseKind::generating_function: {
      auto [lhs, rhs] = build_sides<S>(c);
      judge_series(r, lhs, rhs, c.tolerance);
      return;
    }
    case CaseKind::chain: run_chain<S>(c, r); return;
    case CaseKind::invariance: run_invariance<S>(c, r); return;
    case CaseKind::connection: run_connection<S>(c, r); return;
    case CaseKind::orthogonality: {
      if (c.id.rfind("krawtchouk", 0) == 0) {
        auto [lhs, rhs] = krawtchouk_sum<S>(c);
        r.terms_summed = int_param(c, "M") + 1;
        r.tail_bound = 0.0;
        r.deviation = magnitude(lhs - rhs);
        bool ok;
        if constexpr (is_exact_v<S>) ok = lhs == rhs;
        else ok = nearly_equal(lhs, rhs, FieldTag::numeric(c.tolerance));
        r.status = ok ? Status::pass : Status::fail;
        return;
      }
      auto out = meixner_sum(c);
      r.terms_summed = out.terms;
      r.tail_bound = out.tail;
      double scale = std::max(magnitude(out.lhs), magnitude(out.rhs));
      double allowed = c.tolerance + c.tolerance * scale;
      r.deviation = magnitude(out.lhs - out.rhs) + out.tail;
      if (!(out.tail <= allowed)) {
        r.status = Status::inconclusive;
        r.message = "tail bound exceeds the tolerance at x_max = " + std::to_string(c.x_max);
      } else {
        r.status = r.deviation <= allowed ? Status::pass : Status::fail;
      }
      return;
    }
    case CaseKind::check: run_check(c, r); return;
  }
}

}  // namespace detail

/// Runs one case; errors are captured in the report.
inline VerificationReport verify(const IdentityCase& c) {
  VerificationReport r;
  r.input = c;
  auto start = std::chrono::steady_clock::now();
  try {
    validate_case(c);
    if (c.field == FieldKind::exact) detail::run_case<Rational>(c, r);
    else detail::run_case<Complex>(c, r);
  } catch (const std::exception& e) {
    r.status = Status::error;
    r.message = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline VerificationReport verify_gf_identity(const IdentityCase& c) { return verify(c); }
inline VerificationReport verify_connection_relation(const IdentityCase& c) { return verify(c); }
inline VerificationReport verify_orthogonality_sum(const IdentityCase& c) { return verify(c); }

/// Worker count from HYPERCONNECT_THREADS (0 or unset = hardware concurrency).
inline unsigned configured_threads() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HYPERCONNECT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Verifies cases concurrently; reports come back in input order.
inline std::vector<VerificationReport> batch_verify(const std::vector<IdentityCase>& cases,
                                                    unsigned threads = configured_threads()) {
  std::vector<VerificationReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) out[i] = verify(cases[i]);
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

inline BatchSummary summarize(const std::vector<VerificationReport>& reports) {
  BatchSummary s;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.status) {
      case Status::pass: ++s.passed; break;
      case Status::fail: ++s.failed; break;
      case Status::error: ++s.errors; break;
      case Status::inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

// ---- acceptance suite ----------------------------------------------------

struct AcceptanceCase {
  int criterion;
  IdentityCase c;
};

/// The built-in acceptance suite, each case tagged with its criterion.
inline std::vector<AcceptanceCase> acceptance_suite(long order = 12, FieldKind field = FieldKind::exact) {
  using Q = Rational;
  std::vector<AcceptanceCase> out;
  auto add = [&](int crit, std::string id, std::map<std::string, Q> params, long ord,
                 std::optional<FieldKind> f = std::nullopt) {
    IdentityCase c;
    c.id = std::move(id);
    c.params = std::move(params);
    c.order = ord;
    c.field = f.value_or(field);
    out.push_back({crit, std::move(c)});
  };
  const Q x(4), alpha(3, 2), beta(7, 3), c(2, 5), d(3, 7), gamma(5, 4);
  const Q p(1, 2), q(1, 3);

  // 1. connection exactness
  add(1, "meixner.alpha_c_to_beta_d", {{"alpha", alpha}, {"beta", beta}, {"c", c}, {"d", d}}, 8);
  add(1, "meixner.same_alpha_c_to_d", {{"alpha", alpha}, {"c", c}, {"d", d}}, 8);
  add(1, "meixner.alpha_to_beta", {{"alpha", alpha}, {"beta", beta}, {"c", c}}, 8);
  add(1, "meixner.type_c_to_d", {{"alpha", alpha}, {"c", c}, {"d", d}}, 8);
  add(1, "meixner.type_alpha_c", {{"alpha", alpha}, {"beta", beta}, {"c", c}, {"d", d}}, 8);
  add(1, "krawtchouk.p_N_to_q_M", {{"p", p}, {"q", q}, {"N", Q(4)}, {"M", Q(7)}}, 4);
  add(1, "krawtchouk.p_to_q_same_N", {{"p", p}, {"q", q}, {"N", Q(4)}}, 4);
  add(1, "krawtchouk.same_p_N_to_M", {{"p", p}, {"N", Q(4)}, {"M", Q(7)}}, 4);

  // 2. power collection equals the closed form
  add(2, "check.power_collect_meixner", {{"alpha", alpha}, {"beta", beta}, {"c", c}}, 10, FieldKind::exact);

  // 3. oracle agreement
  add(3, "check.linear_solve_meixner", {{"alpha", alpha}, {"beta", beta}, {"c", c}, {"d", d}}, 8, FieldKind::exact);
  add(3, "check.linear_solve_krawtchouk", {{"p", p}, {"q", q}, {"N", Q(4)}, {"M", Q(7)}}, 4, FieldKind::exact);
  add(3, "check.power_collect_al_salam_carlitz_1", {{"a", Q(1, 4)}, {"b", Q(1, 5)}, {"q", q}}, 6, FieldKind::numeric);

  // 4. generalized generating functions
  const std::map<std::string, Q> canon{{"x", x}, {"alpha", alpha}, {"beta", beta}, {"c", c}, {"d", d}, {"gamma", gamma}};
  auto pick = [](const std::map<std::string, Q>& from, const std::vector<std::string>& names) {
    std::map<std::string, Q> m;
    for (const auto& n : names) m[n] = from.at(n);
    return m;
  };
  for (const char* id : {"meixner_confluent_alpha_c", "meixner_exp_alpha", "meixner_exp_c_phi2",
                         "meixner_exp_alpha_c_phi2_3", "meixner_gauss_alpha", "meixner_gauss_alpha_c",
                         "meixner_gauss_c_appell", "meixner_gauss_alpha_c_lauricella"})
    add(4, id, pick(canon, theorem_info(id).parameters), order);
  for (const Q& kx : {Q(0), Q(2), Q(5, 2), Q(-3, 7)}) {
    const std::map<std::string, Q> kc{{"x", kx}, {"p", p}, {"q", q}, {"N", Q(4)}, {"M", Q(6)}, {"gamma", gamma}};
    for (const char* id : {"krawtchouk_exp_p_n", "krawtchouk_exp_n", "krawtchouk_exp_p", "krawtchouk_gauss_p_n",
                           "krawtchouk_gauss_n", "krawtchouk_gauss_p"})
      add(4, id, pick(kc, theorem_info(id).parameters), 4);
  }

  // 5. specialization chains
  for (const auto& t : theorem_registry()) {
    if (t.kind != CaseKind::chain) continue;
    if (t.id.find("krawtchouk") != std::string::npos) {
      const std::map<std::string, Q> kc{{"x", Q(2)}, {"p", p}, {"q", q}, {"N", Q(4)}, {"M", Q(6)}, {"gamma", gamma}};
      add(5, t.id, pick(kc, t.parameters), 4);
    } else {
      add(5, t.id, pick(canon, t.parameters), order);
    }
  }

  // 6. invariance
  for (const auto& t : theorem_registry()) {
    if (t.kind != CaseKind::invariance) continue;
    if (t.id.find("krawtchouk") != std::string::npos) {
      const std::map<std::string, Q> kc{{"x", Q(2)}, {"p", p}, {"N", Q(4)}, {"gamma", gamma}};
      add(6, t.id, pick(kc, t.parameters), 4);
    } else {
      add(6, t.id, pick(canon, t.parameters), order);
    }
  }

  // 7. orthogonality
  for (long n = 0; n <= 4; ++n)
    for (long m = 0; m <= 4; ++m) {
      add(7, "meixner_orthogonality", {{"alpha", Q(2)}, {"c", Q(1, 2)}, {"n", Q(n)}, {"m", Q(m)}}, 0, FieldKind::numeric);
      out.back().c.tolerance = 1e-9;
    }
  const std::map<std::string, Q> oc{{"alpha", Q(2)}, {"beta", Q(3)}, {"c", Q(1, 2)}, {"d", Q(3, 7)},
                                    {"gamma", gamma}, {"t", Q(1, 4)}, {"n", Q(3)}};
  for (const char* id : {"meixner_sum_exp_alpha", "meixner_sum_confluent_alpha_c", "meixner_sum_gauss_alpha"})
    add(7, id, pick(oc, theorem_info(id).parameters), 0, FieldKind::numeric);
  {
    auto m = pick(oc, theorem_info("meixner_sum_gauss_alpha_c").parameters);
    m["t"] = Q(1, 5);
    add(7, "meixner_sum_gauss_alpha_c", m, 0, FieldKind::numeric);
  }
  const std::map<std::string, Q> kc{{"p", p}, {"q", q}, {"N", Q(3)}, {"M", Q(5)}, {"t", Q(1, 5)}, {"n", Q(2)}, {"gamma", gamma}};
  add(7, "krawtchouk_sum_exp", pick(kc, theorem_info("krawtchouk_sum_exp").parameters), 0, FieldKind::exact);
  add(7, "krawtchouk_sum_gauss", pick(kc, theorem_info("krawtchouk_sum_gauss").parameters), 0, FieldKind::exact);

  // 8. bounds, 9. catalog
  add(8, "check.pochhammer_bounds", {}, 0, FieldKind::numeric);
  add(9, "check.catalog", {}, 0, FieldKind::numeric);
  return out;
}

}  // namespace hyperconnect
