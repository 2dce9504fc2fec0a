#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hyperconnect/families.hpp"

namespace hyperconnect {

/// Lower-triangular table of c_{k,n} in
///   P_n(x; source) = sum_{k<=n} c_{k,n} P_k(x; target).
/// Connection-type tables depend on x and carry an evaluator instead.
template <Scalar S>
struct ConnectionExpansion {
  std::string family;
  std::string formula;  ///< relation id, or the method name for derived tables
  std::string method;   ///< closed_form | power_collection | linear_solve
  long n_max = 0;
  ParamSet<S> source, target;
  ParamSet<S> parameters;  ///< bindings the formula was evaluated with
  bool x_dependent = false;
  std::vector<std::vector<S>> table;  ///< table[n][k], empty when x_dependent
  std::function<S(long, long, const S&)> evaluator;

  S coefficient(long n, long k) const {
    if (x_dependent) throw DomainError("connection-type coefficient needs x");
    check_index(n, k);
    return table[n][k];
  }
  S coefficient(long n, long k, const S& x) const {
    check_index(n, k);
    return x_dependent ? evaluator(n, k, x) : table[n][k];
  }

 private:
  void check_index(long n, long k) const {
    if (n < 0 || n > n_max || k < 0 || k > n)
      throw DomainError("coefficient index (" + std::to_string(k) + "," + std::to_string(n) +
                        ") outside 0 <= k <= n <= " + std::to_string(n_max));
  }
};

template <Scalar S>
std::vector<std::vector<S>> identity_table(long n_max) {
  std::vector<std::vector<S>> t(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    t[n].assign(n + 1, S(0));
    t[n][n] = S(1);
  }
  return t;
}

/// sum_k c_{k,n}(x) P_k(x; target).
template <Scalar S>
S reconstruct(const ConnectionExpansion<S>& e, const FamilyDescriptor& d, long n, const S& x) {
  S acc(0);
  for (long k = 0; k <= n; ++k) acc += e.coefficient(n, k, x) * family_eval(d, k, x, e.target);
  return acc;
}

// ---- Meixner -----------------------------------------------------------

enum class MeixnerRelation { alpha_c_to_beta_d, same_alpha_c_to_d, alpha_to_beta, type_c_to_d, type_alpha_c };

inline const std::vector<std::pair<MeixnerRelation, std::string>>& meixner_relation_names() {
  static const std::vector<std::pair<MeixnerRelation, std::string>> names{
      {MeixnerRelation::alpha_c_to_beta_d, "alpha_c_to_beta_d"},
      {MeixnerRelation::same_alpha_c_to_d, "same_alpha_c_to_d"},
      {MeixnerRelation::alpha_to_beta, "alpha_to_beta"},
      {MeixnerRelation::type_c_to_d, "type_c_to_d"},
      {MeixnerRelation::type_alpha_c, "type_alpha_c"}};
  return names;
}
inline std::string to_string(MeixnerRelation r) {
  for (const auto& [k, v] : meixner_relation_names())
    if (k == r) return v;
  return "?";
}
inline std::optional<MeixnerRelation> parse_meixner_relation(const std::string& s) {
  for (const auto& [k, v] : meixner_relation_names())
    if (v == s) return k;
  return std::nullopt;
}
inline bool is_connection_type(MeixnerRelation r) {
  return r == MeixnerRelation::type_c_to_d || r == MeixnerRelation::type_alpha_c;
}

/// Parameter names each relation reads.
inline std::vector<std::string> meixner_relation_parameters(MeixnerRelation r) {
  switch (r) {
    case MeixnerRelation::alpha_c_to_beta_d:
    case MeixnerRelation::type_alpha_c: return {"alpha", "beta", "c", "d"};
    case MeixnerRelation::same_alpha_c_to_d:
    case MeixnerRelation::type_c_to_d: return {"alpha", "c", "d"};
    case MeixnerRelation::alpha_to_beta: return {"alpha", "beta", "c"};
  }
  return {};
}

/// Parameters a relation accepts but does not need; the alpha_to_beta table
/// is free of c, which is only carried along for reconstruction.
inline bool meixner_parameter_optional(MeixnerRelation r, const std::string& name) {
  return r == MeixnerRelation::alpha_to_beta && name == "c";
}

namespace detail {

template <Scalar S>
void check_meixner_parameters(MeixnerRelation r, const ParamSet<S>& ps) {
  for (const auto& name : meixner_relation_parameters(r)) {
    if (meixner_parameter_optional(r, name) && !ps.contains(name)) continue;
    const S& v = ps.get(name);
    if ((name == "alpha" || name == "beta") && nonpositive_integer(v))
      throw DomainError(to_string(r) + ": " + name + " must lie outside -N_0");
    if ((name == "c" || name == "d") && (is_zero(v) || is_zero(v - S(1))))
      throw DomainError(to_string(r) + ": " + name + " must differ from 0 and 1");
  }
}

template <Scalar S>
S terminating_2f1(S a, S b, S c, const S& z) {
  return pfq_eval(HyperSpec<S>::ordinary({std::move(a), std::move(b)}, {std::move(c)}), z,
                  EvalMode::terminating())
      .value;
}

}  // namespace detail

template <Scalar S>
ParamSet<S> meixner_source(MeixnerRelation, const ParamSet<S>& ps) {
  if (!ps.contains("c")) return {{"alpha", ps.get("alpha")}};
  return {{"alpha", ps.get("alpha")}, {"c", ps.get("c")}};
}

template <Scalar S>
ParamSet<S> meixner_target(MeixnerRelation r, const ParamSet<S>& ps) {
  switch (r) {
    case MeixnerRelation::alpha_c_to_beta_d:
    case MeixnerRelation::type_alpha_c: return {{"alpha", ps.get("beta")}, {"c", ps.get("d")}};
    case MeixnerRelation::same_alpha_c_to_d:
    case MeixnerRelation::type_c_to_d: return {{"alpha", ps.get("alpha")}, {"c", ps.get("d")}};
    case MeixnerRelation::alpha_to_beta:
      if (!ps.contains("c")) return {{"alpha", ps.get("beta")}};
      return {{"alpha", ps.get("beta")}, {"c", ps.get("c")}};
  }
  throw DomainError("unknown Meixner relation");
}

/// Coefficient c_{k,n} of M_n(x;alpha,c) in the target Meixner basis.
template <Scalar S>
S meixner_connection_coeffs(MeixnerRelation r, const ParamSet<S>& ps, long n, long k,
                            const std::optional<S>& x = std::nullopt) {
  if (k < 0 || k > n) throw DomainError("connection coefficient needs 0 <= k <= n");
  if (is_connection_type(r) != x.has_value())
    throw DomainError(to_string(r) + (x ? " does not take x" : " is connection-type and needs x"));
  detail::check_meixner_parameters(r, ps);
  const long m = n - k;
  const S alpha = ps.get("alpha");
  const S c = ps.contains("c") ? ps.get("c") : S(0);
  switch (r) {
    case MeixnerRelation::alpha_c_to_beta_d: {
      const S beta = ps.get("beta"), d = ps.get("d");
      const S z = d * (S(1) - c) / (c * (S(1) - d));
      return binomial_coefficient<S>(n, k) * pochhammer(beta, k) / pochhammer(alpha, k) * ipow(z, k) *
             detail::terminating_2f1(S(-m), S(k) + beta, S(k) + alpha, z);
    }
    case MeixnerRelation::same_alpha_c_to_d: {
      const S d = ps.get("d");
      const S den = c * (S(1) - d);
      return binomial_coefficient<S>(n, k) * ipow((c - d) / den, m) * ipow(d * (S(1) - c) / den, k);
    }
    case MeixnerRelation::alpha_to_beta: {
      const S beta = ps.get("beta");
      return binomial_coefficient<S>(n, k) * pochhammer(alpha - beta, m) * pochhammer(beta, k) /
             pochhammer(alpha, n);
    }
    case MeixnerRelation::type_c_to_d: {
      // (x)_m 2F1(-m,-x;-x-m+1;d/c) with the removable 0/0 of the
      // denominator parameter cancelled against (x)_m term by term.
      const S d = ps.get("d");
      const S& xv = *x;
      const S z = d / c;
      S sum(0);
      for (long j = 0; j <= m; ++j)
        sum += neg_int_pochhammer<S>(m, j) * pochhammer(-xv, j) * ipow(S(-1), j) *
               pochhammer(xv, m - j) * ipow(z, j) / factorial<S>(j);
      return binomial_coefficient<S>(n, k) * pochhammer(alpha, k) * sum / (ipow(d, m) * pochhammer(alpha, n));
    }
    case MeixnerRelation::type_alpha_c: {
      const S beta = ps.get("beta"), d = ps.get("d");
      const S& xv = *x;
      const S shift = beta - alpha - S(n) + S(1);
      const S den = pochhammer(shift, k);
      if (is_zero(den))
        throw SingularError("type_alpha_c: (beta-alpha-n+1)_k vanishes at beta - alpha = " +
                            to_string(beta - alpha));
      S f1;
      try {
        f1 = multivar_eval(MultiVarKind<S>::F1(S(-m), -xv, xv, shift + S(k)),
                           {S(1) / c, S(1) / d}, m, 1e-30)
                 .value;
      } catch (const PoleError& e) {
        throw SingularError(std::string("type_alpha_c: ") + e.what());
      }
      return pochhammer(alpha - beta, n) / pochhammer(alpha, n) * pochhammer(beta, k) *
             neg_int_pochhammer<S>(n, k) / (factorial<S>(k) * den) * f1;
    }
  }
  throw DomainError("unknown Meixner relation");
}

template <Scalar S>
ConnectionExpansion<S> meixner_connection(MeixnerRelation r, const ParamSet<S>& ps, long n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  detail::check_meixner_parameters(r, ps);
  ConnectionExpansion<S> e;
  e.family = "meixner";
  e.formula = to_string(r);
  e.method = "closed_form";
  e.n_max = n_max;
  e.source = meixner_source(r, ps);
  e.target = meixner_target(r, ps);
  for (const auto& name : meixner_relation_parameters(r))
    if (ps.contains(name)) e.parameters.set(name, ps.get(name));
  if (is_connection_type(r)) {
    e.x_dependent = true;
    e.evaluator = [r, ps](long n, long k, const S& x) { return meixner_connection_coeffs(r, ps, n, k, std::optional<S>(x)); };
    return e;
  }
  e.table.resize(n_max + 1);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) e.table[n].push_back(meixner_connection_coeffs(r, ps, n, k));
  return e;
}

// ---- Krawtchouk --------------------------------------------------------

enum class KrawtchoukRelation { p_N_to_q_M, p_to_q_same_N, same_p_N_to_M };

inline const std::vector<std::pair<KrawtchoukRelation, std::string>>& krawtchouk_relation_names() {
  static const std::vector<std::pair<KrawtchoukRelation, std::string>> names{
      {KrawtchoukRelation::p_N_to_q_M, "p_N_to_q_M"},
      {KrawtchoukRelation::p_to_q_same_N, "p_to_q_same_N"},
      {KrawtchoukRelation::same_p_N_to_M, "same_p_N_to_M"}};
  return names;
}
inline std::string to_string(KrawtchoukRelation r) {
  for (const auto& [k, v] : krawtchouk_relation_names())
    if (k == r) return v;
  return "?";
}
inline std::optional<KrawtchoukRelation> parse_krawtchouk_relation(const std::string& s) {
  for (const auto& [k, v] : krawtchouk_relation_names())
    if (v == s) return k;
  return std::nullopt;
}

inline std::vector<std::string> krawtchouk_relation_parameters(KrawtchoukRelation r) {
  switch (r) {
    case KrawtchoukRelation::p_N_to_q_M: return {"p", "q", "N", "M"};
    case KrawtchoukRelation::p_to_q_same_N: return {"p", "q", "N"};
    case KrawtchoukRelation::same_p_N_to_M: return {"p", "N", "M"};
  }
  return {};
}

namespace detail {

template <Scalar S>
void check_krawtchouk_parameters(KrawtchoukRelation r, const ParamSet<S>& ps, long n) {
  for (const auto& name : krawtchouk_relation_parameters(r)) {
    if ((name == "p" || name == "q") && is_zero(ps.get(name)))
      throw DomainError(to_string(r) + ": " + name + " must be nonzero");
  }
  long N = ps.integer("N");
  long M = ps.contains("M") ? ps.integer("M") : N;
  if (r == KrawtchoukRelation::p_to_q_same_N) M = N;
  if (n > N) throw DomainError(to_string(r) + ": degree " + std::to_string(n) + " exceeds N = " + std::to_string(N));
  if (N > M) throw DomainError(to_string(r) + ": needs N <= M");
  if (N < 0) throw DomainError(to_string(r) + ": N must be nonnegative");
}

}  // namespace detail

template <Scalar S>
ParamSet<S> krawtchouk_source(KrawtchoukRelation, const ParamSet<S>& ps) {
  return {{"p", ps.get("p")}, {"N", ps.get("N")}};
}

template <Scalar S>
ParamSet<S> krawtchouk_target(KrawtchoukRelation r, const ParamSet<S>& ps) {
  switch (r) {
    case KrawtchoukRelation::p_N_to_q_M: return {{"p", ps.get("q")}, {"N", ps.get("M")}};
    case KrawtchoukRelation::p_to_q_same_N: return {{"p", ps.get("q")}, {"N", ps.get("N")}};
    case KrawtchoukRelation::same_p_N_to_M: return {{"p", ps.get("p")}, {"N", ps.get("M")}};
  }
  throw DomainError("unknown Krawtchouk relation");
}

template <Scalar S>
S krawtchouk_connection_coeffs(KrawtchoukRelation r, const ParamSet<S>& ps, long n, long k) {
  if (k < 0 || k > n) throw DomainError("connection coefficient needs 0 <= k <= n");
  detail::check_krawtchouk_parameters(r, ps, n);
  const long m = n - k;
  const S p = ps.get("p");
  const long N = ps.integer("N");
  switch (r) {
    case KrawtchoukRelation::p_N_to_q_M: {
      const S q = ps.get("q");
      const long M = ps.integer("M");
      return binomial_coefficient<S>(n, k) * ipow(q / p, k) * neg_int_pochhammer<S>(M, k) /
             neg_int_pochhammer<S>(N, k) * detail::terminating_2f1(S(-m), S(k - M), S(k - N), q / p);
    }
    case KrawtchoukRelation::p_to_q_same_N: {
      const S q = ps.get("q");
      return binomial_coefficient<S>(n, k) * ipow((p - q) / p, m) * ipow(q / p, k);
    }
    case KrawtchoukRelation::same_p_N_to_M: {
      const long M = ps.integer("M");
      return binomial_coefficient<S>(n, k) * pochhammer(S(M - N), m) * neg_int_pochhammer<S>(M, k) /
             neg_int_pochhammer<S>(N, n);
    }
  }
  throw DomainError("unknown Krawtchouk relation");
}

template <Scalar S>
ConnectionExpansion<S> krawtchouk_connection(KrawtchoukRelation r, const ParamSet<S>& ps, long n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  detail::check_krawtchouk_parameters(r, ps, n_max);
  ConnectionExpansion<S> e;
  e.family = "krawtchouk";
  e.formula = to_string(r);
  e.method = "closed_form";
  e.n_max = n_max;
  e.source = krawtchouk_source(r, ps);
  e.target = krawtchouk_target(r, ps);
  for (const auto& name : krawtchouk_relation_parameters(r)) e.parameters.set(name, ps.get(name));
  e.table.resize(n_max + 1);
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= n; ++k) e.table[n].push_back(krawtchouk_connection_coeffs(r, ps, n, k));
  return e;
}

// ---- power collection --------------------------------------------------

namespace detail {

// (u t;q)_inf / (v t;q)_inf
template <Scalar S>
TruncatedSeries<S> infinite_ratio(const S& u, const S& v, const S& q, long order) {
  if (is_zero(v)) return q_product_series(u, q, order);
  return q_binomial_series(u / v, v, q, order);
}

template <Scalar S>
std::set<std::string> varied_parameters(const FamilyDescriptor& d, const ParamSet<S>& from,
                                        const ParamSet<S>& to) {
  std::set<std::string> out;
  for (const auto& p : d.parameters)
    if (!(from.get(p.name) == to.get(p.name))) out.insert(p.name);
  return out;
}

inline bool touches(const std::set<std::string>& symbols, const std::set<std::string>& names) {
  for (const auto& s : symbols)
    if (names.count(s)) return true;
  return false;
}

inline std::string join(const std::set<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

// factor(from)/factor(to) for the single factor carrying the varied parameters.
template <Scalar S>
TruncatedSeries<S> isolated_ratio(const FamilyDescriptor& d, const Factor& f,
                                  const std::set<std::string>& varied, const ParamSet<S>& from,
                                  const ParamSet<S>& to, long order) {
  auto not_applicable = [&](const std::string& why) {
    throw NotApplicableError(d.name + ": factor " + f.describe() + " " + why);
  };
  auto x_free = [&](const std::optional<Expression>& e, const char* what) {
    if (e && e->depends_on(d.variable))
      not_applicable(std::string("has an x-dependent ") + what + "; the ratio would depend on x");
  };
  auto env_from = from.values();
  auto env_to = to.values();
  env_from[d.variable] = S(0);
  env_to[d.variable] = S(0);
  if (f.q && touches(f.q->symbols(), varied)) not_applicable("has a varied base q");

  switch (f.kind) {
    case Factor::Kind::binomial: {
      if (touches(f.base->symbols(), varied))
        not_applicable("varies in its base, which is not a power of a fixed binomial");
      x_free(f.base, "base");
      for (const auto& term : f.exponent->additive_term_symbols())
        if (term.count(d.variable) && touches(term, varied))
          not_applicable("couples x with the varied parameter in its exponent");
      S diff = f.exponent->evaluate(env_from) - f.exponent->evaluate(env_to);
      return binomial_power(f.base->evaluate(env_from), diff, order);
    }
    case Factor::Kind::q_product: {
      x_free(f.kappa, "argument");
      S q = f.q->evaluate(env_from);
      S kf = f.kappa->evaluate(env_from), kt = f.kappa->evaluate(env_to);
      if (f.power > 0) return infinite_ratio(kf, kt, q, order);
      return infinite_ratio(kt, kf, q, order);
    }
    case Factor::Kind::q_binomial: {
      x_free(f.a, "numerator parameter");
      x_free(f.kappa, "argument");
      S q = f.q->evaluate(env_from);
      S af = f.a->evaluate(env_from), kf = f.kappa->evaluate(env_from);
      S at = f.a->evaluate(env_to), kt = f.kappa->evaluate(env_to);
      return infinite_ratio(af * kf, kf, q, order) * infinite_ratio(kt, at * kt, q, order);
    }
    default:
      not_applicable("is not a (q-)binomial factor, so the varied parameter is not isolated");
  }
  throw NotApplicableError("unreachable");
}

}  // namespace detail

/// Connection coefficients by the power collection method: multiply the
/// generating function by factor(from)/factor(to), expand the ratio by the
/// (q-)binomial theorem and match powers of t.
template <Scalar S>
ConnectionExpansion<S> power_collect(const FamilyDescriptor& d, const ParamSet<S>& from,
                                     const ParamSet<S>& to, long n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  validate(d, from);
  validate(d, to);
  for (const auto* ps : {&from, &to})
    if (auto m = max_degree(d, *ps); m && n_max > *m)
      throw DomainError(d.id + ": n_max exceeds the maximal degree " + std::to_string(*m));
  auto varied = detail::varied_parameters(d, from, to);

  ConnectionExpansion<S> e;
  e.family = d.id;
  e.formula = "power_collection";
  e.method = "power_collection";
  e.n_max = n_max;
  e.source = from;
  e.target = to;

  if (d.truncate_at && detail::touches(d.truncate_at->symbols(), varied))
    throw NotApplicableError(d.name + ": the truncation order depends on " + detail::join(varied));
  if (d.max_degree && detail::touches(d.max_degree->symbols(), varied))
    throw NotApplicableError(d.name + ": the maximal degree depends on " + detail::join(varied));

  const Factor* isolated = nullptr;
  for (const auto& f : d.factors) {
    if (!detail::touches(f.symbols(), varied)) continue;
    if (isolated)
      throw NotApplicableError(d.name + ": varied parameter(s) " + detail::join(varied) +
                               " also appear in factor " + f.describe() + " besides " +
                               isolated->describe());
    isolated = &f;
  }
  auto ratio = isolated ? detail::isolated_ratio(d, *isolated, varied, from, to, n_max)
                        : TruncatedSeries<S>::one(n_max);

  e.table.resize(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    S cn = normalization(d, n, from);
    if (is_zero(cn)) throw DomainError(d.id + ": normalization c_" + std::to_string(n) + " vanishes");
    for (long k = 0; k <= n; ++k) e.table[n].push_back(ratio[n - k] * normalization(d, k, to) / cn);
  }
  return e;
}

// ---- linear-solve oracle -----------------------------------------------

/// Default sample points in the family variable: 0..n_max on the exact
/// field, Chebyshev nodes (through theta for the cos(theta) families) on
/// the numeric field.
template <Scalar S>
std::vector<S> default_samples(const FamilyDescriptor& d, long n_max) {
  std::vector<S> out;
  for (long i = 0; i <= n_max; ++i) {
    if constexpr (is_exact_v<S>) {
      (void)d;
      out.emplace_back(i);
    } else {
      double theta = (2.0 * i + 1.0) * std::numbers::pi / (2.0 * (n_max + 1));
      out.emplace_back(d.theta_variable() ? theta : std::cos(theta));
    }
  }
  return out;
}

/// Newton divided differences: coefficients of f in the basis
/// prod_{i<j} (X - X_i).
template <Scalar S>
std::vector<S> divided_differences(const std::vector<S>& xs, std::vector<S> values) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      S gap = xs[i] - xs[i - j];
      if (is_zero(gap)) throw SingularError("repeated sample abscissa; choose distinct sample points");
      values[i] = (values[i] - values[i - 1]) / gap;
    }
  return values;
}

/// Independent oracle: solves P_n(x_i;from) = sum_k c_{k,n} P_k(x_i;to) on
/// n_max+1 sample points, triangularly by degree.
template <Scalar S>
ConnectionExpansion<S> connect_linear_solve(const FamilyDescriptor& d, const ParamSet<S>& from,
                                            const ParamSet<S>& to, long n_max,
                                            std::optional<std::vector<S>> samples = std::nullopt) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  auto vs = samples ? *samples : default_samples<S>(d, n_max);
  if (static_cast<long>(vs.size()) != n_max + 1)
    throw DomainError("linear solve needs exactly n_max + 1 sample points");
  std::vector<S> xs;
  for (const S& v : vs) xs.push_back(abscissa(d, v));

  auto newton = [&](const ParamSet<S>& ps) {
    std::vector<std::vector<S>> rows;
    for (long k = 0; k <= n_max; ++k) {
      std::vector<S> vals;
      for (const S& v : vs) vals.push_back(family_eval(d, k, v, ps));
      rows.push_back(divided_differences(xs, std::move(vals)));
    }
    return rows;
  };
  auto src = newton(from);
  auto dst = newton(to);

  ConnectionExpansion<S> e;
  e.family = d.id;
  e.formula = "linear_solve";
  e.method = "linear_solve";
  e.n_max = n_max;
  e.source = from;
  e.target = to;
  e.table.resize(n_max + 1);
  for (long n = 0; n <= n_max; ++n) {
    std::vector<S> c(n + 1, S(0));
    for (long j = n; j >= 0; --j) {
      S lead = dst[j][j];
      bool singular;
      if constexpr (is_exact_v<S>) singular = is_zero(lead);
      else singular = magnitude(lead) < 1e-300;
      if (singular)
        throw SingularError("target polynomial of degree " + std::to_string(j) +
                            " has a vanishing leading divided difference; choose different sample points");
      S rhs = src[n][j];
      for (long k = j + 1; k <= n; ++k) rhs -= c[k] * dst[k][j];
      c[j] = rhs / lead;
    }
    e.table[n] = std::move(c);
  }
  return e;
}

}  // namespace hyperconnect
