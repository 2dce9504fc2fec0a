#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperconnect/catalog_data.hpp"
#include "hyperconnect/expression.hpp"
#include "hyperconnect/hypergeometric.hpp"
#include "hyperconnect/series.hpp"

namespace hyperconnect {

enum class Domain { any, nonzero, not_zero_one, not_nonpositive_integer, nonnegative_integer, base };

inline Domain parse_domain(const std::string& s) {
  static const std::map<std::string, Domain> names{
      {"any", Domain::any},
      {"nonzero", Domain::nonzero},
      {"not_zero_one", Domain::not_zero_one},
      {"not_nonpositive_integer", Domain::not_nonpositive_integer},
      {"nonnegative_integer", Domain::nonnegative_integer},
      {"base", Domain::base}};
  auto it = names.find(s);
  if (it == names.end()) throw ParseError("unknown parameter domain '" + s + "'");
  return it->second;
}

struct ParameterSpec {
  std::string name;
  Domain domain = Domain::any;
};

enum class Expandability { exact, numeric, metadata };

/// One multiplicative piece of a generating function in t.
struct Factor {
  enum class Kind {
    binomial,          ///< (1 - base t)^(-exponent)
    exponential,       ///< exp(rate t)
    q_binomial,        ///< (a kappa t;q)_inf / (kappa t;q)_inf
    q_product,         ///< (kappa t;q)_inf ^ power, power = +-1
    finite_q_product,  ///< (kappa t;q)_length
    hypergeometric,    ///< pFq or r phi s at argument*t (or argument*t/(1-t))
    opaque             ///< recorded but not expandable
  };
  Kind kind = Kind::opaque;
  std::optional<Expression> base, exponent, rate, a, kappa, q, length, argument;
  std::vector<Expression> numerator, denominator;
  bool mobius = false;
  int power = 1;
  std::string formula;
  std::set<std::string> opaque_symbols;

  std::set<std::string> symbols() const {
    std::set<std::string> out = opaque_symbols;
    auto add = [&](const std::optional<Expression>& e) {
      if (e) for (const auto& s : e->symbols()) out.insert(s);
    };
    add(base), add(exponent), add(rate), add(a), add(kappa), add(q), add(length), add(argument);
    for (const auto& e : numerator) for (const auto& s : e.symbols()) out.insert(s);
    for (const auto& e : denominator) for (const auto& s : e.symbols()) out.insert(s);
    return out;
  }

  std::string describe() const {
    auto src = [](const std::optional<Expression>& e) { return e ? e->source() : std::string("?"); };
    auto list = [](const std::vector<Expression>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].source();
      return s;
    };
    switch (kind) {
      case Kind::binomial: return "(1 - (" + src(base) + ")t)^(-(" + src(exponent) + "))";
      case Kind::exponential: return "exp((" + src(rate) + ")t)";
      case Kind::q_binomial:
        return "((" + src(a) + ")(" + src(kappa) + ")t;" + src(q) + ")_inf/((" + src(kappa) +
               ")t;" + src(q) + ")_inf";
      case Kind::q_product:
        return "((" + src(kappa) + ")t;" + src(q) + ")_inf^" + std::to_string(power);
      case Kind::finite_q_product:
        return "((" + src(kappa) + ")t;" + src(q) + ")_(" + src(length) + ")";
      case Kind::hypergeometric:
        return std::string(q ? "phi" : "F") + "(" + list(numerator) + "; " + list(denominator) +
               "; (" + src(argument) + ")t" + (mobius ? "/(1-t)" : "") + ")";
      case Kind::opaque: return formula;
    }
    return formula;
  }
};

/// Structural description of one family's generating function
///   f(x,t;a) = sum_n c_n(a) P_n(x;a) t^n
/// plus the catalog metadata attached to it.
struct FamilyDescriptor {
  std::string id;
  std::string name;
  std::string variable = "x";  ///< "theta" when x = cos(theta)
  std::vector<ParameterSpec> parameters;
  Expandability expandable = Expandability::metadata;
  std::string display;
  std::vector<Factor> factors;
  std::optional<Expression> truncate_at;
  std::optional<Expression> max_degree;
  Expression normalization;
  std::optional<std::string> lattice;
  bool power_collection_list = false;
  int free_parameters = 0;
  int known_generating_functions = 0;
  std::vector<std::string> symmetric_parameters;
  std::optional<int> connection_relations;
  std::vector<std::string> isolated_parameters;
  std::string notes;
  nlohmann::json source;  ///< descriptor as loaded, for dumping

  bool has_parameter(const std::string& name) const {
    for (const auto& p : parameters)
      if (p.name == name) return true;
    return false;
  }
  bool theta_variable() const { return variable == "theta"; }
};

namespace detail {

inline std::optional<Expression> opt_expr(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return Expression(j.at(key).get<std::string>());
}

inline Factor parse_factor(const nlohmann::json& j) {
  static const std::map<std::string, Factor::Kind> kinds{
      {"binomial", Factor::Kind::binomial},
      {"exponential", Factor::Kind::exponential},
      {"q_binomial", Factor::Kind::q_binomial},
      {"q_product", Factor::Kind::q_product},
      {"finite_q_product", Factor::Kind::finite_q_product},
      {"hypergeometric", Factor::Kind::hypergeometric},
      {"opaque", Factor::Kind::opaque}};
  Factor f;
  auto k = kinds.find(j.at("kind").get<std::string>());
  if (k == kinds.end()) throw ParseError("unknown factor kind '" + j.at("kind").get<std::string>() + "'");
  f.kind = k->second;
  f.base = opt_expr(j, "base");
  f.exponent = opt_expr(j, "exponent");
  f.rate = opt_expr(j, "rate");
  f.a = opt_expr(j, "a");
  f.kappa = opt_expr(j, "kappa");
  f.q = opt_expr(j, "q");
  f.length = opt_expr(j, "length");
  f.argument = opt_expr(j, "argument");
  for (const auto& e : j.value("numerator", nlohmann::json::array()))
    f.numerator.emplace_back(e.get<std::string>());
  for (const auto& e : j.value("denominator", nlohmann::json::array()))
    f.denominator.emplace_back(e.get<std::string>());
  f.mobius = j.value("shape", std::string("linear")) == "mobius";
  f.power = j.value("power", 1);
  f.formula = j.value("formula", std::string());
  for (const auto& s : j.value("symbols", nlohmann::json::array())) f.opaque_symbols.insert(s.get<std::string>());

  auto need = [&](const std::optional<Expression>& e, const char* what) {
    if (!e) throw ParseError(std::string("factor of kind ") + j.at("kind").get<std::string>() +
                             " needs '" + what + "'");
  };
  switch (f.kind) {
    case Factor::Kind::binomial: need(f.base, "base"), need(f.exponent, "exponent"); break;
    case Factor::Kind::exponential: need(f.rate, "rate"); break;
    case Factor::Kind::q_binomial: need(f.a, "a"), need(f.kappa, "kappa"), need(f.q, "q"); break;
    case Factor::Kind::q_product:
      need(f.kappa, "kappa"), need(f.q, "q");
      if (f.power != 1 && f.power != -1) throw ParseError("q_product power must be +1 or -1");
      break;
    case Factor::Kind::finite_q_product:
      need(f.kappa, "kappa"), need(f.q, "q"), need(f.length, "length");
      break;
    case Factor::Kind::hypergeometric: need(f.argument, "argument"); break;
    case Factor::Kind::opaque:
      if (f.formula.empty()) throw ParseError("opaque factor needs a formula");
      break;
  }
  return f;
}

}  // namespace detail

inline FamilyDescriptor parse_descriptor(const nlohmann::json& j) {
  FamilyDescriptor d;
  d.source = j;
  d.id = j.at("id").get<std::string>();
  d.name = j.at("name").get<std::string>();
  d.variable = j.value("variable", std::string("x"));
  if (d.variable != "x" && d.variable != "theta")
    throw ParseError(d.id + ": variable must be x or theta");
  for (const auto& p : j.at("parameters"))
    d.parameters.push_back({p.at("name").get<std::string>(), parse_domain(p.value("domain", std::string("any")))});
  std::string ex = j.value("expandable", std::string("metadata"));
  if (ex == "exact") d.expandable = Expandability::exact;
  else if (ex == "numeric") d.expandable = Expandability::numeric;
  else if (ex == "metadata") d.expandable = Expandability::metadata;
  else throw ParseError(d.id + ": unknown expandability '" + ex + "'");
  const auto& gf = j.at("generating_function");
  d.display = gf.value("display", std::string());
  for (const auto& f : gf.at("factors")) d.factors.push_back(detail::parse_factor(f));
  d.truncate_at = detail::opt_expr(gf, "truncate_at");
  d.normalization = Expression(gf.at("normalization").get<std::string>());
  d.max_degree = detail::opt_expr(j, "max_degree");
  if (j.contains("lattice")) d.lattice = j.at("lattice").get<std::string>();
  d.power_collection_list = j.value("power_collection_list", false);
  d.free_parameters = j.value("free_parameters", 0);
  d.known_generating_functions = j.value("known_generating_functions", 0);
  d.symmetric_parameters = j.value("symmetric_parameters", std::vector<std::string>{});
  if (j.contains("connection_relations")) d.connection_relations = j.at("connection_relations").get<int>();
  d.isolated_parameters = j.value("isolated_parameters", std::vector<std::string>{});
  d.notes = j.value("notes", std::string());

  std::set<std::string> known{d.variable, "t"};
  for (const auto& p : d.parameters) known.insert(p.name);
  for (const auto& f : d.factors)
    for (const auto& s : f.symbols())
      if (!known.count(s)) throw ParseError(d.id + ": factor uses undeclared symbol '" + s + "'");
  return d;
}

inline std::vector<FamilyDescriptor> parse_catalog(const nlohmann::json& j) {
  std::vector<FamilyDescriptor> out;
  for (const auto& f : j.at("families")) out.push_back(parse_descriptor(f));
  return out;
}

/// Built-in catalog, parsed once on first use.
inline const std::vector<FamilyDescriptor>& catalog() {
  static const std::vector<FamilyDescriptor> c =
      parse_catalog(nlohmann::json::parse(generated::kCatalogJson));
  return c;
}

inline const FamilyDescriptor& family(std::string_view id) {
  for (const auto& d : catalog())
    if (d.id == id) return d;
  throw DomainError("unknown family '" + std::string(id) + "'");
}

/// Name -> scalar bindings for one family member.
template <Scalar S>
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(std::initializer_list<std::pair<const std::string, S>> init) : values_(init) {}

  ParamSet& set(const std::string& name, S value) {
    values_.insert_or_assign(name, std::move(value));
    return *this;
  }
  bool contains(const std::string& name) const { return values_.count(name) > 0; }
  const S& get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw DomainError("parameter '" + name + "' is not bound");
    return it->second;
  }
  long integer(const std::string& name) const {
    auto v = integer_value(get(name));
    if (!v) throw DomainError("parameter '" + name + "' must be an integer");
    return *v;
  }
  const std::map<std::string, S>& values() const { return values_; }
  friend bool operator==(const ParamSet& a, const ParamSet& b) { return a.values_ == b.values_; }

 private:
  std::map<std::string, S> values_;
};

namespace detail {

template <Scalar S>
void check_domain(const std::string& family, const std::string& name, Domain domain, const S& v) {
  auto fail = [&](const char* what) {
    throw DomainError(family + ": parameter " + name + " = " + to_string(v) + " must be " + what);
  };
  switch (domain) {
    case Domain::any: break;
    case Domain::nonzero:
      if (is_zero(v)) fail("nonzero");
      break;
    case Domain::not_zero_one:
      if (is_zero(v) || is_zero(v - S(1))) fail("different from 0 and 1");
      break;
    case Domain::not_nonpositive_integer:
      if (nonpositive_integer(v)) fail("outside -N_0");
      break;
    case Domain::nonnegative_integer: {
      auto i = integer_value(v);
      if (!i || *i < 0) fail("a nonnegative integer");
      break;
    }
    case Domain::base:
      if (is_zero(v) || !(magnitude(v) < 1.0)) fail("a base with 0 < |q| < 1");
      break;
  }
}

}  // namespace detail

/// Checks that exactly the descriptor's parameters are bound and in domain.
template <Scalar S>
void validate(const FamilyDescriptor& d, const ParamSet<S>& ps) {
  for (const auto& p : d.parameters) {
    if (!ps.contains(p.name)) throw DomainError(d.id + ": parameter '" + p.name + "' is not bound");
    detail::check_domain(d.id, p.name, p.domain, ps.get(p.name));
  }
  for (const auto& [name, v] : ps.values())
    if (!d.has_parameter(name)) throw DomainError(d.id + " has no parameter '" + name + "'");
}

namespace detail {

template <Scalar S>
std::map<std::string, S> environment(const FamilyDescriptor& d, const S& x, const ParamSet<S>& ps) {
  auto env = ps.values();
  env[d.variable] = x;
  return env;
}

template <Scalar S>
long integer_of(const Expression& e, const std::map<std::string, S>& env, const char* what) {
  auto v = integer_value(e.evaluate(env));
  if (!v) throw DomainError(std::string(what) + " '" + e.source() + "' must evaluate to an integer");
  return *v;
}

}  // namespace detail

/// Series of one factor with its symbols bound by `env`.
template <Scalar S>
TruncatedSeries<S> expand_factor(const Factor& f, const std::map<std::string, S>& env, long order) {
  auto ev = [&](const std::optional<Expression>& e) { return e->evaluate(env); };
  switch (f.kind) {
    case Factor::Kind::binomial: return binomial_power(ev(f.base), ev(f.exponent), order);
    case Factor::Kind::exponential: return exp_series(ev(f.rate), order);
    case Factor::Kind::q_binomial: return q_binomial_series(ev(f.a), ev(f.kappa), ev(f.q), order);
    case Factor::Kind::q_product:
      if (f.power > 0) return q_product_series(ev(f.kappa), ev(f.q), order);
      return q_binomial_series(S(0), ev(f.kappa), ev(f.q), order);
    case Factor::Kind::finite_q_product: {
      long len = detail::integer_of(*f.length, env, "finite product length");
      return finite_q_product(ev(f.kappa), ev(f.q), len, order);
    }
    case Factor::Kind::hypergeometric: {
      std::vector<S> num, den;
      for (const auto& e : f.numerator) num.push_back(e.evaluate(env));
      for (const auto& e : f.denominator) den.push_back(e.evaluate(env));
      auto spec = f.q ? HyperSpec<S>::basic(num, den, ev(f.q)) : HyperSpec<S>::ordinary(num, den);
      S lambda = ev(f.argument);
      auto shape = f.mobius ? ArgShape<S>::mobius(lambda) : ArgShape<S>::linear(lambda);
      return hyper_series_in_t(spec, shape, order);
    }
    case Factor::Kind::opaque:
      throw UnsupportedError("factor " + f.formula + " has no series expansion");
  }
  throw UnsupportedError("unknown factor kind");
}

/// c_n(a) of the descriptor.
template <Scalar S>
S normalization(const FamilyDescriptor& d, long n, const ParamSet<S>& ps) {
  auto env = ps.values();
  env["n"] = S(n);
  return d.normalization.evaluate(env);
}

template <Scalar S>
std::optional<long> max_degree(const FamilyDescriptor& d, const ParamSet<S>& ps) {
  if (!d.max_degree) return std::nullopt;
  return detail::integer_of(*d.max_degree, ps.values(), "maximal degree");
}

/// Generating function of the family as a truncated series in t.
template <Scalar S>
TruncatedSeries<S> gf_expand(const FamilyDescriptor& d, const S& x, const ParamSet<S>& ps, long order) {
  if (order < 0) throw DomainError("gf_expand: negative order");
  if (d.expandable == Expandability::metadata)
    throw UnsupportedError("the " + d.name + " generating function is catalogued as metadata only");
  if (is_exact_v<S> && d.expandable != Expandability::exact)
    throw UnsupportedError("the " + d.name + " generating function is expandable in the numeric field only");
  validate(d, ps);
  auto env = detail::environment(d, x, ps);
  long work = order;
  if (d.truncate_at) {
    long m = detail::integer_of(*d.truncate_at, env, "truncation order");
    if (m < 0) throw DomainError(d.id + ": negative truncation order");
    work = std::min(order, m);
  }
  auto s = TruncatedSeries<S>::one(work);
  for (const auto& f : d.factors) s = s * expand_factor(f, env, work);
  if (work == order) return s;
  return shift_up(s, 0, order);
}

/// P_n = [t^n] f / c_n(a).
template <Scalar S>
S poly_from_gf(const FamilyDescriptor& d, long n, const S& x, const ParamSet<S>& ps) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (auto m = max_degree(d, ps); m && n > *m)
    throw DomainError(d.id + ": degree " + std::to_string(n) + " exceeds " + std::to_string(*m));
  auto s = gf_expand(d, x, ps, n);
  S c = normalization(d, n, ps);
  if (is_zero(c)) throw DomainError(d.id + ": normalization c_" + std::to_string(n) + " vanishes");
  return s[n] / c;
}

/// M_n(x;alpha,c) = 2F1(-n,-x;alpha;1-1/c).
template <Scalar S>
S meixner(long n, const S& x, const S& alpha, const S& c) {
  if (n < 0) throw DomainError("degree must be nonnegative");
  if (nonpositive_integer(alpha)) throw DomainError("Meixner: alpha must lie outside -N_0");
  if (is_zero(c)) throw DomainError("Meixner: c must be nonzero");
  auto spec = HyperSpec<S>::ordinary({S(-n), -x}, {alpha});
  return pfq_eval(spec, S(1) - S(1) / c, EvalMode::terminating()).value;
}

/// K_n(x;p,N) = 2F1(-n,-x;-N;1/p), n <= N.
template <Scalar S>
S krawtchouk(long n, const S& x, const S& p, long N) {
  if (n < 0 || N < 0) throw DomainError("Krawtchouk: degree and N must be nonnegative");
  if (n > N) throw DomainError("Krawtchouk: degree " + std::to_string(n) + " exceeds N = " + std::to_string(N));
  if (is_zero(p)) throw DomainError("Krawtchouk: p must be nonzero");
  auto spec = HyperSpec<S>::ordinary({S(-n), -x}, {S(-N)});
  return pfq_eval(spec, S(1) / p, EvalMode::terminating()).value;
}

/// Evaluates P_n at the family variable (theta for the cos(theta) families).
template <Scalar S>
S family_eval(const FamilyDescriptor& d, long n, const S& x, const ParamSet<S>& ps) {
  validate(d, ps);
  if (d.id == "meixner") return meixner(n, x, ps.get("alpha"), ps.get("c"));
  if (d.id == "krawtchouk") return krawtchouk(n, x, ps.get("p"), ps.integer("N"));
  return poly_from_gf(d, n, x, ps);
}

/// Abscissa of the polynomial variable: x itself, or cos(theta).
template <Scalar S>
S abscissa(const FamilyDescriptor& d, const S& v) {
  if (!d.theta_variable()) return v;
  if constexpr (is_exact_v<S>) throw UnsupportedError(d.name + " needs the numeric field");
  else return Complex(std::cos(v.value()));
}

/// Basic hypergeometric closed forms of the numerically expandable
/// q-families, independent of their generating functions.
namespace detail {

inline Rational exact_real(const Complex& z) { return Rational(mpq_class(z.real())); }

// Terminating basic series with every factor expanded over cos(theta), so the
// sum is exact in binary rationals and free of cancellation error.
inline Rational exact_q_closed_form(const std::string& id, long n, const Rational& v,
                                    const std::map<std::string, Rational>& p) {
  const Rational q = p.at("q");
  const Rational one(1);
  auto qpow = [&](long e) { return ipow(q, e); };
  auto qpoch = [&](const Rational& a, long k) { return q_pochhammer(a, q, k); };
  Rational sum(0);
  if (id == "al_salam_chihara" || id == "continuous_big_q_hermite") {
    const Rational a = p.at("a");
    const Rational ab = id == "al_salam_chihara" ? a * p.at("b") : Rational(0);
    Rational pair(1);  // (a e^{i theta}, a e^{-i theta}; q)_k
    for (long k = 0; k <= n; ++k) {
      sum += qpoch(qpow(-n), k) * pair / (qpoch(ab, k) * qpoch(q, k)) * qpow(k);
      pair *= one - Rational(2) * a * qpow(k) * v + a * a * qpow(2 * k);
    }
    Rational lead = id == "al_salam_chihara" ? qpoch(ab, n) : one;
    return lead * ipow(a, -n) * sum;
  }
  const Rational a = p.at("a");
  if (id == "al_salam_carlitz_1") {
    const Rational z = q * v / a;
    for (long k = 0; k <= n; ++k)
      sum += qpoch(qpow(-n), k) * qpoch(one / v, k) / qpoch(q, k) * ipow(z, k);
    return ipow(-a, n) * qpow(n * (n - 1) / 2) * sum;
  }
  if (id == "al_salam_carlitz_2") {
    const Rational z = qpow(n) / a;
    for (long k = 0; k <= n; ++k) {
      Rational sign = k % 2 ? Rational(-1) : one;
      sum += qpoch(qpow(-n), k) * qpoch(v, k) / qpoch(q, k) * ipow(z, k) / (sign * qpow(k * (k - 1) / 2));
    }
    return ipow(-a, n) / qpow(n * (n - 1) / 2) * sum;
  }
  throw UnsupportedError("no closed form registered for " + id);
}

}  // namespace detail

/// Basic-hypergeometric closed form of P_n for the q-families that have one.
/// Real inputs are summed exactly; complex inputs use the numeric series.
inline Complex q_family_closed_form(const FamilyDescriptor& d, long n, const Complex& v,
                                    const ParamSet<Complex>& ps) {
  validate(d, ps);
  bool real = v.imag() == 0.0;
  for (const auto& [k, val] : ps.values()) real = real && val.imag() == 0.0;
  const Complex x = d.theta_variable() ? Complex(std::cos(v.real())) : v;
  if (real && !(d.id == "al_salam_carlitz_1" && is_zero(v))) {
    std::map<std::string, Rational> p;
    for (const auto& [k, val] : ps.values()) p[k] = detail::exact_real(val);
    return Complex(detail::exact_q_closed_form(d.id, n, detail::exact_real(x), p).to_double());
  }
  const Complex q = ps.get("q");
  const Complex qn = ipow(q, -n);
  auto phi = [&](std::vector<Complex> num, std::vector<Complex> den, const Complex& z) {
    return rphis_eval(HyperSpec<Complex>::basic(std::move(num), std::move(den), q), z,
                      EvalMode::terminating())
        .value;
  };
  const Complex qbin = ipow(q, n * (n - 1) / 2);
  if (d.id == "al_salam_chihara") {
    Complex a = ps.get("a"), b = ps.get("b");
    Complex e = exp(Complex(0.0, 1.0) * v);
    return q_pochhammer(a * b, q, n) * ipow(a, -n) *
           phi({qn, a * e, a / e}, {a * b, Complex(0)}, q);
  }
  if (d.id == "continuous_big_q_hermite") {
    Complex a = ps.get("a");
    Complex e = exp(Complex(0.0, 1.0) * v);
    return ipow(a, -n) * phi({qn, a * e, a / e}, {Complex(0), Complex(0)}, q);
  }
  if (d.id == "al_salam_carlitz_1") {
    Complex a = ps.get("a");
    return ipow(-a, n) * qbin * phi({qn, Complex(1) / v}, {Complex(0)}, q * v / a);
  }
  if (d.id == "al_salam_carlitz_2") {
    Complex a = ps.get("a");
    return ipow(-a, n) / qbin * phi({qn, v}, {}, ipow(q, n) / a);
  }
  throw UnsupportedError("no closed form registered for " + d.name);
}

}  // namespace hyperconnect
