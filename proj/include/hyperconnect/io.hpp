#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperconnect/identities.hpp"

namespace hyperconnect::io {

using json = nlohmann::ordered_json;

// ---- scalars ----

inline json to_json(const Rational& r) { return r.to_string(); }
inline json to_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

template <Scalar S>
S scalar_from_json(const json& j) {
  if constexpr (is_exact_v<S>) {
    if (!j.is_string()) throw ParseError("exact scalar must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
  } else {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw ParseError("numeric scalar must be a [re, im] pair");
    return Complex(std::complex<double>(j[0].get<double>(), j[1].get<double>()));
  }
}

// Non-finite doubles are written as strings since JSON has no literal for them.
inline json real_to_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}
inline double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw ParseError("expected a number, got '" + s + "'");
}

// ---- series ----

template <Scalar S>
json to_json(const TruncatedSeries<S>& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_json(c));
  json j;
  j["order"] = s.order();
  j["field"] = to_string(s.field().kind);
  if (s.field().kind == FieldKind::numeric) j["tolerance"] = s.field().tolerance;
  j["coefficients"] = std::move(coeffs);
  return j;
}

template <Scalar S>
TruncatedSeries<S> series_from_json(const json& j) {
  const auto field = j.at("field").get<std::string>();
  if ((field == "exact") != is_exact_v<S>) throw FieldMismatchError("series field is " + field);
  std::vector<S> c;
  for (const auto& e : j.at("coefficients")) c.push_back(scalar_from_json<S>(e));
  if (static_cast<long>(c.size()) != j.at("order").get<long>() + 1)
    throw ParseError("series order does not match the coefficient count");
  FieldTag tag = is_exact_v<S> ? FieldTag::exact() : FieldTag::numeric(j.value("tolerance", 1e-10));
  return TruncatedSeries<S>(std::move(c), tag);
}

// ---- parameter sets ----

template <Scalar S>
json to_json(const ParamSet<S>& ps) {
  json j = json::object();
  for (const auto& [k, v] : ps.values()) j[k] = to_json(v);
  return j;
}

template <Scalar S>
ParamSet<S> params_from_json(const json& j) {
  ParamSet<S> ps;
  for (const auto& [k, v] : j.items()) ps.set(k, scalar_from_json<S>(v));
  return ps;
}

// ---- connection tables ----

template <Scalar S>
json to_json(const ConnectionExpansion<S>& e) {
  json j;
  j["family"] = e.family;
  j["formula"] = e.formula;
  j["method"] = e.method;
  j["field"] = is_exact_v<S> ? "exact" : "numeric";
  j["n_max"] = e.n_max;
  j["x_dependent"] = e.x_dependent;
  j["source"] = to_json(e.source);
  j["target"] = to_json(e.target);
  j["parameters"] = to_json(e.parameters);
  if (e.x_dependent) {
    j["table"] = nullptr;
  } else {
    json rows = json::array();
    for (const auto& row : e.table) {
      json r = json::array();
      for (const auto& v : row) r.push_back(to_json(v));
      rows.push_back(std::move(r));
    }
    j["table"] = std::move(rows);
  }
  return j;
}

template <Scalar S>
ConnectionExpansion<S> connection_from_json(const json& j) {
  const long n_max = j.at("n_max").get<long>();
  const auto family_id = j.at("family").get<std::string>();
  const auto formula = j.at("formula").get<std::string>();
  auto params = params_from_json<S>(j.at("parameters"));
  if (j.at("x_dependent").get<bool>()) {
    // The table is a formula; rebuild it from the relation id and bindings.
    if (family_id == "meixner") {
      auto r = parse_meixner_relation(formula);
      if (!r) throw ParseError("unknown Meixner relation '" + formula + "'");
      return meixner_connection(*r, params, n_max);
    }
    throw ParseError("no x-dependent relations for family '" + family_id + "'");
  }
  ConnectionExpansion<S> e;
  e.family = family_id;
  e.formula = formula;
  e.method = j.at("method").get<std::string>();
  e.n_max = n_max;
  e.source = params_from_json<S>(j.at("source"));
  e.target = params_from_json<S>(j.at("target"));
  e.parameters = std::move(params);
  for (const auto& row : j.at("table")) {
    std::vector<S> r;
    for (const auto& v : row) r.push_back(scalar_from_json<S>(v));
    e.table.push_back(std::move(r));
  }
  if (static_cast<long>(e.table.size()) != n_max + 1) throw ParseError("table has the wrong number of rows");
  for (long n = 0; n <= n_max; ++n)
    if (static_cast<long>(e.table[n].size()) != n + 1) throw ParseError("table row " + std::to_string(n) + " is ragged");
  return e;
}

/// Rows n, columns k; x-dependent tables carry the formula id and bindings.
template <Scalar S>
std::string to_csv(const ConnectionExpansion<S>& e) {
  std::ostringstream out;
  if (e.x_dependent) {
    out << "formula," << e.formula << "\n";
    for (const auto& [k, v] : e.parameters.values()) out << k << "," << to_string(v) << "\n";
    return out.str();
  }
  out << "n";
  for (long k = 0; k <= e.n_max; ++k) out << ",k" << k;
  out << "\n";
  for (long n = 0; n <= e.n_max; ++n) {
    out << n;
    for (long k = 0; k <= e.n_max; ++k) {
      out << ",";
      if (k <= n) out << to_string(e.table[n][k]);
    }
    out << "\n";
  }
  return out.str();
}

// ---- verification ----

inline json to_json(const IdentityCase& c) {
  json j;
  j["id"] = c.id;
  json p = json::object();
  for (const auto& [k, v] : c.params) p[k] = to_json(v);
  j["params"] = std::move(p);
  j["order"] = c.order;
  j["field"] = to_string(c.field);
  j["tolerance"] = c.tolerance;
  j["x_max"] = c.x_max;
  json xs = json::array();
  for (const auto& x : c.x_samples) xs.push_back(to_json(x));
  j["x_samples"] = std::move(xs);
  j["as_printed"] = c.as_printed;
  return j;
}

inline IdentityCase case_from_json(const json& j) {
  IdentityCase c;
  c.id = j.at("id").get<std::string>();
  const json params = j.value("params", json::object());
  for (const auto& [k, v] : params.items()) c.params[k] = scalar_from_json<Rational>(v);
  c.order = j.value("order", c.order);
  auto field = j.value("field", std::string("exact"));
  if (field != "exact" && field != "numeric") throw ParseError("field must be exact or numeric");
  c.field = field == "exact" ? FieldKind::exact : FieldKind::numeric;
  c.tolerance = j.value("tolerance", c.tolerance);
  c.x_max = j.value("x_max", c.x_max);
  for (const auto& x : j.value("x_samples", json::array())) c.x_samples.push_back(scalar_from_json<Rational>(x));
  c.as_printed = j.value("as_printed", false);
  return c;
}

inline json to_json(const VerificationReport& r) {
  json j;
  j["case"] = to_json(r.input);
  j["status"] = to_string(r.status);
  j["deviation"] = real_to_json(r.deviation);
  j["first_failing_order"] = r.first_failing_order ? json(*r.first_failing_order) : json(nullptr);
  j["terms_summed"] = r.terms_summed ? json(*r.terms_summed) : json(nullptr);
  j["tail_bound"] = r.tail_bound ? real_to_json(*r.tail_bound) : json(nullptr);
  j["millis"] = r.millis;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.input = case_from_json(j.at("case"));
  auto s = parse_status(j.at("status").get<std::string>());
  if (!s) throw ParseError("unknown status");
  r.status = *s;
  r.deviation = real_from_json(j.at("deviation"));
  if (!j.at("first_failing_order").is_null()) r.first_failing_order = j["first_failing_order"].get<long>();
  if (!j.at("terms_summed").is_null()) r.terms_summed = j["terms_summed"].get<long>();
  if (!j.at("tail_bound").is_null()) r.tail_bound = real_from_json(j["tail_bound"]);
  r.millis = j.at("millis").get<double>();
  r.message = j.value("message", std::string());
  return r;
}

inline json to_json(const BatchSummary& s) {
  return json{{"total", s.total}, {"passed", s.passed}, {"failed", s.failed},
              {"errors", s.errors}, {"inconclusive", s.inconclusive}};
}

inline json batch_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return json{{"reports", std::move(arr)}, {"summary", to_json(summarize(reports))}};
}

// ---- catalog ----

inline json catalog_to_json() {
  json arr = json::array();
  for (const auto& d : catalog()) arr.push_back(json::parse(d.source.dump()));
  return json{{"families", std::move(arr)}};
}

}  // namespace hyperconnect::io
