// Command-line front end: eval, expand, connect, verify, catalog.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperconnect/io.hpp"

namespace hc = hyperconnect;
using hc::io::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string backend = "exact";
  std::string output = "text";
  std::string out_path;
};

// Leftover "--name value" or "--name=value" pairs become parameter bindings.
std::map<std::string, std::string> parameter_flags(const std::vector<std::string>& extras) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& a = extras[i];
    if (a.rfind("--", 0) != 0 || a.size() < 3)
      throw UsageError("unexpected argument '" + a + "'; parameters are given as --name value");
    std::string name = a.substr(2), value;
    if (auto eq = name.find('='); eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
    } else {
      if (i + 1 >= extras.size()) throw UsageError("parameter --" + name + " needs a value");
      value = extras[++i];
    }
    if (out.count(name)) throw UsageError("parameter --" + name + " given twice");
    out[name] = value;
  }
  return out;
}

template <hc::Scalar S>
S parse_value(const std::string& name, const std::string& text) {
  try {
    return hc::scalar_cast<S>(hc::Rational::parse(text));
  } catch (const hc::ParseError& e) {
    if constexpr (hc::is_exact_v<S>) {
      throw UsageError("--" + name + ": " + e.what() + " (or pass --backend numeric)");
    } else {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || used == 0) throw UsageError("--" + name + ": malformed number '" + text + "'");
      return S(v);
    }
  }
}

hc::FieldKind parse_backend(const std::string& b) {
  if (b == "exact") return hc::FieldKind::exact;
  if (b == "numeric") return hc::FieldKind::numeric;
  throw UsageError("--backend expects exact|numeric, got '" + b + "'");
}

template <hc::Scalar S>
hc::ParamSet<S> bind(const hc::FamilyDescriptor& d, const std::map<std::string, std::string>& flags) {
  hc::ParamSet<S> ps;
  for (const auto& [k, v] : flags) {
    if (!d.has_parameter(k)) {
      std::string names;
      for (const auto& p : d.parameters) names += (names.empty() ? "" : ", ") + p.name;
      throw UsageError("family " + d.id + " has no parameter --" + k + " (expected: " + names + ")");
    }
    ps.set(k, parse_value<S>(k, v));
  }
  return ps;
}

void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw UsageError("cannot write " + c.out_path);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void check_output(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.output == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("--output expects " + list + ", got '" + c.output + "'");
}

// ---- eval ----

template <hc::Scalar S>
int run_eval(const Common& c, const std::string& fam, long n, const std::string& x_text,
             const std::map<std::string, std::string>& flags) {
  check_output(c, {"text", "json"});
  const auto& d = hc::family(fam);
  auto ps = bind<S>(d, flags);
  S x = parse_value<S>("x", x_text);
  S v = hc::family_eval(d, n, x, ps);
  if (c.output == "json") emit(c, json{{"value", hc::io::to_json(v)}}.dump(2));
  else emit(c, hc::to_string(v));
  return kOk;
}

// ---- expand ----

template <hc::Scalar S>
int run_expand(const Common& c, const std::string& fam, long order, const std::string& x_text,
               const std::map<std::string, std::string>& flags) {
  check_output(c, {"text", "json"});
  const auto& d = hc::family(fam);
  auto ps = bind<S>(d, flags);
  auto s = hc::gf_expand(d, parse_value<S>("x", x_text), ps, order);
  if (c.output == "json") {
    emit(c, hc::io::to_json(s).dump(2));
  } else {
    std::ostringstream o;
    for (long k = 0; k <= s.order(); ++k) o << "t^" << k << ": " << hc::to_string(s[k]) << "\n";
    emit(c, o.str());
  }
  return kOk;
}

// ---- connect ----

template <hc::Scalar S>
int run_connect(const Common& c, const std::string& fam, const std::string& relation, const std::string& method,
                long n_max, const std::vector<std::string>& to, const std::map<std::string, std::string>& flags) {
  check_output(c, {"text", "json", "csv"});
  if (method != "closed-form" && method != "power-collection" && method != "linear-solve")
    throw UsageError("--method expects closed-form|power-collection|linear-solve");
  const auto& d = hc::family(fam);
  hc::ConnectionExpansion<S> e;
  hc::ParamSet<S> from, target;
  bool have_relation = !relation.empty();

  if (have_relation) {
    if (!to.empty()) throw UsageError("--to cannot be combined with --relation");
    hc::ParamSet<S> ps;
    std::vector<std::string> expected;
    if (fam == "meixner") {
      auto r = hc::parse_meixner_relation(relation);
      if (!r) throw UsageError("unknown Meixner relation '" + relation + "'");
      expected = hc::meixner_relation_parameters(*r);
    } else if (fam == "krawtchouk") {
      auto r = hc::parse_krawtchouk_relation(relation);
      if (!r) throw UsageError("unknown Krawtchouk relation '" + relation + "'");
      expected = hc::krawtchouk_relation_parameters(*r);
    } else {
      throw UsageError("--relation is only available for meixner and krawtchouk; use --to name=value");
    }
    for (const auto& [k, v] : flags) {
      if (std::find(expected.begin(), expected.end(), k) == expected.end())
        throw UsageError("relation " + relation + " takes no parameter --" + k);
      ps.set(k, parse_value<S>(k, v));
    }
    for (const auto& k : expected) {
      bool optional = fam == "meixner" && hc::meixner_parameter_optional(*hc::parse_meixner_relation(relation), k);
      if (!ps.contains(k) && !optional) throw UsageError("relation " + relation + " needs --" + k);
    }
    if (fam == "meixner") {
      auto r = *hc::parse_meixner_relation(relation);
      if (method == "closed-form") e = hc::meixner_connection(r, ps, n_max);
      from = hc::meixner_source(r, ps);
      target = hc::meixner_target(r, ps);
    } else {
      auto r = *hc::parse_krawtchouk_relation(relation);
      if (method == "closed-form") e = hc::krawtchouk_connection(r, ps, n_max);
      from = hc::krawtchouk_source(r, ps);
      target = hc::krawtchouk_target(r, ps);
    }
  } else {
    if (method == "closed-form") throw UsageError("closed-form needs --relation");
    if (to.empty()) throw UsageError("--method " + method + " needs target bindings via --to name=value");
    from = bind<S>(d, flags);
    target = from;
    for (const auto& binding : to) {
      auto eq = binding.find('=');
      if (eq == std::string::npos) throw UsageError("--to expects name=value, got '" + binding + "'");
      std::string name = binding.substr(0, eq);
      if (!d.has_parameter(name)) throw UsageError("family " + d.id + " has no parameter '" + name + "'");
      target.set(name, parse_value<S>(name, binding.substr(eq + 1)));
    }
  }
  if (method == "power-collection") e = hc::power_collect(d, from, target, n_max);
  else if (method == "linear-solve") e = hc::connect_linear_solve(d, from, target, n_max);

  if (c.output == "json") {
    emit(c, hc::io::to_json(e).dump(2));
  } else if (c.output == "csv") {
    emit(c, hc::io::to_csv(e));
  } else if (e.x_dependent) {
    emit(c, "x-dependent relation " + e.formula + "; coefficients are evaluated per x\n");
  } else {
    std::ostringstream o;
    for (long n = 0; n <= e.n_max; ++n) {
      o << "n=" << n << ":";
      for (long k = 0; k <= n; ++k) o << " " << hc::to_string(e.table[n][k]);
      o << "\n";
    }
    emit(c, o.str());
  }
  return kOk;
}

// ---- verify ----

int exit_for(const hc::BatchSummary& s) {
  if (s.all_passed()) return kOk;
  if (s.failed == 0 && s.errors == 0) return kInconclusive;
  return kFail;
}

int run_verify(const Common& c, const std::string& suite, const std::string& theorem, const std::string& input,
               long order, bool order_given, bool as_printed, long x_max, double tolerance, bool tol_given,
               const std::map<std::string, std::string>& flags) {
  check_output(c, {"text", "json"});
  const hc::FieldKind field = parse_backend(c.backend);
  int sources = !suite.empty() + !theorem.empty() + !input.empty();
  if (sources != 1) throw UsageError("verify needs exactly one of --suite, --theorem, --input");
  std::vector<hc::IdentityCase> cases;
  if (!suite.empty()) {
    if (suite != "acceptance") throw UsageError("unknown suite '" + suite + "' (available: acceptance)");
    if (!flags.empty()) throw UsageError("--suite takes no parameter flags");
    for (auto& a : hc::acceptance_suite(order_given ? order : 12, field)) cases.push_back(a.c);
  } else if (!theorem.empty()) {
    const auto& info = hc::theorem_info(theorem);
    hc::IdentityCase k;
    k.id = theorem;
    k.field = field;
    k.as_printed = as_printed;
    k.x_max = x_max;
    if (tol_given) k.tolerance = tolerance;
    if (order_given) k.order = order;
    for (const auto& [name, v] : flags) {
      if (name == "x-samples") {
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ','))
          k.x_samples.push_back(parse_value<hc::Rational>("x-samples", item));
        continue;
      }
      if (std::find(info.parameters.begin(), info.parameters.end(), name) == info.parameters.end()) {
        std::string names;
        for (const auto& p : info.parameters) names += (names.empty() ? "" : ", ") + p;
        throw UsageError(theorem + " has no parameter --" + name + " (expected: " + names + ")");
      }
      k.params[name] = parse_value<hc::Rational>(name, v);
    }
    cases.push_back(std::move(k));
  } else {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read " + input);
    json j;
    try {
      j = json::parse(f);
      const json& arr = j.is_array() ? j : j.at("cases");
      for (const auto& e : arr) cases.push_back(hc::io::case_from_json(e));
    } catch (const std::exception& e) {
      throw UsageError(std::string("malformed case file: ") + e.what());
    }
  }
  auto reports = hc::batch_verify(cases);
  auto summary = hc::summarize(reports);
  if (c.output == "json") {
    emit(c, hc::io::batch_to_json(reports).dump(2));
  } else {
    std::ostringstream o;
    for (const auto& r : reports) {
      o << hc::to_string(r.status) << "  " << r.input.id << "  deviation=" << r.deviation;
      if (r.first_failing_order) o << "  first_failing_order=" << *r.first_failing_order;
      if (r.tail_bound) o << "  tail=" << *r.tail_bound;
      if (!r.message.empty()) o << "  (" << r.message << ")";
      o << "\n";
    }
    o << summary.passed << "/" << summary.total << " passed, " << summary.failed << " failed, " << summary.errors
      << " errors, " << summary.inconclusive << " inconclusive\n";
    emit(c, o.str());
  }
  return exit_for(summary);
}

// ---- catalog ----

int run_catalog(const Common& c, const std::string& fam) {
  check_output(c, {"text", "json"});
  if (c.output == "json") {
    if (fam.empty()) emit(c, hc::io::catalog_to_json().dump(2));
    else emit(c, json::parse(hc::family(fam).source.dump()).dump(2));
    return kOk;
  }
  std::ostringstream o;
  for (const auto& d : hc::catalog()) {
    if (!fam.empty() && d.id != fam) continue;
    o << d.id << "  " << d.name << "  [";
    for (std::size_t i = 0; i < d.parameters.size(); ++i) o << (i ? ", " : "") << d.parameters[i].name;
    o << "]  " << d.display << "\n";
    for (const auto& f : d.factors) o << "    " << f.describe() << "\n";
  }
  if (!fam.empty() && o.str().empty()) hc::family(fam);
  emit(c, o.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection coefficients and generating-function identities for hypergeometric polynomials"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--backend", common.backend, "exact|numeric")->capture_default_str();
    s->add_option("--output", common.output, "text|json|csv")->capture_default_str();
    s->add_option("--out", common.out_path, "write output to a file");
    s->allow_extras();
  };

  std::string fam, x_text = "0", relation, method = "closed-form", suite, theorem, input;
  long n = 0, order = 12, n_max = 8, x_max = 300;
  double tolerance = 1e-10;
  bool as_printed = false;
  std::vector<std::string> to;

  auto* eval = app.add_subcommand("eval", "evaluate P_n at a point");
  eval->add_option("--family", fam)->required();
  eval->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--x", x_text)->required();
  add_common(eval);

  auto* expand = app.add_subcommand("expand", "expand a generating function to a truncated series");
  expand->add_option("--family", fam)->required();
  expand->add_option("--x", x_text)->required();
  expand->add_option("--order", order)->check(CLI::NonNegativeNumber);
  add_common(expand);

  auto* connect = app.add_subcommand("connect", "connection coefficient table");
  connect->add_option("--family", fam)->required();
  connect->add_option("--relation", relation);
  connect->add_option("--method", method, "closed-form|power-collection|linear-solve")->capture_default_str();
  connect->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  connect->add_option("--to", to, "target binding name=value (repeatable)");
  add_common(connect);

  auto* verify = app.add_subcommand("verify", "verify identities");
  verify->add_option("--suite", suite);
  verify->add_option("--theorem", theorem);
  verify->add_option("--input", input, "JSON case list");
  auto* order_opt = verify->add_option("--order", order)->check(CLI::NonNegativeNumber);
  verify->add_flag("--as-printed", as_printed, "use the misprinted form where registered");
  verify->add_option("--x-max", x_max)->check(CLI::PositiveNumber);
  auto* tol_opt = verify->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);
  add_common(verify);

  auto* cat = app.add_subcommand("catalog", "dump the family catalog");
  cat->add_option("--family", fam);
  add_common(cat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    auto flags = parameter_flags(sub->remaining());
    const bool exact = parse_backend(common.backend) == hc::FieldKind::exact;
    if (sub == eval)
      return exact ? run_eval<hc::Rational>(common, fam, n, x_text, flags)
                   : run_eval<hc::Complex>(common, fam, n, x_text, flags);
    if (sub == expand)
      return exact ? run_expand<hc::Rational>(common, fam, order, x_text, flags)
                   : run_expand<hc::Complex>(common, fam, order, x_text, flags);
    if (sub == connect)
      return exact ? run_connect<hc::Rational>(common, fam, relation, method, n_max, to, flags)
                   : run_connect<hc::Complex>(common, fam, relation, method, n_max, to, flags);
    if (sub == verify)
      return run_verify(common, suite, theorem, input, order, order_opt->count() > 0, as_printed, x_max, tolerance,
                        tol_opt->count() > 0, flags);
    if (!flags.empty()) throw UsageError("catalog takes no parameter flags");
    return run_catalog(common, fam);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const hc::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const hc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
