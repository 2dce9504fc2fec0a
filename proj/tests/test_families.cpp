#include <cmath>
#include <numbers>
#include <set>

#include "test_support.hpp"

TEST(Catalog, ListsEveryFamily) {
  std::set<std::string> ids;
  for (const auto& d : hc::catalog()) ids.insert(d.id);
  for (const char* id : {"meixner", "krawtchouk", "continuous_dual_hahn", "dual_hahn", "bessel", "charlier",
                         "continuous_dual_q_hahn", "dual_q_hahn", "al_salam_chihara", "q_meixner_pollaczek",
                         "big_q_laguerre", "affine_q_krawtchouk", "dual_q_krawtchouk", "continuous_big_q_hermite",
                         "al_salam_carlitz_1", "al_salam_carlitz_2"})
    EXPECT_TRUE(ids.count(id)) << id;
  for (const auto& d : hc::catalog()) EXPECT_FALSE(d.factors.empty()) << d.id;
  EXPECT_THROW(hc::family("hermite"), hc::DomainError);
}

TEST(Catalog, ExpandabilityFlags) {
  EXPECT_EQ(hc::family("meixner").expandable, hc::Expandability::exact);
  EXPECT_EQ(hc::family("krawtchouk").expandable, hc::Expandability::exact);
  EXPECT_EQ(hc::family("charlier").expandable, hc::Expandability::exact);
  EXPECT_EQ(hc::family("al_salam_chihara").expandable, hc::Expandability::numeric);
  EXPECT_EQ(hc::family("dual_hahn").expandable, hc::Expandability::metadata);
}

TEST(Catalog, RejectsMalformedDescriptors) {
  auto j = nlohmann::json::parse(R"({"families":[{"id":"bad","name":"Bad","parameters":[{"name":"a","domain":"any"}],
    "expandable":"exact","generating_function":{"display":"","normalization":"1",
    "factors":[{"kind":"exponential","rate":"b"}]}}]})");
  EXPECT_THROW(hc::parse_catalog(j), hc::ParseError);
}

TEST(FamilyEval, MeixnerExamples) {
  const auto& d = hc::family("meixner");
  hc::ParamSet<Q> ps{{"alpha", r("3/2")}, {"c", r("2/5")}};
  EXPECT_EQ(hc::family_eval(d, 0, r("17/3"), ps), Q(1));
  hc::ParamSet<Q> half{{"alpha", Q(1)}, {"c", r("1/2")}};
  for (const Q& x : {Q(0), Q(4), r("-5/2")}) EXPECT_EQ(hc::family_eval(d, 1, x, half), Q(1) - x);
}

TEST(FamilyEval, KrawtchoukExamples) {
  const auto& d = hc::family("krawtchouk");
  for (long N = 1; N <= 6; ++N) {
    hc::ParamSet<Q> ps{{"p", r("1/2")}, {"N", Q(N)}};
    for (const Q& x : {Q(0), Q(1), r("7/3")}) EXPECT_EQ(hc::family_eval(d, 1, x, ps), Q(1) - Q(2) * x / Q(N));
  }
  hc::ParamSet<Q> ps{{"p", r("1/2")}, {"N", Q(3)}};
  EXPECT_THROW(hc::family_eval(d, 4, Q(1), ps), hc::DomainError);
}

// Meixner's 2F1 summed directly; beta = -N is outside the family's domain
// but the terminating sum still makes sense for n <= N.
static Q meixner_sum(long n, const Q& x, const Q& beta, const Q& c) {
  const Q z = Q(1) - Q(1) / c;
  Q sum(0), zk(1);
  for (long k = 0; k <= n; ++k, zk *= z)
    sum += hc::pochhammer(Q(-n), k) * hc::pochhammer(-x, k) / (hc::pochhammer(beta, k) * hc::pochhammer(Q(1), k)) * zk;
  return sum;
}

TEST(FamilyEval, KrawtchoukIsMeixner) {
  RationalSource src;
  for (int i = 0; i < 10; ++i) {
    Q x = src.next(), p = src.nonzero();
    if (p == Q(1)) continue;
    for (long N = 0; N <= 8; ++N)
      for (long n = 0; n <= N; ++n)
        EXPECT_EQ(hc::krawtchouk(n, x, p, N), meixner_sum(n, x, Q(-N), p / (p - Q(1))));
  }
}

TEST(FamilyEval, MeixnerDomain) {
  const auto& d = hc::family("meixner");
  hc::ParamSet<Q> bad{{"alpha", Q(-2)}, {"c", r("1/2")}};
  EXPECT_THROW(hc::family_eval(d, 1, Q(1), bad), hc::DomainError);
  hc::ParamSet<Q> missing{{"alpha", Q(2)}};
  EXPECT_THROW(hc::family_eval(d, 1, Q(1), missing), hc::DomainError);
}

TEST(MeixnerDegree, FiniteDifferencesAnnihilate) {
  for (const auto& [alpha, c] : {std::pair{r("3/2"), r("2/5")}, std::pair{r("-7/3"), r("5/4")}})
    for (long n = 0; n <= 6; ++n) {
      std::vector<Q> v;
      for (long x = 0; x <= n + 1; ++x) v.push_back(hc::meixner(n, Q(x), alpha, c));
      for (long level = 0; level <= n; ++level)
        for (std::size_t i = 0; i + 1 < v.size() - level; ++i) v[i] = v[i + 1] - v[i];
      EXPECT_EQ(v[0], Q(0)) << "n=" << n;
    }
}

TEST(GfExpand, MeixnerFirstOrder) {
  const Q x(4), alpha = r("3/2"), c = r("2/5");
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"c", c}};
  auto s = hc::gf_expand(hc::family("meixner"), x, ps, 3);
  EXPECT_EQ(s[0], Q(1));
  EXPECT_EQ(s[1], alpha + x * (Q(1) - Q(1) / c));
}

TEST(GfExpand, MeixnerMatchesEvaluator) {
  for (const auto& [x, alpha, c] : {std::tuple{Q(4), r("3/2"), r("2/5")}, std::tuple{r("-5/3"), r("7/2"), r("3/7")},
                                    std::tuple{r("9/2"), r("-1/3"), r("4/3")}}) {
    hc::ParamSet<Q> ps{{"alpha", alpha}, {"c", c}};
    auto s = hc::gf_expand(hc::family("meixner"), x, ps, 12);
    for (long n = 0; n <= 12; ++n)
      EXPECT_EQ(s[n], hc::pochhammer(alpha, n) / hc::factorial<Q>(n) * hc::meixner(n, x, alpha, c));
  }
}

TEST(GfExpand, ConstantTermIsOne) {
  C theta(std::numbers::pi / 3);
  for (const auto& d : hc::catalog()) {
    if (d.expandable == hc::Expandability::metadata) continue;
    hc::ParamSet<C> ps;
    for (const auto& p : d.parameters) ps.set(p.name, p.name == "N" ? C(5) : C(0.25 + 0.01 * ps.values().size()));
    auto s = hc::gf_expand(d, d.theta_variable() ? theta : C(0.4), ps, 4);
    EXPECT_NEAR(std::abs(s[0].value() - 1.0), 0.0, 1e-14) << d.id;
  }
}

TEST(GfExpand, MetadataAndFieldErrors) {
  hc::ParamSet<C> ps{{"a", C(0.5)}, {"b", C(0.2)}, {"c", C(0.3)}, {"N", C(4)}};
  EXPECT_THROW(hc::gf_expand(hc::family("dual_hahn"), C(1.0), ps, 3), hc::UnsupportedError);
  hc::ParamSet<Q> q{{"a", r("1/4")}, {"q", r("1/3")}};
  EXPECT_THROW(hc::gf_expand(hc::family("al_salam_carlitz_1"), Q(1), q, 3), hc::UnsupportedError);
}

TEST(GfExpand, KrawtchoukTruncation) {
  hc::ParamSet<Q> ps{{"p", r("1/3")}, {"N", Q(3)}};
  auto s = hc::gf_expand(hc::family("krawtchouk"), Q(2), ps, 6);
  EXPECT_EQ(s.order(), 6);
  for (long n = 4; n <= 6; ++n) EXPECT_EQ(s[n], Q(0));
  for (long n = 0; n <= 3; ++n) EXPECT_EQ(s[n], hc::krawtchouk(n, Q(2), r("1/3"), 3) / hc::factorial<Q>(n));
}

TEST(PolyFromGf, Examples) {
  const auto& ch = hc::family("charlier");
  hc::ParamSet<Q> ps{{"a", r("3/5")}};
  EXPECT_EQ(hc::poly_from_gf(ch, 0, r("7/2"), ps), Q(1));
  for (const Q& x : {Q(0), Q(3), r("-2/9")}) EXPECT_EQ(hc::poly_from_gf(ch, 1, x, ps), Q(1) - x / r("3/5"));
  const auto& m = hc::family("meixner");
  hc::ParamSet<Q> mp{{"alpha", r("3/2")}, {"c", r("2/5")}};
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(hc::poly_from_gf(m, n, Q(4), mp), hc::family_eval(m, n, Q(4), mp));
}

TEST(QFamilies, ExpansionMatchesClosedForms) {
  const C q(1.0 / 3.0);
  struct Probe {
    const char* id;
    hc::ParamSet<C> ps;
    C v;
  };
  std::vector<Probe> probes{
      {"al_salam_chihara", {{"a", C(0.25)}, {"b", C(0.2)}, {"q", q}}, C(std::numbers::pi / 3)},
      {"continuous_big_q_hermite", {{"a", C(0.25)}, {"q", q}}, C(std::numbers::pi / 3)},
      {"al_salam_carlitz_1", {{"a", C(0.25)}, {"q", q}}, C(0.4)},
      {"al_salam_carlitz_2", {{"a", C(0.25)}, {"q", q}}, C(0.4)}};
  for (const auto& p : probes) {
    const auto& d = hc::family(p.id);
    auto s = hc::gf_expand(d, p.v, p.ps, 8);
    for (long n = 0; n <= 8; ++n) {
      C want = hc::normalization(d, n, p.ps) * hc::q_family_closed_form(d, n, p.v, p.ps);
      EXPECT_TRUE(hc::nearly_equal(s[n], want, hc::FieldTag::numeric(1e-10))) << p.id << " n=" << n;
    }
  }
}

TEST(QFamilies, ComplexInputsUseSeriesPath) {
  const C q(0.6);
  const auto& d = hc::family("al_salam_carlitz_2");
  hc::ParamSet<C> ps{{"a", C(0.5, 0.1)}, {"q", q}};
  auto s = hc::gf_expand(d, C(0.3), ps, 5);
  for (long n = 0; n <= 5; ++n) {
    C want = hc::normalization(d, n, ps) * hc::q_family_closed_form(d, n, C(0.3), ps);
    EXPECT_TRUE(hc::nearly_equal(s[n], want, hc::FieldTag::numeric(1e-9))) << n;
  }
}
