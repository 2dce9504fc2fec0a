#include "test_support.hpp"

using hc::KrawtchoukRelation;
using hc::MeixnerRelation;

namespace {

const Q alpha = r("3/2"), beta = r("7/3"), c = r("2/5"), d = r("3/7");

hc::ParamSet<Q> meixner_params() { return {{"alpha", alpha}, {"beta", beta}, {"c", c}, {"d", d}}; }

std::vector<Q> samples() {
  std::vector<Q> xs{Q(0), Q(1), r("5/2"), Q(4), r("-3/7")};
  for (long i = 0; i < 15; ++i) xs.push_back(Q(2 * i - 11, 3 + i));
  return xs;
}

hc::ParamSet<Q> subset(const hc::ParamSet<Q>& ps, const std::vector<std::string>& names) {
  hc::ParamSet<Q> out;
  for (const auto& n : names) out.set(n, ps.get(n));
  return out;
}

}  // namespace

TEST(Meixner, AlphaToBetaIdentityWhenEqual) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"beta", alpha}, {"c", c}};
  auto e = hc::meixner_connection(MeixnerRelation::alpha_to_beta, ps, 6);
  EXPECT_EQ(e.table, hc::identity_table<Q>(6));
}

TEST(Meixner, AlphaToBetaWithoutC) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"beta", beta}};
  auto e = hc::meixner_connection(MeixnerRelation::alpha_to_beta, ps, 4);
  EXPECT_EQ(e.coefficient(1, 0), (alpha - beta) / alpha);
}

TEST(Meixner, AlphaToBetaFirstDegree) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"beta", beta}, {"c", c}};
  EXPECT_EQ(hc::meixner_connection_coeffs(MeixnerRelation::alpha_to_beta, ps, 1, 0), (alpha - beta) / alpha);
  EXPECT_EQ(hc::meixner_connection_coeffs(MeixnerRelation::alpha_to_beta, ps, 1, 1), beta / alpha);
  for (const Q& x : samples())
    EXPECT_EQ(Q(1) + x * (Q(1) - Q(1) / c) / alpha,
              (alpha - beta) / alpha + beta / alpha * (Q(1) + x * (Q(1) - Q(1) / c) / beta));
}

TEST(Meixner, SameAlphaIdentityWhenDEqualsC) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"c", c}, {"d", c}};
  EXPECT_EQ(hc::meixner_connection(MeixnerRelation::same_alpha_c_to_d, ps, 6).table, hc::identity_table<Q>(6));
}

TEST(Meixner, ReconstructionEveryRelation) {
  const auto& fam = hc::family("meixner");
  for (const auto& [rel, name] : hc::meixner_relation_names()) {
    auto ps = subset(meixner_params(), hc::meixner_relation_parameters(rel));
    auto e = hc::meixner_connection(rel, ps, 8);
    EXPECT_EQ(e.x_dependent, hc::is_connection_type(rel)) << name;
    for (long n = 0; n <= 8; ++n)
      for (const Q& x : samples())
        EXPECT_EQ(hc::reconstruct(e, fam, n, x), hc::meixner(n, x, alpha, c)) << name << " n=" << n;
  }
}

TEST(Meixner, ConnectionTypeNeedsX) {
  auto ps = subset(meixner_params(), {"alpha", "c", "d"});
  EXPECT_THROW(hc::meixner_connection_coeffs(MeixnerRelation::type_c_to_d, ps, 3, 1), hc::DomainError);
  EXPECT_THROW(hc::meixner_connection_coeffs(MeixnerRelation::same_alpha_c_to_d, ps, 3, 1, std::optional<Q>(Q(2))),
               hc::DomainError);
  auto e = hc::meixner_connection(MeixnerRelation::type_c_to_d, ps, 3);
  EXPECT_THROW(e.coefficient(2, 1), hc::DomainError);
}

TEST(Meixner, TypeAlphaCPole) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"beta", alpha + Q(1)}, {"c", c}, {"d", d}};
  EXPECT_THROW(hc::meixner_connection_coeffs(MeixnerRelation::type_alpha_c, ps, 2, 1, std::optional<Q>(Q(3))),
               hc::SingularError);
}

TEST(Meixner, DomainChecks) {
  hc::ParamSet<Q> ps{{"alpha", Q(-1)}, {"beta", beta}, {"c", c}};
  EXPECT_THROW(hc::meixner_connection(MeixnerRelation::alpha_to_beta, ps, 3), hc::DomainError);
  hc::ParamSet<Q> bad_d{{"alpha", alpha}, {"c", c}, {"d", Q(1)}};
  EXPECT_THROW(hc::meixner_connection(MeixnerRelation::same_alpha_c_to_d, bad_d, 3), hc::DomainError);
  EXPECT_THROW(hc::meixner_connection_coeffs(MeixnerRelation::alpha_to_beta, meixner_params(), 2, 3), hc::DomainError);
}

TEST(Meixner, Transitivity) {
  const Q gamma = r("-4/9");
  auto ab = hc::meixner_connection(MeixnerRelation::alpha_to_beta, hc::ParamSet<Q>{{"alpha", alpha}, {"beta", beta}, {"c", c}}, 8);
  auto bg = hc::meixner_connection(MeixnerRelation::alpha_to_beta, hc::ParamSet<Q>{{"alpha", beta}, {"beta", gamma}, {"c", c}}, 8);
  auto ag = hc::meixner_connection(MeixnerRelation::alpha_to_beta, hc::ParamSet<Q>{{"alpha", alpha}, {"beta", gamma}, {"c", c}}, 8);
  for (long n = 0; n <= 8; ++n)
    for (long k = 0; k <= n; ++k) {
      Q sum(0);
      for (long j = k; j <= n; ++j) sum += ab.table[n][j] * bg.table[j][k];
      EXPECT_EQ(sum, ag.table[n][k]);
    }
}

TEST(Krawtchouk, IdentityDegenerations) {
  hc::ParamSet<Q> same_p{{"p", r("1/2")}, {"q", r("1/2")}, {"N", Q(5)}};
  EXPECT_EQ(hc::krawtchouk_connection(KrawtchoukRelation::p_to_q_same_N, same_p, 5).table, hc::identity_table<Q>(5));
  hc::ParamSet<Q> same_n{{"p", r("1/2")}, {"N", Q(5)}, {"M", Q(5)}};
  EXPECT_EQ(hc::krawtchouk_connection(KrawtchoukRelation::same_p_N_to_M, same_n, 5).table, hc::identity_table<Q>(5));
}

TEST(Krawtchouk, FirstDegreeReconstruction) {
  hc::ParamSet<Q> ps{{"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(4)}, {"M", Q(6)}};
  for (const Q& x : {Q(0), Q(1), Q(2)}) {
    Q sum(0);
    for (long k = 0; k <= 1; ++k)
      sum += hc::krawtchouk_connection_coeffs(KrawtchoukRelation::p_N_to_q_M, ps, 1, k) * hc::krawtchouk(k, x, r("1/3"), 6);
    EXPECT_EQ(sum, hc::krawtchouk(1, x, r("1/2"), 4));
  }
}

TEST(Krawtchouk, ReconstructionEveryRelation) {
  const auto& fam = hc::family("krawtchouk");
  hc::ParamSet<Q> all{{"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(4)}, {"M", Q(7)}};
  for (const auto& [rel, name] : hc::krawtchouk_relation_names()) {
    auto e = hc::krawtchouk_connection(rel, subset(all, hc::krawtchouk_relation_parameters(rel)), 4);
    for (long n = 0; n <= 4; ++n)
      for (const Q& x : samples()) EXPECT_EQ(hc::reconstruct(e, fam, n, x), hc::krawtchouk(n, x, r("1/2"), 4)) << name;
  }
}

TEST(Krawtchouk, DomainChecks) {
  hc::ParamSet<Q> ps{{"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(4)}, {"M", Q(3)}};
  EXPECT_THROW(hc::krawtchouk_connection(KrawtchoukRelation::p_N_to_q_M, ps, 3), hc::DomainError);
  hc::ParamSet<Q> ok{{"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(4)}, {"M", Q(6)}};
  EXPECT_THROW(hc::krawtchouk_connection(KrawtchoukRelation::p_N_to_q_M, ok, 5), hc::DomainError);
}

TEST(PowerCollect, MatchesClosedForm) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"beta", beta}, {"c", c}};
  auto closed = hc::meixner_connection(MeixnerRelation::alpha_to_beta, ps, 10);
  auto collected = hc::power_collect(hc::family("meixner"), closed.source, closed.target, 10);
  EXPECT_FALSE(collected.x_dependent);
  EXPECT_EQ(collected.table, closed.table);
}

TEST(PowerCollect, SameParametersGiveIdentity) {
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"c", c}};
  EXPECT_EQ(hc::power_collect(hc::family("meixner"), ps, ps, 5).table, hc::identity_table<Q>(5));
  hc::ParamSet<Q> ch{{"a", r("2/3")}};
  EXPECT_EQ(hc::power_collect(hc::family("charlier"), ch, ch, 5).table, hc::identity_table<Q>(5));
}

TEST(PowerCollect, RejectsParameterOutsideIsolatedFactor) {
  hc::ParamSet<Q> from{{"alpha", alpha}, {"c", c}}, to{{"alpha", alpha}, {"c", d}};
  try {
    hc::power_collect(hc::family("meixner"), from, to, 4);
    FAIL() << "expected NotApplicableError";
  } catch (const hc::NotApplicableError& e) {
    EXPECT_NE(std::string(e.what()).find("1/c"), std::string::npos) << e.what();
  }
  hc::ParamSet<Q> kf{{"p", r("1/2")}, {"N", Q(4)}}, kt{{"p", r("1/3")}, {"N", Q(4)}};
  EXPECT_THROW(hc::power_collect(hc::family("krawtchouk"), kf, kt, 4), hc::NotApplicableError);
}

TEST(PowerCollect, AlSalamCarlitzAgreesWithLinearSolve) {
  const auto& fam = hc::family("al_salam_carlitz_1");
  hc::ParamSet<C> from{{"a", C(0.25)}, {"q", C(1.0 / 3.0)}}, to{{"a", C(0.2)}, {"q", C(1.0 / 3.0)}};
  auto collected = hc::power_collect(fam, from, to, 6);
  auto solved = hc::connect_linear_solve(fam, from, to, 6);
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= n; ++k)
      EXPECT_TRUE(hc::nearly_equal(collected.table[n][k], solved.table[n][k], hc::FieldTag::numeric(1e-10)));
}

TEST(PowerCollect, CharlierParameterSitsInTheBase) {
  const auto& fam = hc::family("charlier");
  hc::ParamSet<Q> from{{"a", r("2/3")}}, to{{"a", r("5/4")}};
  EXPECT_THROW(hc::power_collect(fam, from, to, 5), hc::NotApplicableError);
}

TEST(LinearSolve, MatchesClosedForms) {
  const auto& fam = hc::family("meixner");
  for (auto rel : {MeixnerRelation::alpha_c_to_beta_d, MeixnerRelation::same_alpha_c_to_d, MeixnerRelation::alpha_to_beta}) {
    auto closed = hc::meixner_connection(rel, subset(meixner_params(), hc::meixner_relation_parameters(rel)), 10);
    EXPECT_EQ(hc::connect_linear_solve(fam, closed.source, closed.target, 10).table, closed.table);
  }
  hc::ParamSet<Q> ps{{"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(4)}, {"M", Q(7)}};
  auto k = hc::krawtchouk_connection(KrawtchoukRelation::p_N_to_q_M, ps, 4);
  EXPECT_EQ(hc::connect_linear_solve(hc::family("krawtchouk"), k.source, k.target, 4).table, k.table);
}

TEST(LinearSolve, IdentityAndSingularSamples) {
  const auto& fam = hc::family("meixner");
  hc::ParamSet<Q> ps{{"alpha", alpha}, {"c", c}};
  EXPECT_EQ(hc::connect_linear_solve(fam, ps, ps, 5).table, hc::identity_table<Q>(5));
  std::vector<Q> repeated{Q(0), Q(1), Q(1), Q(3)};
  EXPECT_THROW(hc::connect_linear_solve(fam, ps, ps, 3, std::optional<std::vector<Q>>(repeated)), hc::SingularError);
}

TEST(LinearSolve, CharlierChangeOfParameter) {
  const auto& fam = hc::family("charlier");
  hc::ParamSet<Q> from{{"a", r("2/3")}}, to{{"a", r("5/4")}};
  auto e = hc::connect_linear_solve(fam, from, to, 6);
  for (long n = 0; n <= 6; ++n)
    for (const Q& x : samples()) EXPECT_EQ(hc::reconstruct(e, fam, n, x), hc::family_eval(fam, n, x, from));
}
