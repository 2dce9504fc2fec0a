#include <cstdlib>

#include "test_support.hpp"

namespace {

hc::IdentityCase make(std::string id, std::map<std::string, Q> params, long order = 12,
                      hc::FieldKind field = hc::FieldKind::exact) {
  hc::IdentityCase c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.order = order;
  c.field = field;
  return c;
}

std::map<std::string, Q> canonical(const std::string& id) {
  const std::map<std::string, Q> all{{"x", Q(4)},        {"alpha", r("3/2")}, {"beta", r("7/3")},
                                     {"c", r("2/5")},    {"d", r("3/7")},     {"gamma", r("5/4")}};
  std::map<std::string, Q> out;
  for (const auto& p : hc::theorem_info(id).parameters) out[p] = all.at(p);
  return out;
}

}  // namespace

class AcceptanceCases : public ::testing::TestWithParam<int> {};

TEST_P(AcceptanceCases, CriterionPasses) {
  for (const auto& a : hc::acceptance_suite()) {
    if (a.criterion != GetParam()) continue;
    auto rep = hc::verify(a.c);
    EXPECT_EQ(rep.status, hc::Status::pass) << a.c.id << ": " << rep.message;
  }
}

INSTANTIATE_TEST_SUITE_P(Criteria, AcceptanceCases, ::testing::Values(1, 2, 3, 4, 5, 6, 7, 9));

TEST(GfIdentities, ConstantTermsAreOne) {
  auto [lhs, rhs] = hc::build_sides<Q>(make("meixner_confluent_alpha_c", canonical("meixner_confluent_alpha_c"), 0));
  EXPECT_EQ(lhs[0], Q(1));
  EXPECT_EQ(rhs[0], Q(1));
}

TEST(GfIdentities, GaussAlphaAtSecondParameterSet) {
  auto c = make("meixner_gauss_alpha", {{"x", Q(3)}, {"alpha", r("5/4")}, {"beta", r("1/2")}, {"c", r("3/7")}, {"gamma", r("5/4")}});
  auto rep = hc::verify(c);
  EXPECT_EQ(rep.status, hc::Status::pass);
  EXPECT_EQ(rep.deviation, 0.0);
}

TEST(GfIdentities, NumericBackendAgrees) {
  for (const char* id : {"meixner_exp_c_phi2", "meixner_gauss_alpha_c"}) {
    auto rep = hc::verify(make(id, canonical(id), 10, hc::FieldKind::numeric));
    EXPECT_EQ(rep.status, hc::Status::pass) << id << " deviation " << rep.deviation;
  }
}

TEST(GfIdentities, PerturbedRightSideFails) {
  auto c = make("meixner_exp_alpha", canonical("meixner_exp_alpha"));
  auto [lhs, rhs] = hc::build_sides<Q>(c);
  rhs[5] += Q(1, 1000000);
  auto cmp = hc::compare(lhs, rhs);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.first_mismatch, 5);
}

// The displayed forms with (x, -x) paired against (t/c, t/d), and the one
// without (1-t)^(-gamma), do not hold; the registry keeps them reachable.
TEST(GfIdentities, PrintedFormsFail) {
  for (const char* id : {"meixner_exp_c_phi2", "meixner_exp_alpha_c_phi2_3", "meixner_gauss_alpha_c",
                         "meixner_gauss_c_appell", "meixner_gauss_alpha_c_lauricella"}) {
    auto c = make(id, canonical(id));
    c.as_printed = true;
    auto rep = hc::verify(c);
    EXPECT_EQ(rep.status, hc::Status::fail) << id;
    EXPECT_TRUE(rep.first_failing_order.has_value());
  }
}

TEST(GfIdentities, PrintedFlagRejectedWhereNoVariantExists) {
  auto c = make("meixner_exp_alpha", canonical("meixner_exp_alpha"));
  c.as_printed = true;
  EXPECT_EQ(hc::verify(c).status, hc::Status::error);
}

TEST(GfIdentities, KrawtchoukExactPolynomials) {
  for (const char* id : {"krawtchouk_exp_p_n", "krawtchouk_gauss_p_n"}) {
    std::map<std::string, Q> p{{"x", Q(3)}, {"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(4)}, {"M", Q(6)}};
    if (std::string(id).find("gauss") != std::string::npos) p["gamma"] = r("5/4");
    auto [lhs, rhs] = hc::build_sides<Q>(make(id, p, 4));
    EXPECT_EQ(lhs.order(), 4);
    EXPECT_EQ(lhs.coefficients(), rhs.coefficients()) << id;
  }
}

TEST(GfIdentities, DomainErrors) {
  auto bad = canonical("meixner_exp_alpha");
  bad["alpha"] = Q(-2);
  EXPECT_EQ(hc::verify(make("meixner_exp_alpha", bad)).status, hc::Status::error);
  auto missing = canonical("meixner_exp_alpha");
  missing.erase("c");
  EXPECT_EQ(hc::verify(make("meixner_exp_alpha", missing)).status, hc::Status::error);
  auto extra = canonical("meixner_exp_alpha");
  extra["q"] = Q(1);
  EXPECT_EQ(hc::verify(make("meixner_exp_alpha", extra)).status, hc::Status::error);
  EXPECT_EQ(hc::verify(make("no_such_theorem", {})).status, hc::Status::error);
}

TEST(Chains, ConfluentReducesAtEqualParameters) {
  auto rep = hc::verify(make("chain.meixner_gauss_alpha_c.d=c", canonical("chain.meixner_gauss_alpha_c.d=c")));
  EXPECT_EQ(rep.status, hc::Status::pass) << rep.message;
}

TEST(Connections, SpecPoints) {
  auto c = make("meixner.alpha_c_to_beta_d", {{"alpha", r("3/2")}, {"beta", r("7/3")}, {"c", r("2/5")}, {"d", r("3/7")}}, 8);
  c.x_samples = {Q(0), Q(1), Q(2), r("5/2"), Q(4)};
  EXPECT_EQ(hc::verify(c).status, hc::Status::pass);
  EXPECT_EQ(hc::verify(make("meixner.same_alpha_c_to_d", {{"alpha", r("3/2")}, {"c", r("2/5")}, {"d", r("2/5")}}, 8)).status,
            hc::Status::pass);
  EXPECT_EQ(hc::verify(make("krawtchouk.same_p_N_to_M", {{"p", r("1/2")}, {"N", Q(4)}, {"M", Q(7)}}, 4)).status,
            hc::Status::pass);
}

TEST(Orthogonality, TrivialPoint) {
  // n = 0, t = 0: both sides are (1-c)^(-beta).
  auto c = make("meixner_sum_exp_alpha", {{"alpha", Q(2)}, {"beta", Q(3)}, {"c", r("1/2")}, {"t", Q(0)}, {"n", Q(0)}}, 0,
                hc::FieldKind::numeric);
  auto rep = hc::verify(c);
  EXPECT_EQ(rep.status, hc::Status::pass);
  EXPECT_EQ(rep.terms_summed, 301);
}

TEST(Orthogonality, SmallXMaxIsInconclusive) {
  auto c = make("meixner_sum_exp_alpha", {{"alpha", Q(2)}, {"beta", Q(3)}, {"c", r("1/2")}, {"t", r("1/4")}, {"n", Q(3)}}, 0,
                hc::FieldKind::numeric);
  c.x_max = 20;
  auto rep = hc::verify(c);
  EXPECT_EQ(rep.status, hc::Status::inconclusive);
  ASSERT_TRUE(rep.tail_bound.has_value());
  EXPECT_GT(*rep.tail_bound, 1e-10);
}

TEST(Orthogonality, PrintedConfluentSumFails) {
  auto c = make("meixner_sum_confluent_alpha_c",
                {{"alpha", Q(2)}, {"beta", Q(3)}, {"c", r("1/2")}, {"d", r("3/7")}, {"t", r("1/4")}, {"n", Q(3)}}, 0,
                hc::FieldKind::numeric);
  c.as_printed = true;
  EXPECT_EQ(hc::verify(c).status, hc::Status::fail);
}

TEST(Orthogonality, KrawtchoukSumsAreExact) {
  auto rep = hc::verify(make("krawtchouk_sum_exp", {{"p", r("1/2")}, {"q", r("1/3")}, {"N", Q(3)}, {"M", Q(5)}, {"t", r("1/5")}, {"n", Q(2)}}, 0));
  EXPECT_EQ(rep.status, hc::Status::pass);
  EXPECT_EQ(rep.deviation, 0.0);
}

TEST(Orthogonality, DomainChecks) {
  auto c = make("meixner_orthogonality", {{"alpha", Q(2)}, {"c", r("3/2")}, {"n", Q(1)}, {"m", Q(1)}}, 0, hc::FieldKind::numeric);
  EXPECT_EQ(hc::verify(c).status, hc::Status::error);
}

TEST(Batch, EmptyInput) {
  auto reports = hc::batch_verify({});
  EXPECT_TRUE(reports.empty());
  auto s = hc::summarize(reports);
  EXPECT_EQ(s.total, 0);
  EXPECT_TRUE(s.all_passed());
}

TEST(Batch, ErrorIsolationAndOrder) {
  std::vector<hc::IdentityCase> cases;
  for (const char* id : {"meixner_exp_alpha", "meixner_gauss_alpha", "meixner_confluent_alpha_c"})
    cases.push_back(make(id, canonical(id), 8));
  cases.insert(cases.begin() + 1, make("not_registered", {}));
  auto reports = hc::batch_verify(cases, 4);
  ASSERT_EQ(reports.size(), 4u);
  for (std::size_t i = 0; i < cases.size(); ++i) EXPECT_EQ(reports[i].input, cases[i]);
  EXPECT_EQ(reports[1].status, hc::Status::error);
  EXPECT_EQ(reports[0].status, hc::Status::pass);
  EXPECT_EQ(reports[3].status, hc::Status::pass);
  auto s = hc::summarize(reports);
  EXPECT_EQ(s.errors, 1);
  EXPECT_EQ(s.passed, 3);
}

TEST(Batch, ThreadCountFromEnvironment) {
  ::setenv("HYPERCONNECT_THREADS", "3", 1);
  EXPECT_EQ(hc::configured_threads(), 3u);
  ::setenv("HYPERCONNECT_THREADS", "0", 1);
  EXPECT_GE(hc::configured_threads(), 1u);
  ::unsetenv("HYPERCONNECT_THREADS");
}

TEST(Registry, EveryIdIsUnique) {
  std::set<std::string> ids;
  for (const auto& t : hc::theorem_registry()) EXPECT_TRUE(ids.insert(t.id).second) << t.id;
}
