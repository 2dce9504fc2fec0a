#include "test_support.hpp"

using S = hc::TruncatedSeries<Q>;

namespace {
S poly(std::vector<Q> c) { return S(std::move(c)); }
}  // namespace

TEST(Series, ArithmeticExamples) {
  EXPECT_EQ((poly({1, 1, 0, 0}) * poly({1, -1, 0, 0})).coefficients(), (std::vector<Q>{1, 0, -1, 0}));
  auto s = poly({r("1/2"), 3, r("-4/7")});
  EXPECT_EQ((s + S::zero(2)).coefficients(), s.coefficients());
  auto geometric = hc::binomial_power(Q(1), Q(1), 5);
  EXPECT_EQ((geometric * poly({1, -1, 0, 0, 0, 0})).coefficients(), S::one(5).coefficients());
}

TEST(Series, MixedOrdersTruncateToMinimum) {
  auto a = hc::exp_series(Q(1), 7);
  auto b = hc::exp_series(Q(-1), 4);
  EXPECT_EQ((a * b).order(), 4);
  EXPECT_EQ((a * b).coefficients(), S::one(4).coefficients());
}

TEST(Series, FieldMismatch) {
  hc::TruncatedSeries<C> a(std::vector<C>{C(1), C(2)}, hc::FieldTag::numeric(1e-10));
  hc::TruncatedSeries<C> b(std::vector<C>{C(1), C(2)}, hc::FieldTag::numeric(1e-6));
  EXPECT_THROW(a + b, hc::FieldMismatchError);
}

TEST(Series, BinomialPowerExamples) {
  const auto ones = hc::binomial_power(Q(1), Q(1), 6);
  for (const auto& c : ones.coefficients()) EXPECT_EQ(c, Q(1));
  EXPECT_EQ(hc::binomial_power(Q(2), Q(-3), 4).coefficients(), (std::vector<Q>{1, -6, 12, -8, 0}));
  // (1 - t/c)^x with c = 2/5, x = 3 is a finite binomial expansion.
  auto s = hc::binomial_power(Q(5, 2), Q(-3), 5);
  EXPECT_EQ(s.coefficients(), (std::vector<Q>{1, r("-15/2"), r("75/4"), r("-125/8"), 0, 0}));
}

TEST(Series, BinomialPowerAddsExponents) {
  RationalSource src;
  for (int i = 0; i < 50; ++i) {
    Q k = src.next(), a = src.next(), b = src.next();
    EXPECT_EQ((hc::binomial_power(k, a, 8) * hc::binomial_power(k, b, 8)).coefficients(),
              hc::binomial_power(k, a + b, 8).coefficients());
  }
}

TEST(Series, ExpExamples) {
  EXPECT_EQ(hc::exp_series(Q(0), 3).coefficients(), (std::vector<Q>{1, 0, 0, 0}));
  EXPECT_EQ(hc::exp_series(Q(1), 3).coefficients(), (std::vector<Q>{1, 1, r("1/2"), r("1/6")}));
  EXPECT_EQ((hc::exp_series(Q(1), 10) * hc::exp_series(Q(-1), 10)).coefficients(), S::one(10).coefficients());
}

TEST(Series, ComposeExamples) {
  hc::CoefficientStream<Q> geometric{Q(1), [](long) { return Q(1); }};
  auto inner = S::monomial(1, Q(1), 5) * hc::binomial_power(Q(1), Q(1), 5);  // t/(1-t)
  EXPECT_EQ(hc::compose(geometric, inner, 5).coefficients(), (std::vector<Q>{1, 1, 2, 4, 8, 16}));

  hc::CoefficientStream<Q> arbitrary{r("3/4"), [](long k) { return Q(k + 2, 3); }};
  EXPECT_EQ(hc::compose(arbitrary, S::zero(4), 4).coefficients(), S::constant(r("3/4"), 4).coefficients());

  const Q a = r("5/4"), kappa = r("-2/3");
  hc::CoefficientStream<Q> binom{Q(1), [&](long k) { return (a + Q(k)) / Q(k + 1); }};
  EXPECT_EQ(hc::compose(binom, S::monomial(1, kappa, 8), 8).coefficients(),
            hc::binomial_power(kappa, a, 8).coefficients());

  EXPECT_THROW(hc::compose(geometric, S::one(4), 4), hc::DomainError);
}

TEST(Series, ComposeScaling) {
  const Q lambda = r("-3/5");
  hc::CoefficientStream<Q> terminating{Q(1), [](long k) { return Q(k - 4, k + 1); }};
  hc::CoefficientStream<Q> scaled{Q(1), [&](long k) { return Q(k - 4, k + 1) * lambda; }};
  auto inner = S::monomial(1, Q(1), 7) + S::monomial(2, r("1/2"), 7);
  EXPECT_EQ(hc::compose(terminating, inner * lambda, 7).coefficients(), hc::compose(scaled, inner, 7).coefficients());
}

TEST(Series, LinearFactorProduct) {
  EXPECT_EQ(hc::linear_factor_product<Q>({}, 3).coefficients(), S::one(3).coefficients());
  EXPECT_EQ(hc::linear_factor_product<Q>({1, 1}, 3).coefficients(), (std::vector<Q>{1, -2, 1, 0}));
  auto q3 = hc::finite_q_product(Q(1), r("1/2"), 3, 4);
  auto direct = hc::linear_factor_product<Q>({1, r("1/2"), r("1/4")}, 4);
  EXPECT_EQ(q3.coefficients(), direct.coefficients());
}

TEST(Series, QBinomialExamples) {
  const Q q = r("1/3"), kappa = r("2/5");
  auto s = hc::q_binomial_series(q, kappa, q, 6);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(s[n], hc::ipow(kappa, n));
  auto z = hc::q_binomial_series(Q(0), Q(1), q, 6);
  for (long n = 0; n <= 6; ++n) EXPECT_EQ(z[n], Q(1) / hc::q_pochhammer(q, q, n));
  EXPECT_EQ(hc::q_binomial_series(r("1/2"), Q(1), q, 0).coefficients(), S::one(0).coefficients());
}

TEST(Series, TruncateExamples) {
  EXPECT_EQ(hc::truncate_to(hc::exp_series(Q(1), 6), 2).coefficients(), (std::vector<Q>{1, 1, r("1/2")}));
  auto s = hc::exp_series(r("2/3"), 5);
  EXPECT_EQ(hc::truncate_to(s, 5).coefficients(), s.coefficients());
  EXPECT_EQ(hc::truncate_to(hc::binomial_power(Q(1), r("5/4"), 9), 3).coefficients(),
            (std::vector<Q>{1, r("5/4"), r("45/32"), r("195/128")}));
  EXPECT_THROW(hc::truncate_to(s, 6), hc::DomainError);
}

TEST(Series, TruncateProperties) {
  auto a = hc::exp_series(r("1/3"), 8), b = hc::binomial_power(r("2/7"), r("-5/3"), 8);
  EXPECT_EQ(hc::truncate_to(hc::truncate_to(a, 5), 5).coefficients(), hc::truncate_to(a, 5).coefficients());
  EXPECT_EQ(hc::truncate_to(a + b, 4).coefficients(), (hc::truncate_to(a, 4) + hc::truncate_to(b, 4)).coefficients());
}

TEST(Series, MultiplicationLaws) {
  RationalSource src;
  auto random_series = [&](long order) {
    std::vector<Q> c;
    for (long k = 0; k <= order; ++k) c.push_back(src.next());
    return S(std::move(c));
  };
  for (int i = 0; i < 30; ++i) {
    auto a = random_series(6), b = random_series(6), c = random_series(6);
    EXPECT_EQ((a * b).coefficients(), (b * a).coefficients());
    EXPECT_EQ(((a * b) * c).coefficients(), (a * (b * c)).coefficients());
  }
}

TEST(Series, CompareReportsFirstMismatch) {
  auto a = hc::exp_series(Q(1), 6);
  auto b = a;
  b[4] += Q(1, 1000);
  auto cmp = hc::compare(a, b);
  EXPECT_FALSE(cmp.equal);
  EXPECT_EQ(cmp.first_mismatch, 4);
}
