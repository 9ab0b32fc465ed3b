/*
 *  Copyright 2026 The hexp Authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */


#include <gtest/gtest.h>

#include <functional>

#include "hexp/inequalities.hpp"
#include "test_util.hpp"

namespace hexp {
namespace {

using Kind = UnivariateMap::Kind;

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

// Taylor coefficients by the trapezoidal Cauchy integral on |z| = 0.5.
std::array<cplx, 4> cauchy_coeffs(const std::function<cplx(cplx)>& f) {
  constexpr int pts = 256;
  std::array<cplx, 4> c{};
  for (int i = 0; i < pts; ++i) {
    const cplx w = std::polar(1.0, 2.0 * std::numbers::pi * i / pts);
    const cplx v = f(0.5 * w);
    for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] += v / std::pow(0.5 * w, k);
  }
  for (auto& x : c) x /= pts;
  return c;
}

cplx blaschke_value(const BlaschkeData& d, cplx z) {
  cplx v = d.rotation;
  for (cplx a : d.zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

class InequalitiesTest : public ::testing::Test {
 protected:
  void SetUp() override { test::use_several_threads(); }
};

// --- bound formulas ---------------------------------------------------------

TEST_F(InequalitiesTest, BoundFormulas) {
  const double s3 = std::sqrt(3.0);
  EXPECT_DOUBLE_EQ(thm21_bound(0.0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(thm23_bound(0.25), 1.5);
  EXPECT_DOUBLE_EQ(thm31_bound(0.0, 2), 1.0);
  EXPECT_DOUBLE_EQ(thm31_bound(0.25, 2), 0.625);
  EXPECT_NEAR(thm31_bound(0.0, 3), (1.5 * s3 + 1.0) / 3.0, 1e-15);
  EXPECT_NEAR(thm31_bound(0.0, 3), 1.19935874, 1e-8);
  EXPECT_DOUBLE_EQ(thm32_bound(0.5), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(thm33_bound(0.0), 3.0);
  EXPECT_DOUBLE_EQ(thm33_bound(0.25), 1.5);
  EXPECT_DOUBLE_EQ(thm33_bound(0.5), 0.5);
  EXPECT_DOUBLE_EQ(cor33_bound(0.0, 2.0), 3.0);
  EXPECT_DOUBLE_EQ(cor33_bound(0.5, 7.0), 0.5);
  EXPECT_DOUBLE_EQ(thm34_bound(0.0, 2), 5.0);
  EXPECT_NEAR(thm34_bound(0.0, 3), 3.0 * s3 + 1.0, 1e-14);
  EXPECT_DOUBLE_EQ(thm35_bound(0.0), 4.0);
  EXPECT_NEAR(thm35_bound(0.2), 0.8 * 2.2 * 2.8 / 3.0, 1e-15);
  EXPECT_NEAR(thm35_bound(0.25), 1.25, 1e-15);
  EXPECT_NEAR(thm35_bound(0.5), 1.0 / 6.0, 1e-15);
  EXPECT_EQ(lemma36_constant(2), 1.0);
  EXPECT_NEAR(lemma36_constant(3), 1.299038105676658, 1e-15);
  EXPECT_NEAR(lemma38_threshold(), 0.2018, 1e-4);
}

TEST_F(InequalitiesTest, RefinedBoundIsBelowUniformBounds) {
  for (int i = 0; i <= 50; ++i) {
    const double a = 0.5 * i / 50.0;
    for (int k = 0; k <= 20; ++k) {
      const double M = 2.0 * (1.0 - a) * k / 20.0;
      EXPECT_LE(cor33_bound(a, M), thm33_bound(a) + 1e-14);
    }
    for (int n = 1; n <= 4; ++n) EXPECT_LE(thm33_bound(a), thm34_bound(a, n));
  }
}

TEST_F(InequalitiesTest, ExtremalCoefficientsMeetTheFourthOrderFormula) {
  // a_4 of the starlike extremal equals (1-a)(3-4a)(4-6a)/3 for every order, inside or outside the proven range.
  for (double a : {0.0, 0.1, 0.2, 0.25, 0.5}) {
    const auto c = UnivariateMap{Kind::AlmostStarlikeExtremal, a}.taylor();
    EXPECT_NEAR(c[4], thm35_bound(a), 1e-14) << a;
    EXPECT_NEAR(c[3], thm33_bound(a), 1e-14) << a;
  }
}

// --- Schwarz / Caratheodory -------------------------------------------------

TEST_F(InequalitiesTest, SchwarzToCaratheodoryMatchesSeriesOracle) {
  const BlaschkeData omega{{0.0, 0.5}, 1.0};
  for (double a : {0.0, 0.3, 0.5, 0.8}) {
    const auto p = schwarz_to_caratheodory(omega, a);
    const auto oracle = cauchy_coeffs([&](cplx z) {
      const cplx w = blaschke_value(omega, z);
      return (1.0 - (1.0 - 2.0 * a) * w) / (1.0 + w);
    });
    for (int k = 0; k < 4; ++k)
      EXPECT_NEAR(std::abs(p.b[static_cast<std::size_t>(k)] - oracle[static_cast<std::size_t>(k)]), 0.0, 1e-12);
  }
}

TEST_F(InequalitiesTest, SchwarzSpecExamples) {
  const auto p = schwarz_to_caratheodory({{0.0}, 1.0}, 0.0);
  EXPECT_NEAR(std::abs(p.b[1] + 2.0), 0.0, 1e-15);
  const auto q = schwarz_to_caratheodory({{0.0, 0.0}, 1.0}, 0.5);
  EXPECT_NEAR(std::abs(q.b[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q.b[2] + 1.0), 0.0, 1e-15);
}

TEST_F(InequalitiesTest, CaratheodoryRoundTripRecoversSchwarzCoefficients) {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 200; ++rep) {
    const auto omega = random_schwarz(rng);
    ASSERT_GE(omega.zeros.size(), 1u);
    ASSERT_LE(omega.zeros.size(), 6u);
    EXPECT_EQ(omega.zeros[0], cplx(0.0));
    for (cplx z : omega.zeros) EXPECT_LT(std::abs(z), 0.9);
    const auto p = schwarz_to_caratheodory(omega, 0.3);
    const auto h = caratheodory_to_schwarz(p);
    const auto w = cauchy_coeffs([&](cplx z) { return blaschke_value(omega, z); });
    for (int k = 0; k < 4; ++k)
      EXPECT_NEAR(std::abs(h[static_cast<std::size_t>(k)] - w[static_cast<std::size_t>(k)]), 0.0, 1e-12);
  }
}

TEST_F(InequalitiesTest, SchwarzValidation) {
  EXPECT_THROW(schwarz_to_caratheodory({{0.5}, 1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(schwarz_to_caratheodory({{}, 1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(schwarz_to_caratheodory({{0.0, 1.0}, 1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(schwarz_to_caratheodory({{0.0}, 2.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(schwarz_to_caratheodory({std::vector<cplx>(7, 0.0), 1.0}, 0.0), std::invalid_argument);
  EXPECT_THROW(schwarz_to_caratheodory({{0.0}, 1.0}, 1.0), std::invalid_argument);
}

TEST_F(InequalitiesTest, RandomDiskSelfMapStaysInTheDisk) {
  std::mt19937_64 rng(72);
  for (int rep = 0; rep < 50; ++rep) {
    const UniSeries f = random_disk_self_map(rng, 6);
    EXPECT_LT(std::abs(f[0]), 1.0);
    EXPECT_TRUE(verify_lemma21(f).verdict == Verdict::Pass);
  }
}

// --- one-variable lemmas ----------------------------------------------------

TEST_F(InequalitiesTest, Lemma21SpecExamples) {
  const auto id = verify_lemma21(UniSeries::z(4));
  EXPECT_EQ(id.left, 1.0);
  EXPECT_EQ(id.bound, 1.0);
  EXPECT_EQ(id.verdict, Verdict::Pass);

  const auto c = verify_lemma21(UniSeries::constant(4, 0.6));
  EXPECT_EQ(c.left, 0.0);
  EXPECT_NEAR(c.bound, 0.64, 1e-15);

  const auto m = verify_lemma21(blaschke_factor(4, -0.5));
  EXPECT_NEAR(m.left, 0.75, 1e-15);
  EXPECT_NEAR(m.bound, 0.75, 1e-15);
  EXPECT_NEAR(m.chain[1].left, 0.375, 1e-15);
  EXPECT_EQ(m.verdict, Verdict::Pass);

  const auto bad = verify_lemma21(UniSeries(2, {0.0, 2.0}));
  EXPECT_EQ(bad.verdict, Verdict::Fail);
}

TEST_F(InequalitiesTest, Lemma22EqualityAndSpecCases) {
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    for (double th : {0.0, 1.0, 2.5}) {
      const auto r = verify_lemma22(schwarz_to_caratheodory({{0.0}, std::polar(1.0, th)}, a));
      EXPECT_EQ(r.verdict, Verdict::Pass);
      EXPECT_NEAR(r.chain[0].margin, 0.0, 1e-10);
      EXPECT_NEAR(r.chain[1].margin, 0.0, 1e-10);
    }
  }
  const auto koebe = verify_lemma22(schwarz_to_caratheodory({{0.0}, -1.0}, 0.0));
  EXPECT_NEAR(koebe.chain[0].left, 0.0, 1e-14);
  const auto half = verify_lemma22(schwarz_to_caratheodory({{0.0, 0.0}, 1.0}, 0.5));
  EXPECT_NEAR(half.chain[2].left, 1.0, 1e-15);
  EXPECT_NEAR(half.chain[2].margin, 0.0, 1e-15);
}

TEST_F(InequalitiesTest, Lemma22HoldsForRandomSchwarzFunctions) {
  std::mt19937_64 rng(73);
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    for (int rep = 0; rep < 500; ++rep) {
      const auto r = verify_lemma22(schwarz_to_caratheodory(random_schwarz(rng), a));
      for (const auto& c : r.chain) EXPECT_GE(c.margin, -1e-10) << c.name;
    }
  }
}

TEST_F(InequalitiesTest, Lemma38) {
  EXPECT_NEAR(lemma38_eval(0.0, 2.0), 12.0, 1e-14);
  EXPECT_THROW(lemma38_eval(0.3, 1.0), std::domain_error);
  EXPECT_THROW(lemma38_eval(0.0, 2.5), std::domain_error);
  for (int i = 0; i < 50; ++i) {
    const double a = lemma38_threshold() * i / 49.0;
    const auto an = lemma38_analyze(a);
    EXPECT_TRUE(an.monotone) << a;
    EXPECT_NEAR(an.max_value, an.product_form, 1e-12) << a;
    EXPECT_NEAR(an.product_form, 3.0 * thm35_bound(a), 1e-12);
  }
  // derivative matches a central difference
  const double a = 0.1, x = 0.7, h = 1e-5;
  EXPECT_NEAR(lemma38_derivative(a, x), (lemma38_eval(a, x + h) - lemma38_eval(a, x - h)) / (2 * h), 1e-8);
  EXPECT_EQ(verify_lemma38(0.3).verdict, Verdict::Skipped);
  EXPECT_EQ(verify_lemma38(0.0).verdict, Verdict::Pass);
}

TEST_F(InequalitiesTest, MixedSquareMatchesPolarization) {
  std::mt19937_64 rng(74);
  for (int n = 1; n <= 4; ++n) {
    const auto p = test::random_poly(n, 2, rng);
    const auto m = mixed_square(p);
    for (int rep = 0; rep < 5; ++rep) {
      const CVec x = test::random_point(rng, n);
      const std::vector<CVec> args{x, p(x)};
      EXPECT_LT(test::vec_distance(m(x), polarize(p, args)), 1e-13);
    }
  }
  EXPECT_THROW(mixed_square(HomogeneousPoly(2, 3)), std::invalid_argument);
}

// --- theorem verifiers ------------------------------------------------------

TEST_F(InequalitiesTest, Thm21AndThm22SpecExamples) {
  const auto a = verify_thm21(MappingFamily::quasi_convex_extremal(0.0, {1.0}), 0.0);
  EXPECT_NEAR(a.left, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(a.verdict, Verdict::Pass);
  EXPECT_TRUE(a.sharp);
  EXPECT_NEAR(verify_thm21(MappingFamily::identity(2), 0.0).left, 0.0, 1e-15);
  const auto b = verify_thm21(MappingFamily::quasi_convex_extremal(0.4, {1.0, 0.0}), 0.4);
  EXPECT_NEAR(b.left, 0.2, 1e-9);
  EXPECT_NEAR(*b.sharp_gap, 0.0, 1e-12);

  const auto log = verify_thm22(MappingFamily::quasi_convex_extremal(0.5, {1.0}), 0.5);
  EXPECT_NEAR(log.left, 1.0 / 6.0, 1e-12);
  EXPECT_TRUE(log.sharp);
  const auto e = verify_thm22(MappingFamily::quasi_convex_extremal(0.0, {1.0}), 0.0);
  EXPECT_NEAR(e.left, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(verify_thm22(MappingFamily::identity(2), 0.3).left, 0.0, 1e-15);
}

TEST_F(InequalitiesTest, Thm23AttainsEqualityAndReducesToCorF) {
  for (double a : {0.0, 0.25, 0.5, 0.75}) {
    const auto r = verify_thm23(MappingFamily::almost_starlike_extremal(a, {1.0, 0.0}), a);
    EXPECT_EQ(r.verdict, Verdict::Pass) << a;
    EXPECT_NEAR(*r.sharp_gap, 0.0, 1e-12) << a;
  }
  const auto one = verify_thm23(MappingFamily::almost_starlike_extremal(0.0, {1.0}), 0.0);
  EXPECT_NEAR(one.left, 2.0, 1e-12);
  EXPECT_NEAR(verify_thm23(MappingFamily::identity(1), 0.0).left, 0.0, 1e-15);
}

TEST_F(InequalitiesTest, OneVariableCorollaries) {
  const auto e = verify_corE(MappingFamily::diagonal_quasi_convex(1, 0.0));
  EXPECT_NEAR(e.left, 1.0 / 3.0, 1e-10);
  EXPECT_EQ(e.verdict, Verdict::Pass);
  const auto f = verify_corF(MappingFamily::diagonal_almost_starlike(1, 0.0));
  EXPECT_NEAR(f.left, 2.0, 1e-10);
  EXPECT_EQ(f.verdict, Verdict::Pass);
  EXPECT_THROW(verify_corE(MappingFamily::identity(2)), std::invalid_argument);
}

TEST_F(InequalitiesTest, Thm31And32SpecExamples) {
  const auto a = verify_thm31(MappingFamily::diagonal_quasi_convex(2, 0.0), 0.0);
  EXPECT_NEAR(a.left, 1.0, 1e-9);
  EXPECT_TRUE(a.sharp);
  const auto b = verify_thm31(MappingFamily::diagonal_quasi_convex(2, 0.25), 0.25);
  EXPECT_NEAR(b.left, 0.625, 1e-9);
  const auto c = verify_thm31(MappingFamily::diagonal_quasi_convex(3, 0.0), 0.0);
  EXPECT_NEAR(c.bound, 1.19935874, 1e-8);
  EXPECT_EQ(c.verdict, Verdict::Pass);
  for (const auto& ch : a.chain) EXPECT_TRUE(ch.pass) << ch.name;

  EXPECT_NEAR(verify_thm32(MappingFamily::diagonal_quasi_convex(3, 0.5), 0.5).left, 1.0 / 3.0, 1e-9);
  EXPECT_NEAR(verify_thm32(MappingFamily::diagonal_quasi_convex(3, 0.0), 0.0).left, 1.0, 1e-9);
  EXPECT_NEAR(verify_thm32(MappingFamily::identity(2), 0.0).left, 0.0, 1e-15);
}

TEST_F(InequalitiesTest, Thm33And34SpecExamples) {
  const auto k = verify_thm33(MappingFamily::diagonal_almost_starlike(2, 0.0), 0.0);
  EXPECT_NEAR(k.left, 3.0, 1e-9);
  EXPECT_NEAR(k.chain[0].left, 2.0, 1e-15);  // M
  EXPECT_NEAR(k.bound, 3.0, 1e-15);
  EXPECT_NEAR(verify_thm33(MappingFamily::diagonal_almost_starlike(3, 0.25), 0.25).left, 1.5, 1e-9);
  EXPECT_NEAR(verify_thm33(MappingFamily::diagonal_almost_starlike(1, 0.5), 0.5).bound, 0.5, 1e-15);
  EXPECT_EQ(verify_thm33(MappingFamily::diagonal_almost_starlike(1, 0.75), 0.75).verdict, Verdict::Skipped);

  const auto t2 = verify_thm34(MappingFamily::diagonal_almost_starlike(2, 0.0), 0.0);
  EXPECT_NEAR(t2.bound, 5.0, 1e-15);
  EXPECT_NEAR(t2.left, 3.0, 1e-9);
  EXPECT_NEAR(t2.margin, 2.0, 1e-9);
  EXPECT_NEAR(verify_thm34(MappingFamily::diagonal_almost_starlike(3, 0.0), 0.0).bound, 6.196152422706632, 1e-12);
}

TEST_F(InequalitiesTest, BoundChainOnReportValues) {
  for (double a : {0.0, 0.1, 0.25, 0.4, 0.5}) {
    for (int n = 1; n <= 3; ++n) {
      const auto fam = MappingFamily::diagonal_almost_starlike(n, a);
      const auto r33 = verify_thm33(fam, a);
      const auto r34 = verify_thm34(fam, a);
      EXPECT_LE(r33.bound, thm33_bound(a) + 1e-12);
      EXPECT_LE(thm33_bound(a), r34.bound);
      EXPECT_LE(r33.left, r33.bound + 1e-9);
    }
  }
}

TEST_F(InequalitiesTest, Thm35SpecExamples) {
  const auto k = verify_thm35(MappingFamily::diagonal_almost_starlike(2, 0.0), 0.0);
  EXPECT_NEAR(k.left, 4.0, 1e-9);
  EXPECT_EQ(k.verdict, Verdict::Pass);
  for (const auto& ch : k.chain) EXPECT_TRUE(ch.pass) << ch.name << " " << ch.margin;
  const auto t = verify_thm35(MappingFamily::diagonal_almost_starlike(1, 0.2), 0.2);
  EXPECT_NEAR(t.left, 1.6426666666666667, 1e-9);
  EXPECT_EQ(verify_thm35(MappingFamily::diagonal_almost_starlike(1, 0.25), 0.25).verdict, Verdict::Skipped);
}

TEST_F(InequalitiesTest, Thm35PointwiseChainHoldsOffTheExtremal) {
  // Mixed diagonal of members with different orders.
  const auto fam = MappingFamily::diagonal({{Kind::AlmostStarlikeExtremal, 0.15}, {Kind::AlmostStarlikeExtremal, 0.05}});
  const auto r = verify_thm35(fam, 0.05);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_FALSE(r.sharp_gap.has_value());
  for (const auto& ch : r.chain) EXPECT_TRUE(ch.pass) << ch.name << " " << ch.margin;
}

TEST_F(InequalitiesTest, SerialAndParallelReportsAgree) {
  VerifyConfig par, ser;
  ser.norm.exec = Execution::Serial;
  const auto fam = MappingFamily::diagonal_almost_starlike(3, 0.1);
  const auto a = verify_thm34(fam, 0.1, par), b = verify_thm34(fam, 0.1, ser);
  EXPECT_EQ(a.left, b.left);
  ASSERT_EQ(a.chain.size(), b.chain.size());
  for (std::size_t i = 0; i < a.chain.size(); ++i) EXPECT_EQ(a.chain[i].left, b.chain[i].left);
  const auto c = verify_thm35(fam, 0.1, par), d = verify_thm35(fam, 0.1, ser);
  for (std::size_t i = 0; i < c.chain.size(); ++i) EXPECT_EQ(c.chain[i].margin, d.chain[i].margin);
}

// --- hypotheses -------------------------------------------------------------

VectorJet jet_with(int n, std::vector<std::tuple<int, std::vector<int>, cplx>> extra) {
  VectorJet base = VectorJet::identity(n);
  std::vector<ScalarSeries> f(base.components().begin(), base.components().end());
  for (auto& [p, e, c] : extra) f[static_cast<std::size_t>(p)].set(mi(e), c);
  return VectorJet(std::move(f));
}

TEST_F(InequalitiesTest, UncertifiedJetRunsThePrecheck) {
  const auto bad = MappingFamily::user(jet_with(1, {{0, {2}, 3.0}}));
  const auto r = verify_thm21(bad, 0.0);
  EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_EQ(r.certificate->verdict, CertVerdict::Fail);

  const auto mild = MappingFamily::user(jet_with(2, {{0, {1, 1}, 0.05}}));
  const auto ok = verify_thm31(mild, 0.0);
  ASSERT_TRUE(ok.certificate.has_value());
  EXPECT_TRUE(ok.certificate->truncated);
  EXPECT_EQ(ok.verdict, Verdict::Pass);

  // certified families skip the pre-check
  EXPECT_FALSE(verify_thm31(MappingFamily::diagonal_quasi_convex(2, 0.3), 0.2).certificate.has_value());
}

TEST_F(InequalitiesTest, StructuralHypotheses) {
  const auto offdiag = MappingFamily::user(jet_with(2, {{0, {0, 2}, 0.01}}));
  EXPECT_EQ(verify_thm32(offdiag, 0.0).verdict, Verdict::HypothesisFailed);
  EXPECT_EQ(verify_thm33(offdiag, 0.0).verdict, Verdict::HypothesisFailed);
  EXPECT_EQ(verify_thm35(offdiag, 0.0).verdict, Verdict::HypothesisFailed);
  // A T_u extremal has a structured but non-diagonal quadratic block.
  const auto tu = MappingFamily::almost_starlike_extremal(0.0, {1.0, 1.0});
  EXPECT_EQ(verify_thm33(tu, 0.0).verdict, Verdict::Pass);
  EXPECT_EQ(verify_thm35(tu, 0.0).verdict, Verdict::HypothesisFailed);
}

TEST_F(InequalitiesTest, WrongOrderFailsThePrecheckOrTheBound) {
  // The order-0 Koebe diagonal is not almost starlike of order 0.25.
  const auto r = verify_thm33(MappingFamily::diagonal_almost_starlike(2, 0.0), 0.25);
  EXPECT_EQ(r.verdict, Verdict::HypothesisFailed);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_FALSE(r.certificate->worst_point.empty());
}

}  // namespace
}  // namespace hexp
