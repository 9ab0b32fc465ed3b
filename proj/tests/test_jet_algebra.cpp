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

#include <sstream>

#include "hexp/jet_io.hpp"
#include "hexp/series.hpp"
#include "test_util.hpp"

namespace hexp {
namespace {

using test::random_series;

MultiIndex mi(std::vector<int> e) { return MultiIndex(std::move(e)); }

ScalarSeries z(int n, int k) { return ScalarSeries::variable(n, k); }
ScalarSeries one(int n) { return ScalarSeries::constant(n, 1.0); }

// Small Gaussian integers keep every product exact in double precision.
ScalarSeries integer_series(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  ScalarSeries s(n);
  for (std::size_t i = 0; i < MonomialTable::get(n).size(); ++i) s.set_at(i, cplx(d(rng), d(rng)));
  return s;
}

VectorJet random_jet_from_zero(int n, double radius, std::mt19937_64& rng) {
  std::vector<ScalarSeries> f;
  for (int p = 0; p < n; ++p) {
    ScalarSeries s = random_series(n, radius, rng);
    s.set_at(0, 0.0);
    for (int k = 0; k < n; ++k) s.set(MultiIndex::unit(n, k), p == k ? 1.0 : 0.0);
    f.push_back(s);
  }
  return VectorJet(std::move(f));
}

// --- monomials --------------------------------------------------------------

TEST(MonomialTable, SizesAreBinomial) {
  const std::size_t expect[] = {0, 5, 15, 35, 70, 126, 210, 330, 495};
  for (int n = 1; n <= kMaxDim; ++n) EXPECT_EQ(MonomialTable::get(n).size(), expect[n]) << n;
}

TEST(MonomialTable, GrlexOrderAndPositions) {
  const auto& t = MonomialTable::get(3);
  for (std::size_t i = 0; i + 1 < t.size(); ++i) EXPECT_TRUE(grlex_less(t.monomial(i), t.monomial(i + 1)));
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t.position(t.monomial(i)), i);
  EXPECT_EQ(t.monomial(1), mi({1, 0, 0}));
  EXPECT_EQ(t.monomial(t.degree_begin(2)), mi({2, 0, 0}));
  EXPECT_EQ(t.degree_end(4), t.size());
}

TEST(MonomialTable, ProductAndDerivativeTables) {
  const auto& t = MonomialTable::get(2);
  const auto a = t.position(mi({1, 1}));
  const auto b = t.position(mi({0, 2}));
  EXPECT_EQ(t.product(a, b), static_cast<int>(t.position(mi({1, 3}))));
  const auto c = t.position(mi({3, 0}));
  EXPECT_EQ(t.product(a, c), -1);
  EXPECT_EQ(t.derivative(b, 0), -1);
  EXPECT_EQ(t.derivative(b, 1), static_cast<int>(t.position(mi({0, 1}))));
}

TEST(MultiIndex, RejectsBadInput) {
  EXPECT_THROW(mi({3, 2}), std::invalid_argument);
  EXPECT_THROW(mi({-1, 0}), std::invalid_argument);
  EXPECT_THROW(mi({}), std::invalid_argument);
  EXPECT_THROW(MonomialTable::get(1).position(mi({1, 0})), std::invalid_argument);
}

// --- scalar series ----------------------------------------------------------

TEST(ScalarSeries, SpecProducts) {
  const int n = 2;
  EXPECT_EQ(z(n, 0) * z(n, 0), [&] {
    ScalarSeries s(n);
    s.set(mi({2, 0}), 1.0);
    return s;
  }());
  ScalarSeries expect = one(n);
  expect.set(mi({2, 0}), -1.0);
  EXPECT_EQ((one(n) + z(n, 0)) * (one(n) - z(n, 0)), expect);
  const ScalarSeries sq = z(n, 0) * z(n, 0);
  EXPECT_TRUE((sq * (sq * z(n, 0))).is_zero());
}

TEST(ScalarSeries, ProductMatchesSparseOracle) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = random_series(n, 1.0, rng);
      const auto b = random_series(n, 1.0, rng);
      const auto oracle = test::naive_product(test::to_sparse(a), test::to_sparse(b), kOrder);
      EXPECT_LT(test::sparse_distance(test::to_sparse(a * b), oracle), 1e-14) << "n=" << n;
    }
  }
}

TEST(ScalarSeries, ProductIsCommutativeAndAssociative) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto a = integer_series(n, rng);
      const auto b = integer_series(n, rng);
      const auto c = integer_series(n, rng);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(ScalarSeries, GeometricSeries) {
  // (1 - z1 - z2) * sum_{k<=4} (z1 + z2)^k = 1 up to truncation.
  const int n = 2;
  const ScalarSeries w = z(n, 0) + z(n, 1);
  ScalarSeries geo = one(n), pw = one(n);
  for (int k = 1; k <= kOrder; ++k) {
    pw = pw * w;
    geo += pw;
  }
  EXPECT_EQ((one(n) - w) * geo, one(n));
  // coefficient of z1^2 z2^2 in 1/(1 - z1 - z2) is C(4,2) = 6
  EXPECT_EQ(geo.coeff(mi({2, 2})), cplx(6.0));
}

TEST(ScalarSeries, EulerIdentityOnHomogeneousParts) {
  // sum_k z_k d/dz_k s = sum_d d * s_d
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    const auto s = random_series(n, 1.0, rng);
    ScalarSeries lhs(n), rhs(n);
    for (int k = 0; k < n; ++k) lhs += z(n, k) * s.derivative(k);
    for (int d = 1; d <= kOrder; ++d) rhs += static_cast<double>(d) * s.homogeneous_part(d);
    EXPECT_LT(test::series_distance(lhs, rhs), 1e-14);
  }
}

TEST(ScalarSeries, EvaluateMatchesDirectSum) {
  std::mt19937_64 rng(14);
  const int n = 3;
  const auto s = random_series(n, 1.0, rng);
  const CVec p = test::random_point(rng, n);
  cplx direct{};
  const auto& t = MonomialTable::get(n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    cplx m = 1.0;
    for (int k = 0; k < n; ++k) m *= std::pow(p[static_cast<std::size_t>(k)], t.monomial(i)[k]);
    direct += s.coeff_at(i) * m;
  }
  EXPECT_LT(std::abs(s.evaluate(p) - direct), 1e-13);
}

TEST(ScalarSeries, DimensionMismatchThrows) {
  EXPECT_THROW(one(2) + one(3), std::invalid_argument);
  EXPECT_THROW(one(2) * one(3), std::invalid_argument);
}

// --- jets and matrix series -------------------------------------------------

TEST(Jacobian, SpecExamples) {
  EXPECT_EQ(jacobian(VectorJet::identity(3)), MatrixSeries::identity(3));

  ScalarSeries f1 = z(1, 0) + z(1, 0) * z(1, 0);
  const MatrixSeries j1 = jacobian(VectorJet({f1}));
  ScalarSeries expect1 = one(1) + 2.0 * z(1, 0);
  EXPECT_EQ(j1(0, 0), expect1);

  const int n = 2;
  const VectorJet f({z(n, 0) + z(n, 0) * z(n, 1), z(n, 1)});
  const MatrixSeries j = jacobian(f);
  EXPECT_EQ(j(0, 0), one(n) + z(n, 1));
  EXPECT_EQ(j(0, 1), z(n, 0));
  EXPECT_TRUE(j(1, 0).is_zero());
  EXPECT_EQ(j(1, 1), one(n));
}

TEST(Jacobian, IsLinear) {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 4; ++n) {
    const auto a = random_jet_from_zero(n, 1.0, rng);
    const auto b = random_jet_from_zero(n, 1.0, rng);
    EXPECT_LT((jacobian(a + b) - (jacobian(a) + jacobian(b))).max_abs(), 1e-15);
  }
}

TEST(MatrixSeriesInverse, SpecExamples) {
  EXPECT_EQ(matrix_series_inverse(MatrixSeries::identity(2)), MatrixSeries::identity(2));

  MatrixSeries m(1);
  m(0, 0) = one(1) + 2.0 * z(1, 0);
  const auto inv = matrix_series_inverse(m);
  const double expect[] = {1, -2, 4, -8, 16};
  for (int k = 0; k <= kOrder; ++k) EXPECT_NEAR(std::abs(inv(0, 0).coeff(mi({k})) - expect[k]), 0.0, 1e-14) << k;

  MatrixSeries d = MatrixSeries::identity(2);
  d(0, 0) = one(2) + z(2, 0);
  const auto dinv = matrix_series_inverse(d);
  for (int k = 0; k <= kOrder; ++k) EXPECT_NEAR(std::abs(dinv(0, 0).coeff(mi({k, 0})) - std::pow(-1.0, k)), 0.0, 1e-14);
  EXPECT_EQ(dinv(1, 1), one(2));
  EXPECT_TRUE(dinv(0, 1).is_zero());
}

TEST(MatrixSeriesInverse, ProductIsIdentity) {
  std::mt19937_64 rng(22);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto jet = random_jet_from_zero(n, 1.0, rng);
      const auto m = jacobian(jet);
      const auto inv = matrix_series_inverse(m);
      EXPECT_LT((m * inv - MatrixSeries::identity(n)).max_abs(), 1e-12);
      EXPECT_LT((inv * m - MatrixSeries::identity(n)).max_abs(), 1e-12);
    }
  }
}

TEST(MatrixSeriesInverse, NonIdentityConstantTerm) {
  MatrixSeries m(2);
  m(0, 0) = ScalarSeries::constant(2, 2.0) + z(2, 1);
  m(0, 1) = ScalarSeries::constant(2, 1.0);
  m(1, 0) = z(2, 0);
  m(1, 1) = ScalarSeries::constant(2, cplx(0.0, 3.0));
  EXPECT_LT((m * matrix_series_inverse(m) - MatrixSeries::identity(2)).max_abs(), 1e-14);
}

TEST(MatrixSeriesInverse, SingularThrows) {
  MatrixSeries m(2);
  m(0, 0) = one(2);
  m(0, 1) = one(2);
  m(1, 0) = one(2);
  m(1, 1) = one(2) + z(2, 0);
  EXPECT_THROW(matrix_series_inverse(m), std::domain_error);
}

TEST(ExtractHomogeneous, SpecExamples) {
  const auto id2 = VectorJet::identity(2);
  const auto lin = extract_homogeneous(id2, 1);
  const CVec p{cplx(0.3, 0.0), cplx(0.0, 0.7)};
  EXPECT_LT(test::vec_distance(lin(p), p), 1e-16);
  EXPECT_LT(test::vec_distance(apply_to_diagonal(id2, 1, p), p), 1e-16);
  EXPECT_TRUE(extract_homogeneous(id2, 2).is_zero());
  EXPECT_EQ(apply_to_diagonal(id2, 2, p), CVec(2));

  ScalarSeries koebe(1);
  for (int k = 1; k <= kOrder; ++k) koebe.set(mi({k}), static_cast<double>(k));
  const VectorJet kj({koebe});
  const auto p3 = extract_homogeneous(kj, 3);
  EXPECT_EQ(p3.coeff(0, mi({3})), cplx(3.0));
  EXPECT_NEAR(std::abs(apply_to_diagonal(kj, 3, CVec{0.5})[0] - 0.375), 0.0, 1e-15);

  const VectorJet f({z(2, 0) + z(2, 0) * z(2, 1), z(2, 1)});
  const auto q = extract_homogeneous(f, 2);
  EXPECT_EQ(q.coeff(0, mi({1, 1})), cplx(1.0));
  EXPECT_EQ(q.coeff(0, mi({2, 0})), cplx(0.0));
  EXPECT_EQ(q.coeff(1, mi({1, 1})), cplx(0.0));
}

TEST(ExtractHomogeneous, RoundTripReproducesJet) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 4; ++n) {
    const auto jet = random_jet_from_zero(n, 1.0, rng);
    VectorJet sum = VectorJet::zero(n);
    for (int m = 1; m <= kOrder; ++m) sum = sum + VectorJet::from_homogeneous(extract_homogeneous(jet, m));
    EXPECT_EQ(sum, jet);
  }
  EXPECT_THROW(extract_homogeneous(VectorJet::identity(1), 0), std::invalid_argument);
  EXPECT_THROW(extract_homogeneous(VectorJet::identity(1), 5), std::invalid_argument);
}

TEST(VectorJet, Normalization) {
  EXPECT_TRUE(VectorJet::identity(3).normalized());
  EXPECT_FALSE(VectorJet::zero(3).normalized());
  EXPECT_FALSE(VectorJet({one(1) + z(1, 0)}).normalized());
  EXPECT_TRUE(VectorJet({z(1, 0) + 5.0 * z(1, 0) * z(1, 0)}).normalized());
}

// --- jet text format --------------------------------------------------------

TEST(JetIo, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int n = 1; n <= 4; ++n) {
    const auto jet = random_jet_from_zero(n, 0.5, rng);
    std::stringstream ss;
    write_jet(ss, jet);
    EXPECT_EQ(read_jet(ss), jet);
  }
}

TEST(JetIo, ParsesCommentsAndBlankLines) {
  std::istringstream in(
      "# f = (z1 + z1 z2, z2)\n"
      "\n"
      "1  1 0  1 0\n"
      "1  1 1  1 0   # mixed term\n"
      "2  0 1  1 0\n");
  const auto jet = read_jet(in);
  EXPECT_EQ(jet, VectorJet({z(2, 0) + z(2, 0) * z(2, 1), z(2, 1)}));
  EXPECT_TRUE(jet.normalized());
}

TEST(JetIo, RejectsMalformedInput) {
  const char* bad[] = {
      "",                        // nothing
      "1 1 0\n",                 // too few fields
      "1 1 0 1 0\n1 1 1 0\n",    // ragged
      "0 1 0 1 0\n",             // component out of range
      "3 1 0 1 0\n",             // component out of range
      "1 5 0 1 0\n",             // degree 5
      "1 3 2 1 0\n",             // degree 5
      "1 -1 0 1 0\n",            // negative exponent
      "1 1 0 x 0\n",             // not a number
      "1 1 0 1 0\n1 1 0 2 0\n",  // duplicate key
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(read_jet(in), JetParseError) << text;
  }
  EXPECT_THROW(read_jet_file("/nonexistent/jet.txt"), JetParseError);
}

}  // namespace
}  // namespace hexp
