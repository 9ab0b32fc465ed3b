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

#include "hexp/series.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexp {

ScalarSeries::ScalarSeries(int n) : n_(n), c_(MonomialTable::get(n).size()) {}

ScalarSeries ScalarSeries::constant(int n, cplx c) {
  ScalarSeries s(n);
  s.c_[0] = c;
  return s;
}

ScalarSeries ScalarSeries::variable(int n, int k) {
  ScalarSeries s(n);
  s.set(MultiIndex::unit(n, k), 1.0);
  return s;
}

cplx ScalarSeries::coeff(const MultiIndex& m) const { return c_[MonomialTable::get(n_).position(m)]; }

void ScalarSeries::set(const MultiIndex& m, cplx c) { c_[MonomialTable::get(n_).position(m)] = c; }

ScalarSeries ScalarSeries::homogeneous_part(int d) const {
  ScalarSeries r(n_);
  if (d < 0 || d > kOrder) return r;
  const auto& t = MonomialTable::get(n_);
  std::copy(c_.begin() + static_cast<std::ptrdiff_t>(t.degree_begin(d)),
            c_.begin() + static_cast<std::ptrdiff_t>(t.degree_end(d)),
            r.c_.begin() + static_cast<std::ptrdiff_t>(t.degree_begin(d)));
  return r;
}

ScalarSeries ScalarSeries::derivative(int var) const {
  if (var < 0 || var >= n_) throw std::invalid_argument("derivative: variable out of range");
  const auto& t = MonomialTable::get(n_);
  ScalarSeries r(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == cplx{}) continue;
    const int pos = t.derivative(i, var);
    if (pos < 0) continue;
    r.c_[static_cast<std::size_t>(pos)] += static_cast<double>(t.monomial(i)[var]) * c_[i];
  }
  return r;
}

cplx ScalarSeries::evaluate(std::span<const cplx> z) const {
  if (static_cast<int>(z.size()) != n_) throw std::invalid_argument("evaluate: point dimension mismatch");
  const auto& t = MonomialTable::get(n_);
  cplx acc{};
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == cplx{}) continue;
    cplx v = c_[i];
    for (int k = 0; k < n_; ++k)
      for (int e = 0; e < t.monomial(i)[k]; ++e) v *= z[static_cast<std::size_t>(k)];
    acc += v;
  }
  return acc;
}

bool ScalarSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](cplx c) { return c == cplx{}; });
}

double ScalarSeries::max_abs() const {
  double r = 0.0;
  for (cplx c : c_) r = std::max(r, std::abs(c));
  return r;
}

void ScalarSeries::check_compatible(const ScalarSeries& o) const {
  if (n_ != o.n_) throw std::invalid_argument("series dimension mismatch");
}

ScalarSeries& ScalarSeries::operator+=(const ScalarSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ScalarSeries& ScalarSeries::operator-=(const ScalarSeries& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ScalarSeries& ScalarSeries::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b) {
  a.check_compatible(b);
  const auto& t = MonomialTable::get(a.n_);
  ScalarSeries r(a.n_);
  std::vector<std::size_t> nzb;
  nzb.reserve(b.c_.size());
  for (std::size_t j = 0; j < b.c_.size(); ++j)
    if (b.c_[j] != cplx{}) nzb.push_back(j);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == cplx{}) continue;
    for (std::size_t j : nzb) {
      const int pos = t.product(i, j);
      if (pos >= 0) r.c_[static_cast<std::size_t>(pos)] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

ScalarSeries series_add(const ScalarSeries& a, const ScalarSeries& b) { return a + b; }
ScalarSeries series_mul(const ScalarSeries& a, const ScalarSeries& b) { return a * b; }

// ---------------------------------------------------------------------------

namespace {

bool check_normalized(const std::vector<ScalarSeries>& f) {
  constexpr double eps = 1e-14;
  const int n = static_cast<int>(f.size());
  for (int p = 0; p < n; ++p) {
    const auto& s = f[static_cast<std::size_t>(p)];
    if (std::abs(s.coeff_at(0)) > eps) return false;
    for (int k = 0; k < n; ++k) {
      const cplx want = (p == k) ? 1.0 : 0.0;
      if (std::abs(s.coeff(MultiIndex::unit(n, k)) - want) > eps) return false;
    }
  }
  return true;
}

}  // namespace

VectorJet::VectorJet(std::vector<ScalarSeries> components) : f_(std::move(components)) {
  const int n = static_cast<int>(f_.size());
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("VectorJet: dimension out of range");
  for (const auto& s : f_)
    if (s.dimension() != n) throw std::invalid_argument("VectorJet: component dimension differs from jet dimension");
  normalized_ = check_normalized(f_);
}

VectorJet VectorJet::identity(int n) {
  std::vector<ScalarSeries> f;
  for (int k = 0; k < n; ++k) f.push_back(ScalarSeries::variable(n, k));
  return VectorJet(std::move(f));
}

VectorJet VectorJet::zero(int n) { return VectorJet(std::vector<ScalarSeries>(static_cast<std::size_t>(n), ScalarSeries(n))); }

VectorJet VectorJet::from_homogeneous(const HomogeneousPoly& p) {
  const int n = p.dimension();
  std::vector<ScalarSeries> f(static_cast<std::size_t>(n), ScalarSeries(n));
  for (int c = 0; c < n; ++c)
    for (std::size_t t = 0; t < p.term_count(); ++t) f[static_cast<std::size_t>(c)].set(p.monomial(t), p.coeff(c, t));
  return VectorJet(std::move(f));
}

VectorJet VectorJet::homogeneous_part(int d) const {
  std::vector<ScalarSeries> f;
  for (const auto& s : f_) f.push_back(s.homogeneous_part(d));
  return VectorJet(std::move(f));
}

CVec VectorJet::evaluate(std::span<const cplx> z) const {
  CVec r;
  for (const auto& s : f_) r.push_back(s.evaluate(z));
  return r;
}

double VectorJet::max_abs() const {
  double r = 0.0;
  for (const auto& s : f_) r = std::max(r, s.max_abs());
  return r;
}

VectorJet operator+(const VectorJet& a, const VectorJet& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("jet dimension mismatch");
  std::vector<ScalarSeries> f;
  for (int p = 0; p < a.dimension(); ++p) f.push_back(a[p] + b[p]);
  return VectorJet(std::move(f));
}

VectorJet operator-(const VectorJet& a, const VectorJet& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("jet dimension mismatch");
  std::vector<ScalarSeries> f;
  for (int p = 0; p < a.dimension(); ++p) f.push_back(a[p] - b[p]);
  return VectorJet(std::move(f));
}

VectorJet operator*(cplx s, const VectorJet& a) {
  std::vector<ScalarSeries> f;
  for (int p = 0; p < a.dimension(); ++p) f.push_back(s * a[p]);
  return VectorJet(std::move(f));
}

// ---------------------------------------------------------------------------

MatrixSeries::MatrixSeries(int n) : n_(n), m_(static_cast<std::size_t>(n * n), ScalarSeries(n)) {}

MatrixSeries MatrixSeries::identity(int n) {
  MatrixSeries r(n);
  for (int k = 0; k < n; ++k) r(k, k) = ScalarSeries::constant(n, 1.0);
  return r;
}

MatrixSeries MatrixSeries::homogeneous_part(int d) const {
  MatrixSeries r(n_);
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = m_[i].homogeneous_part(d);
  return r;
}

CVec MatrixSeries::constant_term() const {
  CVec r;
  for (const auto& s : m_) r.push_back(s.coeff_at(0));
  return r;
}

double MatrixSeries::max_abs() const {
  double r = 0.0;
  for (const auto& s : m_) r = std::max(r, s.max_abs());
  return r;
}

MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix series dimension mismatch");
  MatrixSeries r(a.n_);
  for (std::size_t i = 0; i < a.m_.size(); ++i) r.m_[i] = a.m_[i] + b.m_[i];
  return r;
}

MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix series dimension mismatch");
  MatrixSeries r(a.n_);
  for (std::size_t i = 0; i < a.m_.size(); ++i) r.m_[i] = a.m_[i] - b.m_[i];
  return r;
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix series dimension mismatch");
  const int n = a.n_;
  MatrixSeries r(n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) {
      ScalarSeries acc(n);
      for (int j = 0; j < n; ++j) {
        if (a(p, j).is_zero() || b(j, k).is_zero()) continue;
        acc += a(p, j) * b(j, k);
      }
      r(p, k) = std::move(acc);
    }
  return r;
}

VectorJet operator*(const MatrixSeries& a, const VectorJet& v) {
  if (a.n_ != v.dimension()) throw std::invalid_argument("matrix/jet dimension mismatch");
  const int n = a.n_;
  std::vector<ScalarSeries> f;
  for (int p = 0; p < n; ++p) {
    ScalarSeries acc(n);
    for (int k = 0; k < n; ++k) {
      if (a(p, k).is_zero()) continue;
      acc += a(p, k) * v[k];
    }
    f.push_back(std::move(acc));
  }
  return VectorJet(std::move(f));
}

// ---------------------------------------------------------------------------

MatrixSeries jacobian(const VectorJet& jet) {
  const int n = jet.dimension();
  MatrixSeries r(n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) r(p, k) = jet[p].derivative(k);
  return r;
}

MatrixSeries matrix_series_inverse(const MatrixSeries& m) {
  const int n = m.dimension();
  const CVec a0 = m.constant_term();
  Eigen::MatrixXcd a0m(n, n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) a0m(p, k) = a0[static_cast<std::size_t>(p * n + k)];
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a0m);
  if (!lu.isInvertible()) throw std::domain_error("matrix_series_inverse: singular constant term");
  const Eigen::MatrixXcd inv = lu.inverse();

  MatrixSeries a0inv(n);
  for (int p = 0; p < n; ++p)
    for (int k = 0; k < n; ++k) a0inv(p, k) = ScalarSeries::constant(n, inv(p, k));

  std::vector<MatrixSeries> a;  // homogeneous parts A_0 .. A_kOrder
  std::vector<MatrixSeries> b;
  for (int d = 0; d <= kOrder; ++d) a.push_back(m.homogeneous_part(d));
  b.push_back(a0inv);
  for (int k = 1; k <= kOrder; ++k) {
    MatrixSeries acc(n);
    for (int j = 1; j <= k; ++j) acc = acc + a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    b.push_back(MatrixSeries(n) - a0inv * acc);
  }
  MatrixSeries r(n);
  for (const auto& bk : b) r = r + bk;
  return r;
}

HomogeneousPoly extract_homogeneous(const VectorJet& jet, int m) {
  if (m < 1 || m > kOrder) throw std::invalid_argument("extract_homogeneous: degree out of range");
  const int n = jet.dimension();
  const auto& t = MonomialTable::get(n);
  HomogeneousPoly p(n, m);
  const std::size_t first = t.degree_begin(m);
  for (int c = 0; c < n; ++c)
    for (std::size_t i = first; i < t.degree_end(m); ++i) p.set_term(c, i - first, jet[c].coeff_at(i));
  return p;
}

CVec apply_to_diagonal(const VectorJet& jet, int m, std::span<const cplx> z) {
  return extract_homogeneous(jet, m)(z);
}

}  // namespace hexp
