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

#pragma once

#include <span>
#include <vector>

#include "hexp/homogeneous.hpp"
#include "hexp/monomial.hpp"

namespace hexp {

/// Power series in n complex variables truncated at total degree kOrder.
/// Dense storage indexed by MonomialTable position; absent monomials are zero.
class ScalarSeries {
 public:
  explicit ScalarSeries(int n);

  static ScalarSeries constant(int n, cplx c);
  /// z_k, with k zero-based.
  static ScalarSeries variable(int n, int k);

  int dimension() const { return n_; }
  cplx coeff(const MultiIndex& m) const;
  cplx coeff_at(std::size_t pos) const { return c_[pos]; }
  void set(const MultiIndex& m, cplx c);
  void set_at(std::size_t pos, cplx c) { c_[pos] = c; }
  std::span<const cplx> coefficients() const { return c_; }

  ScalarSeries homogeneous_part(int d) const;
  ScalarSeries derivative(int var) const;
  cplx evaluate(std::span<const cplx> z) const;
  bool is_zero() const;
  double max_abs() const;

  ScalarSeries& operator+=(const ScalarSeries& o);
  ScalarSeries& operator-=(const ScalarSeries& o);
  ScalarSeries& operator*=(cplx s);
  friend ScalarSeries operator+(ScalarSeries a, const ScalarSeries& b) { return a += b; }
  friend ScalarSeries operator-(ScalarSeries a, const ScalarSeries& b) { return a -= b; }
  friend ScalarSeries operator-(ScalarSeries a) { return a *= -1.0; }
  friend ScalarSeries operator*(cplx s, ScalarSeries a) { return a *= s; }
  /// Cauchy product truncated at kOrder.
  friend ScalarSeries operator*(const ScalarSeries& a, const ScalarSeries& b);
  friend bool operator==(const ScalarSeries&, const ScalarSeries&) = default;

 private:
  void check_compatible(const ScalarSeries& o) const;

  int n_;
  CVec c_;
};

ScalarSeries series_add(const ScalarSeries& a, const ScalarSeries& b);
ScalarSeries series_mul(const ScalarSeries& a, const ScalarSeries& b);

/// Degree-<=4 jet of a mapping C^n -> C^n at the origin.
class VectorJet {
 public:
  explicit VectorJet(std::vector<ScalarSeries> components);

  static VectorJet identity(int n);
  static VectorJet zero(int n);
  /// Embeds a homogeneous block as a jet.
  static VectorJet from_homogeneous(const HomogeneousPoly& p);

  int dimension() const { return static_cast<int>(f_.size()); }
  const ScalarSeries& operator[](int p) const { return f_[static_cast<std::size_t>(p)]; }
  std::span<const ScalarSeries> components() const { return f_; }
  /// f(0) = 0 and Df(0) = I (to 1e-14).
  bool normalized() const { return normalized_; }

  VectorJet homogeneous_part(int d) const;
  CVec evaluate(std::span<const cplx> z) const;
  double max_abs() const;

  friend VectorJet operator+(const VectorJet& a, const VectorJet& b);
  friend VectorJet operator-(const VectorJet& a, const VectorJet& b);
  friend VectorJet operator*(cplx s, const VectorJet& a);
  friend bool operator==(const VectorJet& a, const VectorJet& b) { return a.f_ == b.f_; }

 private:
  std::vector<ScalarSeries> f_;
  bool normalized_ = false;
};

/// n x n matrix of truncated series (row-major).
class MatrixSeries {
 public:
  explicit MatrixSeries(int n);
  static MatrixSeries identity(int n);

  int dimension() const { return n_; }
  const ScalarSeries& operator()(int p, int k) const { return m_[idx(p, k)]; }
  ScalarSeries& operator()(int p, int k) { return m_[idx(p, k)]; }

  MatrixSeries homogeneous_part(int d) const;
  /// Row-major constant-term matrix.
  CVec constant_term() const;
  double max_abs() const;

  friend MatrixSeries operator+(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator-(const MatrixSeries& a, const MatrixSeries& b);
  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);
  friend VectorJet operator*(const MatrixSeries& a, const VectorJet& v);
  friend bool operator==(const MatrixSeries&, const MatrixSeries&) = default;

 private:
  std::size_t idx(int p, int k) const { return static_cast<std::size_t>(p * n_ + k); }
  int n_;
  std::vector<ScalarSeries> m_;
};

/// Df(z) = (d f_p / d z_k); entries have degree <= kOrder - 1.
MatrixSeries jacobian(const VectorJet& jet);

/// Inverse series via B_0 = A_0^{-1}, B_k = -A_0^{-1} sum_{j=1..k} A_j B_{k-j}.
/// Throws std::domain_error if the constant term is singular.
MatrixSeries matrix_series_inverse(const MatrixSeries& m);

/// The degree-m block D^m f(0)(z^m)/m!, 1 <= m <= kOrder.
HomogeneousPoly extract_homogeneous(const VectorJet& jet, int m);

/// D^m f(0)(z^m)/m! evaluated at z.
CVec apply_to_diagonal(const VectorJet& jet, int m, std::span<const cplx> z);

}  // namespace hexp
