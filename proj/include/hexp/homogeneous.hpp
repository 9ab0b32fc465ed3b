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

#include "hexp/monomial.hpp"

namespace hexp {

/// Vector-valued homogeneous polynomial P : C^n -> C^n of degree m (1..kOrder).
/// Component p is sum_t coeff(p, t) z^{monomial(t)} over the degree-m monomials.
class HomogeneousPoly {
 public:
  HomogeneousPoly(int n, int degree);

  int dimension() const { return n_; }
  int degree() const { return m_; }
  std::size_t term_count() const { return terms_; }
  const MultiIndex& monomial(std::size_t t) const;

  cplx coeff(int p, std::size_t t) const { return coeffs_[index(p, t)]; }
  cplx coeff(int p, const MultiIndex& m) const;
  void set(int p, const MultiIndex& m, cplx c);
  void set_term(int p, std::size_t t, cplx c) { coeffs_[index(p, t)] = c; }

  CVec operator()(std::span<const cplx> z) const;

  bool is_zero() const;
  double max_coeff_abs() const;

  HomogeneousPoly& operator+=(const HomogeneousPoly& o);
  HomogeneousPoly& operator-=(const HomogeneousPoly& o);
  HomogeneousPoly& operator*=(cplx s);
  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
  friend HomogeneousPoly operator*(cplx s, HomogeneousPoly a) { return a *= s; }
  friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;

 private:
  std::size_t index(int p, std::size_t t) const { return static_cast<std::size_t>(p) * terms_ + t; }
  void check_compatible(const HomogeneousPoly& o) const;

  int n_;
  int m_;
  std::size_t first_;  // position of the first degree-m monomial in the MonomialTable
  std::size_t terms_;
  CVec coeffs_;
};

/// Reusable evaluation buffers for tight loops (one per thread).
class PolyEvaluator {
 public:
  explicit PolyEvaluator(const HomogeneousPoly& p);
  /// P(z); the returned reference is valid until the next call.
  const CVec& operator()(std::span<const cplx> z);
  /// max_k |P_k(z)|
  double norm_at(std::span<const cplx> z);

 private:
  const HomogeneousPoly* p_;
  std::vector<int> exps_;  // term-major exponent table
  CVec powers_;            // n x (m+1)
  CVec monos_;
  CVec out_;
};

}  // namespace hexp
