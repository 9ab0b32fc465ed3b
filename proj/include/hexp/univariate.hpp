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

#include "hexp/monomial.hpp"

namespace hexp {

/// Power series in one variable truncated at a fixed order.
class UniSeries {
 public:
  explicit UniSeries(int order, CVec coeffs = {});

  static UniSeries constant(int order, cplx c) { return UniSeries(order, {c}); }
  static UniSeries z(int order) { return UniSeries(order, {0.0, 1.0}); }

  int order() const { return order_; }
  cplx operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  std::span<const cplx> coefficients() const { return c_; }
  cplx evaluate(cplx z) const;

  /// 1/s; throws std::domain_error when s(0) = 0.
  UniSeries reciprocal() const;

  friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator*(cplx s, const UniSeries& a);
  friend UniSeries operator/(const UniSeries& a, const UniSeries& b) { return a * b.reciprocal(); }

 private:
  int order_;
  CVec c_;
};

/// (z - a)/(1 - conj(a) z) expanded to the given order; |a| < 1.
UniSeries blaschke_factor(int order, cplx a);

}  // namespace hexp
