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

#include "hexp/univariate.hpp"

#include <stdexcept>

namespace hexp {

UniSeries::UniSeries(int order, CVec coeffs) : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw std::invalid_argument("UniSeries: negative order");
  c_.resize(static_cast<std::size_t>(order + 1));
}

cplx UniSeries::evaluate(cplx z) const {
  cplx acc{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

UniSeries UniSeries::reciprocal() const {
  if (c_[0] == cplx{}) throw std::domain_error("UniSeries: reciprocal of a series vanishing at 0");
  CVec r(c_.size());
  r[0] = 1.0 / c_[0];
  for (std::size_t k = 1; k < c_.size(); ++k) {
    cplx s{};
    for (std::size_t j = 1; j <= k; ++j) s += c_[j] * r[k - j];
    r[k] = -s / c_[0];
  }
  return UniSeries(order_, std::move(r));
}

UniSeries operator+(const UniSeries& a, const UniSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("UniSeries: order mismatch");
  CVec r(a.c_);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b.c_[k];
  return UniSeries(a.order_, std::move(r));
}

UniSeries operator-(const UniSeries& a, const UniSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("UniSeries: order mismatch");
  CVec r(a.c_);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b.c_[k];
  return UniSeries(a.order_, std::move(r));
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("UniSeries: order mismatch");
  CVec r(a.c_.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return UniSeries(a.order_, std::move(r));
}

UniSeries operator*(cplx s, const UniSeries& a) {
  CVec r(a.c_);
  for (auto& c : r) c *= s;
  return UniSeries(a.order_, std::move(r));
}

UniSeries blaschke_factor(int order, cplx a) {
  if (std::abs(a) >= 1.0) throw std::invalid_argument("blaschke_factor: zero must lie in the unit disk");
  // (z - a) * sum_k (conj(a) z)^k
  CVec geo(static_cast<std::size_t>(order + 1));
  cplx p = 1.0;
  for (auto& c : geo) {
    c = p;
    p *= std::conj(a);
  }
  return UniSeries(order, {-a, 1.0}) * UniSeries(order, std::move(geo));
}

}  // namespace hexp
