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

#include "hexp/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexp {

HomogeneousPoly::HomogeneousPoly(int n, int degree) : n_(n), m_(degree) {
  if (degree < 1 || degree > kOrder) throw std::invalid_argument("HomogeneousPoly: degree out of range");
  const auto& table = MonomialTable::get(n);
  first_ = table.degree_begin(degree);
  terms_ = table.degree_end(degree) - first_;
  coeffs_.assign(static_cast<std::size_t>(n) * terms_, cplx{});
}

const MultiIndex& HomogeneousPoly::monomial(std::size_t t) const {
  return MonomialTable::get(n_).monomial(first_ + t);
}

cplx HomogeneousPoly::coeff(int p, const MultiIndex& m) const {
  if (m.degree() != m_) return {};
  return coeffs_[index(p, MonomialTable::get(n_).position(m) - first_)];
}

void HomogeneousPoly::set(int p, const MultiIndex& m, cplx c) {
  if (p < 0 || p >= n_) throw std::invalid_argument("HomogeneousPoly: component out of range");
  if (m.degree() != m_) throw std::invalid_argument("HomogeneousPoly: monomial degree differs from polynomial degree");
  coeffs_[index(p, MonomialTable::get(n_).position(m) - first_)] = c;
}

CVec HomogeneousPoly::operator()(std::span<const cplx> z) const {
  PolyEvaluator ev(*this);
  return ev(z);
}

bool HomogeneousPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
}

double HomogeneousPoly::max_coeff_abs() const {
  double r = 0.0;
  for (cplx c : coeffs_) r = std::max(r, std::abs(c));
  return r;
}

void HomogeneousPoly::check_compatible(const HomogeneousPoly& o) const {
  if (n_ != o.n_ || m_ != o.m_) throw std::invalid_argument("HomogeneousPoly: dimension or degree mismatch");
}

HomogeneousPoly& HomogeneousPoly::operator+=(const HomogeneousPoly& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator-=(const HomogeneousPoly& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

HomogeneousPoly& HomogeneousPoly::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

PolyEvaluator::PolyEvaluator(const HomogeneousPoly& p) : p_(&p) {
  const int n = p.dimension();
  exps_.reserve(p.term_count() * static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < p.term_count(); ++t)
    for (int k = 0; k < n; ++k) exps_.push_back(p.monomial(t)[k]);
  powers_.resize(static_cast<std::size_t>(n * (p.degree() + 1)));
  monos_.resize(p.term_count());
  out_.resize(static_cast<std::size_t>(n));
}

const CVec& PolyEvaluator::operator()(std::span<const cplx> z) {
  const int n = p_->dimension();
  const int m = p_->degree();
  if (static_cast<int>(z.size()) != n) throw std::invalid_argument("PolyEvaluator: point dimension mismatch");
  for (int k = 0; k < n; ++k) {
    cplx* row = &powers_[static_cast<std::size_t>(k * (m + 1))];
    row[0] = 1.0;
    for (int e = 1; e <= m; ++e) row[e] = row[e - 1] * z[static_cast<std::size_t>(k)];
  }
  const std::size_t terms = p_->term_count();
  for (std::size_t t = 0; t < terms; ++t) {
    cplx v = 1.0;
    const int* e = &exps_[t * static_cast<std::size_t>(n)];
    for (int k = 0; k < n; ++k)
      if (e[k]) v *= powers_[static_cast<std::size_t>(k * (m + 1) + e[k])];
    monos_[t] = v;
  }
  for (int p = 0; p < n; ++p) {
    cplx acc{};
    for (std::size_t t = 0; t < terms; ++t) acc += p_->coeff(p, t) * monos_[t];
    out_[static_cast<std::size_t>(p)] = acc;
  }
  return out_;
}

double PolyEvaluator::norm_at(std::span<const cplx> z) {
  const CVec& v = (*this)(z);
  double r = 0.0;
  for (cplx c : v) r = std::max(r, std::abs(c));
  return r;
}

}  // namespace hexp
