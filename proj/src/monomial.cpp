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

#include "hexp/monomial.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hexp {

MultiIndex::MultiIndex(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty() || static_cast<int>(exponents_.size()) > kMaxDim)
    throw std::invalid_argument("MultiIndex: dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("MultiIndex: negative exponent");
    degree_ += e;
  }
  if (degree_ > kOrder)
    throw std::invalid_argument("MultiIndex: degree " + std::to_string(degree_) + " exceeds truncation order");
}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

MultiIndex MultiIndex::unit(int n, int k) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(k)) = 1;
  return MultiIndex(std::move(e));
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(exponents_[k]);
  }
  return s;
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                      a.exponents().end());
}

namespace {

// Exponent tuples of total degree d in lex-descending order.
void enumerate_degree(int n, int d, std::vector<int>& cur, int k, std::vector<MultiIndex>& out) {
  if (k == n - 1) {
    cur[static_cast<std::size_t>(k)] = d;
    out.emplace_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[static_cast<std::size_t>(k)] = e;
    enumerate_degree(n, d - e, cur, k + 1, out);
  }
}

}  // namespace

MonomialTable::MonomialTable(int n) : n_(n) {
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  offsets_.push_back(0);
  for (int d = 0; d <= kOrder; ++d) {
    enumerate_degree(n, d, cur, 0, monomials_);
    offsets_.push_back(monomials_.size());
  }
  const std::size_t sz = monomials_.size();
  product_.assign(sz * sz, -1);
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      if (monomials_[i].degree() + monomials_[j].degree() > kOrder) continue;
      std::vector<int> e(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) e[static_cast<std::size_t>(k)] = monomials_[i][k] + monomials_[j][k];
      product_[i * sz + j] = static_cast<int>(position(MultiIndex(std::move(e))));
    }
  }
  derivative_.assign(sz * static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < sz; ++i) {
    for (int v = 0; v < n; ++v) {
      if (monomials_[i][v] == 0) continue;
      std::vector<int> e(monomials_[i].exponents().begin(), monomials_[i].exponents().end());
      --e[static_cast<std::size_t>(v)];
      derivative_[i * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
          static_cast<int>(position(MultiIndex(std::move(e))));
    }
  }
}

std::size_t MonomialTable::position(const MultiIndex& m) const {
  if (m.dimension() != n_) throw std::invalid_argument("MonomialTable: dimension mismatch");
  const auto first = monomials_.begin() + static_cast<std::ptrdiff_t>(degree_begin(m.degree()));
  const auto last = monomials_.begin() + static_cast<std::ptrdiff_t>(degree_end(m.degree()));
  const auto it = std::lower_bound(first, last, m, grlex_less);
  if (it == last || !(*it == m)) throw std::invalid_argument("MonomialTable: monomial not found");
  return static_cast<std::size_t>(it - monomials_.begin());
}

const MonomialTable& MonomialTable::get(int n) {
  if (n < 1 || n > kMaxDim)
    throw std::invalid_argument("dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  static std::array<std::once_flag, kMaxDim + 1> flags;
  static std::array<std::unique_ptr<MonomialTable>, kMaxDim + 1> tables;
  const auto k = static_cast<std::size_t>(n);
  std::call_once(flags[k], [&] { tables[k].reset(new MonomialTable(n)); });
  return *tables[k];
}

}  // namespace hexp
