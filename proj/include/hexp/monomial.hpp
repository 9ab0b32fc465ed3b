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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hexp {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

/// Truncation order of every series in the library.
inline constexpr int kOrder = 4;
/// Largest supported ambient dimension.
inline constexpr int kMaxDim = 8;

/// Exponent vector of a monomial z_1^{e_1} ... z_n^{e_n} with total degree <= kOrder.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);

  static MultiIndex zero(int n);
  /// e_k, with k zero-based.
  static MultiIndex unit(int n, int k);

  int dimension() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int operator[](int k) const { return exponents_[static_cast<std::size_t>(k)]; }
  std::span<const int> exponents() const { return exponents_; }

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Graded-lexicographic order: lower degree first, then larger leading exponent first.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

/// Dense enumeration of all monomials of degree <= kOrder in n variables,
/// in graded-lexicographic order, with product and derivative lookup tables.
/// Instances are shared and immutable.
class MonomialTable {
 public:
  static const MonomialTable& get(int n);

  int dimension() const { return n_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& monomial(std::size_t pos) const { return monomials_[pos]; }
  int degree(std::size_t pos) const { return monomials_[pos].degree(); }

  /// Position of the monomial; throws std::invalid_argument if the dimension or degree is wrong.
  std::size_t position(const MultiIndex& m) const;

  /// Half-open range of positions holding the monomials of degree d.
  std::size_t degree_begin(int d) const { return offsets_[static_cast<std::size_t>(d)]; }
  std::size_t degree_end(int d) const { return offsets_[static_cast<std::size_t>(d) + 1]; }

  /// Position of monomial(i) * monomial(j), or -1 when the product exceeds kOrder.
  int product(std::size_t i, std::size_t j) const { return product_[i * size() + j]; }

  /// Position of d/dz_var monomial(i) (coefficient multiplier is the exponent), or -1 if it vanishes.
  int derivative(std::size_t i, int var) const {
    return derivative_[i * static_cast<std::size_t>(n_) + static_cast<std::size_t>(var)];
  }

 private:
  explicit MonomialTable(int n);

  int n_;
  std::vector<MultiIndex> monomials_;
  std::vector<std::size_t> offsets_;
  std::vector<int> product_;
  std::vector<int> derivative_;
};

}  // namespace hexp
