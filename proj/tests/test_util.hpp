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

// Shared generators and independent oracles for the unit tests.

#include <omp.h>

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "hexp/homogeneous.hpp"
#include "hexp/series.hpp"

namespace hexp::test {

inline cplx random_in_disk(std::mt19937_64& rng, double radius = 1.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline CVec random_point(std::mt19937_64& rng, int n, double radius = 1.0) {
  CVec z(static_cast<std::size_t>(n));
  for (auto& c : z) c = random_in_disk(rng, radius);
  return z;
}

inline ScalarSeries random_series(int n, double radius, std::mt19937_64& rng) {
  ScalarSeries s(n);
  const auto& t = MonomialTable::get(n);
  for (std::size_t i = 0; i < t.size(); ++i) s.set_at(i, random_in_disk(rng, radius));
  return s;
}

inline HomogeneousPoly random_poly(int n, int m, std::mt19937_64& rng) {
  HomogeneousPoly p(n, m);
  for (int k = 0; k < n; ++k)
    for (std::size_t t = 0; t < p.term_count(); ++t) p.set_term(k, t, random_in_disk(rng));
  return p;
}

// Sparse map keyed by exponent vector; shares nothing with the dense tables.
using SparseSeries = std::map<std::vector<int>, cplx>;

inline SparseSeries to_sparse(const ScalarSeries& s) {
  SparseSeries out;
  const auto& t = MonomialTable::get(s.dimension());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto e = t.monomial(i).exponents();
    if (s.coeff_at(i) != cplx{}) out[std::vector<int>(e.begin(), e.end())] = s.coeff_at(i);
  }
  return out;
}

inline SparseSeries naive_product(const SparseSeries& a, const SparseSeries& b, int order) {
  SparseSeries out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      int deg = 0;
      for (std::size_t k = 0; k < e.size(); ++k) deg += (e[k] = ea[k] + eb[k]);
      if (deg <= order) out[e] += ca * cb;
    }
  return out;
}

inline double sparse_distance(const SparseSeries& a, const SparseSeries& b) {
  double d = 0.0;
  for (const auto& [e, c] : a) {
    const auto it = b.find(e);
    d = std::max(d, std::abs(c - (it == b.end() ? cplx{} : it->second)));
  }
  for (const auto& [e, c] : b)
    if (!a.count(e)) d = std::max(d, std::abs(c));
  return d;
}

inline double series_distance(const ScalarSeries& a, const ScalarSeries& b) { return (a - b).max_abs(); }

inline double vec_distance(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

// Parallel-vs-serial comparisons need more than one thread even on a single core.
inline void use_several_threads() { omp_set_num_threads(4); }

}  // namespace hexp::test
