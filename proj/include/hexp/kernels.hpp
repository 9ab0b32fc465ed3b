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

// Data-parallel reduction kernels. Each kernel has a serial reference
// implementation with identical semantics; results are bit-identical because
// every sample is evaluated independently and ties are broken by index.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hexp {

enum class Execution { Parallel, Serial };

namespace kernels {

struct Candidate {
  double value;
  std::size_t index;
};

/// Strict total order: larger value first, then smaller index.
inline bool ranks_before(const Candidate& a, const Candidate& b) {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

/// Inserts c into the sorted top-k list. NaN values are ignored.
inline void offer(std::vector<Candidate>& top, std::size_t k, const Candidate& c) {
  if (std::isnan(c.value)) return;
  if (top.size() == k && !ranks_before(c, top.back())) return;
  const auto it = std::lower_bound(top.begin(), top.end(), c, ranks_before);
  top.insert(it, c);
  if (top.size() > k) top.pop_back();
}

/// The k best samples of eval(i), i in [0, count). make_eval() returns a
/// callable with its own scratch state.
template <class MakeEval>
std::vector<Candidate> best_k_serial(std::size_t count, std::size_t k, MakeEval&& make_eval) {
  auto eval = make_eval();
  std::vector<Candidate> top;
  top.reserve(k + 1);
  for (std::size_t i = 0; i < count; ++i) offer(top, k, {eval(i), i});
  return top;
}

template <class MakeEval>
std::vector<Candidate> best_k_parallel(std::size_t count, std::size_t k, MakeEval&& make_eval) {
  std::vector<Candidate> merged;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    auto eval = make_eval();
    std::vector<Candidate> local;
    local.reserve(k + 1);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      offer(local, k, {eval(idx), idx});
    }
#pragma omp critical(hexp_best_k_merge)
    for (const auto& c : local) offer(merged, k, c);
  }
  return merged;
}

template <class MakeEval>
std::vector<Candidate> best_k(Execution exec, std::size_t count, std::size_t k, MakeEval&& make_eval) {
  return exec == Execution::Parallel ? best_k_parallel(count, k, make_eval) : best_k_serial(count, k, make_eval);
}

/// Per-check minima of eval(i, out), where eval writes one value per check
/// into out. NaN counts as -inf. Ties go to the smaller index.
template <class MakeEval>
std::vector<Candidate> min_each_serial(std::size_t count, std::size_t checks, MakeEval&& make_eval) {
  auto eval = make_eval();
  std::vector<Candidate> best(checks, {std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()});
  std::vector<double> out(checks);
  for (std::size_t i = 0; i < count; ++i) {
    eval(i, out);
    for (std::size_t c = 0; c < checks; ++c) {
      const double v = std::isnan(out[c]) ? -std::numeric_limits<double>::infinity() : out[c];
      if (v < best[c].value || (v == best[c].value && i < best[c].index)) best[c] = {v, i};
    }
  }
  return best;
}

template <class MakeEval>
std::vector<Candidate> min_each_parallel(std::size_t count, std::size_t checks, MakeEval&& make_eval) {
  std::vector<Candidate> merged(checks, {std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()});
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    auto eval = make_eval();
    std::vector<Candidate> best(checks, {std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()});
    std::vector<double> out(checks);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      eval(idx, out);
      for (std::size_t c = 0; c < checks; ++c) {
        const double v = std::isnan(out[c]) ? -std::numeric_limits<double>::infinity() : out[c];
        if (v < best[c].value || (v == best[c].value && idx < best[c].index)) best[c] = {v, idx};
      }
    }
#pragma omp critical(hexp_min_each_merge)
    for (std::size_t c = 0; c < checks; ++c) {
      const auto& b = best[c];
      if (b.value < merged[c].value || (b.value == merged[c].value && b.index < merged[c].index)) merged[c] = b;
    }
  }
  return merged;
}

template <class MakeEval>
std::vector<Candidate> min_each(Execution exec, std::size_t count, std::size_t checks, MakeEval&& make_eval) {
  return exec == Execution::Parallel ? min_each_parallel(count, checks, make_eval)
                                     : min_each_serial(count, checks, make_eval);
}

/// Golden-section search for a maximum of f on [a, b]. Returns the best
/// evaluated abscissa and value; the starting value f0 at x0 is kept when
/// nothing better is found, so the result never decreases.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, int steps, double x0, double f0) {
  constexpr double inv_phi = 0.6180339887498949;
  double best_x = x0;
  double best_f = f0;
  auto consider = [&](double x, double v) {
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  };
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  consider(c, fc);
  consider(d, fd);
  for (int s = 0; s < steps; ++s) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return {best_x, best_f};
}

}  // namespace kernels
}  // namespace hexp
