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

#include "hexp/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hexp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_phase(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

double max_abs(const CVec& v) {
  double r = 0.0;
  for (cplx c : v) r = std::max(r, std::abs(c));
  return r;
}

}  // namespace

int default_grid(int n) {
  if (n <= 3) return 64;
  if (n <= 5) return 32;
  if (n <= 6) return 16;
  return 8;
}

CVec polarize(const HomogeneousPoly& p, std::span<const CVec> args) {
  const int m = p.degree();
  const auto n = static_cast<std::size_t>(p.dimension());
  if (static_cast<int>(args.size()) != m) throw std::invalid_argument("polarize: number of arguments differs from degree");
  for (const auto& a : args)
    if (a.size() != n) throw std::invalid_argument("polarize: argument dimension mismatch");
  if (std::all_of(args.begin(), args.end(), [&](const CVec& a) { return a == args[0]; })) return p(args[0]);

  // The sign pattern and its negation contribute equally, so eps_1 = +1 is fixed.
  PolyEvaluator ev(p);
  CVec acc(n);
  CVec s(n);
  const unsigned patterns = 1u << (m - 1);
  for (unsigned bits = 0; bits < patterns; ++bits) {
    double sign = 1.0;
    std::fill(s.begin(), s.end(), cplx{});
    for (int i = 0; i < m; ++i) {
      const bool neg = i > 0 && ((bits >> (i - 1)) & 1u);
      if (neg) sign = -sign;
      for (std::size_t k = 0; k < n; ++k) s[k] += neg ? -args[static_cast<std::size_t>(i)][k] : args[static_cast<std::size_t>(i)][k];
    }
    const CVec& v = ev(s);
    for (std::size_t k = 0; k < n; ++k) acc[k] += sign * v[k];
  }
  double factorial = 1.0;
  for (int i = 2; i <= m; ++i) factorial *= i;
  const double scale = 2.0 / (std::ldexp(1.0, m) * factorial);
  for (auto& c : acc) c *= scale;
  return acc;
}

CVec mixed_d2(const HomogeneousPoly& quadratic, std::span<const cplx> z, std::span<const cplx> w) {
  if (quadratic.degree() != 2) throw std::invalid_argument("mixed_d2: polynomial must be quadratic");
  if (z.size() != w.size() || static_cast<int>(z.size()) != quadratic.dimension())
    throw std::invalid_argument("mixed_d2: point dimension mismatch");
  CVec plus(z.size()), minus(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    plus[k] = z[k] + w[k];
    minus[k] = z[k] - w[k];
  }
  PolyEvaluator ev(quadratic);
  CVec r = ev(plus);
  const CVec& m = ev(minus);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = (r[k] - m[k]) / 4.0;
  return r;
}

NormEstimate torus_sup(int n, const TorusObjectiveFactory& make_objective, const NormConfig& cfg,
                       std::span<const std::vector<double>> seeds) {
  if (n < 1) throw std::invalid_argument("torus_sup: dimension must be positive");
  const int grid = cfg.grid > 0 ? cfg.grid : default_grid(n);
  if (grid < 8) throw std::invalid_argument("torus_sup: grid resolution must be at least 8");
  const int free = n - 1;
  std::size_t count = 1;
  for (int l = 0; l < free; ++l) {
    count *= static_cast<std::size_t>(grid);
    if (count > (std::size_t{1} << 36)) throw std::invalid_argument("torus_sup: grid too large");
  }
  const double step = kTwoPi / grid;

  auto phases_of = [&](std::size_t idx, std::vector<double>& th) {
    th.assign(static_cast<std::size_t>(n), 0.0);
    for (int l = free; l >= 1; --l) {
      th[static_cast<std::size_t>(l)] = step * static_cast<double>(idx % static_cast<std::size_t>(grid));
      idx /= static_cast<std::size_t>(grid);
    }
  };

  auto make_grid_eval = [&] {
    return [&, obj = make_objective(), th = std::vector<double>(), z = CVec(static_cast<std::size_t>(n))](
               std::size_t idx) mutable {
      phases_of(idx, th);
      for (int l = 0; l < n; ++l) z[static_cast<std::size_t>(l)] = std::polar(1.0, th[static_cast<std::size_t>(l)]);
      return obj(z);
    };
  };
  const auto top = kernels::best_k(cfg.exec, count, static_cast<std::size_t>(std::max(1, cfg.starts)), make_grid_eval);

  struct Refined {
    double value;
    std::vector<double> phases;
  };
  for (const auto& sd : seeds)
    if (sd.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("torus_sup: seed has wrong dimension");
  std::vector<Refined> refined(top.size() + seeds.size());

  auto refine_one = [&](std::size_t s) {
    TorusObjective obj = make_objective();
    std::vector<double> th;
    CVec z(static_cast<std::size_t>(n));
    auto eval_at = [&](const std::vector<double>& t) {
      for (int l = 0; l < n; ++l) z[static_cast<std::size_t>(l)] = std::polar(1.0, t[static_cast<std::size_t>(l)]);
      return obj(z);
    };
    double best;
    if (s < top.size()) {
      phases_of(top[s].index, th);
      best = top[s].value;
    } else {
      // rotate so the first phase is 0; the objective is invariant
      th = seeds[s - top.size()];
      const double t0 = th[0];
      for (auto& t : th) t -= t0;
      best = eval_at(th);
    }
    if (cfg.refine > 0) {
      for (int c = 0; c < cfg.cycles; ++c) {
        for (int l = 1; l < n; ++l) {
          const double centre = th[static_cast<std::size_t>(l)];
          auto along = [&](double t) {
            auto tt = th;
            tt[static_cast<std::size_t>(l)] = t;
            return eval_at(tt);
          };
          const auto [x, v] = kernels::golden_max(along, centre - step, centre + step, cfg.refine, centre, best);
          th[static_cast<std::size_t>(l)] = x;
          best = v;
        }
      }
    }
    refined[s] = {best, th};
  };

  const auto nstarts = static_cast<std::int64_t>(refined.size());
  if (cfg.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < nstarts; ++s) refine_one(static_cast<std::size_t>(s));
  } else {
    for (std::int64_t s = 0; s < nstarts; ++s) refine_one(static_cast<std::size_t>(s));
  }

  NormEstimate est;
  est.grid = grid;
  est.depth = cfg.refine;
  est.argmax.assign(static_cast<std::size_t>(n), 0.0);
  std::size_t best = 0;
  for (std::size_t s = 1; s < refined.size(); ++s)
    if (refined[s].value > refined[best].value) best = s;
  if (!refined.empty()) {
    est.value = refined[best].value;
    est.argmax = refined[best].phases;
  }
  for (auto& t : est.argmax) t = wrap_phase(t);
  return est;
}

NormEstimate poly_sup_norm(const HomogeneousPoly& p, const NormConfig& cfg) {
  return torus_sup(
      p.dimension(),
      [&p]() -> TorusObjective {
        return [ev = PolyEvaluator(p)](std::span<const cplx> z) mutable { return ev.norm_at(z); };
      },
      cfg);
}

namespace {

// Symmetric coefficient matrices A^k with L_k(x, y) = x^T A^k y.
std::vector<SquareMatrix> bilinear_matrices(const HomogeneousPoly& q) {
  const int n = q.dimension();
  std::vector<SquareMatrix> mats(static_cast<std::size_t>(n), SquareMatrix(n));
  for (std::size_t t = 0; t < q.term_count(); ++t) {
    const MultiIndex& e = q.monomial(t);
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
      if (e[k] == 2) i = j = k;
      if (e[k] == 1) (i < 0 ? i : j) = k;
    }
    for (int c = 0; c < n; ++c) {
      const cplx v = q.coeff(c, t);
      auto& a = mats[static_cast<std::size_t>(c)];
      if (i == j) {
        a(i, i) = v;
      } else {
        a(i, j) = v / 2.0;
        a(j, i) = v / 2.0;
      }
    }
  }
  return mats;
}

// max_k sum_j |(A^k x)_j|; optionally reports the maximizing component and c = A^k x.
double bilinear_objective(const std::vector<SquareMatrix>& mats, std::span<const cplx> x, int* arg_k, CVec* c_out) {
  const int n = static_cast<int>(x.size());
  double best = -1.0;
  for (int k = 0; k < n; ++k) {
    const auto& a = mats[static_cast<std::size_t>(k)];
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      cplx c{};
      for (int i = 0; i < n; ++i) c += a(i, j) * x[static_cast<std::size_t>(i)];
      s += std::abs(c);
    }
    if (s > best) {
      best = s;
      if (arg_k) *arg_k = k;
    }
  }
  if (c_out && arg_k) {
    const auto& a = mats[static_cast<std::size_t>(*arg_k)];
    c_out->assign(static_cast<std::size_t>(n), cplx{});
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) (*c_out)[static_cast<std::size_t>(j)] += a(i, j) * x[static_cast<std::size_t>(i)];
  }
  return best;
}

}  // namespace

NormEstimate form_sup_norm(const SymmetricForm& form, const NormConfig& cfg,
                           std::span<const std::vector<double>> seeds) {
  if (form.arity() != 2) throw std::invalid_argument("form_sup_norm: only bilinear forms (arity 2) are supported");
  const auto mats = bilinear_matrices(form.diagonal);
  const int n = form.diagonal.dimension();
  NormEstimate est = torus_sup(
      n,
      [&mats]() -> TorusObjective {
        return [&mats](std::span<const cplx> x) { return bilinear_objective(mats, x, nullptr, nullptr); };
      },
      cfg, seeds);

  CVec x(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) x[static_cast<std::size_t>(l)] = std::polar(1.0, est.argmax[static_cast<std::size_t>(l)]);
  int k = 0;
  CVec c;
  bilinear_objective(mats, x, &k, &c);
  CVec y(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const cplx cj = c[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(j)] = std::abs(cj) > 0 ? std::conj(cj) / std::abs(cj) : cplx(1.0);
  }
  const std::vector<CVec> args{x, y};
  est.value = max_abs(polarize(form.diagonal, args));
  for (cplx yj : y) est.argmax.push_back(wrap_phase(std::arg(yj)));
  return est;
}

double polarization_ratio(const HomogeneousPoly& quadratic, const NormConfig& cfg) {
  if (quadratic.degree() != 2) throw std::invalid_argument("polarization_ratio: polynomial must be quadratic");
  if (quadratic.is_zero()) throw std::invalid_argument("polarization_ratio: zero polynomial");
  const NormEstimate poly = poly_sup_norm(quadratic, cfg);
  const std::vector<std::vector<double>> seed{poly.argmax};
  const double form = form_sup_norm(SymmetricForm{quadratic}, cfg, seed).value;
  return form / poly.value;
}

double coefficient_row_max(const SquareMatrix& rows) {
  double m = 0.0;
  for (int k = 0; k < rows.n; ++k) {
    double s = 0.0;
    for (int l = 0; l < rows.n; ++l) s += std::abs(rows(k, l));
    m = std::max(m, s);
  }
  return m;
}

std::optional<SquareMatrix> structured_rows(const HomogeneousPoly& quadratic) {
  if (quadratic.degree() != 2) throw std::invalid_argument("structured_rows: polynomial must be quadratic");
  const int n = quadratic.dimension();
  SquareMatrix a(n);
  for (int k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < quadratic.term_count(); ++t) {
      const cplx c = quadratic.coeff(k, t);
      if (c == cplx{}) continue;
      const MultiIndex& e = quadratic.monomial(t);
      if (e[k] == 0) return std::nullopt;
      int l = k;
      for (int j = 0; j < n; ++j)
        if (j != k && e[j] == 1) l = j;
      a(k, l) = c;
    }
  }
  return a;
}

std::optional<CVec> diagonal_coefficients(const HomogeneousPoly& p) {
  const int n = p.dimension();
  CVec a(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < p.term_count(); ++t) {
      const cplx c = p.coeff(k, t);
      if (c == cplx{}) continue;
      if (p.monomial(t)[k] != p.degree()) return std::nullopt;
      a[static_cast<std::size_t>(k)] = c;
    }
  }
  return a;
}

}  // namespace hexp
