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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hexp/homogeneous.hpp"
#include "hexp/kernels.hpp"

namespace hexp {

/// Symmetric m-linear form represented by its diagonal restriction; values
/// off the diagonal come from polarization.
struct SymmetricForm {
  HomogeneousPoly diagonal;
  int arity() const { return diagonal.degree(); }
};

/// Square complex matrix, row-major.
struct SquareMatrix {
  int n = 0;
  CVec a;

  explicit SquareMatrix(int size) : n(size), a(static_cast<std::size_t>(size * size)) {}
  cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  cplx operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }
};

/// Phase-grid search settings for sup-norms over the distinguished boundary.
struct NormConfig {
  int grid = 0;  ///< samples per phase; 0 picks default_grid(n)
  int refine = 40;  ///< golden-section steps per coordinate
  int cycles = 2;   ///< coordinate sweeps per start point
  int starts = 8;   ///< grid maxima that are refined
  Execution exec = Execution::Parallel;
};

/// 64 samples per phase for n <= 3, 32 for n = 4..5, 16 for n = 6, 8 beyond.
int default_grid(int n);

struct NormEstimate {
  double value = 0.0;  ///< attained at argmax, hence a lower bound for the true sup
  int grid = 0;
  int depth = 0;
  std::vector<double> argmax;  ///< phases in [0, 2pi); forms list x phases then y phases
};

/// L(x_1, ..., x_m) = 1/(2^m m!) sum_eps eps_1...eps_m P(sum eps_i x_i).
/// Equal arguments short-circuit to P(x).
CVec polarize(const HomogeneousPoly& p, std::span<const CVec> args);

/// L(z, w) = P(z + w)/4 - P(z - w)/4 for a quadratic P.
CVec mixed_d2(const HomogeneousPoly& quadratic, std::span<const cplx> z, std::span<const cplx> w);

/// Objective on torus points; must be invariant under z -> e^{it} z.
using TorusObjective = std::function<double(std::span<const cplx>)>;
/// Builds one objective per worker (each may own scratch buffers).
using TorusObjectiveFactory = std::function<TorusObjective()>;

/// Maximizes an objective over {|z_l| = 1}. The first phase is pinned to 0,
/// the rest are scanned on a uniform grid and the best grid points are refined
/// coordinate-wise by golden-section search. Extra seed phase vectors (length n)
/// are refined along with the grid maxima.
NormEstimate torus_sup(int n, const TorusObjectiveFactory& make_objective, const NormConfig& cfg,
                       std::span<const std::vector<double>> seeds = {});

/// sup_{z in closed polydisk} max_k |P_k(z)|, searched on the torus.
NormEstimate poly_sup_norm(const HomogeneousPoly& p, const NormConfig& cfg = {});

/// ||L|| for a bilinear symmetric form. The y-maximization is exact
/// (sup_y |sum_j c_j y_j| = sum_j |c_j|), leaving a torus search over x.
/// Seeding with the argmax of poly_sup_norm makes the result at least that
/// estimate, since y = x is admissible.
NormEstimate form_sup_norm(const SymmetricForm& form, const NormConfig& cfg = {},
                           std::span<const std::vector<double>> seeds = {});

/// ||L|| / ||L^|| for a quadratic P = L^.
double polarization_ratio(const HomogeneousPoly& quadratic, const NormConfig& cfg = {});

/// max_k sum_l |a_kl|.
double coefficient_row_max(const SquareMatrix& rows);

/// a_kl when component k of the quadratic is z_k * sum_l a_kl z_l, otherwise nullopt.
std::optional<SquareMatrix> structured_rows(const HomogeneousPoly& quadratic);

/// Coefficients a_k when component k is a_k z_k^m, otherwise nullopt.
std::optional<CVec> diagonal_coefficients(const HomogeneousPoly& p);

}  // namespace hexp
