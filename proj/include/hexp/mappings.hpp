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

#include <array>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hexp/kernels.hpp"
#include "hexp/series.hpp"

namespace hexp {

enum class ClassTag { QuasiConvex, AlmostStarlike };

std::string to_string(ClassTag c);

/// One-variable building block of a diagonal mapping; F(t) = t + a_2 t^2 + ...
struct UnivariateMap {
  enum class Kind { Identity, QuasiConvexExtremal, AlmostStarlikeExtremal };

  Kind kind = Kind::Identity;
  double alpha = 0.0;

  /// a_0 .. a_4 of the Taylor expansion at 0.
  std::array<double, kOrder + 1> taylor() const;
  /// 1 + t F''(t)/F'(t) in closed form.
  cplx quasi_ratio(cplx t) const;
  /// F(t) / (t F'(t)) in closed form, t != 0.
  cplx star_ratio(cplx t) const;
  cplx ratio(ClassTag c, cplx t) const { return c == ClassTag::QuasiConvex ? quasi_ratio(t) : star_ratio(t); }
  std::optional<double> certified_order(ClassTag c) const;
  std::string label() const;
};

/// Mapping catalog. The extremal families with a direction u have the form
/// f(x) = x F(T_u(x)) / T_u(x); diagonal products act coordinate-wise.
class MappingFamily {
 public:
  struct QuasiConvexExtremal {
    double alpha;
    CVec u;
  };
  struct AlmostStarlikeExtremal {
    double alpha;
    CVec u;
  };
  struct DiagonalProduct {
    std::vector<UnivariateMap> parts;
  };
  struct UserJet {
    VectorJet jet;
    std::string label;
  };
  using Variant = std::variant<QuasiConvexExtremal, AlmostStarlikeExtremal, DiagonalProduct, UserJet>;

  static MappingFamily quasi_convex_extremal(double alpha, CVec u);
  static MappingFamily almost_starlike_extremal(double alpha, CVec u);
  static MappingFamily diagonal(std::vector<UnivariateMap> parts);
  static MappingFamily diagonal_quasi_convex(int n, double alpha);
  static MappingFamily diagonal_almost_starlike(int n, double alpha);
  static MappingFamily identity(int n);
  static MappingFamily user(VectorJet jet, std::string label = "user");

  const Variant& variant() const { return v_; }
  int dimension() const;
  std::string label() const;
  bool is_user_jet() const { return std::holds_alternative<UserJet>(v_); }

  /// Order alpha for which membership in the class is known analytically.
  std::optional<double> certified_order(ClassTag c) const;
  /// Direction along which the extremal attains its bounds (u, or e_1 for diagonal maps).
  std::optional<CVec> extremal_direction() const;
  /// g_j(z)/z_j in closed form; nullopt for user jets.
  std::optional<cplx> closed_form_ratio(ClassTag c, std::span<const cplx> z, int j) const;

 private:
  explicit MappingFamily(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Norm-one functional with T_z(z) = ||z||: (|z_j|/z_j) e_j^T at the lowest
/// index j with |z_j| = max_k |z_k|.
struct SupportingFunctional {
  int index = 0;
  cplx phase = 1.0;

  cplx apply(std::span<const cplx> v) const { return phase * v[static_cast<std::size_t>(index)]; }
};

/// Lowest index attaining max_k |z_k|.
int achieving_index(std::span<const cplx> z);
double max_norm(std::span<const cplx> z);
/// Throws std::invalid_argument for z = 0.
SupportingFunctional supporting_functional(std::span<const cplx> z);
cplx supporting_apply(std::span<const cplx> z, std::span<const cplx> v);

/// Exact degree-<=4 jet of the family.
VectorJet jet_of(const MappingFamily& family);

/// D^2 f(z)(z^2) as a series, by contracting second partials with z_k z_l.
VectorJet second_derivative_contraction(const VectorJet& jet);

/// (Df(z))^{-1} (D^2 f(z)(z^2) + Df(z) z), truncated at degree 4.
VectorJet g_quasi(const VectorJet& jet);
/// (Df(z))^{-1} f(z), truncated at degree 4.
VectorJet g_star(const VectorJet& jet);

struct Lemma23Residual {
  double deg2 = 0.0;
  double deg3 = 0.0;
};

struct Lemma24Residual {
  double deg2 = 0.0;
  double deg3 = 0.0;
  double deg4 = 0.0;
};

/// Residuals of the expansion identities for g_quasi. The degree-2 residual is
/// coefficient-wise; higher degrees compare values at a fixed unisolvent probe set.
Lemma23Residual lemma23_residual(const VectorJet& jet);
/// Same for g_star, with the multilinear terms evaluated by polarization.
Lemma24Residual lemma24_residual(const VectorJet& jet);

/// Normalized jet with degree 2..4 coefficients uniform in the disk of the given radius.
VectorJet random_normalized_jet(int n, double radius, std::mt19937_64& rng);

/// Deterministic probe points in the unit polydisk; enough of them to
/// identify any homogeneous polynomial of degree <= 4 in n variables.
std::vector<CVec> probe_points(int n);

// ---------------------------------------------------------------------------
// Membership certification

struct MembershipPlan {
  std::vector<double> radii{0.1, 0.3, 0.5, 0.7, 0.9, 0.99};
  int phases = 64;  ///< per variable, reduced for large n to respect the budget
  std::vector<double> moduli{1.0, 0.5, 0.0};  ///< |z_k| / r levels; must start with 1
  std::size_t budget = 65536;  ///< points per shell
  double stat_tol = 1e-9;
  double boundary_radius = 0.9;  ///< truncated jets failing at r >= this are inconclusive
  Execution exec = Execution::Parallel;
};

/// Enumerates points with ||z|| = r: modulus patterns drawn from the levels
/// (at least one coordinate at level 1) times a uniform phase grid.
class ShellSampler {
 public:
  ShellSampler(int n, double radius, std::span<const double> moduli, int phases, std::size_t budget);

  std::size_t size() const { return patterns_.size() * phase_count_; }
  int phases_per_variable() const { return phases_; }
  void point(std::size_t i, std::span<cplx> out) const;

 private:
  int n_;
  double r_;
  int phases_;
  std::size_t phase_count_;
  std::vector<std::vector<double>> patterns_;
};

enum class CertVerdict { Pass, Fail, Inconclusive };

std::string to_string(CertVerdict v);

struct ClassCertificate {
  ClassTag cls = ClassTag::QuasiConvex;
  double alpha = 0.0;
  double min_re = 0.0;  ///< min of Re{g_j(z)/z_j} over the samples
  std::size_t samples = 0;
  CVec worst_point;
  int worst_index = 0;
  CertVerdict verdict = CertVerdict::Fail;
  bool truncated = false;
  std::string note;
};

/// Samples Re{g_j(z)/z_j} at the achieving coordinate on shells ||z|| = r.
ClassCertificate membership_test(const MappingFamily& family, ClassTag cls, double alpha,
                                 const MembershipPlan& plan = {});

}  // namespace hexp
