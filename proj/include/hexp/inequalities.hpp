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
#include <string>
#include <vector>

#include "hexp/forms.hpp"
#include "hexp/mappings.hpp"
#include "hexp/univariate.hpp"

namespace hexp {

enum class Verdict { Pass, Fail, HypothesisFailed, Skipped };

std::string to_string(Verdict v);

/// One intermediate inequality of a proof chain, reduced to its worst case.
struct ChainCheck {
  std::string name;
  double left = 0.0;
  double bound = 0.0;
  double margin = 0.0;  ///< bound - left
  bool pass = false;
};

struct VerificationReport {
  std::string theorem;
  double alpha = 0.0;
  int n = 1;
  std::string family;
  double left = 0.0;   ///< estimated left side
  double bound = 0.0;  ///< right side
  double margin = 0.0;
  std::optional<double> sharp_gap;  ///< bound - value attained along the extremal direction
  bool sharp = false;
  std::size_t samples = 0;
  std::optional<NormEstimate> norm;  ///< grid metadata of the left-side estimate
  std::vector<ChainCheck> chain;
  std::optional<ClassCertificate> certificate;  ///< present when a membership pre-check ran
  Verdict verdict = Verdict::Fail;
  std::string note;
};

struct Tolerances {
  double coeff = 1e-10;  ///< exact coefficient identities and inequalities
  double sup = 1e-6;     ///< grid-sampled sup comparisons
  double sharp = 1e-7;   ///< sharpness gaps
  double stat = 1e-9;    ///< membership sampling
};

struct VerifyConfig {
  NormConfig norm;
  MembershipPlan membership;
  Tolerances tol;
  std::vector<double> sharp_radii{0.25, 0.5, 0.75};
  /// Sampling of the unit sphere {||x|| = 1} for pointwise quantities.
  std::vector<double> direction_moduli{1.0, 0.75, 0.5, 0.25, 0.0};
  int direction_phases = 32;
  std::size_t direction_budget = std::size_t{1} << 18;
};

// ---------------------------------------------------------------------------
// Bound formulas

double thm21_bound(double alpha);            ///< (1-a)/3, also the degree-3 vector form
double thm23_bound(double alpha);            ///< 2(1-a)
double thm31_bound(double alpha, int n);     ///< n <= 2 and n >= 3 branches
double thm32_bound(double alpha);            ///< (1-a)(3-2a)/3
double thm33_bound(double alpha);            ///< (1-a)(3-4a)
double cor33_bound(double alpha, double M);  ///< 1-a + ((1-2a)/(1-a)) M^2/2
double thm34_bound(double alpha, int n);
double thm35_bound(double alpha);            ///< (1-a)(3-4a)(4-6a)/3
double lemma36_constant(int n);              ///< 1 for n <= 2, 3 sqrt(3)/4 beyond
/// Upper end (37 - sqrt(505))/72 of the alpha range of the degree-4 estimate.
double lemma38_threshold();

// ---------------------------------------------------------------------------
// One-variable inputs

/// Finite Blaschke data: omega(z) = rotation * prod_k (z - z_k)/(1 - conj(z_k) z).
struct BlaschkeData {
  std::vector<cplx> zeros;
  cplx rotation = 1.0;
};

UniSeries blaschke_series(const BlaschkeData& data, int order);

/// p = (1 - (1-2a) omega)/(1 + omega), so Re p >= a on the disk and p(0) = 1.
struct CaratheodoryFunction {
  double alpha = 0.0;
  BlaschkeData omega;
  std::array<cplx, 4> b{};  ///< b[0] = 1, then b_1, b_2, b_3
};

/// Requires a zero at the origin, zeros inside the disk, a unimodular rotation
/// and at most 6 factors; throws std::invalid_argument otherwise.
CaratheodoryFunction schwarz_to_caratheodory(const BlaschkeData& omega, double alpha);
/// Taylor coefficients h_0..h_3 of h = (1 - p)/(1 - 2a + p).
std::array<cplx, 4> caratheodory_to_schwarz(const CaratheodoryFunction& p);

/// Schwarz function with 1..6 factors: one at the origin, the rest uniform in |z| < 0.9.
BlaschkeData random_schwarz(std::mt19937_64& rng);
/// s * B(z) for a random Blaschke product B and s in [0.5, 1]: maps the disk into itself.
UniSeries random_disk_self_map(std::mt19937_64& rng, int order);

// ---------------------------------------------------------------------------
// Auxiliary polynomials

/// The cubic x -> L(x, P(x)), L the symmetric bilinear form of the quadratic P.
HomogeneousPoly mixed_square(const HomogeneousPoly& quadratic);

/// The cubic h of the degree-4 estimate.
double lemma38_eval(double alpha, double x);
double lemma38_derivative(double alpha, double x);

struct Lemma38Analysis {
  bool monotone = false;
  double min_derivative = 0.0;  ///< over [0, 2(1-a)]
  double max_value = 0.0;       ///< h(2(1-a))
  double product_form = 0.0;    ///< (1-a)(3-4a)(4-6a)
};

/// Samples h' on a uniform grid; h' > 0 is required before the right endpoint,
/// where h' vanishes at the upper end of the alpha range.
Lemma38Analysis lemma38_analyze(double alpha, int grid = 1000);

// ---------------------------------------------------------------------------
// Verifiers

VerificationReport verify_lemma21(const UniSeries& f, const Tolerances& tol = {});
VerificationReport verify_lemma22(const CaratheodoryFunction& p, const Tolerances& tol = {});
VerificationReport verify_lemma23(const VectorJet& jet, const Tolerances& tol = {});
VerificationReport verify_lemma24(const VectorJet& jet, const Tolerances& tol = {});
VerificationReport verify_lemma36(const HomogeneousPoly& quadratic, const VerifyConfig& cfg = {});
VerificationReport verify_lemma38(double alpha, const Tolerances& tol = {});

VerificationReport verify_thm21(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
/// Covers the one-variable reduction |a_3 - (2/3) a_2^2| at n = 1.
VerificationReport verify_thm22(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
VerificationReport verify_thm23(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
/// |a_3 - (2/3) a_2^2| <= 1/3 for a one-variable convex map.
VerificationReport verify_corE(const MappingFamily& f, const VerifyConfig& cfg = {});
/// |2 a_3 - a_2^2| <= 2 for a one-variable starlike map.
VerificationReport verify_corF(const MappingFamily& f, const VerifyConfig& cfg = {});
VerificationReport verify_thm31(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
VerificationReport verify_thm32(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
/// Checks the refined M-dependent bound and its relation to (1-a)(3-4a).
VerificationReport verify_thm33(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
VerificationReport verify_thm34(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});
VerificationReport verify_thm35(const MappingFamily& f, double alpha, const VerifyConfig& cfg = {});

}  // namespace hexp
