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

#include "hexp/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hexp/format.hpp"
#include "hexp/kernels.hpp"

namespace hexp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisFailed: return "hypothesis_failed";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
}

ChainCheck chain_check(std::string name, double left, double bound, double tol) {
  const double margin = bound - left;
  return {std::move(name), left, bound, margin, margin >= -tol};
}

VerificationReport base_report(std::string id, double alpha, int n, std::string family) {
  VerificationReport r;
  r.theorem = std::move(id);
  r.alpha = alpha;
  r.n = n;
  r.family = std::move(family);
  return r;
}

void finish(VerificationReport& r, double tol, double sharp_tol) {
  r.margin = r.bound - r.left;
  bool ok = r.margin >= -tol;
  for (const auto& c : r.chain) ok = ok && c.pass;
  if (r.sharp_gap) {
    r.sharp = std::abs(*r.sharp_gap) <= sharp_tol;
    ok = ok && r.sharp;
  }
  r.verdict = ok ? Verdict::Pass : Verdict::Fail;
}

VerificationReport skipped(VerificationReport r, std::string why) {
  r.verdict = Verdict::Skipped;
  r.note = std::move(why);
  return r;
}

/// Runs the membership pre-check unless the family is certified analytically.
bool precheck(VerificationReport& r, const MappingFamily& f, ClassTag cls, double alpha, const VerifyConfig& cfg) {
  if (const auto order = f.certified_order(cls); order && *order >= alpha) return true;
  MembershipPlan plan = cfg.membership;
  plan.stat_tol = cfg.tol.stat;
  const ClassCertificate cert = membership_test(f, cls, alpha, plan);
  r.certificate = cert;
  if (cert.verdict == CertVerdict::Fail) {
    r.verdict = Verdict::HypothesisFailed;
    r.note = "not " + to_string(cls) + " of order " + format_double(alpha) + ": min Re g_j/z_j = " +
             format_double(cert.min_re);
    return false;
  }
  if (cert.verdict == CertVerdict::Inconclusive) r.note = cert.note;
  return true;
}

/// Direction along which a pure extremal of the given class and order attains equality.
std::optional<CVec> sharp_direction(const MappingFamily& f, ClassTag cls, double alpha) {
  const auto kind = cls == ClassTag::QuasiConvex ? UnivariateMap::Kind::QuasiConvexExtremal
                                                 : UnivariateMap::Kind::AlmostStarlikeExtremal;
  const auto& v = f.variant();
  if (const auto* q = std::get_if<MappingFamily::QuasiConvexExtremal>(&v))
    return (cls == ClassTag::QuasiConvex && q->alpha == alpha) ? std::optional<CVec>(q->u) : std::nullopt;
  if (const auto* s = std::get_if<MappingFamily::AlmostStarlikeExtremal>(&v))
    return (cls == ClassTag::AlmostStarlike && s->alpha == alpha) ? std::optional<CVec>(s->u) : std::nullopt;
  if (const auto* d = std::get_if<MappingFamily::DiagonalProduct>(&v)) {
    for (const auto& p : d->parts)
      if (p.kind != kind || p.alpha != alpha) return std::nullopt;
    CVec e(d->parts.size());
    e[0] = 1.0;
    return e;
  }
  return std::nullopt;
}

/// bound - value(r u)/r^degree at the radius where the gap is largest in modulus.
template <class F>
double sharp_gap(const CVec& u, const std::vector<double>& radii, int degree, double bound, F&& value) {
  double worst = 0.0;
  bool first = true;
  for (double r : radii) {
    CVec x(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) x[k] = r * u[k];
    const double gap = bound - value(x) / std::pow(r, degree);
    if (first || std::abs(gap) > std::abs(worst)) worst = gap;
    first = false;
  }
  return worst;
}

struct Blocks {
  VectorJet jet;
  HomogeneousPoly p2, p3, p4;

  explicit Blocks(const MappingFamily& f)
      : jet(jet_of(f)),
        p2(extract_homogeneous(jet, 2)),
        p3(extract_homogeneous(jet, 3)),
        p4(extract_homogeneous(jet, 4)) {}
};

ShellSampler direction_sampler(int n, const VerifyConfig& cfg) {
  return ShellSampler(n, 1.0, cfg.direction_moduli, cfg.direction_phases, cfg.direction_budget);
}

std::size_t grid_samples(const NormEstimate& e, int n) {
  std::size_t s = 1;
  for (int k = 1; k < n; ++k) s *= static_cast<std::size_t>(e.grid);
  return s;
}

double norm_of(const HomogeneousPoly& p, std::span<const cplx> x) {
  double r = 0.0;
  for (cplx c : p(x)) r = std::max(r, std::abs(c));
  return r;
}

/// Sampled sup over the unit sphere of value(x); returns (sup, samples).
template <class MakeValue>
std::pair<double, std::size_t> sphere_sup(int n, const VerifyConfig& cfg, MakeValue&& make_value) {
  const ShellSampler sampler = direction_sampler(n, cfg);
  auto make_eval = [&] {
    return [&sampler, value = make_value(), z = CVec(static_cast<std::size_t>(n))](std::size_t i) mutable {
      sampler.point(i, z);
      return value(z);
    };
  };
  const auto top = kernels::best_k(cfg.norm.exec, sampler.size(), 1, make_eval);
  return {top.empty() ? 0.0 : top.front().value, sampler.size()};
}

double h_cubic(double alpha, double x) {
  const double om = 1.0 - alpha;
  return (12.0 * alpha * alpha - 10.0 * alpha + 1.0) / (4.0 * om * om) * x * x * x - x * x / (2.0 * om) +
         (5.0 - 7.0 * alpha) * x + 2.0 * om;
}

}  // namespace

// ---------------------------------------------------------------------------

double thm21_bound(double alpha) { return (1.0 - alpha) / 3.0; }
double thm23_bound(double alpha) { return 2.0 * (1.0 - alpha); }

double thm31_bound(double alpha, int n) {
  if (n <= 2) return thm32_bound(alpha);
  return (1.0 - alpha) * (1.5 * kSqrt3 + 1.0 - 1.5 * kSqrt3 * alpha) / 3.0;
}

double thm32_bound(double alpha) { return (1.0 - alpha) * (3.0 - 2.0 * alpha) / 3.0; }
double thm33_bound(double alpha) { return (1.0 - alpha) * (3.0 - 4.0 * alpha); }

double cor33_bound(double alpha, double M) {
  return 1.0 - alpha + (1.0 - 2.0 * alpha) / (1.0 - alpha) * M * M / 2.0;
}

double thm34_bound(double alpha, int n) {
  if (n <= 2) return (1.0 - alpha) * (5.0 - 4.0 * alpha);
  return (1.0 - alpha) * (3.0 * kSqrt3 + 1.0 - 3.0 * kSqrt3 * alpha);
}

double thm35_bound(double alpha) { return (1.0 - alpha) * (3.0 - 4.0 * alpha) * (4.0 - 6.0 * alpha) / 3.0; }
double lemma36_constant(int n) { return n <= 2 ? 1.0 : 0.75 * kSqrt3; }
double lemma38_threshold() { return (37.0 - std::sqrt(505.0)) / 72.0; }

// ---------------------------------------------------------------------------

UniSeries blaschke_series(const BlaschkeData& data, int order) {
  UniSeries s = UniSeries::constant(order, data.rotation);
  for (cplx a : data.zeros) s = s * blaschke_factor(order, a);
  return s;
}

CaratheodoryFunction schwarz_to_caratheodory(const BlaschkeData& omega, double alpha) {
  check_alpha(alpha);
  if (omega.zeros.empty() || omega.zeros.size() > 6)
    throw std::invalid_argument("Schwarz function needs 1..6 Blaschke factors");
  if (std::none_of(omega.zeros.begin(), omega.zeros.end(), [](cplx a) { return a == cplx{}; }))
    throw std::invalid_argument("Schwarz function must vanish at the origin");
  for (cplx a : omega.zeros)
    if (!(std::abs(a) < 1.0)) throw std::invalid_argument("Blaschke zeros must lie in the open disk");
  if (std::abs(std::abs(omega.rotation) - 1.0) > 1e-12) throw std::invalid_argument("rotation must be unimodular");

  constexpr int order = 3;
  const UniSeries w = blaschke_series(omega, order);
  const UniSeries one = UniSeries::constant(order, 1.0);
  const UniSeries p = (one - (1.0 - 2.0 * alpha) * w) / (one + w);
  CaratheodoryFunction out;
  out.alpha = alpha;
  out.omega = omega;
  for (int k = 0; k <= order; ++k) out.b[static_cast<std::size_t>(k)] = p[k];
  return out;
}

std::array<cplx, 4> caratheodory_to_schwarz(const CaratheodoryFunction& p) {
  constexpr int order = 3;
  const UniSeries ps(order, CVec(p.b.begin(), p.b.end()));
  const UniSeries one = UniSeries::constant(order, 1.0);
  const UniSeries h = (one - ps) / (UniSeries::constant(order, 1.0 - 2.0 * p.alpha) + ps);
  return {h[0], h[1], h[2], h[3]};
}

namespace {

cplx uniform_in_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  return std::polar(r, 2.0 * std::numbers::pi * unit(rng));
}

}  // namespace

BlaschkeData random_schwarz(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BlaschkeData d;
  d.zeros.push_back(0.0);
  const int extra = count(rng);
  for (int k = 0; k < extra; ++k) d.zeros.push_back(uniform_in_disk(rng, 0.9));
  d.rotation = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
  return d;
}

UniSeries random_disk_self_map(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BlaschkeData d;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) d.zeros.push_back(uniform_in_disk(rng, 0.9));
  d.rotation = std::polar(1.0, 2.0 * std::numbers::pi * unit(rng));
  const double s = 0.5 + 0.5 * unit(rng);
  return s * blaschke_series(d, order);
}

// ---------------------------------------------------------------------------

HomogeneousPoly mixed_square(const HomogeneousPoly& quadratic) {
  if (quadratic.degree() != 2) throw std::invalid_argument("mixed_square needs a quadratic");
  const int n = quadratic.dimension();
  const VectorJet q = VectorJet::from_homogeneous(quadratic);
  std::vector<ScalarSeries> out;
  for (int p = 0; p < n; ++p) {
    // L(x, w) = (1/2) DP(x) w
    ScalarSeries acc(n);
    for (int l = 0; l < n; ++l) acc += 0.5 * (q[p].derivative(l) * q[l]);
    out.push_back(std::move(acc));
  }
  return extract_homogeneous(VectorJet(std::move(out)), 3);
}

double lemma38_eval(double alpha, double x) {
  if (!(alpha >= 0.0 && alpha <= lemma38_threshold() * (1.0 + 1e-12)))
    throw std::domain_error("alpha outside [0, (37 - sqrt(505))/72]");
  if (!(x >= 0.0 && x <= 2.0 * (1.0 - alpha))) throw std::domain_error("x outside [0, 2(1 - alpha)]");
  return h_cubic(alpha, x);
}

double lemma38_derivative(double alpha, double x) {
  const double om = 1.0 - alpha;
  return 3.0 * (12.0 * alpha * alpha - 10.0 * alpha + 1.0) / (4.0 * om * om) * x * x - x / om + 5.0 - 7.0 * alpha;
}

Lemma38Analysis lemma38_analyze(double alpha, int grid) {
  if (grid < 2) throw std::invalid_argument("lemma38_analyze: grid needs at least 2 points");
  const double end = 2.0 * (1.0 - alpha);
  Lemma38Analysis a;
  a.max_value = lemma38_eval(alpha, end);
  a.product_form = (1.0 - alpha) * (3.0 - 4.0 * alpha) * (4.0 - 6.0 * alpha);
  a.monotone = true;
  a.min_derivative = lemma38_derivative(alpha, 0.0);
  double prev = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double x = i == grid - 1 ? end : end * i / (grid - 1);
    const double d = lemma38_derivative(alpha, x);
    const double h = lemma38_eval(alpha, x);
    a.min_derivative = std::min(a.min_derivative, d);
    const bool positive = i < grid - 1 ? d > 0.0 : d >= -1e-12;
    a.monotone = a.monotone && positive && h > prev;
    prev = h;
  }
  return a;
}

// ---------------------------------------------------------------------------

VerificationReport verify_lemma21(const UniSeries& f, const Tolerances& tol) {
  auto r = base_report("lemma2.1", 0.0, 1, "disk_self_map(order=" + std::to_string(f.order()) + ")");
  const double a0 = std::abs(f[0]);
  r.bound = 1.0 - a0 * a0;
  for (int k = 1; k <= f.order(); ++k) {
    const double ak = std::abs(f[k]);
    r.left = std::max(r.left, ak);
    r.chain.push_back(chain_check("a" + std::to_string(k), ak, r.bound, tol.coeff));
  }
  r.samples = static_cast<std::size_t>(f.order());
  finish(r, tol.coeff, tol.sharp);
  return r;
}

VerificationReport verify_lemma22(const CaratheodoryFunction& p, const Tolerances& tol) {
  const double a = p.alpha;
  const double om = 1.0 - a;
  auto r = base_report("lemma2.2", a, 1, "schwarz(factors=" + std::to_string(p.omega.zeros.size()) + ")");
  const cplx b1 = p.b[1], b2 = p.b[2], b3 = p.b[3];
  const double reduced = 2.0 * om - std::norm(b1) / (2.0 * om);
  r.chain.push_back(chain_check("b2_minus_half_b1sq", std::abs(b2 - b1 * b1 / (2.0 * om)), reduced, tol.coeff));
  r.chain.push_back(chain_check("b3_combination",
                                std::abs(b3 - b1 * b2 / om + b1 * b1 * b1 / (4.0 * om * om)), reduced, tol.coeff));
  r.chain.push_back(chain_check("b2_modulus", std::abs(b2), 2.0 * om, tol.coeff));
  r.chain.push_back(chain_check("b2_minus_b1sq", std::abs(b2 - b1 * b1 / om), 2.0 * om, tol.coeff));
  const auto worst = std::min_element(r.chain.begin(), r.chain.end(),
                                      [](const ChainCheck& x, const ChainCheck& y) { return x.margin < y.margin; });
  r.left = worst->left;
  r.bound = worst->bound;
  r.samples = 1;
  finish(r, tol.coeff, tol.sharp);
  return r;
}

VerificationReport verify_lemma23(const VectorJet& jet, const Tolerances& tol) {
  auto r = base_report("lemma2.3", 0.0, jet.dimension(), "jet");
  const Lemma23Residual res = lemma23_residual(jet);
  r.chain.push_back(chain_check("degree2", res.deg2, 0.0, tol.coeff));
  r.chain.push_back(chain_check("degree3", res.deg3, 0.0, tol.coeff));
  r.left = std::max(res.deg2, res.deg3);
  r.samples = probe_points(jet.dimension()).size();
  finish(r, tol.coeff, tol.sharp);
  return r;
}

VerificationReport verify_lemma24(const VectorJet& jet, const Tolerances& tol) {
  auto r = base_report("lemma2.4", 0.0, jet.dimension(), "jet");
  const Lemma24Residual res = lemma24_residual(jet);
  r.chain.push_back(chain_check("degree2", res.deg2, 0.0, tol.coeff));
  r.chain.push_back(chain_check("degree3", res.deg3, 0.0, tol.coeff));
  r.chain.push_back(chain_check("degree4", res.deg4, 0.0, tol.coeff));
  r.left = std::max({res.deg2, res.deg3, res.deg4});
  r.samples = probe_points(jet.dimension()).size();
  finish(r, tol.coeff, tol.sharp);
  return r;
}

VerificationReport verify_lemma36(const HomogeneousPoly& quadratic, const VerifyConfig& cfg) {
  const int n = quadratic.dimension();
  auto r = base_report("lemma3.6", 0.0, n, "quadratic");
  const NormEstimate poly = poly_sup_norm(quadratic, cfg.norm);
  if (poly.value == 0.0) throw std::invalid_argument("lemma3.6: zero quadratic");
  const std::vector<std::vector<double>> seed{poly.argmax};
  const NormEstimate form = form_sup_norm(SymmetricForm{quadratic}, cfg.norm, seed);
  r.left = form.value / poly.value;
  r.bound = lemma36_constant(n);
  r.norm = form;
  r.samples = grid_samples(form, n) + grid_samples(poly, n);
  r.chain.push_back(chain_check("ratio_at_least_one", 1.0, r.left, cfg.tol.sup));
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

VerificationReport verify_lemma38(double alpha, const Tolerances& tol) {
  auto r = base_report("lemma3.8", alpha, 1, "cubic");
  if (!(alpha >= 0.0 && alpha <= lemma38_threshold())) return skipped(r, "alpha outside [0, (37 - sqrt(505))/72]");
  const Lemma38Analysis a = lemma38_analyze(alpha);
  r.left = a.max_value;
  r.bound = a.product_form;
  r.samples = 1000;
  r.chain.push_back({"derivative_positive", 0.0, a.min_derivative, a.min_derivative, a.monotone});
  finish(r, tol.coeff, tol.sharp);
  // the endpoint value must match the product form from both sides
  if (std::abs(a.max_value - a.product_form) > tol.coeff) r.verdict = Verdict::Fail;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

/// |T_x(P3(x)) - (2/3) T_x(L(x, P2(x)))| / ||x||^3
struct Thm21Value {
  PolyEvaluator e3, em;
  double operator()(std::span<const cplx> x) {
    const SupportingFunctional t = supporting_functional(x);
    const cplx v = t.apply(e3(x)) - (2.0 / 3.0) * t.apply(em(x));
    return std::abs(v) / std::pow(max_norm(x), 3);
  }
};

/// |2 T_x(P3(x)) ||x|| - 2 T_x(L(x, P2(x))) ||x|| + T_x(P2(x))^2 / (1-a)| / ||x||^4
struct Thm23Value {
  PolyEvaluator e2, e3, em;
  double alpha;
  double operator()(std::span<const cplx> x) {
    const SupportingFunctional t = supporting_functional(x);
    const double nx = max_norm(x);
    const cplx q = t.apply(e2(x));
    const cplx v = 2.0 * t.apply(e3(x)) * nx - 2.0 * t.apply(em(x)) * nx + q * q / (1.0 - alpha);
    return std::abs(v) / std::pow(nx, 4);
  }
};

}  // namespace

VerificationReport verify_thm21(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm2.1", alpha, n, f.label());
  if (!precheck(r, f, ClassTag::QuasiConvex, alpha, cfg)) return r;
  const Blocks b(f);
  const HomogeneousPoly m3 = mixed_square(b.p2);
  auto make = [&] { return Thm21Value{PolyEvaluator(b.p3), PolyEvaluator(m3)}; };
  std::tie(r.left, r.samples) = sphere_sup(n, cfg, make);
  r.bound = thm21_bound(alpha);
  if (const auto u = sharp_direction(f, ClassTag::QuasiConvex, alpha)) {
    auto value = make();
    r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 0, r.bound, value);
  }
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

VerificationReport verify_thm22(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm2.2", alpha, n, f.label());
  if (!precheck(r, f, ClassTag::QuasiConvex, alpha, cfg)) return r;
  const Blocks b(f);
  const HomogeneousPoly q = b.p3 - (2.0 / 3.0) * mixed_square(b.p2);
  const NormEstimate est = poly_sup_norm(q, cfg.norm);
  r.left = est.value;
  r.norm = est;
  r.samples = grid_samples(est, n);
  r.bound = thm21_bound(alpha);
  if (n == 1) r.note = "one-variable reduction |a3 - (2/3) a2^2|";
  if (const auto u = sharp_direction(f, ClassTag::QuasiConvex, alpha))
    r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 3, r.bound, [&](const CVec& x) { return norm_of(q, x); });
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

VerificationReport verify_thm23(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm2.3", alpha, n, f.label());
  if (!precheck(r, f, ClassTag::AlmostStarlike, alpha, cfg)) return r;
  const Blocks b(f);
  const HomogeneousPoly m3 = mixed_square(b.p2);
  auto make = [&] { return Thm23Value{PolyEvaluator(b.p2), PolyEvaluator(b.p3), PolyEvaluator(m3), alpha}; };
  std::tie(r.left, r.samples) = sphere_sup(n, cfg, make);
  r.bound = thm23_bound(alpha);
  if (const auto u = sharp_direction(f, ClassTag::AlmostStarlike, alpha)) {
    auto value = make();
    r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 0, r.bound, value);
  }
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

namespace {

std::pair<cplx, cplx> univariate_a2_a3(const MappingFamily& f) {
  if (f.dimension() != 1) throw std::invalid_argument("one-variable check needs n = 1");
  const VectorJet jet = jet_of(f);
  return {jet[0].coeff(MultiIndex({2})), jet[0].coeff(MultiIndex({3}))};
}

}  // namespace

VerificationReport verify_corE(const MappingFamily& f, const VerifyConfig& cfg) {
  auto r = base_report("corE", 0.0, 1, f.label());
  const auto [a2, a3] = univariate_a2_a3(f);
  if (!precheck(r, f, ClassTag::QuasiConvex, 0.0, cfg)) return r;
  r.left = std::abs(a3 - (2.0 / 3.0) * a2 * a2);
  r.bound = 1.0 / 3.0;
  r.samples = 1;
  if (sharp_direction(f, ClassTag::QuasiConvex, 0.0)) r.sharp_gap = r.bound - r.left;
  finish(r, cfg.tol.coeff, cfg.tol.coeff);
  return r;
}

VerificationReport verify_corF(const MappingFamily& f, const VerifyConfig& cfg) {
  auto r = base_report("corF", 0.0, 1, f.label());
  const auto [a2, a3] = univariate_a2_a3(f);
  if (!precheck(r, f, ClassTag::AlmostStarlike, 0.0, cfg)) return r;
  r.left = std::abs(2.0 * a3 - a2 * a2);
  r.bound = 2.0;
  r.samples = 1;
  if (sharp_direction(f, ClassTag::AlmostStarlike, 0.0)) r.sharp_gap = r.bound - r.left;
  finish(r, cfg.tol.coeff, cfg.tol.coeff);
  return r;
}

namespace {

/// Estimates ||P3|| and fills left, norm and samples.
void degree3_left(VerificationReport& r, const HomogeneousPoly& p3, const VerifyConfig& cfg) {
  const NormEstimate est = poly_sup_norm(p3, cfg.norm);
  r.left = est.value;
  r.samples = grid_samples(est, p3.dimension());
  r.norm = est;
}

}  // namespace

VerificationReport verify_thm31(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm3.1", alpha, n, f.label());
  if (!precheck(r, f, ClassTag::QuasiConvex, alpha, cfg)) return r;
  const Blocks b(f);
  const double om = 1.0 - alpha;
  const double kappa = lemma36_constant(n);
  const HomogeneousPoly m3 = mixed_square(b.p2);
  const double tol = cfg.tol.sup;
  r.chain.push_back(chain_check("quadratic_norm", poly_sup_norm(b.p2, cfg.norm).value, om, tol));
  r.chain.push_back(chain_check("bilinear_norm", form_sup_norm(SymmetricForm{b.p2}, cfg.norm).value, kappa * om, tol));
  r.chain.push_back(chain_check("mixed_term", 2.0 * poly_sup_norm(m3, cfg.norm).value, 2.0 * kappa * om * om, tol));
  r.chain.push_back(chain_check("cubic_combination", poly_sup_norm(b.p3 - (2.0 / 3.0) * m3, cfg.norm).value,
                                thm21_bound(alpha), tol));
  degree3_left(r, b.p3, cfg);
  r.bound = thm31_bound(alpha, n);
  if (n <= 2)
    if (const auto u = sharp_direction(f, ClassTag::QuasiConvex, alpha))
      r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 3, r.bound, [&](const CVec& x) { return norm_of(b.p3, x); });
  finish(r, tol, cfg.tol.sharp);
  return r;
}

VerificationReport verify_thm32(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm3.2", alpha, n, f.label());
  const Blocks b(f);
  const auto rows = structured_rows(b.p2);
  if (!rows) {
    r.verdict = Verdict::HypothesisFailed;
    r.note = "quadratic block is not of the form z_k sum_l a_kl z_l";
    return r;
  }
  if (!precheck(r, f, ClassTag::QuasiConvex, alpha, cfg)) return r;
  const double om = 1.0 - alpha;
  const HomogeneousPoly m3 = mixed_square(b.p2);
  r.chain.push_back(chain_check("row_sum", coefficient_row_max(*rows), om, cfg.tol.coeff));
  r.chain.push_back(chain_check("mixed_term", 2.0 * poly_sup_norm(m3, cfg.norm).value, 2.0 * om * om, cfg.tol.sup));
  r.chain.push_back(chain_check("cubic_combination", poly_sup_norm(b.p3 - (2.0 / 3.0) * m3, cfg.norm).value,
                                thm21_bound(alpha), cfg.tol.sup));
  degree3_left(r, b.p3, cfg);
  r.bound = thm32_bound(alpha);
  if (const auto u = sharp_direction(f, ClassTag::QuasiConvex, alpha))
    r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 3, r.bound, [&](const CVec& x) { return norm_of(b.p3, x); });
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

VerificationReport verify_thm33(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm3.3", alpha, n, f.label());
  if (alpha > 0.5) return skipped(r, "alpha outside [0, 1/2]");
  const Blocks b(f);
  const auto rows = structured_rows(b.p2);
  if (!rows) {
    r.verdict = Verdict::HypothesisFailed;
    r.note = "quadratic block is not of the form z_k sum_l a_kl z_l";
    return r;
  }
  if (!precheck(r, f, ClassTag::AlmostStarlike, alpha, cfg)) return r;
  const double om = 1.0 - alpha;
  const double M = coefficient_row_max(*rows);
  const double refined = cor33_bound(alpha, M);
  r.chain.push_back(chain_check("row_sum", M, 2.0 * om, cfg.tol.coeff));
  r.chain.push_back(chain_check("refined_vs_uniform", refined, thm33_bound(alpha), cfg.tol.coeff));
  degree3_left(r, b.p3, cfg);
  r.bound = refined;
  if (const auto u = sharp_direction(f, ClassTag::AlmostStarlike, alpha))
    r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 3, thm33_bound(alpha),
                            [&](const CVec& x) { return norm_of(b.p3, x); });
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

VerificationReport verify_thm34(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm3.4", alpha, n, f.label());
  if (!precheck(r, f, ClassTag::AlmostStarlike, alpha, cfg)) return r;
  const Blocks b(f);
  const double om = 1.0 - alpha;
  const double kappa = lemma36_constant(n);
  const HomogeneousPoly m3 = mixed_square(b.p2);
  const double tol = cfg.tol.sup;
  r.chain.push_back(chain_check("quadratic_norm", poly_sup_norm(b.p2, cfg.norm).value, 2.0 * om, tol));
  r.chain.push_back(
      chain_check("bilinear_norm", form_sup_norm(SymmetricForm{b.p2}, cfg.norm).value, 2.0 * kappa * om, tol));
  r.chain.push_back(chain_check("mixed_term", poly_sup_norm(m3, cfg.norm).value, 4.0 * kappa * om * om, tol));
  r.chain.push_back(chain_check("cubic_combination", poly_sup_norm(b.p3 - m3, cfg.norm).value, om, tol));
  degree3_left(r, b.p3, cfg);
  r.bound = thm34_bound(alpha, n);
  finish(r, tol, cfg.tol.sharp);
  return r;
}

VerificationReport verify_thm35(const MappingFamily& f, double alpha, const VerifyConfig& cfg) {
  check_alpha(alpha);
  const int n = f.dimension();
  auto r = base_report("thm3.5", alpha, n, f.label());
  if (alpha > lemma38_threshold()) return skipped(r, "alpha outside [0, (37 - sqrt(505))/72]");
  const Blocks b(f);
  const auto a = diagonal_coefficients(b.p2);
  const auto c = diagonal_coefficients(b.p3);
  if (!a || !c) {
    r.verdict = Verdict::HypothesisFailed;
    r.note = "degree-2 and degree-3 blocks must be diagonal";
    return r;
  }
  if (!precheck(r, f, ClassTag::AlmostStarlike, alpha, cfg)) return r;
  const double om = 1.0 - alpha;
  const double tol = cfg.tol.coeff;

  double M = 0.0;
  for (cplx ak : *a) M = std::max(M, std::abs(ak));
  r.chain.push_back(chain_check("coefficient_range", M, 2.0 * om, tol));
  if (M <= 2.0 * om)
    r.chain.push_back(chain_check("cubic_monotone", h_cubic(alpha, M), h_cubic(alpha, 2.0 * om), tol));

  // Pointwise chain at the achieving coordinate of sampled unit vectors.
  const VectorJet g = g_star(b.jet);
  const HomogeneousPoly g2 = extract_homogeneous(g, 2);
  const HomogeneousPoly g3 = extract_homogeneous(g, 3);
  const HomogeneousPoly g4 = extract_homogeneous(g, 4);
  static const char* const names[] = {"caratheodory_third", "g_to_f_identity", "diagonal_third", "diagonal_second",
                                      "cubic_majorant"};
  constexpr std::size_t kChecks = 5;
  struct Terms {
    double left[kChecks];
    double bound[kChecks];
  };
  auto terms_at = [&, om](std::span<const cplx> z, PolyEvaluator& e2, PolyEvaluator& e3, PolyEvaluator& e4,
                          PolyEvaluator& f4) {
    Terms t{};
    const int j = achieving_index(z);
    const auto js = static_cast<std::size_t>(j);
    const cplx zeta = z[js] / max_norm(z);
    const cplx c1 = e2(z)[js] / zeta, c2 = e3(z)[js] / zeta, c3 = e4(z)[js] / zeta;
    const cplx aj = (*a)[js], bj = (*c)[js];
    const cplx z3 = zeta * zeta * zeta;
    const double reduced_c = 2.0 * om - std::norm(c1) / (2.0 * om);
    const double reduced_a = 2.0 * om - std::norm(aj) / (2.0 * om);
    const cplx p4 = f4(z)[js];
    t.left[0] = std::abs(c3 - c1 * c2 / om + c1 * c1 * c1 / (4.0 * om * om));
    t.bound[0] = reduced_c;
    t.left[1] = std::abs(-3.0 * p4 / zeta - (c3 + 4.0 * aj * aj * aj * z3 - 7.0 * aj * bj * z3));
    t.bound[1] = 0.0;
    t.left[2] = std::abs(c3 + (7.0 - 8.0 * alpha) / (4.0 * om * om) * aj * aj * aj * z3 - 2.0 / om * aj * bj * z3);
    t.bound[2] = reduced_a;
    t.left[3] = std::abs(((3.0 - 4.0 * alpha) / (2.0 * om) * aj * aj - 2.0 * bj) * zeta * zeta);
    t.bound[3] = reduced_a;
    t.left[4] = 3.0 * std::abs(p4);
    t.bound[4] = h_cubic(alpha, std::abs(aj));
    return t;
  };
  const ShellSampler sampler = direction_sampler(n, cfg);
  auto make_eval = [&] {
    return [&, z = CVec(static_cast<std::size_t>(n)), e2 = PolyEvaluator(g2), e3 = PolyEvaluator(g3),
            e4 = PolyEvaluator(g4), f4 = PolyEvaluator(b.p4)](std::size_t i, std::span<double> out) mutable {
      sampler.point(i, z);
      const Terms t = terms_at(z, e2, e3, e4, f4);
      for (std::size_t k = 0; k < kChecks; ++k) out[k] = t.bound[k] - t.left[k];
    };
  };
  const auto worst = kernels::min_each(cfg.norm.exec, sampler.size(), kChecks, make_eval);
  {
    CVec z(static_cast<std::size_t>(n));
    PolyEvaluator e2(g2), e3(g3), e4(g4), f4(b.p4);
    for (std::size_t k = 0; k < kChecks; ++k) {
      sampler.point(worst[k].index, z);
      const Terms t = terms_at(z, e2, e3, e4, f4);
      r.chain.push_back(chain_check(names[k], t.left[k], t.bound[k], tol));
    }
  }

  const NormEstimate est = poly_sup_norm(b.p4, cfg.norm);
  r.left = est.value;
  r.norm = est;
  r.samples = grid_samples(est, n) + sampler.size();
  r.bound = thm35_bound(alpha);
  if (const auto u = sharp_direction(f, ClassTag::AlmostStarlike, alpha))
    r.sharp_gap = sharp_gap(*u, cfg.sharp_radii, 4, r.bound, [&](const CVec& x) { return norm_of(b.p4, x); });
  finish(r, cfg.tol.sup, cfg.tol.sharp);
  return r;
}

}  // namespace hexp
