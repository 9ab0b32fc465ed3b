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

#include "hexp/mappings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hexp/forms.hpp"
#include "hexp/format.hpp"

namespace hexp {

std::string to_string(ClassTag c) { return c == ClassTag::QuasiConvex ? "quasi_convex" : "almost_starlike"; }

std::string to_string(CertVerdict v) {
  switch (v) {
    case CertVerdict::Pass: return "pass";
    case CertVerdict::Fail: return "fail";
    case CertVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
}

bool is_half(double alpha) { return alpha == 0.5; }

// exp(w) - 1, accurate for small |w| (the qc extremal divides it by 2 alpha - 1).
cplx expm1_c(cplx w) {
  if (std::abs(w) > 0.1) return std::exp(w) - 1.0;
  cplx term = w, sum = w;
  for (int k = 2; k < 20; ++k) sum += (term *= w / static_cast<double>(k));
  return sum;
}

// binom(x, k) for real x.
double gen_binom(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (x - i) / (i + 1);
  return r;
}

}  // namespace

std::array<double, kOrder + 1> UnivariateMap::taylor() const {
  std::array<double, kOrder + 1> a{};
  a[1] = 1.0;
  switch (kind) {
    case Kind::Identity:
      break;
    case Kind::QuasiConvexExtremal:
      if (is_half(alpha)) {
        // -log(1 - t)
        for (int m = 2; m <= kOrder; ++m) a[static_cast<std::size_t>(m)] = 1.0 / m;
      } else {
        // (1 - (1 - t)^g)/g with g = 2 alpha - 1
        const double g = 2.0 * alpha - 1.0;
        for (int m = 2; m <= kOrder; ++m)
          a[static_cast<std::size_t>(m)] = -gen_binom(g, m) * ((m % 2) ? -1.0 : 1.0) / g;
      }
      break;
    case Kind::AlmostStarlikeExtremal:
      if (is_half(alpha)) {
        // t e^t
        double fact = 1.0;
        for (int m = 2; m <= kOrder; ++m) {
          fact *= (m - 1);
          a[static_cast<std::size_t>(m)] = 1.0 / fact;
        }
      } else {
        // t (1 - b t)^{-c}, b = 1 - 2 alpha, c = 2(1 - alpha)/b; coefficient
        // prod_{i<k} (c + i) b / k! is formed as prod (c b + i b) to stay finite near alpha = 1/2.
        const double b = 1.0 - 2.0 * alpha;
        const double cb = 2.0 * (1.0 - alpha);
        double coef = 1.0;
        for (int k = 1; k < kOrder; ++k) {
          coef *= (cb + (k - 1) * b) / k;
          a[static_cast<std::size_t>(k + 1)] = coef;
        }
      }
      break;
  }
  return a;
}

cplx UnivariateMap::quasi_ratio(cplx t) const {
  switch (kind) {
    case Kind::Identity:
      return 1.0;
    case Kind::QuasiConvexExtremal:
      return (1.0 + (1.0 - 2.0 * alpha) * t) / (1.0 - t);
    case Kind::AlmostStarlikeExtremal: {
      const double b = 1.0 - 2.0 * alpha;
      return (1.0 + (1.0 + b) * t) / (1.0 - b * t) + t / (1.0 + t);
    }
  }
  return 1.0;
}

cplx UnivariateMap::star_ratio(cplx t) const {
  switch (kind) {
    case Kind::Identity:
      return 1.0;
    case Kind::QuasiConvexExtremal: {
      const cplx one_minus = 1.0 - t;
      const double g = 2.0 * alpha - 1.0;
      const cplx f = is_half(alpha) ? -std::log(one_minus) : -expm1_c(g * std::log(one_minus)) / g;
      return f * std::pow(one_minus, 2.0 - 2.0 * alpha) / t;
    }
    case Kind::AlmostStarlikeExtremal:
      return (1.0 - (1.0 - 2.0 * alpha) * t) / (1.0 + t);
  }
  return 1.0;
}

std::optional<double> UnivariateMap::certified_order(ClassTag c) const {
  switch (kind) {
    case Kind::Identity:
      return 1.0;
    case Kind::QuasiConvexExtremal:
      if (c == ClassTag::QuasiConvex) return alpha;
      return std::nullopt;
    case Kind::AlmostStarlikeExtremal:
      if (c == ClassTag::AlmostStarlike) return alpha;
      return std::nullopt;
  }
  return std::nullopt;
}

std::string UnivariateMap::label() const {
  switch (kind) {
    case Kind::Identity: return "id";
    case Kind::QuasiConvexExtremal: return "qc:" + format_double(alpha);
    case Kind::AlmostStarlikeExtremal: return "st:" + format_double(alpha);
  }
  return "?";
}

// ---------------------------------------------------------------------------

namespace {

void check_direction(const CVec& u) {
  if (u.empty() || static_cast<int>(u.size()) > kMaxDim) throw std::invalid_argument("direction: dimension out of range");
  if (std::abs(max_norm(u) - 1.0) > 1e-12) throw std::invalid_argument("direction u must have max-norm 1");
}

std::string direction_label(const CVec& u) {
  const int n = static_cast<int>(u.size());
  for (int k = 0; k < n; ++k) {
    bool unit = true;
    for (int l = 0; l < n; ++l) unit = unit && u[static_cast<std::size_t>(l)] == cplx(l == k ? 1.0 : 0.0);
    if (unit) return "e" + std::to_string(k + 1);
  }
  std::string s = "(";
  for (int k = 0; k < n; ++k) {
    if (k) s += ",";
    const cplx c = u[static_cast<std::size_t>(k)];
    s += format_double(c.real());
    if (c.imag() != 0.0) s += (c.imag() > 0 ? "+" : "") + format_double(c.imag()) + "i";
  }
  return s + ")";
}

UnivariateMap directional_profile(const MappingFamily::Variant& v) {
  if (const auto* q = std::get_if<MappingFamily::QuasiConvexExtremal>(&v))
    return {UnivariateMap::Kind::QuasiConvexExtremal, q->alpha};
  const auto& s = std::get<MappingFamily::AlmostStarlikeExtremal>(v);
  return {UnivariateMap::Kind::AlmostStarlikeExtremal, s.alpha};
}

const CVec& direction_of(const MappingFamily::Variant& v) {
  if (const auto* q = std::get_if<MappingFamily::QuasiConvexExtremal>(&v)) return q->u;
  return std::get<MappingFamily::AlmostStarlikeExtremal>(v).u;
}

}  // namespace

MappingFamily MappingFamily::quasi_convex_extremal(double alpha, CVec u) {
  check_alpha(alpha);
  check_direction(u);
  return MappingFamily(QuasiConvexExtremal{alpha, std::move(u)});
}

MappingFamily MappingFamily::almost_starlike_extremal(double alpha, CVec u) {
  check_alpha(alpha);
  check_direction(u);
  return MappingFamily(AlmostStarlikeExtremal{alpha, std::move(u)});
}

MappingFamily MappingFamily::diagonal(std::vector<UnivariateMap> parts) {
  if (parts.empty() || static_cast<int>(parts.size()) > kMaxDim)
    throw std::invalid_argument("diagonal: dimension out of range");
  for (const auto& p : parts)
    if (p.kind != UnivariateMap::Kind::Identity) check_alpha(p.alpha);
  return MappingFamily(DiagonalProduct{std::move(parts)});
}

MappingFamily MappingFamily::diagonal_quasi_convex(int n, double alpha) {
  return diagonal(std::vector<UnivariateMap>(static_cast<std::size_t>(n),
                                             {UnivariateMap::Kind::QuasiConvexExtremal, alpha}));
}

MappingFamily MappingFamily::diagonal_almost_starlike(int n, double alpha) {
  return diagonal(std::vector<UnivariateMap>(static_cast<std::size_t>(n),
                                             {UnivariateMap::Kind::AlmostStarlikeExtremal, alpha}));
}

MappingFamily MappingFamily::identity(int n) {
  return diagonal(std::vector<UnivariateMap>(static_cast<std::size_t>(n), UnivariateMap{}));
}

MappingFamily MappingFamily::user(VectorJet jet, std::string label) {
  if (!jet.normalized()) throw std::invalid_argument("user jet must be normalized (f(0) = 0, Df(0) = I)");
  return MappingFamily(UserJet{std::move(jet), std::move(label)});
}

int MappingFamily::dimension() const {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DiagonalProduct>) return static_cast<int>(v.parts.size());
        else if constexpr (std::is_same_v<T, UserJet>) return v.jet.dimension();
        else return static_cast<int>(v.u.size());
      },
      v_);
}

std::string MappingFamily::label() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, QuasiConvexExtremal>)
          return "quasi_convex_extremal(alpha=" + format_double(v.alpha) + ",u=" + direction_label(v.u) + ")";
        else if constexpr (std::is_same_v<T, AlmostStarlikeExtremal>)
          return "almost_starlike_extremal(alpha=" + format_double(v.alpha) + ",u=" + direction_label(v.u) + ")";
        else if constexpr (std::is_same_v<T, DiagonalProduct>) {
          std::string s = "diagonal[";
          for (std::size_t k = 0; k < v.parts.size(); ++k) s += (k ? "," : "") + v.parts[k].label();
          return s + "]";
        } else
          return "user(" + v.label + ")";
      },
      v_);
}

std::optional<double> MappingFamily::certified_order(ClassTag c) const {
  if (const auto* q = std::get_if<QuasiConvexExtremal>(&v_))
    return c == ClassTag::QuasiConvex ? std::optional<double>(q->alpha) : std::nullopt;
  if (const auto* s = std::get_if<AlmostStarlikeExtremal>(&v_))
    return c == ClassTag::AlmostStarlike ? std::optional<double>(s->alpha) : std::nullopt;
  if (const auto* d = std::get_if<DiagonalProduct>(&v_)) {
    double order = 1.0;
    for (const auto& p : d->parts) {
      const auto o = p.certified_order(c);
      if (!o) return std::nullopt;
      order = std::min(order, *o);
    }
    return order;
  }
  return std::nullopt;
}

std::optional<CVec> MappingFamily::extremal_direction() const {
  if (std::holds_alternative<UserJet>(v_)) return std::nullopt;
  if (const auto* d = std::get_if<DiagonalProduct>(&v_)) {
    CVec e(d->parts.size());
    e[0] = 1.0;
    return e;
  }
  return direction_of(v_);
}

std::optional<cplx> MappingFamily::closed_form_ratio(ClassTag c, std::span<const cplx> z, int j) const {
  if (std::holds_alternative<UserJet>(v_)) return std::nullopt;
  if (const auto* d = std::get_if<DiagonalProduct>(&v_))
    return d->parts[static_cast<std::size_t>(j)].ratio(c, z[static_cast<std::size_t>(j)]);
  // g(z) = z Q(T_u(z)), so every coordinate ratio equals Q(T_u(z)).
  const CVec& u = direction_of(v_);
  const cplx t = supporting_functional(u).apply(z);
  return directional_profile(v_).ratio(c, t);
}

// ---------------------------------------------------------------------------

int achieving_index(std::span<const cplx> z) {
  int j = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const double a = std::abs(z[k]);
    if (a > best) {
      best = a;
      j = static_cast<int>(k);
    }
  }
  return j;
}

double max_norm(std::span<const cplx> z) {
  double r = 0.0;
  for (cplx c : z) r = std::max(r, std::abs(c));
  return r;
}

SupportingFunctional supporting_functional(std::span<const cplx> z) {
  const int j = achieving_index(z);
  const cplx zj = z[static_cast<std::size_t>(j)];
  if (zj == cplx{}) throw std::invalid_argument("supporting functional of the zero vector");
  return {j, std::abs(zj) / zj};
}

cplx supporting_apply(std::span<const cplx> z, std::span<const cplx> v) {
  if (z.size() != v.size()) throw std::invalid_argument("supporting_apply: dimension mismatch");
  return supporting_functional(z).apply(v);
}

// ---------------------------------------------------------------------------

VectorJet jet_of(const MappingFamily& family) {
  const auto& v = family.variant();
  if (const auto* u = std::get_if<MappingFamily::UserJet>(&v)) return u->jet;
  const int n = family.dimension();
  std::vector<ScalarSeries> f;
  if (const auto* d = std::get_if<MappingFamily::DiagonalProduct>(&v)) {
    for (int k = 0; k < n; ++k) {
      const auto a = d->parts[static_cast<std::size_t>(k)].taylor();
      ScalarSeries s(n);
      for (int m = 1; m <= kOrder; ++m) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(k)] = m;
        s.set(MultiIndex(std::move(e)), a[static_cast<std::size_t>(m)]);
      }
      f.push_back(std::move(s));
    }
    return VectorJet(std::move(f));
  }
  // x F(t)/t with t = T_u(x): component p is x_p (1 + a_2 t + a_3 t^2 + a_4 t^3).
  const auto a = directional_profile(v).taylor();
  const auto tu = supporting_functional(direction_of(v));
  const ScalarSeries t = tu.phase * ScalarSeries::variable(n, tu.index);
  ScalarSeries g = ScalarSeries::constant(n, 1.0);
  ScalarSeries tp = ScalarSeries::constant(n, 1.0);
  for (int m = 2; m <= kOrder; ++m) {
    tp = tp * t;
    g += a[static_cast<std::size_t>(m)] * tp;
  }
  for (int p = 0; p < n; ++p) f.push_back(ScalarSeries::variable(n, p) * g);
  return VectorJet(std::move(f));
}

VectorJet second_derivative_contraction(const VectorJet& jet) {
  const int n = jet.dimension();
  std::vector<ScalarSeries> out;
  for (int p = 0; p < n; ++p) {
    ScalarSeries acc(n);
    for (int k = 0; k < n; ++k) {
      const ScalarSeries dk = jet[p].derivative(k);
      for (int l = 0; l < n; ++l) {
        const ScalarSeries dkl = dk.derivative(l);
        if (dkl.is_zero()) continue;
        acc += dkl * (ScalarSeries::variable(n, k) * ScalarSeries::variable(n, l));
      }
    }
    out.push_back(std::move(acc));
  }
  return VectorJet(std::move(out));
}

namespace {

void require_normalized(const VectorJet& jet) {
  if (!jet.normalized()) throw std::invalid_argument("g-operator requires a normalized jet");
}

}  // namespace

VectorJet g_quasi(const VectorJet& jet) {
  require_normalized(jet);
  const MatrixSeries df = jacobian(jet);
  const MatrixSeries inv = matrix_series_inverse(df);
  const VectorJet rhs = second_derivative_contraction(jet) + df * VectorJet::identity(jet.dimension());
  return inv * rhs;
}

VectorJet g_star(const VectorJet& jet) {
  require_normalized(jet);
  return matrix_series_inverse(jacobian(jet)) * jet;
}

std::vector<CVec> probe_points(int n) {
  // C(n+3, 4) monomials of degree 4
  long mono = 1;
  for (int i = 1; i <= 4; ++i) mono = mono * (n + 4 - i) / i;
  const std::size_t count = static_cast<std::size_t>(2 * mono + 8);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL + static_cast<unsigned>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<CVec> pts;
  for (std::size_t i = 0; i < count; ++i) {
    CVec z(static_cast<std::size_t>(n));
    for (auto& c : z) {
      const double r = std::sqrt(unit(rng));
      const double th = 2.0 * std::numbers::pi * unit(rng);
      c = std::polar(r, th);
    }
    pts.push_back(std::move(z));
  }
  return pts;
}

namespace {

double max_abs_diff(const CVec& a, const CVec& b) {
  double r = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) r = std::max(r, std::abs(a[k] - b[k]));
  return r;
}

}  // namespace

Lemma23Residual lemma23_residual(const VectorJet& jet) {
  const VectorJet g = g_quasi(jet);
  const HomogeneousPoly p2 = extract_homogeneous(jet, 2);
  const HomogeneousPoly p3 = extract_homogeneous(jet, 3);
  const HomogeneousPoly g2 = extract_homogeneous(g, 2);
  const HomogeneousPoly g3 = extract_homogeneous(g, 3);
  Lemma23Residual r;
  r.deg2 = (g2 - 2.0 * p2).max_coeff_abs();
  for (const auto& x : probe_points(jet.dimension())) {
    const CVec w = p2(x);
    const CVec mixed = mixed_d2(p2, x, w);
    CVec rhs = p3(x);
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = 6.0 * rhs[k] - 4.0 * mixed[k];
    r.deg3 = std::max(r.deg3, max_abs_diff(g3(x), rhs));
  }
  return r;
}

Lemma24Residual lemma24_residual(const VectorJet& jet) {
  const VectorJet g = g_star(jet);
  const HomogeneousPoly p2 = extract_homogeneous(jet, 2);
  const HomogeneousPoly p3 = extract_homogeneous(jet, 3);
  const HomogeneousPoly p4 = extract_homogeneous(jet, 4);
  const HomogeneousPoly g2 = extract_homogeneous(g, 2);
  const HomogeneousPoly g3 = extract_homogeneous(g, 3);
  const HomogeneousPoly g4 = extract_homogeneous(g, 4);
  Lemma24Residual r;
  r.deg2 = (g2 + p2).max_coeff_abs();
  for (const auto& x : probe_points(jet.dimension())) {
    const CVec w = p2(x);
    const CVec v3 = p3(x);
    const CVec l2w = polarize(p2, std::vector<CVec>{x, w});
    const CVec l3 = polarize(p3, std::vector<CVec>{x, x, w});
    const CVec l2v3 = polarize(p2, std::vector<CVec>{x, v3});
    const CVec l2l2 = polarize(p2, std::vector<CVec>{x, l2w});
    const CVec q4 = p4(x);
    CVec rhs3(x.size()), rhs4(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
      rhs3[k] = -2.0 * v3[k] + 2.0 * l2w[k];
      rhs4[k] = -3.0 * q4[k] + 3.0 * l3[k] + 4.0 * l2v3[k] - 4.0 * l2l2[k];
    }
    r.deg3 = std::max(r.deg3, max_abs_diff(g3(x), rhs3));
    r.deg4 = std::max(r.deg4, max_abs_diff(g4(x), rhs4));
  }
  return r;
}

VectorJet random_normalized_jet(int n, double radius, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto& table = MonomialTable::get(n);
  std::vector<ScalarSeries> f;
  for (int p = 0; p < n; ++p) {
    ScalarSeries s = ScalarSeries::variable(n, p);
    for (std::size_t i = table.degree_begin(2); i < table.size(); ++i) {
      const double r = radius * std::sqrt(unit(rng));
      const double th = 2.0 * std::numbers::pi * unit(rng);
      s.set_at(i, std::polar(r, th));
    }
    f.push_back(std::move(s));
  }
  return VectorJet(std::move(f));
}

// ---------------------------------------------------------------------------

ShellSampler::ShellSampler(int n, double radius, std::span<const double> moduli, int phases, std::size_t budget)
    : n_(n), r_(radius), phases_(phases) {
  if (moduli.empty() || moduli[0] != 1.0) throw std::invalid_argument("ShellSampler: modulus levels must start with 1");
  if (phases < 1) throw std::invalid_argument("ShellSampler: need at least one phase");
  const std::size_t levels = moduli.size();
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= levels;
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::vector<double> pat(static_cast<std::size_t>(n));
    std::size_t rem = idx;
    bool has_max = false;
    for (int k = n - 1; k >= 0; --k) {
      const std::size_t lvl = rem % levels;
      rem /= levels;
      pat[static_cast<std::size_t>(k)] = moduli[lvl];
      has_max = has_max || lvl == 0;
    }
    if (has_max) patterns_.push_back(std::move(pat));
  }
  auto phase_count = [&](int p) {
    std::size_t c = 1;
    for (int k = 0; k < n; ++k) c *= static_cast<std::size_t>(p);
    return c;
  };
  while (phases_ > 4 && phase_count(phases_) * patterns_.size() > budget) phases_ /= 2;
  phase_count_ = phase_count(phases_);
}

void ShellSampler::point(std::size_t i, std::span<cplx> out) const {
  const auto& pat = patterns_[i / phase_count_];
  std::size_t ph = i % phase_count_;
  const double step = 2.0 * std::numbers::pi / phases_;
  for (int k = n_ - 1; k >= 0; --k) {
    const auto digit = ph % static_cast<std::size_t>(phases_);
    ph /= static_cast<std::size_t>(phases_);
    out[static_cast<std::size_t>(k)] = std::polar(r_ * pat[static_cast<std::size_t>(k)], step * static_cast<double>(digit));
  }
}

ClassCertificate membership_test(const MappingFamily& family, ClassTag cls, double alpha, const MembershipPlan& plan) {
  if (plan.radii.empty() || plan.phases < 1 || plan.moduli.empty())
    throw std::invalid_argument("membership_test: sampling plan has no samples");
  for (double r : plan.radii)
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("membership_test: radii must lie in (0, 1)");
  const int n = family.dimension();

  std::optional<VectorJet> g;
  if (const auto* u = std::get_if<MappingFamily::UserJet>(&family.variant()))
    g = cls == ClassTag::QuasiConvex ? g_quasi(u->jet) : g_star(u->jet);

  auto ratio_at = [&](std::span<const cplx> z) -> double {
    const int j = achieving_index(z);
    const cplx v = g ? (*g)[j].evaluate(z) / z[static_cast<std::size_t>(j)] : *family.closed_form_ratio(cls, z, j);
    const double re = v.real();
    return std::isfinite(re) ? re : -std::numeric_limits<double>::infinity();
  };

  ClassCertificate cert;
  cert.cls = cls;
  cert.alpha = alpha;
  cert.truncated = g.has_value();
  cert.min_re = std::numeric_limits<double>::infinity();
  double inner_min = std::numeric_limits<double>::infinity();

  for (double r : plan.radii) {
    const ShellSampler shell(n, r, plan.moduli, plan.phases, plan.budget);
    auto make_eval = [&] {
      return [&, z = CVec(static_cast<std::size_t>(n))](std::size_t i) mutable {
        shell.point(i, z);
        return -ratio_at(z);
      };
    };
    const auto worst = kernels::best_k(plan.exec, shell.size(), 1, make_eval);
    cert.samples += shell.size();
    if (worst.empty()) continue;
    const double shell_min = -worst.front().value;
    if (r < plan.boundary_radius) inner_min = std::min(inner_min, shell_min);
    if (shell_min < cert.min_re) {
      cert.min_re = shell_min;
      cert.worst_point.assign(static_cast<std::size_t>(n), cplx{});
      shell.point(worst.front().index, cert.worst_point);
      cert.worst_index = achieving_index(cert.worst_point);
    }
  }

  const double floor = alpha - plan.stat_tol;
  if (cert.min_re >= floor) {
    cert.verdict = CertVerdict::Pass;
  } else if (cert.truncated && inner_min >= floor) {
    cert.verdict = CertVerdict::Inconclusive;
    cert.note = "violation only near the boundary, where the degree-4 truncation is unreliable";
  } else {
    cert.verdict = CertVerdict::Fail;
  }
  if (cert.truncated && cert.note.empty()) cert.note = "truncated: evaluated on the degree-4 jet of g";
  return cert;
}

}  // namespace hexp
