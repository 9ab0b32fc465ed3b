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

#include "hexp/suite.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "hexp/format.hpp"
#include "hexp/jet_io.hpp"

namespace hexp {

namespace {

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": not a number: " + v);
  }
  if (used != v.size()) throw ConfigError(key + ": not a number: " + v);
  return d;
}

int parse_int(const std::string& key, const std::string& v) {
  const double d = parse_double(key, v);
  if (d != static_cast<int>(d)) throw ConfigError(key + ": not an integer: " + v);
  return static_cast<int>(d);
}

cplx parse_complex(const std::string& s) {
  // "re", "re+imi", "re-imi", "imi"
  if (s.empty()) throw ConfigError("u: empty entry");
  if (s.back() != 'i') return parse_double("u", s);
  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  if (split == std::string::npos) return {0.0, parse_double("u", body.empty() || body == "+" ? "1" : body)};
  return {parse_double("u", body.substr(0, split)), parse_double("u", body.substr(split))};
}

CVec parse_direction(const std::string& u, int n) {
  CVec out(static_cast<std::size_t>(n));
  if (u.size() >= 2 && u[0] == 'e' && std::all_of(u.begin() + 1, u.end(), ::isdigit)) {
    const int k = std::stoi(u.substr(1));
    if (k < 1 || k > n) throw ConfigError("u=" + u + " out of range for n=" + std::to_string(n));
    out[static_cast<std::size_t>(k - 1)] = 1.0;
    return out;
  }
  std::vector<std::string> parts;
  std::stringstream ss(u);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (static_cast<int>(parts.size()) != n) throw ConfigError("u=" + u + " needs " + std::to_string(n) + " entries");
  for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = parse_complex(parts[static_cast<std::size_t>(k)]);
  return out;
}

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d = {
      {"lemma2.1",
       "Self-maps of the disk: if f = sum a_n z^n maps D into D then |a_n| <= 1 - |a_0|^2 for n >= 1.\n"
       "Inputs: s * B(z) with B a random finite Blaschke product and s in [0.5, 1]."},
      {"lemma2.2",
       "Caratheodory functions p = 1 + b1 z + b2 z^2 + ... with Re p >= a:\n"
       "  |b2 - b1^2/(2(1-a))|                        <= 2(1-a) - |b1|^2/(2(1-a))\n"
       "  |b3 - b1 b2/(1-a) + b1^3/(4(1-a)^2)|        <= 2(1-a) - |b1|^2/(2(1-a))\n"
       "  |b2|                                        <= 2(1-a)\n"
       "  |b2 - b1^2/(1-a)|                           <= 2(1-a)\n"
       "Inputs: p = (1 - (1-2a) w)/(1 + w) for random Schwarz functions w; w(z) = z gives equality in the first two."},
      {"lemma2.3",
       "Expansion of g = (Df)^{-1}(D^2 f(z)(z^2) + Df(z) z) for normalized f = z + P2 + P3 + ...:\n"
       "  g2 = 2 P2,  g3 = 6 P3 - 4 L(z, P2(z))  with L the symmetric bilinear form of P2."},
      {"lemma2.4",
       "Expansion of g = (Df)^{-1} f for normalized f = z + P2 + P3 + P4 + ...:\n"
       "  g2 = -P2,  g3 = -2 P3 + 2 L2(z, P2),\n"
       "  g4 = -3 P4 + 3 L3(z, z, P2) + 4 L2(z, P3) - 4 L2(z, L2(z, P2))."},
      {"thm2.1",
       "f quasi-convex of type B and order a:\n"
       "  |T_x(P3(x)) - (2/3) T_x(L(x, P2(x)))| <= (1-a)/3 ||x||^3.\n"
       "Sharp for f(x) = x F(T_u(x))/T_u(x), F(t) = (1 - (1-t)^(2a-1))/(2a-1) (or -log(1-t) at a = 1/2), x = r u."},
      {"thm2.2",
       "f quasi-convex of type B and order a on the polydisk:\n"
       "  ||P3(x) - (2/3) L(x, P2(x))|| <= (1-a)/3 ||x||^3.\n"
       "n = 1: |a3 - (2/3) a2^2| <= (1-a)/3 for convex functions of order a. Same extremal as thm2.1."},
      {"thm2.3",
       "f almost starlike of order a:\n"
       "  |2 T_x(P3(x)) ||x|| - 2 T_x(L(x, P2(x))) ||x|| + T_x(P2(x))^2/(1-a)| <= 2(1-a) ||x||^4.\n"
       "Sharp for f(x) = x (1 - (1-2a) T_u(x))^(-2(1-a)/(1-2a)) (or x e^{T_u(x)} at a = 1/2), x = r u."},
      {"corE", "Convex functions on the disk: |a3 - (2/3) a2^2| <= 1/3. Sharp for z/(1 - z)."},
      {"corF", "Starlike functions on the disk: |2 a3 - a2^2| <= 2. Sharp for the Koebe function z/(1 - z)^2."},
      {"thm3.1",
       "f quasi-convex of type B and order a on the polydisk:\n"
       "  ||P3(z)|| <= (1-a)(3-2a)/3 ||z||^3                                  (n = 2)\n"
       "  ||P3(z)|| <= (1-a)((3/2) sqrt(3) + 1 - (3/2) sqrt(3) a)/3 ||z||^3   (n >= 3)\n"
       "Sharp for n = 2: the diagonal map with components F(z_k), z = (r, 0)."},
      {"thm3.2",
       "f quasi-convex of type B and order a whose quadratic part is P2_k(z) = z_k sum_l a_kl z_l:\n"
       "  ||P3(z)|| <= (1-a)(3-2a)/3 ||z||^3 for every n. Sharp for the diagonal map, z = (r, 0, ..., 0)."},
      {"thm3.3",
       "f almost starlike of order a in [0, 1/2] with P2_k(z) = z_k sum_l a_kl z_l and M = max_k sum_l |a_kl|:\n"
       "  ||P3(z)|| <= (1 - a + ((1-2a)/(1-a)) M^2/2) ||z||^3 <= (1-a)(3-4a) ||z||^3.\n"
       "Sharp for the diagonal map with components z_k (1 - (1-2a) z_k)^(-2(1-a)/(1-2a)), M = 2(1-a)."},
      {"thm3.4",
       "f almost starlike of order a on the polydisk, no structural assumption:\n"
       "  ||P3(z)|| <= (1-a)(5-4a) ||z||^3                          (n = 2)\n"
       "  ||P3(z)|| <= (1-a)(3 sqrt(3) + 1 - 3 sqrt(3) a) ||z||^3   (n >= 3)"},
      {"thm3.5",
       "f almost starlike of order a in [0, (37 - sqrt(505))/72] with P2_k = a_k z_k^2, P3_k = b_k z_k^3:\n"
       "  ||P4(z)|| <= (1-a)(3-4a)(4-6a)/3 ||z||^4. Sharp for the diagonal almost starlike extremal."},
      {"lemma3.6",
       "Symmetric bilinear forms on l^inf_n: ||L|| = ||L^|| for n = 2 and ||L|| <= (3/4) sqrt(3) ||L^|| for n >= 3."},
      {"lemma3.8",
       "h(x) = ((12a^2 - 10a + 1)/(4(1-a)^2)) x^3 - x^2/(2(1-a)) + (5-7a) x + 2(1-a), a in [0, (37 - sqrt(505))/72]:\n"
       "  h is strictly increasing on [0, 2(1-a)] and h(2(1-a)) = (1-a)(3-4a)(4-6a)."},
  };
  return d;
}

struct Task {
  std::string theorem;
  double alpha = 0.0;
  int n = 1;
  std::optional<MappingFamily> family;
};

std::uint64_t task_seed(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

/// Keeps the check with the smallest margin; the verdict is the worst verdict seen.
VerificationReport aggregate(std::vector<VerificationReport> rs, std::string family) {
  std::size_t worst = 0;
  std::size_t samples = 0;
  bool failed = false;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    samples += rs[k].samples;
    const bool f = rs[k].verdict == Verdict::Fail;
    const bool wf = rs[worst].verdict == Verdict::Fail;
    if ((f && !wf) || (f == wf && rs[k].margin < rs[worst].margin)) worst = k;
    failed = failed || f;
  }
  VerificationReport r = std::move(rs[worst]);
  r.samples = samples;
  r.family = std::move(family);
  r.note = "worst of " + std::to_string(rs.size()) + " inputs";
  r.verdict = failed ? Verdict::Fail : Verdict::Pass;
  return r;
}

HomogeneousPoly random_quadratic(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  HomogeneousPoly p(n, 2);
  for (int k = 0; k < n; ++k)
    for (std::size_t t = 0; t < p.term_count(); ++t)
      p.set_term(k, t, std::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng)));
  return p;
}

VerificationReport run_task(const Task& t, const SuiteConfig& cfg, const VerifyConfig& vc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int count = cfg.samples;
  const std::string& id = t.theorem;
  if (id == "lemma2.1") {
    std::vector<VerificationReport> rs;
    for (int k = 0; k < count; ++k) rs.push_back(verify_lemma21(random_disk_self_map(rng, 6), vc.tol));
    return aggregate(std::move(rs), "random_disk_self_map(order=6)");
  }
  if (id == "lemma2.2") {
    std::vector<VerificationReport> rs;
    rs.push_back(verify_lemma22(schwarz_to_caratheodory({{0.0}, 1.0}, t.alpha), vc.tol));
    for (int k = 1; k < count; ++k)
      rs.push_back(verify_lemma22(schwarz_to_caratheodory(random_schwarz(rng), t.alpha), vc.tol));
    return aggregate(std::move(rs), "random_schwarz");
  }
  if (id == "lemma2.3" || id == "lemma2.4") {
    std::vector<VerificationReport> rs;
    for (int k = 0; k < count; ++k) {
      const VectorJet jet = random_normalized_jet(t.n, 0.2, rng);
      rs.push_back(id == "lemma2.3" ? verify_lemma23(jet, vc.tol) : verify_lemma24(jet, vc.tol));
    }
    return aggregate(std::move(rs), "random_jet(radius=0.2)");
  }
  if (id == "lemma3.6") {
    std::vector<VerificationReport> rs;
    for (int k = 0; k < cfg.quadratic_samples; ++k) rs.push_back(verify_lemma36(random_quadratic(t.n, rng), vc));
    return aggregate(std::move(rs), "random_quadratic");
  }
  if (id == "lemma3.8") return verify_lemma38(t.alpha, vc.tol);
  const MappingFamily& f = *t.family;
  if (id == "thm2.1") return verify_thm21(f, t.alpha, vc);
  if (id == "thm2.2") return verify_thm22(f, t.alpha, vc);
  if (id == "thm2.3") return verify_thm23(f, t.alpha, vc);
  if (id == "corE") return verify_corE(f, vc);
  if (id == "corF") return verify_corF(f, vc);
  if (id == "thm3.1") return verify_thm31(f, t.alpha, vc);
  if (id == "thm3.2") return verify_thm32(f, t.alpha, vc);
  if (id == "thm3.3") return verify_thm33(f, t.alpha, vc);
  if (id == "thm3.4") return verify_thm34(f, t.alpha, vc);
  if (id == "thm3.5") return verify_thm35(f, t.alpha, vc);
  throw ConfigError("unknown theorem id: " + id);
}

}  // namespace

// ---------------------------------------------------------------------------

std::string FamilySpec::text() const {
  std::string s = "family=" + kind;
  if (alpha) s += " alpha=" + format_double(*alpha);
  if (n) s += " n=" + std::to_string(*n);
  if (kind == "quasi_convex_extremal" || kind == "almost_starlike_extremal") s += " u=" + u;
  if (!path.empty()) s += " path=" + path;
  return s;
}

FamilySpec parse_family(const std::string& descriptor) {
  FamilySpec spec;
  std::stringstream ss(descriptor);
  bool has_family = false;
  for (std::string tok; ss >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ConfigError("family descriptor: expected key=value, got " + tok);
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "family") {
      spec.kind = val;
      has_family = true;
    } else if (key == "alpha") {
      spec.alpha = parse_double(key, val);
    } else if (key == "n") {
      spec.n = parse_int(key, val);
    } else if (key == "u") {
      spec.u = val;
    } else if (key == "path") {
      spec.path = val;
    } else {
      throw ConfigError("family descriptor: unknown key " + key);
    }
  }
  if (!has_family) throw ConfigError("family descriptor needs family=<kind>");
  static const std::vector<std::string> kinds = {"default",
                                                 "quasi_convex_extremal",
                                                 "almost_starlike_extremal",
                                                 "diagonal_quasi_convex",
                                                 "diagonal_almost_starlike",
                                                 "identity",
                                                 "user"};
  if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end())
    throw ConfigError("unknown family kind: " + spec.kind);
  if (spec.kind == "user" && spec.path.empty()) throw ConfigError("family=user needs path=<jet file>");
  if (spec.alpha && !(*spec.alpha >= 0.0 && *spec.alpha < 1.0)) throw ConfigError("family alpha must lie in [0, 1)");
  if (spec.n && (*spec.n < 1 || *spec.n > kMaxDim)) throw ConfigError("family n out of range");
  return spec;
}

MappingFamily build_family(const FamilySpec& spec, const std::string& theorem, double alpha, int n) {
  const double a = spec.alpha.value_or(alpha);
  const int dim = spec.n.value_or(n);
  std::string kind = spec.kind;
  if (kind == "default") {
    if (theorem == "thm2.1" || theorem == "thm2.2") kind = "quasi_convex_extremal";
    else if (theorem == "thm2.3") kind = "almost_starlike_extremal";
    else if (theorem == "thm3.1" || theorem == "thm3.2" || theorem == "corE") kind = "diagonal_quasi_convex";
    else kind = "diagonal_almost_starlike";
  }
  try {
    if (kind == "quasi_convex_extremal") return MappingFamily::quasi_convex_extremal(a, parse_direction(spec.u, dim));
    if (kind == "almost_starlike_extremal")
      return MappingFamily::almost_starlike_extremal(a, parse_direction(spec.u, dim));
    if (kind == "diagonal_quasi_convex") return MappingFamily::diagonal_quasi_convex(dim, a);
    if (kind == "diagonal_almost_starlike") return MappingFamily::diagonal_almost_starlike(dim, a);
    if (kind == "identity") return MappingFamily::identity(dim);
    if (kind == "user") return MappingFamily::user(read_jet_file(spec.path), spec.path);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(spec.text() + ": " + e.what());
  }
  throw ConfigError("unknown family kind: " + kind);
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"lemma2.1", "lemma2.2", "lemma2.3", "lemma2.4", "thm2.1", "thm2.2",
                                               "thm2.3",   "corE",     "corF",     "thm3.1",   "thm3.2", "thm3.3",
                                               "thm3.4",   "thm3.5",   "lemma3.6", "lemma3.8"};
  return ids;
}

std::string canonical_theorem(const std::string& id) {
  std::string low = id;
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
  if (low == "cor2.2") return "thm2.2";
  if (low == "cor2.3") return "thm2.3";
  if (low == "cor3.3") return "thm3.3";
  if (low == "core") return "corE";
  if (low == "corf") return "corF";
  for (const auto& k : theorem_ids())
    if (k == low) return k;
  throw ConfigError("unknown theorem id: " + id);
}

std::string describe(const std::string& id) {
  const std::string key = canonical_theorem(id);
  std::string text = key + "\n" + descriptions().at(key) + "\n";
  std::string low = id;
  std::transform(low.begin(), low.end(), low.begin(), [](unsigned char c) { return std::tolower(c); });
  if (low == "cor3.3")
    text += "Refined bound: 1 - a + ((1-2a)/(1-a)) M^2/2 with M = max_k sum_l |a_kl|, checked by thm3.3.\n";
  return text;
}

void SuiteConfig::validate() const {
  if (theorems.empty()) throw ConfigError("no theorem selected");
  for (const auto& t : theorems)
    if (t != "all") canonical_theorem(t);
  if (alphas.empty()) throw ConfigError("no alpha values");
  for (double a : alphas)
    if (!(a >= 0.0 && a < 1.0)) throw ConfigError("alpha must lie in [0, 1): " + format_double(a));
  if (ns.empty()) throw ConfigError("no dimensions");
  for (int n : ns)
    if (n < 1 || n > kMaxDim) throw ConfigError("n must lie in [1, " + std::to_string(kMaxDim) + "]");
  if (grid != 0 && grid < 8) throw ConfigError("grid must be 0 (default) or at least 8");
  if (refine < 0) throw ConfigError("refine must be non-negative");
  if (samples < 1 || quadratic_samples < 1) throw ConfigError("samples must be positive");
  if (tol && !(*tol > 0.0)) throw ConfigError("tol must be positive");
}

nlohmann::ordered_json SuiteConfig::to_json() const {
  nlohmann::ordered_json fam = nlohmann::ordered_json::array();
  for (const auto& f : families) fam.push_back(f.text());
  return {{"theorems", theorems},
          {"alphas", alphas},
          {"ns", ns},
          {"families", fam},
          {"grid", grid},
          {"refine", refine},
          {"tol_sup", tol ? nlohmann::ordered_json(*tol) : nlohmann::ordered_json(Tolerances{}.sup)},
          {"samples", samples},
          {"quadratic_samples", quadratic_samples}};
}

VerifyConfig SuiteConfig::verify_config() const {
  VerifyConfig vc;
  vc.norm.grid = grid;
  vc.norm.refine = refine;
  vc.norm.exec = exec;
  vc.membership.exec = exec;
  if (tol) vc.tol.sup = *tol;
  return vc;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  std::vector<std::string> selected;
  for (const auto& t : cfg.theorems) {
    if (t == "all") {
      for (const auto& id : theorem_ids()) selected.push_back(id);
    } else {
      selected.push_back(canonical_theorem(t));
    }
  }
  // duplicates would only repeat identical work
  std::vector<std::string> unique;
  for (const auto& s : selected)
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(s);

  const std::vector<FamilySpec> defaults{FamilySpec{}};
  const auto& families = cfg.families.empty() ? defaults : cfg.families;

  std::vector<Task> tasks;
  for (const auto& id : unique) {
    if (id == "lemma2.1") {
      tasks.push_back({id, 0.0, 1, std::nullopt});
    } else if (id == "lemma2.2" || id == "lemma3.8") {
      for (double a : cfg.alphas) tasks.push_back({id, a, 1, std::nullopt});
    } else if (id == "lemma2.3" || id == "lemma2.4" || id == "lemma3.6") {
      for (int n : cfg.ns) tasks.push_back({id, 0.0, n, std::nullopt});
    } else if (id == "corE" || id == "corF") {
      for (const auto& spec : families) {
        FamilySpec one = spec;
        if (one.kind != "user") one.n = 1;
        const MappingFamily f = build_family(one, id, 0.0, 1);
        tasks.push_back({id, 0.0, f.dimension(), f});
      }
    } else {
      for (double a : cfg.alphas)
        for (const auto& spec : families) {
          std::vector<int> dims = cfg.ns;
          if (spec.kind == "user") dims = {0};
          else if (spec.n) dims = {*spec.n};
          for (int n : dims) {
            const MappingFamily f = build_family(spec, id, a, n);
            tasks.push_back({id, a, f.dimension(), f});
          }
        }
    }
  }

  const VerifyConfig vc = cfg.verify_config();
  std::vector<VerificationReport> out(tasks.size());
  const auto total = static_cast<std::int64_t>(tasks.size());
  auto run_one = [&](std::size_t i) {
    const Task& t = tasks[i];
    try {
      out[i] = run_task(t, cfg, vc, task_seed(cfg.seed, i));
    } catch (const std::exception& e) {
      VerificationReport r;
      r.theorem = t.theorem;
      r.alpha = t.alpha;
      r.n = t.n;
      r.family = t.family ? t.family->label() : "";
      r.verdict = Verdict::Fail;
      r.note = std::string("error: ") + e.what();
      out[i] = std::move(r);
    }
  };
  if (cfg.exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < total; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < total; ++i) run_one(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace hexp
