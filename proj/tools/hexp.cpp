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

// Command-line front end: verify, identities, describe.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>

#include "hexp/mappings.hpp"
#include "hexp/report.hpp"
#include "hexp/suite.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int run_verify(const hexp::SuiteConfig& cfg, const std::string& out, const std::string& format) {
  const auto reports = hexp::run_suite(cfg);
  const std::string body =
      format == "csv" ? hexp::render_csv(reports, cfg.seed) : hexp::render_jsonl(reports, cfg.seed, cfg.to_json());
  if (out.empty()) {
    std::cout << body;
  } else {
    hexp::write_atomic(out, body);
  }
  std::cerr << hexp::render_text_summary(reports);
  return hexp::summarize(reports).ok() ? 0 : kExitFail;
}

// Residual histogram in decades, bucket k holding [1e-(17-k), 1e-(16-k)).
int run_identities(int samples, const std::vector<int>& ns, std::uint64_t seed, double radius) {
  constexpr double kTol = 1e-10;
  bool ok = true;
  for (int n : ns) {
    if (n < 1 || n > hexp::kMaxDim) throw hexp::ConfigError("n out of range");
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
    std::vector<int> h23(9, 0), h24(9, 0);
    double worst23 = 0.0, worst24 = 0.0;
    auto bucket = [](double r) {
      if (r <= 0.0) return 0;
      const int k = static_cast<int>(std::floor(std::log10(r))) + 17;
      return std::clamp(k, 0, 8);
    };
    for (int s = 0; s < samples; ++s) {
      const auto jet = hexp::random_normalized_jet(n, radius, rng);
      const auto a = hexp::lemma23_residual(jet);
      const auto b = hexp::lemma24_residual(jet);
      const double r23 = std::max(a.deg2, a.deg3);
      const double r24 = std::max({b.deg2, b.deg3, b.deg4});
      ++h23[static_cast<std::size_t>(bucket(r23))];
      ++h24[static_cast<std::size_t>(bucket(r24))];
      worst23 = std::max(worst23, r23);
      worst24 = std::max(worst24, r24);
    }
    std::printf("n=%d  samples=%d  radius=%g\n", n, samples, radius);
    std::printf("  %-12s %10s %10s\n", "residual", "lemma2.3", "lemma2.4");
    for (int k = 0; k < 9; ++k) {
      char label[32];
      if (k == 0) std::snprintf(label, sizeof label, "< 1e-16");
      else if (k == 8) std::snprintf(label, sizeof label, ">= 1e-9");
      else std::snprintf(label, sizeof label, "< 1e-%d", 16 - k);
      std::printf("  %-12s %10d %10d\n", label, h23[static_cast<std::size_t>(k)], h24[static_cast<std::size_t>(k)]);
    }
    std::printf("  max          %10.3g %10.3g\n", worst23, worst24);
    ok = ok && worst23 < kTol && worst24 < kTol;
  }
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks of sharp coefficient inequalities for quasi-convex and almost starlike mappings"};
  app.require_subcommand(1);

  hexp::SuiteConfig cfg;
  std::vector<std::string> families;
  std::string out;
  std::string format = "report";
  double tol = 0.0;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a report");
  verify->add_option("--theorem", cfg.theorems, "Theorem ids, comma separated, or 'all'")->delimiter(',');
  verify->add_option("--alpha", cfg.alphas, "Orders alpha in [0, 1), comma separated")->delimiter(',');
  verify->add_option("--n", cfg.ns, "Dimensions, comma separated")->delimiter(',');
  verify->add_option("--family", families, "Family descriptor, e.g. 'family=quasi_convex_extremal alpha=0.25 u=e1'");
  verify->add_option("--grid", cfg.grid, "Phase samples per variable (0 = default)");
  verify->add_option("--refine", cfg.refine, "Golden-section steps per coordinate");
  verify->add_option("--seed", cfg.seed, "Seed for randomized inputs");
  auto* tol_opt = verify->add_option("--tol", tol, "Tolerance for grid-sampled sup comparisons");
  verify->add_option("--samples", cfg.samples, "Random inputs per randomized check");
  verify->add_option("--out", out, "Report path (written atomically); stdout when omitted");
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"report", "csv"}));
  verify->add_flag("--serial", serial, "Use the serial reference kernels");

  int id_samples = 1000;
  std::vector<int> id_ns{1, 2, 3, 4};
  std::uint64_t id_seed = 0;
  double id_radius = 0.2;
  auto* identities = app.add_subcommand("identities", "Residual histogram of the g-expansion identities");
  identities->add_option("--samples", id_samples, "Random jets per dimension");
  identities->add_option("--n", id_ns, "Dimensions, comma separated")->delimiter(',');
  identities->add_option("--seed", id_seed, "Seed");
  identities->add_option("--radius", id_radius, "Coefficient disk radius");

  std::string describe_id;
  auto* describe = app.add_subcommand("describe", "Print the statement checked for a theorem id");
  describe->add_option("id", describe_id, "Theorem id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) {
      for (const auto& f : families) cfg.families.push_back(hexp::parse_family(f));
      if (*tol_opt) cfg.tol = tol;
      if (serial) cfg.exec = hexp::Execution::Serial;
      return run_verify(cfg, out, format);
    }
    if (*identities) {
      if (id_samples < 1 || !(id_radius > 0.0)) throw hexp::ConfigError("samples and radius must be positive");
      return run_identities(id_samples, id_ns, id_seed, id_radius);
    }
    if (*describe) {
      std::cout << hexp::describe(describe_id);
      return 0;
    }
  } catch (const hexp::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
