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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexp/inequalities.hpp"

namespace hexp {

/// Raised for malformed suite configurations (CLI exit code 2).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Parsed family descriptor such as "family=quasi_convex_extremal alpha=0.25 n=2 u=e1".
/// Unset alpha and n follow the suite tuple.
struct FamilySpec {
  std::string kind = "default";
  std::optional<double> alpha;
  std::optional<int> n;
  std::string u = "e1";  ///< "eK" or comma-separated complex entries "re[+imi]"
  std::string path;      ///< jet file for kind = user

  std::string text() const;
};

FamilySpec parse_family(const std::string& descriptor);
/// Family for a suite tuple; throws ConfigError on unknown kinds or bad directions.
MappingFamily build_family(const FamilySpec& spec, const std::string& theorem, double alpha, int n);

/// Known theorem ids in canonical order.
const std::vector<std::string>& theorem_ids();
/// Resolves aliases (cor2.2, cor2.3, cor3.3) and validates; throws ConfigError.
std::string canonical_theorem(const std::string& id);
std::string describe(const std::string& id);

struct SuiteConfig {
  std::vector<std::string> theorems{"all"};
  std::vector<double> alphas{0.0, 0.1, 0.25, 0.4, 0.5 - 1e-6, 0.5, 0.75, 0.9};
  std::vector<int> ns{1, 2, 3};
  std::vector<FamilySpec> families;  ///< empty: the extremal family of each theorem
  int grid = 0;
  int refine = 40;
  std::uint64_t seed = 0;
  std::optional<double> tol;  ///< overrides the sampled-sup tolerance
  int samples = 200;          ///< random inputs per randomized check
  int quadratic_samples = 20; ///< random quadratics per polarization check
  Execution exec = Execution::Parallel;

  /// Throws ConfigError when a value is out of range.
  void validate() const;
  nlohmann::ordered_json to_json() const;
  VerifyConfig verify_config() const;
};

/// Runs every selected check; output order depends only on the configuration.
std::vector<VerificationReport> run_suite(const SuiteConfig& cfg);

}  // namespace hexp
