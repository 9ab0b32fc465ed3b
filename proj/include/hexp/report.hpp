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
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hexp/inequalities.hpp"

namespace hexp {

// Report schema. JSON Lines, one object per line:
//
//   {"type":"header","tool":"hexp","schema":1,"seed":...,"config":{...}}
//   {"type":"check","theorem":...,"alpha":...,"n":...,"family":...,"left":...,
//    "bound":...,"margin":...,"sharp_gap":...|null,"sharp":...,"samples":...,
//    "grid":...|null,"depth":...|null,"chain":[{"name","left","bound","margin","pass"}],
//    "certificate":{...}|null,"verdict":...,"note":...}
//   {"type":"summary","checks":...,"pass":...,"fail":...,"hypothesis_failed":...,"skipped":...}
//
// The CSV form carries the scalar columns of the check objects.

struct SuiteSummary {
  std::size_t checks = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t hypothesis_failed = 0;
  std::size_t skipped = 0;

  /// True when nothing failed; skipped checks do not count against the run.
  bool ok() const { return fail == 0 && hypothesis_failed == 0; }
};

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const ClassCertificate& c);

std::string render_jsonl(const std::vector<VerificationReport>& reports, std::uint64_t seed,
                         const nlohmann::ordered_json& config);
std::string render_csv(const std::vector<VerificationReport>& reports, std::uint64_t seed);
/// One line per check plus a count line, for terminals.
std::string render_text_summary(const std::vector<VerificationReport>& reports);

/// Writes to a sibling temporary file and renames it over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hexp
