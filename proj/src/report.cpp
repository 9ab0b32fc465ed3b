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

#include "hexp/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hexp/format.hpp"

namespace hexp {

namespace {

using json = nlohmann::ordered_json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_vec(const CVec& z) {
  json a = json::array();
  for (cplx c : z) a.push_back(json::array({number(c.real()), number(c.imag())}));
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

}  // namespace

SuiteSummary summarize(const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.checks;
    switch (r.verdict) {
      case Verdict::Pass: ++s.pass; break;
      case Verdict::Fail: ++s.fail; break;
      case Verdict::HypothesisFailed: ++s.hypothesis_failed; break;
      case Verdict::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

json to_json(const ClassCertificate& c) {
  return {{"class", to_string(c.cls)},
          {"alpha", number(c.alpha)},
          {"min_re", number(c.min_re)},
          {"samples", c.samples},
          {"worst_point", complex_vec(c.worst_point)},
          {"worst_index", c.worst_index + 1},
          {"truncated", c.truncated},
          {"verdict", to_string(c.verdict)},
          {"note", c.note}};
}

json to_json(const VerificationReport& r) {
  json chain = json::array();
  for (const auto& c : r.chain)
    chain.push_back(
        {{"name", c.name}, {"left", number(c.left)}, {"bound", number(c.bound)}, {"margin", number(c.margin)}, {"pass", c.pass}});
  json j;
  j["type"] = "check";
  j["theorem"] = r.theorem;
  j["alpha"] = number(r.alpha);
  j["n"] = r.n;
  j["family"] = r.family;
  j["left"] = number(r.left);
  j["bound"] = number(r.bound);
  j["margin"] = number(r.margin);
  j["sharp_gap"] = r.sharp_gap ? number(*r.sharp_gap) : json(nullptr);
  j["sharp"] = r.sharp;
  j["samples"] = r.samples;
  j["grid"] = r.norm ? json(r.norm->grid) : json(nullptr);
  j["depth"] = r.norm ? json(r.norm->depth) : json(nullptr);
  j["chain"] = std::move(chain);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : json(nullptr);
  j["verdict"] = to_string(r.verdict);
  j["note"] = r.note;
  return j;
}

std::string render_jsonl(const std::vector<VerificationReport>& reports, std::uint64_t seed, const json& config) {
  std::ostringstream out;
  out << json{{"type", "header"}, {"tool", "hexp"}, {"schema", 1}, {"seed", seed}, {"config", config}}.dump() << '\n';
  for (const auto& r : reports) out << to_json(r).dump() << '\n';
  const SuiteSummary s = summarize(reports);
  out << json{{"type", "summary"},
              {"checks", s.checks},
              {"pass", s.pass},
              {"fail", s.fail},
              {"hypothesis_failed", s.hypothesis_failed},
              {"skipped", s.skipped}}
             .dump()
      << '\n';
  return out.str();
}

std::string render_csv(const std::vector<VerificationReport>& reports, std::uint64_t seed) {
  std::ostringstream out;
  out << "# seed=" << seed << '\n';
  out << "theorem,alpha,n,family,left,bound,margin,sharp_gap,sharp,samples,verdict,note\n";
  for (const auto& r : reports) {
    out << r.theorem << ',' << csv_number(r.alpha) << ',' << r.n << ',' << csv_field(r.family) << ','
        << csv_number(r.left) << ',' << csv_number(r.bound) << ',' << csv_number(r.margin) << ','
        << (r.sharp_gap ? csv_number(*r.sharp_gap) : std::string()) << ',' << (r.sharp ? "true" : "false") << ','
        << r.samples << ',' << to_string(r.verdict) << ',' << csv_field(r.note) << '\n';
  }
  return out.str();
}

std::string render_text_summary(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  char line[256];
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-18s %-9s a=%-9s n=%d  left=%-12.9g bound=%-12.9g  ", to_string(r.verdict).c_str(),
                  r.theorem.c_str(), format_double(r.alpha).c_str(), r.n, r.left, r.bound);
    out << line << r.family << '\n';
  }
  const SuiteSummary s = summarize(reports);
  out << s.checks << " checks: " << s.pass << " pass, " << s.fail << " fail, " << s.hypothesis_failed
      << " hypothesis failed, " << s.skipped << " skipped\n";
  return out.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hexp
