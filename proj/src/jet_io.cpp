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

#include "hexp/jet_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace hexp {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw JetParseError("jet line " + std::to_string(line) + ": " + what);
}

long parse_int(const std::string& tok, std::size_t line) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "expected integer, got '" + tok + "'");
  return v;
}

double parse_double(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) fail(line, "expected number, got '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    fail(line, "expected number, got '" + tok + "'");
  }
}

}  // namespace

VectorJet read_jet(std::istream& in) {
  struct Entry {
    int component;
    std::vector<int> exps;
    cplx value;
  };
  std::vector<Entry> entries;
  std::set<std::pair<int, std::vector<int>>> seen;
  int n = 0;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 4) fail(lineno, "expected 'component e1 .. en re im'");
    const int this_n = static_cast<int>(tok.size()) - 3;
    if (n == 0) {
      if (this_n > kMaxDim) fail(lineno, "dimension exceeds " + std::to_string(kMaxDim));
      n = this_n;
    } else if (this_n != n) {
      fail(lineno, "expected " + std::to_string(n) + " exponents, got " + std::to_string(this_n));
    }
    const long comp = parse_int(tok[0], lineno);
    if (comp < 1 || comp > n) fail(lineno, "component index out of range");
    std::vector<int> exps;
    int degree = 0;
    for (int k = 0; k < n; ++k) {
      const long e = parse_int(tok[static_cast<std::size_t>(k + 1)], lineno);
      if (e < 0) fail(lineno, "negative exponent");
      if (e > kOrder) fail(lineno, "degree exceeds truncation order 4");
      exps.push_back(static_cast<int>(e));
      degree += static_cast<int>(e);
    }
    if (degree > kOrder) fail(lineno, "degree " + std::to_string(degree) + " exceeds truncation order 4");
    const double re = parse_double(tok[static_cast<std::size_t>(n + 1)], lineno);
    const double im = parse_double(tok[static_cast<std::size_t>(n + 2)], lineno);
    if (!seen.emplace(static_cast<int>(comp), exps).second) fail(lineno, "duplicate coefficient key");
    entries.push_back({static_cast<int>(comp), std::move(exps), cplx(re, im)});
  }
  if (n == 0) throw JetParseError("jet: no coefficients");
  std::vector<ScalarSeries> f(static_cast<std::size_t>(n), ScalarSeries(n));
  for (auto& e : entries) f[static_cast<std::size_t>(e.component - 1)].set(MultiIndex(std::move(e.exps)), e.value);
  return VectorJet(std::move(f));
}

VectorJet read_jet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw JetParseError("cannot open jet file '" + path.string() + "'");
  return read_jet(in);
}

void write_jet(std::ostream& out, const VectorJet& jet) {
  const int n = jet.dimension();
  const auto& t = MonomialTable::get(n);
  out << "# component  e1..e" << n << "  re  im\n";
  char buf[64];
  for (int p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const cplx c = jet[p].coeff_at(i);
      if (c == cplx{}) continue;
      out << (p + 1) << "  " << t.monomial(i).to_string();
      std::snprintf(buf, sizeof buf, "  %.17g %.17g\n", c.real(), c.imag());
      out << buf;
    }
  }
}

}  // namespace hexp
