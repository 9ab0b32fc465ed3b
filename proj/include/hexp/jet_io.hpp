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

#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "hexp/series.hpp"

namespace hexp {

struct JetParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Jet text format, one coefficient per line:
//
//   component_index  e1 e2 ... en  re  im
//
// component_index is 1-based; '#' starts a comment; blank lines are ignored.
// The dimension n is inferred from the first data line. Degree > 4,
// duplicate (component, exponent) keys and ragged lines are rejected.
VectorJet read_jet(std::istream& in);
VectorJet read_jet_file(const std::filesystem::path& path);

/// Writes every nonzero coefficient, component-major, monomials in grlex order.
void write_jet(std::ostream& out, const VectorJet& jet);

}  // namespace hexp
